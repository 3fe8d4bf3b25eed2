#include "tensorwalk/mp_inequalities.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

namespace {

constexpr int kExtremizeGrid = 2049;

/// Dense grid scan followed by golden-section refinement on the bracketing
/// cell.  Maximizes `f`; ties on the grid resolve to the smaller s.
ExtremumResult golden_max(const std::function<double(double)>& f, double c,
                          double d) {
  const double h = (d - c) / (kExtremizeGrid - 1);
  int best = 0;
  double best_val = f(c);
  for (int i = 1; i < kExtremizeGrid; ++i) {
    const double v = f(c + i * h);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = (best > 0) ? c + (best - 1) * h : c;
  double hi = (best < kExtremizeGrid - 1) ? c + (best + 1) * h : d;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  const double tol = 1e-12 * (1.0 + std::abs(c) + std::abs(d));
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (f1 >= f2) {  // keep the left candidate on ties
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    }
  }
  double loc = 0.5 * (lo + hi);
  double val = f(loc);
  if (best_val > val) {  // grid point was already the best seen
    loc = c + best * h;
    val = best_val;
  }
  return ExtremumResult{val, loc, true};
}

ExtremumResult extremize_impl(const std::function<double(double)>& f, double c,
                              double d, bool maximize) {
  if (!(c < d)) throw DomainError("extremize: interval has c >= d");
  if (maximize) return golden_max(f, c, d);
  ExtremumResult r = golden_max([&](double s) { return -f(s); }, c, d);
  return ExtremumResult{-r.value, r.location, false};
}

void check_h_positive(const ScalarFunctionSpec& h, double c, double d) {
  const double step = (d - c) / (kExtremizeGrid - 1);
  for (int i = 0; i < kExtremizeGrid; ++i) {
    const double s = c + i * step;
    if (!(h(s) > 0.0)) {
      std::ostringstream os;
      os << "ratio objective: h(" << s << ") = " << h(s)
         << " is not positive on [" << c << ", " << d << "]";
      throw PremiseError(os.str());
    }
  }
}

}  // namespace

EnvelopeConstants envelope_constants(const ScalarFunctionSpec& g, double c,
                                     double d) {
  if (!(c < d)) throw DomainError("envelope_constants: interval has c >= d");
  if (!g.contains(c) || !g.contains(d))
    throw DomainError("envelope_constants: interval leaves the domain of g");
  if (!g.convex_on(c, d))
    throw PremiseError("envelope_constants: g fails the convexity grid test");
  EnvelopeConstants e;
  e.c = c;
  e.d = d;
  const double gc = g(c);
  const double gd = g(d);
  e.m_g = (gd - gc) / (d - c);
  e.b_upper = (d * gc - c * gd) / (d - c);
  const auto s0 = g.inverse_derivative(e.m_g, c, d);
  if (!s0) {
    throw PremiseError(
        "envelope_constants: derivative of g never attains the chord slope "
        "inside the interval");
  }
  e.tangent_point = *s0;
  e.b_lower = g(*s0) - e.m_g * (*s0);
  return e;
}

ExtremumResult extremize_difference(double m, double b, double c_r,
                                    const ScalarFunctionSpec& h, double c,
                                    double d, bool maximize) {
  auto f = [&](double s) { return m * s + b - c_r * h(s); };
  return extremize_impl(f, c, d, maximize);
}

ExtremumResult extremize_ratio(double m, double b,
                               const ScalarFunctionSpec& h, double c, double d,
                               bool maximize) {
  check_h_positive(h, c, d);
  auto f = [&](double s) { return (m * s + b) / h(s); };
  return extremize_impl(f, c, d, maximize);
}

void EnsembleSpec::validate() const {
  const std::size_t n = tensors.size();
  if (n == 0) throw ShapeError("ensemble: empty");
  if (weights.size() != n || maps.size() != n)
    throw ShapeError("ensemble: tensors/weights/maps length mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw DomainError("ensemble: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw DomainError("ensemble: weights do not sum to 1");
  const TensorShape& out = maps[0].output_shape();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(tensors[i].shape() == maps[i].input_shape()))
      throw ShapeError("ensemble: tensor/map shape mismatch");
    if (!(maps[i].output_shape() == out))
      throw ShapeError("ensemble: maps disagree on the output shape");
    const auto sd = eigendecompose(tensors[i]);
    if (sd.eigenvalues(0) < c - 1e-9 ||
        sd.eigenvalues(sd.eigenvalues.size() - 1) > d + 1e-9) {
      std::ostringstream os;
      os << "ensemble: member " << i << " has spectrum ["
         << sd.eigenvalues(0) << ", "
         << sd.eigenvalues(sd.eigenvalues.size() - 1) << "] outside [" << c
         << ", " << d << "]";
      throw DomainError(os.str());
    }
  }
}

namespace {

struct EnsembleSums {
  HermitianTensor weighted_g;     // sum w_i Psi_i(g(X_i))
  HermitianTensor weighted_mean;  // sum w_i Psi_i(X_i)
};

EnsembleSums ensemble_sums(const EnsembleSpec& e, const ScalarFunctionSpec& g) {
  const TensorShape out = e.maps[0].output_shape();
  HermitianTensor sum_g = HermitianTensor::zero(out);
  HermitianTensor sum_x = HermitianTensor::zero(out);
  for (std::size_t i = 0; i < e.tensors.size(); ++i) {
    const HermitianTensor gx = apply_scalar_function(e.tensors[i], g);
    sum_g = sum_g + e.maps[i](gx).scaled(e.weights[i]);
    sum_x = sum_x + e.maps[i](e.tensors[i]).scaled(e.weights[i]);
  }
  return EnsembleSums{std::move(sum_g), std::move(sum_x)};
}

}  // namespace

LemmaBoundsResult ensemble_lemma_bounds(const EnsembleSpec& ensemble,
                                        const ScalarFunctionSpec& g,
                                        const ScalarFunctionSpec& h,
                                        double c_r) {
  ensemble.validate();
  const EnvelopeConstants env = envelope_constants(g, ensemble.c, ensemble.d);
  EnsembleSums sums = ensemble_sums(ensemble, g);
  const HermitianTensor h_mean = apply_scalar_function(sums.weighted_mean, h);
  const TensorShape out = h_mean.shape();
  const HermitianTensor id = HermitianTensor::identity(out);

  const double max_term =
      extremize_difference(env.m_g, env.b_upper, c_r, h, ensemble.c,
                           ensemble.d, /*maximize=*/true)
          .value;
  const double min_term =
      extremize_difference(env.m_g, env.b_lower, c_r, h, ensemble.c,
                           ensemble.d, /*maximize=*/false)
          .value;

  HermitianTensor upper = h_mean.scaled(c_r) + id.scaled(max_term);
  HermitianTensor lower = h_mean.scaled(c_r) + id.scaled(min_term);
  LoewnerResult up_check = loewner_leq(sums.weighted_g, upper);
  LoewnerResult lo_check = loewner_leq(lower, sums.weighted_g);
  return LemmaBoundsResult{std::move(sums.weighted_g), std::move(upper),
                           std::move(lower),           up_check,
                           lo_check,                   max_term,
                           min_term};
}

MpDoubleBoundResult mp_double_bound(const EnsembleSpec& ensemble,
                                    const ScalarFunctionSpec& g,
                                    const ScalarFunctionSpec& h) {
  ensemble.validate();
  const double c = ensemble.c;
  const double d = ensemble.d;
  const EnvelopeConstants env = envelope_constants(g, c, d);

  MpDoubleBoundResult r;
  const double step = (d - c) / (kExtremizeGrid - 1);
  for (int i = 0; i < kExtremizeGrid; ++i) {
    const double s = c + i * step;
    if (!(h(s) > 0.0)) {
      r.failed_premise = "h(s) > 0";
      return r;
    }
    if (!(env.m_g * s + env.b_upper > 0.0)) {
      r.failed_premise = "m_g s + b_upper > 0";
      return r;
    }
    if (!(env.m_g * s + env.b_lower > 0.0)) {
      r.failed_premise = "m_g s + b_lower > 0";
      return r;
    }
  }
  r.premises_ok = true;
  r.alpha_max =
      extremize_ratio(env.m_g, env.b_upper, h, c, d, /*maximize=*/true).value;
  r.alpha_min =
      extremize_ratio(env.m_g, env.b_lower, h, c, d, /*maximize=*/false).value;

  EnsembleSums sums = ensemble_sums(ensemble, g);
  const HermitianTensor h_mean = apply_scalar_function(sums.weighted_mean, h);
  r.lower_check = loewner_leq(sums.weighted_g.scaled(1.0 / r.alpha_max), h_mean);
  r.upper_check = loewner_leq(h_mean, sums.weighted_g.scaled(1.0 / r.alpha_min));
  return r;
}

}  // namespace tensorwalk
