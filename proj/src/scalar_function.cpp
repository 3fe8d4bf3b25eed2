#include "tensorwalk/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

ScalarFunctionSpec::ScalarFunctionSpec(Kind kind, std::string name)
    : kind_(kind), name_(std::move(name)) {}

ScalarFunctionSpec ScalarFunctionSpec::identity() {
  return ScalarFunctionSpec(Kind::kIdentity, "identity");
}

ScalarFunctionSpec ScalarFunctionSpec::affine(double a, double b) {
  ScalarFunctionSpec f(Kind::kAffine, "affine");
  f.a_ = a;
  f.b_ = b;
  return f;
}

ScalarFunctionSpec ScalarFunctionSpec::power(double p) {
  if (!(p > 0.0)) throw ConfigError("power: exponent must be positive");
  ScalarFunctionSpec f(Kind::kPower, "power");
  f.p_ = p;
  // Integral powers extend to the whole real line.
  if (p != std::floor(p)) f.domain_lo_ = 0.0;
  return f;
}

ScalarFunctionSpec ScalarFunctionSpec::exponential(double base) {
  if (!(base > 0.0) || base == 1.0)
    throw ConfigError("exponential: base must be positive and != 1");
  ScalarFunctionSpec f(Kind::kExponential, "exponential");
  f.base_ = base;
  return f;
}

ScalarFunctionSpec ScalarFunctionSpec::negative_log() {
  ScalarFunctionSpec f(Kind::kNegativeLog, "neglog");
  f.domain_lo_ = 0.0;
  f.domain_lo_open_ = true;
  return f;
}

ScalarFunctionSpec ScalarFunctionSpec::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw ConfigError("polynomial: needs coefficients");
  ScalarFunctionSpec f(Kind::kPolynomial, "poly");
  f.coeffs_ = std::move(coeffs);
  return f;
}

ScalarFunctionSpec ScalarFunctionSpec::from_name(
    const std::string& name, const std::vector<double>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      std::ostringstream os;
      os << "function '" << name << "' expects " << n << " parameter(s), got "
         << params.size();
      throw ConfigError(os.str());
    }
  };
  if (name == "identity") {
    need(0);
    return identity();
  }
  if (name == "square") {
    need(0);
    return power(2.0);
  }
  if (name == "cube") {
    need(0);
    return power(3.0);
  }
  if (name == "sqrt") {
    need(0);
    return power(0.5);
  }
  if (name == "exp") {
    need(0);
    return exponential(std::exp(1.0));
  }
  if (name == "neglog") {
    need(0);
    return negative_log();
  }
  if (name == "affine") {
    need(2);
    return affine(params[0], params[1]);
  }
  if (name == "power") {
    need(1);
    return power(params[0]);
  }
  if (name == "exponential") {
    need(1);
    return exponential(params[0]);
  }
  if (name == "poly") {
    if (params.empty()) throw ConfigError("poly: needs coefficients");
    return polynomial(params);
  }
  throw ConfigError("unknown function name '" + name + "'");
}

bool ScalarFunctionSpec::contains(double s) const {
  if (domain_lo_open_ ? s <= domain_lo_ : s < domain_lo_) return false;
  return s <= domain_hi_;
}

double ScalarFunctionSpec::operator()(double s) const {
  if (!contains(s)) {
    std::ostringstream os;
    os << name_ << ": argument " << s << " outside domain";
    throw DomainError(os.str());
  }
  switch (kind_) {
    case Kind::kIdentity:
      return s;
    case Kind::kAffine:
      return a_ * s + b_;
    case Kind::kPower:
      return std::pow(s, p_);
    case Kind::kExponential:
      return std::pow(base_, s);
    case Kind::kNegativeLog:
      return -std::log(s);
    case Kind::kPolynomial: {
      double v = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        v = v * s + *it;
      return v;
    }
  }
  throw Error("unreachable");
}

double ScalarFunctionSpec::derivative(double s) const {
  switch (kind_) {
    case Kind::kIdentity:
      return 1.0;
    case Kind::kAffine:
      return a_;
    case Kind::kPower:
      return p_ * std::pow(s, p_ - 1.0);
    case Kind::kExponential:
      return std::log(base_) * std::pow(base_, s);
    case Kind::kNegativeLog:
      return -1.0 / s;
    case Kind::kPolynomial: {
      double v = 0.0;
      for (std::size_t k = coeffs_.size(); k-- > 1;)
        v = v * s + static_cast<double>(k) * coeffs_[k];
      return v;
    }
  }
  throw Error("unreachable");
}

std::optional<double> ScalarFunctionSpec::inverse_derivative(double slope,
                                                             double c,
                                                             double d) const {
  switch (kind_) {
    case Kind::kIdentity:
    case Kind::kAffine:
      // Constant derivative; the chord and tangent coincide.
      return c;
    case Kind::kPower: {
      if (p_ == 1.0) return c;
      if (c < 0.0) return bisect_derivative(slope, c, d);
      const double r = slope / p_;
      if (r < 0.0) return std::nullopt;
      const double s0 = std::pow(r, 1.0 / (p_ - 1.0));
      if (s0 < c - 1e-9 || s0 > d + 1e-9) return std::nullopt;
      return std::clamp(s0, c, d);
    }
    case Kind::kExponential: {
      const double lt = std::log(base_);
      const double r = slope / lt;
      if (r <= 0.0) return std::nullopt;
      const double s0 = std::log(r) / lt;
      if (s0 < c - 1e-9 || s0 > d + 1e-9) return std::nullopt;
      return std::clamp(s0, c, d);
    }
    case Kind::kNegativeLog: {
      if (slope >= 0.0) return std::nullopt;
      const double s0 = -1.0 / slope;
      if (s0 < c - 1e-9 || s0 > d + 1e-9) return std::nullopt;
      return std::clamp(s0, c, d);
    }
    case Kind::kPolynomial:
      return bisect_derivative(slope, c, d);
  }
  return std::nullopt;
}

std::optional<double> ScalarFunctionSpec::bisect_derivative(double slope,
                                                            double c,
                                                            double d) const {
  // g convex => g' nondecreasing; bisect.
  double lo = c, hi = d;
  const double flo = derivative(lo) - slope;
  const double fhi = derivative(hi) - slope;
  if (flo > 1e-9 || fhi < -1e-9) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (derivative(mid) - slope <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool ScalarFunctionSpec::convex_on(double c, double d) const {
  constexpr int kGrid = 1000;
  const double h = (d - c) / (kGrid - 1);
  double prev2 = (*this)(c);
  double prev1 = (*this)(c + h);
  for (int i = 2; i < kGrid; ++i) {
    const double cur = (*this)(c + i * h);
    if (cur - 2.0 * prev1 + prev2 < -1e-9) return false;
    prev2 = prev1;
    prev1 = cur;
  }
  return true;
}

}  // namespace tensorwalk
