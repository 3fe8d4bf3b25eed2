#include <cmath>

#include "doctest.h"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/mp_inequalities.hpp"

using namespace tensorwalk;

namespace {

HermitianTensor diag2(double a, double b) {
  Eigen::VectorXd d(2);
  d << a, b;
  return HermitianTensor::from_diagonal(TensorShape({2}), d);
}

EnsembleSpec single_tensor_ensemble(HermitianTensor x, double c, double d) {
  EnsembleSpec e;
  e.maps = {PositiveLinearMapSpec::identity(x.shape())};
  e.tensors = {std::move(x)};
  e.weights = {1.0};
  e.c = c;
  e.d = d;
  return e;
}

/// Seeded random ensemble used by the property tests; mirrors the
/// acceptance-suite generator at a smaller scale.
EnsembleSpec random_ensemble(std::uint64_t seed, double c, double d) {
  Rng rng(seed);
  const int ell = 1 + static_cast<int>(rng.uniform_index(5));
  const std::vector<std::vector<int>> shapes = {{2}, {3}, {2, 2}, {5}, {3, 3},
                                                {7}, {9}};
  const TensorShape shape(shapes[rng.uniform_index(shapes.size())]);
  const bool trace_style =
      shape.mode_sizes().size() > 1 && rng.uniform() < 0.4;
  EnsembleSpec e;
  e.c = c;
  e.d = d;
  std::vector<double> raw(ell);
  double total = 0.0;
  for (auto& w : raw) {
    w = 0.05 + rng.uniform();
    total += w;
  }
  for (int i = 0; i < ell; ++i) {
    e.tensors.push_back(random_hermitian_with_spectrum(shape, c, d, rng));
    e.weights.push_back(raw[i] / total);
    if (trace_style) {
      e.maps.push_back(
          PositiveLinearMapSpec::normalized_partial_trace(shape, {0}));
    } else {
      const double pick = rng.uniform();
      if (pick < 0.4) {
        e.maps.push_back(PositiveLinearMapSpec::identity(shape));
      } else if (pick < 0.7) {
        const Eigen::MatrixXcd u =
            random_unitary(shape.matricized_side(), rng);
        e.maps.push_back(PositiveLinearMapSpec::unitary_conjugation(shape, u));
      } else {
        const int side = shape.matricized_side();
        std::vector<std::vector<int>> blocks(2);
        for (int idx = 0; idx < side; ++idx)
          blocks[idx % 2].push_back(idx);
        e.maps.push_back(PositiveLinearMapSpec::pinching(shape, blocks));
      }
    }
  }
  return e;
}

}  // namespace

TEST_CASE("envelope constants: affine chord and tangent coincide") {
  const auto env = envelope_constants(ScalarFunctionSpec::identity(), 0.0, 1.0);
  CHECK(env.m_g == doctest::Approx(1.0));
  CHECK(env.b_upper == doctest::Approx(0.0));
  CHECK(env.b_lower == doctest::Approx(0.0));
}

TEST_CASE("envelope constants for s^2 on [0,2]") {
  const auto env = envelope_constants(ScalarFunctionSpec::power(2.0), 0.0, 2.0);
  CHECK(env.m_g == doctest::Approx(2.0));
  CHECK(env.b_upper == doctest::Approx(0.0));
  CHECK(env.b_lower == doctest::Approx(-1.0));
  CHECK(env.tangent_point == doctest::Approx(1.0));
}

TEST_CASE("envelope constants for exp on [0,1]") {
  const double e1 = std::exp(1.0);
  const auto env = envelope_constants(
      ScalarFunctionSpec::exponential(e1), 0.0, 1.0);
  CHECK(env.m_g == doctest::Approx(e1 - 1.0));
  CHECK(env.b_upper == doctest::Approx(1.0));
  CHECK(env.b_lower ==
        doctest::Approx((e1 - 1.0) * (1.0 - std::log(e1 - 1.0))));
}

TEST_CASE("non-convex g is rejected") {
  CHECK_THROWS_AS(
      envelope_constants(ScalarFunctionSpec::power(0.5), 0.5, 2.0),
      PremiseError);
}

TEST_CASE("envelope sandwich and tangency on seeded intervals") {
  struct Range {
    ScalarFunctionSpec g;
    double lo, hi;
  };
  const std::vector<Range> gs = {
      {ScalarFunctionSpec::power(2.0), -3.0, 3.0},
      {ScalarFunctionSpec::exponential(std::exp(1.0)), -2.0, 2.0},
      {ScalarFunctionSpec::negative_log(), 0.5, 2.0},
      {ScalarFunctionSpec::power(3.0), 0.0, 2.0},
  };
  for (std::size_t gi = 0; gi < gs.size(); ++gi) {
    for (int trial = 0; trial < 25; ++trial) {
      Rng rng(1000 * gi + trial);
      double a = rng.uniform(gs[gi].lo, gs[gi].hi);
      double b = rng.uniform(gs[gi].lo, gs[gi].hi);
      if (a > b) std::swap(a, b);
      if (b - a < 1e-3) b = a + 1e-3;
      const auto env = envelope_constants(gs[gi].g, a, b);
      for (int k = 0; k < 1000; ++k) {
        const double s = a + (b - a) * k / 999.0;
        const double gv = gs[gi].g(s);
        CHECK(gv <= env.m_g * s + env.b_upper + 1e-9);
        CHECK(gv >= env.m_g * s + env.b_lower - 1e-9);
      }
      const double touch =
          gs[gi].g(env.tangent_point) -
          (env.m_g * env.tangent_point + env.b_lower);
      CHECK(std::abs(touch) <= 1e-9);
    }
  }
}

TEST_CASE("ratio extremizer on hand-solved objectives") {
  const auto h = ScalarFunctionSpec::identity();
  // (3s - 2)/s increases on [1,2].
  auto r = extremize_ratio(3.0, -2.0, h, 1.0, 2.0, true);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.location == doctest::Approx(2.0).epsilon(1e-6));
  // (3s - 2.25)/s decreasing in 1/s term: minimum at s = 1.
  r = extremize_ratio(3.0, -2.25, h, 1.0, 2.0, false);
  CHECK(r.value == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(r.location == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("difference extremizer with c_r = 0 maximizes the chord at d") {
  const auto h = ScalarFunctionSpec::identity();
  const auto r = extremize_difference(2.0, 0.5, 0.0, h, -1.0, 3.0, true);
  CHECK(r.value == doctest::Approx(6.5).epsilon(1e-9));
  CHECK(r.location == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("interior extremum is located to 1e-9") {
  // m s + b - c_r s^2 with m=2, b=0, c_r=1: vertex at s=1, value 1.
  const auto r = extremize_difference(2.0, 0.0, 1.0,
                                      ScalarFunctionSpec::power(2.0), 0.0, 2.0,
                                      true);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.location == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("ratio extremizer rejects nonpositive h") {
  CHECK_THROWS_AS(
      extremize_ratio(1.0, 0.0, ScalarFunctionSpec::affine(1.0, -2.0), 1.0,
                      3.0, true),
      PremiseError);
}

TEST_CASE("ensemble lemma bounds on a hand-checked diagonal case") {
  // X = diag(1,2), g = s^2, h = s, c_r = 1 on [1,2]:
  // upper RHS = diag(3,4), lower RHS = diag(0.75,1.75).
  auto e = single_tensor_ensemble(diag2(1.0, 2.0), 1.0, 2.0);
  const auto res = ensemble_lemma_bounds(e, ScalarFunctionSpec::power(2.0),
                                         ScalarFunctionSpec::identity(), 1.0);
  CHECK(res.upper_check.holds);
  CHECK(res.lower_check.holds);
  CHECK(res.max_term == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(res.min_term == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(res.upper_rhs.matrix()(0, 0).real() == doctest::Approx(3.0));
  CHECK(res.upper_rhs.matrix()(1, 1).real() == doctest::Approx(4.0));
  CHECK(res.lower_rhs.matrix()(0, 0).real() == doctest::Approx(0.75));
  CHECK(res.lower_rhs.matrix()(1, 1).real() == doctest::Approx(1.75));
}

TEST_CASE("identity g and h with c_r = 1 gives equality") {
  auto e = single_tensor_ensemble(diag2(1.5, 1.7), 1.0, 2.0);
  const auto res = ensemble_lemma_bounds(e, ScalarFunctionSpec::identity(),
                                         ScalarFunctionSpec::identity(), 1.0);
  CHECK(res.max_term == doctest::Approx(0.0));
  CHECK(res.min_term == doctest::Approx(0.0));
  CHECK(res.upper_check.holds);
  CHECK(res.lower_check.holds);
  CHECK((res.upper_rhs.matrix() - res.weighted_g.matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-10);
}

TEST_CASE("lemma bounds hold over seeded ensembles and c_r grid") {
  const auto g = ScalarFunctionSpec::power(2.0);
  const auto h = ScalarFunctionSpec::identity();
  for (int trial = 0; trial < 30; ++trial) {
    const auto e = random_ensemble(4200 + trial, 1.0, 2.0);
    for (double c_r : {-2.0, -0.5, 0.5, 2.0}) {
      const auto res = ensemble_lemma_bounds(e, g, h, c_r);
      CHECK(res.upper_check.min_eigenvalue >= -1e-7);
      CHECK(res.lower_check.min_eigenvalue >= -1e-7);
    }
  }
}

TEST_CASE("scalar double bound reproduces the hand alphas") {
  for (double x : {1.0, 1.5, 2.0}) {
    auto e = single_tensor_ensemble(
        HermitianTensor::from_diagonal(TensorShape({1}),
                                       Eigen::VectorXd::Constant(1, x)),
        1.0, 2.0);
    const auto res = mp_double_bound(e, ScalarFunctionSpec::power(2.0),
                                     ScalarFunctionSpec::identity());
    REQUIRE(res.premises_ok);
    CHECK(res.alpha_max == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(res.alpha_min == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(res.lower_check.holds);
    CHECK(res.upper_check.holds);
    // x^2 / 2 <= x <= (4/3) x^2.
    CHECK(x * x / 2.0 <= x + 1e-12);
    CHECK(x <= x * x / 0.75 + 1e-12);
  }
}

TEST_CASE("g = h = identity gives both alphas equal to one") {
  auto e = single_tensor_ensemble(diag2(1.2, 1.9), 1.0, 2.0);
  const auto res = mp_double_bound(e, ScalarFunctionSpec::identity(),
                                   ScalarFunctionSpec::identity());
  REQUIRE(res.premises_ok);
  CHECK(res.alpha_max == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.alpha_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.lower_check.holds);
  CHECK(res.upper_check.holds);
}

TEST_CASE("double bound holds over seeded ensembles and registry pairs") {
  struct Pair {
    ScalarFunctionSpec g, h;
  };
  const std::vector<Pair> pairs = {
      {ScalarFunctionSpec::power(2.0), ScalarFunctionSpec::identity()},
      {ScalarFunctionSpec::exponential(std::exp(1.0)),
       ScalarFunctionSpec::identity()},
      {ScalarFunctionSpec::power(2.0), ScalarFunctionSpec::power(0.5)},
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto e = random_ensemble(8800 + trial, 1.0, 2.0);
    for (const auto& p : pairs) {
      const auto res = mp_double_bound(e, p.g, p.h);
      REQUIRE(res.premises_ok);
      CHECK(res.lower_check.min_eigenvalue >= -1e-7);
      CHECK(res.upper_check.min_eigenvalue >= -1e-7);
    }
  }
}

TEST_CASE("positivity premises are reported per side") {
  // g = s^2 on [1,3]: the tangent line 4s - 4 vanishes at s = 1.
  auto e = single_tensor_ensemble(diag2(1.5, 2.5), 1.0, 3.0);
  const auto res = mp_double_bound(e, ScalarFunctionSpec::power(2.0),
                                   ScalarFunctionSpec::identity());
  CHECK_FALSE(res.premises_ok);
  CHECK(res.failed_premise == "m_g s + b_lower > 0");
}

TEST_CASE("ensemble validation catches bad weights and spectra") {
  auto e = single_tensor_ensemble(diag2(1.0, 2.0), 1.0, 2.0);
  e.weights = {0.5};
  CHECK_THROWS_AS(e.validate(), DomainError);
  auto e2 = single_tensor_ensemble(diag2(0.0, 2.0), 1.0, 2.0);
  CHECK_THROWS_AS(e2.validate(), DomainError);
}
