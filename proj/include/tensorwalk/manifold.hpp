#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tensorwalk/rng.hpp"

namespace tensorwalk {

/// Intrinsic coordinates; the slots used depend on the manifold kind
/// (circle: angle, sphere: unit 3-vector, torus: (x, y)).
using ManifoldPoint = std::array<double, 3>;

/// Analytic model manifold with closed-form geometry.
class ManifoldSpec {
 public:
  enum class Kind { kCircle, kSphere2, kFlatTorus };

  static ManifoldSpec circle(double radius);
  static ManifoldSpec sphere2(double radius);
  static ManifoldSpec flat_torus(double l1, double l2);
  static ManifoldSpec from_name(const std::string& name,
                                const std::vector<double>& params = {});

  Kind kind() const { return kind_; }
  std::string name() const;
  int dimension() const;
  double volume() const;
  double diameter() const;
  double injectivity_radius() const;
  double curvature_bound() const;
  double radius() const { return r_; }
  double torus_l1() const { return l1_; }
  double torus_l2() const { return l2_; }

  ManifoldPoint random_point(Rng& rng) const;
  double geodesic(const ManifoldPoint& a, const ManifoldPoint& b) const;

  /// Ascending Laplace-Beltrami eigenvalues with multiplicity.
  std::vector<double> analytic_spectrum(int count) const;

 private:
  explicit ManifoldSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
  double r_ = 1.0;
  double l1_ = 1.0, l2_ = 1.0;
};

inline std::vector<double> analytic_lb_spectrum(const ManifoldSpec& m,
                                                int count) {
  return m.analytic_spectrum(count);
}

/// Covering net: centers, the measured covering radius, and Monte Carlo
/// Voronoi-cell measures summing to the manifold volume.
struct EpsilonNet {
  std::vector<ManifoldPoint> points;
  double epsilon = 0.0;
  std::vector<double> mu;
};

/// Farthest-point sampling of N centers from a uniform pool of 50 N points;
/// epsilon is the pool covering radius and mu comes from a 200 N sample.
EpsilonNet sample_net(const ManifoldSpec& m, int n, std::uint64_t seed,
                      std::size_t workers = 0);

}  // namespace tensorwalk
