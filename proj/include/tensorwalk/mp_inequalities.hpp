#pragma once

#include <vector>

#include "tensorwalk/positive_map.hpp"
#include "tensorwalk/scalar_function.hpp"
#include "tensorwalk/tensor.hpp"

namespace tensorwalk {

/// Slope and intercepts of the chord/tangent envelope of a convex g on
/// [c, d]: m_g * s + b_lower <= g(s) <= m_g * s + b_upper.
struct EnvelopeConstants {
  double m_g = 0.0;
  double b_upper = 0.0;
  double b_lower = 0.0;
  double c = 0.0;
  double d = 0.0;
  double tangent_point = 0.0;  // where g' equals the chord slope
};

EnvelopeConstants envelope_constants(const ScalarFunctionSpec& g, double c,
                                     double d);

struct ExtremumResult {
  double value = 0.0;
  double location = 0.0;
  bool maximize = false;
};

/// Extremum of m*s + b - c_r*h(s) on [c, d] (dense grid + golden section;
/// ties resolve toward the smaller s).
ExtremumResult extremize_difference(double m, double b, double c_r,
                                    const ScalarFunctionSpec& h, double c,
                                    double d, bool maximize);

/// Extremum of (m*s + b) / h(s) on [c, d]; h must be positive on the grid.
ExtremumResult extremize_ratio(double m, double b,
                               const ScalarFunctionSpec& h, double c, double d,
                               bool maximize);

/// Weighted ensemble of Hermitian tensors with one normalized positive
/// linear map per member and a shared spectral interval.
struct EnsembleSpec {
  std::vector<HermitianTensor> tensors;
  std::vector<double> weights;
  std::vector<PositiveLinearMapSpec> maps;
  double c = 0.0;
  double d = 1.0;

  /// Checks the probability vector, shape compatibility, a common output
  /// shape, and spectral containment in [c, d].
  void validate() const;
};

struct LemmaBoundsResult {
  HermitianTensor weighted_g;  // sum_i w_i Psi_i(g(X_i))
  HermitianTensor upper_rhs;
  HermitianTensor lower_rhs;
  LoewnerResult upper_check;   // weighted_g <= upper_rhs
  LoewnerResult lower_check;   // lower_rhs <= weighted_g
  double max_term = 0.0;       // max_s [m s + b_U - c_r h(s)]
  double min_term = 0.0;       // min_s [m s + b_L - c_r h(s)]
};

/// Both ensemble inequalities for an arbitrary real c_r, with Loewner
/// verdicts computed by the eigensolver.
LemmaBoundsResult ensemble_lemma_bounds(const EnsembleSpec& ensemble,
                                        const ScalarFunctionSpec& g,
                                        const ScalarFunctionSpec& h,
                                        double c_r);

struct MpDoubleBoundResult {
  double alpha_max = 0.0;  // max (m s + b_U)/h(s)
  double alpha_min = 0.0;  // min (m s + b_L)/h(s)
  LoewnerResult lower_check;  // (1/alpha_max) sum <= h(mean)
  LoewnerResult upper_check;  // h(mean) <= (1/alpha_min) sum
  bool premises_ok = false;
  std::string failed_premise;  // empty when premises_ok
};

/// The double bound sandwiching h(sum_i w_i Psi_i(X_i)) between scaled
/// copies of sum_i w_i Psi_i(g(X_i)).  Positivity premises (h > 0 and both
/// envelope lines > 0 on [c, d]) are grid-checked, never assumed.
MpDoubleBoundResult mp_double_bound(const EnsembleSpec& ensemble,
                                    const ScalarFunctionSpec& g,
                                    const ScalarFunctionSpec& h);

}  // namespace tensorwalk
