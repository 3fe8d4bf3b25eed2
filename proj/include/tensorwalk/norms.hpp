#pragma once

#include <string>

#include "tensorwalk/tensor.hpp"

namespace tensorwalk {

/// Unitarily invariant norm, evaluated from the singular values
/// (absolute eigenvalues, for Hermitian input).
struct UINormSpec {
  enum class Kind { kSpectral, kTrace, kFrobenius, kKyFan, kSchatten };

  Kind kind = Kind::kSpectral;
  int k = 1;       // ky-fan order
  double p = 2.0;  // schatten exponent, p >= 1

  static UINormSpec spectral() { return {Kind::kSpectral, 1, 2.0}; }
  static UINormSpec trace() { return {Kind::kTrace, 1, 2.0}; }
  static UINormSpec frobenius() { return {Kind::kFrobenius, 1, 2.0}; }
  static UINormSpec ky_fan(int k) { return {Kind::kKyFan, k, 2.0}; }
  static UINormSpec schatten(double p) { return {Kind::kSchatten, 1, p}; }
  static UINormSpec from_name(const std::string& name, double param = 0.0);

  std::string name() const;
  /// Scale factor relating this norm to the spectral norm on tensors of
  /// side d whose singular values share a common bound: ||X|| <= factor *
  /// max singular value.
  double dimension_factor(int d) const;
};

double ui_norm(const HermitianTensor& x, const UINormSpec& spec);

}  // namespace tensorwalk
