#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tensorwalk/tensor.hpp"

namespace tensorwalk {

/// Normalized positive linear map on Hermitian tensors: linear, maps the
/// identity to the identity, and preserves positive semidefiniteness.
class PositiveLinearMapSpec {
 public:
  enum class Kind {
    kIdentity,
    kUnitaryConjugation,     // X -> U X U^H
    kPinching,               // zero outside diagonal blocks
    kNormalizedPartialTrace, // trace out a mode subset, divide by its size
  };

  static PositiveLinearMapSpec identity(const TensorShape& shape);
  static PositiveLinearMapSpec unitary_conjugation(const TensorShape& shape,
                                                   const Eigen::MatrixXcd& u);
  /// blocks: a partition of the matricized indices 0..D-1.
  static PositiveLinearMapSpec pinching(const TensorShape& shape,
                                        std::vector<std::vector<int>> blocks);
  /// traced_modes: which modes of `shape` to trace out (0-based).
  static PositiveLinearMapSpec normalized_partial_trace(
      const TensorShape& shape, std::vector<int> traced_modes);

  Kind kind() const { return kind_; }
  const TensorShape& input_shape() const { return in_; }
  const TensorShape& output_shape() const { return out_; }

  HermitianTensor operator()(const HermitianTensor& x) const;

 private:
  PositiveLinearMapSpec(Kind kind, TensorShape in, TensorShape out);

  Kind kind_;
  TensorShape in_;
  TensorShape out_;
  Eigen::MatrixXcd u_;
  std::vector<int> block_of_;   // pinching: block id per index
  std::vector<int> traced_;     // partial trace: sorted traced modes
};

inline HermitianTensor apply_plm(const PositiveLinearMapSpec& psi,
                                 const HermitianTensor& x) {
  return psi(x);
}

}  // namespace tensorwalk
