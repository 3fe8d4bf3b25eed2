#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "tensorwalk/rng.hpp"
#include "tensorwalk/scalar_function.hpp"

namespace tensorwalk {

/// Mode sizes of an even-order tensor together with the side of its square
/// matricization (the product of the mode sizes).
class TensorShape {
 public:
  explicit TensorShape(std::vector<int> mode_sizes);

  const std::vector<int>& mode_sizes() const { return modes_; }
  int matricized_side() const { return side_; }
  bool operator==(const TensorShape& other) const {
    return modes_ == other.modes_;
  }

 private:
  std::vector<int> modes_;
  int side_;
};

/// Hermitian tensor stored through its square matricization.  Inputs within
/// the hermiticity tolerance are symmetrized; anything further off is
/// rejected with the measured asymmetry.
class HermitianTensor {
 public:
  HermitianTensor(TensorShape shape, const Eigen::MatrixXcd& entries);

  static HermitianTensor identity(const TensorShape& shape);
  static HermitianTensor zero(const TensorShape& shape);
  static HermitianTensor from_diagonal(const TensorShape& shape,
                                       const Eigen::VectorXd& diag);

  const TensorShape& shape() const { return shape_; }
  int side() const { return shape_.matricized_side(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  HermitianTensor operator+(const HermitianTensor& other) const;
  HermitianTensor operator-(const HermitianTensor& other) const;
  HermitianTensor scaled(double factor) const;

 private:
  struct Unchecked {};
  HermitianTensor(TensorShape shape, Eigen::MatrixXcd entries, Unchecked);

  TensorShape shape_;
  Eigen::MatrixXcd m_;
};

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // unitary, columns
};

SpectralDecomposition eigendecompose(const HermitianTensor& x);

/// phi applied through the spectrum: U diag(phi(lambda)) U^H.  Raises
/// DomainError naming the first eigenvalue outside phi's domain.
HermitianTensor apply_scalar_function(const HermitianTensor& x,
                                      const ScalarFunctionSpec& phi);

struct LoewnerResult {
  bool holds = false;
  double min_eigenvalue = 0.0;  // smallest eigenvalue of b - a
};

/// a <= b in the Loewner order, up to tol on the smallest eigenvalue of
/// b - a.  Pass a negative tol to use the default 1e-8 * (1 + ||b||_2).
LoewnerResult loewner_leq(const HermitianTensor& a, const HermitianTensor& b,
                          double tol = -1.0);

/// Haar-distributed unitary of the given side (QR of a Ginibre matrix).
Eigen::MatrixXcd random_unitary(int side, Rng& rng);

/// Random Hermitian tensor with eigenvalues drawn uniformly in [c, d] and a
/// seeded Haar eigenbasis; deterministic per (seed, shape).
HermitianTensor random_hermitian_with_spectrum(const TensorShape& shape,
                                               double c, double d,
                                               std::uint64_t seed);
HermitianTensor random_hermitian_with_spectrum(const TensorShape& shape,
                                               double c, double d, Rng& rng);

}  // namespace tensorwalk
