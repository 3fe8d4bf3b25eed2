#include "tensorwalk/tensor.hpp"

#include <cmath>
#include <sstream>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

TensorShape::TensorShape(std::vector<int> mode_sizes)
    : modes_(std::move(mode_sizes)) {
  if (modes_.empty()) throw ShapeError("TensorShape: no mode sizes");
  long long side = 1;
  for (int m : modes_) {
    if (m < 1) throw ShapeError("TensorShape: mode sizes must be positive");
    side *= m;
    if (side > 1 << 20) throw ShapeError("TensorShape: matricized side too large");
  }
  side_ = static_cast<int>(side);
}

HermitianTensor::HermitianTensor(TensorShape shape, Eigen::MatrixXcd entries,
                                 Unchecked)
    : shape_(std::move(shape)), m_(std::move(entries)) {}

HermitianTensor::HermitianTensor(TensorShape shape,
                                 const Eigen::MatrixXcd& entries)
    : shape_(std::move(shape)), m_() {
  const int d = shape_.matricized_side();
  if (entries.rows() != d || entries.cols() != d) {
    std::ostringstream os;
    os << "HermitianTensor: entries are " << entries.rows() << "x"
       << entries.cols() << " but the matricized side is " << d;
    throw ShapeError(os.str());
  }
  const double scale = entries.cwiseAbs().maxCoeff();
  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  const double tol = 1e-10 * (1.0 + scale);
  if (asym > tol) {
    std::ostringstream os;
    os << "HermitianTensor: input is not Hermitian; measured asymmetry "
       << asym << " exceeds tolerance " << tol;
    throw DomainError(os.str());
  }
  m_ = 0.5 * (entries + entries.adjoint().eval());
}

HermitianTensor HermitianTensor::identity(const TensorShape& shape) {
  const int d = shape.matricized_side();
  return HermitianTensor(shape, Eigen::MatrixXcd::Identity(d, d), Unchecked{});
}

HermitianTensor HermitianTensor::zero(const TensorShape& shape) {
  const int d = shape.matricized_side();
  return HermitianTensor(shape, Eigen::MatrixXcd::Zero(d, d), Unchecked{});
}

HermitianTensor HermitianTensor::from_diagonal(const TensorShape& shape,
                                               const Eigen::VectorXd& diag) {
  const int d = shape.matricized_side();
  if (diag.size() != d)
    throw ShapeError("from_diagonal: diagonal length does not match side");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = diag(i);
  return HermitianTensor(shape, std::move(m), Unchecked{});
}

HermitianTensor HermitianTensor::operator+(const HermitianTensor& other) const {
  if (!(shape_ == other.shape_))
    throw ShapeError("tensor addition: shape mismatch");
  return HermitianTensor(shape_, m_ + other.m_, Unchecked{});
}

HermitianTensor HermitianTensor::operator-(const HermitianTensor& other) const {
  if (!(shape_ == other.shape_))
    throw ShapeError("tensor subtraction: shape mismatch");
  return HermitianTensor(shape_, m_ - other.m_, Unchecked{});
}

HermitianTensor HermitianTensor::scaled(double factor) const {
  return HermitianTensor(shape_, factor * m_, Unchecked{});
}

SpectralDecomposition eigendecompose(const HermitianTensor& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(x.matrix());
  if (solver.info() != Eigen::Success)
    throw Error("eigendecompose: solver failed to converge");
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

HermitianTensor apply_scalar_function(const HermitianTensor& x,
                                      const ScalarFunctionSpec& phi) {
  const SpectralDecomposition sd = eigendecompose(x);
  const int d = x.side();
  Eigen::VectorXd mapped(d);
  for (int i = 0; i < d; ++i) {
    const double lambda = sd.eigenvalues(i);
    if (!phi.contains(lambda)) {
      std::ostringstream os;
      os << "apply_scalar_function: eigenvalue " << lambda
         << " lies outside the domain of '" << phi.name() << "'";
      throw DomainError(os.str());
    }
    mapped(i) = phi(lambda);
  }
  Eigen::MatrixXcd result =
      sd.eigenvectors * mapped.asDiagonal() * sd.eigenvectors.adjoint();
  // Round-trip noise only; fold it away.
  result = 0.5 * (result + result.adjoint().eval());
  return HermitianTensor(x.shape(), result);
}

LoewnerResult loewner_leq(const HermitianTensor& a, const HermitianTensor& b,
                          double tol) {
  if (!(a.shape() == b.shape()))
    throw ShapeError("loewner_leq: shape mismatch");
  const HermitianTensor diff = b - a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff.matrix());
  if (solver.info() != Eigen::Success)
    throw Error("loewner_leq: solver failed to converge");
  const double min_eig = solver.eigenvalues()(0);
  if (tol < 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> nb(b.matrix());
    const double bnorm = nb.eigenvalues().cwiseAbs().maxCoeff();
    tol = 1e-8 * (1.0 + bnorm);
  }
  return LoewnerResult{min_eig >= -tol, min_eig};
}

Eigen::MatrixXcd random_unitary(int side, Rng& rng) {
  Eigen::MatrixXcd g(side, side);
  for (int j = 0; j < side; ++j)
    for (int i = 0; i < side; ++i)
      g(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian()) *
                std::numbers::sqrt2 * 0.5;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < side; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double mag = std::abs(rjj);
    const std::complex<double> phase = mag > 0.0 ? rjj / mag : 1.0;
    q.col(j) *= phase;
  }
  return q;
}

HermitianTensor random_hermitian_with_spectrum(const TensorShape& shape,
                                               double c, double d, Rng& rng) {
  if (c > d)
    throw DomainError("random_hermitian_with_spectrum: interval has c > d");
  const int side = shape.matricized_side();
  if (c == d) {
    Eigen::VectorXd diag = Eigen::VectorXd::Constant(side, c);
    return HermitianTensor::from_diagonal(shape, diag);
  }
  Eigen::VectorXd eigs(side);
  for (int i = 0; i < side; ++i) eigs(i) = rng.uniform(c, d);
  const Eigen::MatrixXcd u = random_unitary(side, rng);
  Eigen::MatrixXcd m = u * eigs.asDiagonal() * u.adjoint();
  return HermitianTensor(shape, m);
}

HermitianTensor random_hermitian_with_spectrum(const TensorShape& shape,
                                               double c, double d,
                                               std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian_with_spectrum(shape, c, d, rng);
}

}  // namespace tensorwalk
