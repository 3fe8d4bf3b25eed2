#include <cmath>

#include "doctest.h"
#include "tensorwalk/norms.hpp"
#include "tensorwalk/tensor.hpp"

using namespace tensorwalk;

namespace {

HermitianTensor diag2(double a, double b) {
  Eigen::VectorXd d(2);
  d << a, b;
  return HermitianTensor::from_diagonal(TensorShape({2}), d);
}

}  // namespace

TEST_CASE("norms of a fixed diagonal") {
  const auto x = diag2(3.0, -1.0);
  CHECK(ui_norm(x, UINormSpec::spectral()) == doctest::Approx(3.0));
  CHECK(ui_norm(x, UINormSpec::trace()) == doctest::Approx(4.0));
  CHECK(ui_norm(x, UINormSpec::frobenius()) ==
        doctest::Approx(std::sqrt(10.0)));
  CHECK(ui_norm(x, UINormSpec::ky_fan(1)) == doctest::Approx(3.0));
  CHECK(ui_norm(x, UINormSpec::ky_fan(2)) == doctest::Approx(4.0));
}

TEST_CASE("schatten norm of the identity is D^(1/p)") {
  const auto id = HermitianTensor::identity(TensorShape({2, 3}));
  for (double p : {1.0, 2.0, 3.0, 7.5}) {
    CHECK(ui_norm(id, UINormSpec::schatten(p)) ==
          doctest::Approx(std::pow(6.0, 1.0 / p)));
  }
}

TEST_CASE("unitary invariance over seeded rotations") {
  const auto x =
      random_hermitian_with_spectrum(TensorShape({4}), -2.0, 3.0, 17u);
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng(500 + trial);
    const Eigen::MatrixXcd u = random_unitary(4, rng);
    const Eigen::MatrixXcd v = random_unitary(4, rng);
    // U X U^H stays Hermitian; ||U X V^H|| needs the singular values, which
    // for these rotations coincide with |eigs| of the Hermitian conjugation.
    const HermitianTensor rotated(x.shape(), u * x.matrix() * u.adjoint());
    for (const auto& spec :
         {UINormSpec::spectral(), UINormSpec::trace(), UINormSpec::frobenius(),
          UINormSpec::ky_fan(2), UINormSpec::schatten(3.0)}) {
      CHECK(ui_norm(rotated, spec) ==
            doctest::Approx(ui_norm(x, spec)).epsilon(1e-8));
    }
    // Check two-sided invariance directly through singular values.
    const Eigen::MatrixXcd two_sided = u * x.matrix() * v.adjoint();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd_ts(two_sided);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd_x(x.matrix());
    CHECK((svd_ts.singularValues() - svd_x.singularValues())
              .cwiseAbs()
              .maxCoeff() <= 1e-8);
  }
}

TEST_CASE("norm monotonicity on PSD ordered pairs") {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng(700 + trial);
    const TensorShape shape({3});
    const auto a = random_hermitian_with_spectrum(shape, 0.0, 2.0, rng);
    const auto bump = random_hermitian_with_spectrum(shape, 0.0, 1.5, rng);
    const auto b = a + bump;  // a <= b by construction
    for (const auto& spec :
         {UINormSpec::spectral(), UINormSpec::trace(), UINormSpec::frobenius(),
          UINormSpec::ky_fan(2), UINormSpec::schatten(4.0)}) {
      CHECK(ui_norm(a, spec) <= ui_norm(b, spec) + 1e-10);
    }
  }
}

TEST_CASE("norm registry") {
  CHECK(UINormSpec::from_name("spectral").kind == UINormSpec::Kind::kSpectral);
  CHECK(UINormSpec::from_name("ky-fan", 3).k == 3);
  CHECK(UINormSpec::from_name("schatten", 2.5).p == doctest::Approx(2.5));
  CHECK(UINormSpec::spectral().dimension_factor(9) == 1.0);
  CHECK(UINormSpec::trace().dimension_factor(4) == 4.0);
  CHECK(UINormSpec::frobenius().dimension_factor(4) == doctest::Approx(2.0));
}
