#include "tensorwalk/norms.hpp"

#include <algorithm>
#include <cmath>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

UINormSpec UINormSpec::from_name(const std::string& name, double param) {
  if (name == "spectral") return spectral();
  if (name == "trace") return trace();
  if (name == "frobenius") return frobenius();
  if (name == "ky-fan") {
    const int k = static_cast<int>(param);
    if (k < 1) throw ConfigError("ky-fan norm needs order k >= 1");
    return ky_fan(k);
  }
  if (name == "schatten") {
    if (param < 1.0) throw ConfigError("schatten norm needs p >= 1");
    return schatten(param);
  }
  throw ConfigError("unknown norm '" + name + "'");
}

std::string UINormSpec::name() const {
  switch (kind) {
    case Kind::kSpectral:
      return "spectral";
    case Kind::kTrace:
      return "trace";
    case Kind::kFrobenius:
      return "frobenius";
    case Kind::kKyFan:
      return "ky-fan(" + std::to_string(k) + ")";
    case Kind::kSchatten:
      return "schatten(" + std::to_string(p) + ")";
  }
  return "?";
}

double UINormSpec::dimension_factor(int d) const {
  switch (kind) {
    case Kind::kSpectral:
      return 1.0;
    case Kind::kTrace:
      return static_cast<double>(d);
    case Kind::kFrobenius:
      return std::sqrt(static_cast<double>(d));
    case Kind::kKyFan:
      return static_cast<double>(std::min(k, d));
    case Kind::kSchatten:
      return std::pow(static_cast<double>(d), 1.0 / p);
  }
  return 1.0;
}

double ui_norm(const HermitianTensor& x, const UINormSpec& spec) {
  const SpectralDecomposition sd = eigendecompose(x);
  Eigen::VectorXd sv = sd.eigenvalues.cwiseAbs();
  std::sort(sv.data(), sv.data() + sv.size(), std::greater<double>());
  switch (spec.kind) {
    case UINormSpec::Kind::kSpectral:
      return sv(0);
    case UINormSpec::Kind::kTrace:
      return sv.sum();
    case UINormSpec::Kind::kFrobenius:
      return std::sqrt(sv.squaredNorm());
    case UINormSpec::Kind::kKyFan: {
      const int k = std::min<int>(spec.k, static_cast<int>(sv.size()));
      if (spec.k < 1) throw ConfigError("ky-fan norm needs order k >= 1");
      return sv.head(k).sum();
    }
    case UINormSpec::Kind::kSchatten: {
      if (spec.p < 1.0) throw ConfigError("schatten norm needs p >= 1");
      double acc = 0.0;
      for (int i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), spec.p);
      return std::pow(acc, 1.0 / spec.p);
    }
  }
  throw Error("unreachable");
}

}  // namespace tensorwalk
