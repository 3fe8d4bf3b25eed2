#include "tensorwalk/positive_map.hpp"

#include <algorithm>
#include <sstream>

#include "tensorwalk/errors.hpp"

namespace tensorwalk {

namespace {

std::vector<long> mode_strides(const std::vector<int>& modes) {
  std::vector<long> strides(modes.size(), 1);
  for (int k = static_cast<int>(modes.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * modes[k + 1];
  return strides;
}

}  // namespace

PositiveLinearMapSpec::PositiveLinearMapSpec(Kind kind, TensorShape in,
                                             TensorShape out)
    : kind_(kind), in_(std::move(in)), out_(std::move(out)) {}

PositiveLinearMapSpec PositiveLinearMapSpec::identity(
    const TensorShape& shape) {
  return PositiveLinearMapSpec(Kind::kIdentity, shape, shape);
}

PositiveLinearMapSpec PositiveLinearMapSpec::unitary_conjugation(
    const TensorShape& shape, const Eigen::MatrixXcd& u) {
  const int d = shape.matricized_side();
  if (u.rows() != d || u.cols() != d)
    throw ShapeError("unitary_conjugation: conjugator side mismatch");
  const double defect =
      (u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > 1e-8) {
    std::ostringstream os;
    os << "unitary_conjugation: non-unitary conjugator, |UU^H - I| = "
       << defect;
    throw DomainError(os.str());
  }
  PositiveLinearMapSpec psi(Kind::kUnitaryConjugation, shape, shape);
  psi.u_ = u;
  return psi;
}

PositiveLinearMapSpec PositiveLinearMapSpec::pinching(
    const TensorShape& shape, std::vector<std::vector<int>> blocks) {
  const int d = shape.matricized_side();
  std::vector<int> block_of(d, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int idx : blocks[b]) {
      if (idx < 0 || idx >= d)
        throw ShapeError("pinching: block index out of range");
      if (block_of[idx] != -1)
        throw ShapeError("pinching: index appears in two blocks");
      block_of[idx] = static_cast<int>(b);
    }
  }
  if (std::count(block_of.begin(), block_of.end(), -1) != 0)
    throw ShapeError("pinching: blocks do not cover every index");
  PositiveLinearMapSpec psi(Kind::kPinching, shape, shape);
  psi.block_of_ = std::move(block_of);
  return psi;
}

PositiveLinearMapSpec PositiveLinearMapSpec::normalized_partial_trace(
    const TensorShape& shape, std::vector<int> traced_modes) {
  const auto& modes = shape.mode_sizes();
  std::sort(traced_modes.begin(), traced_modes.end());
  if (traced_modes.empty())
    throw ShapeError("normalized_partial_trace: no modes to trace");
  for (std::size_t i = 0; i < traced_modes.size(); ++i) {
    const int t = traced_modes[i];
    if (t < 0 || t >= static_cast<int>(modes.size()))
      throw ShapeError("normalized_partial_trace: traced mode out of range");
    if (i > 0 && traced_modes[i - 1] == t)
      throw ShapeError("normalized_partial_trace: repeated traced mode");
  }
  std::vector<int> kept;
  for (int k = 0; k < static_cast<int>(modes.size()); ++k)
    if (!std::binary_search(traced_modes.begin(), traced_modes.end(), k))
      kept.push_back(modes[k]);
  if (kept.empty()) kept.push_back(1);  // full trace -> scalar
  PositiveLinearMapSpec psi(Kind::kNormalizedPartialTrace, shape,
                            TensorShape(kept));
  psi.traced_ = std::move(traced_modes);
  return psi;
}

HermitianTensor PositiveLinearMapSpec::operator()(
    const HermitianTensor& x) const {
  if (!(x.shape() == in_))
    throw ShapeError("positive linear map: input shape mismatch");
  switch (kind_) {
    case Kind::kIdentity:
      return x;
    case Kind::kUnitaryConjugation: {
      Eigen::MatrixXcd y = u_ * x.matrix() * u_.adjoint();
      return HermitianTensor(out_, y);
    }
    case Kind::kPinching: {
      Eigen::MatrixXcd y = x.matrix();
      const int d = in_.matricized_side();
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (block_of_[i] != block_of_[j]) y(i, j) = 0.0;
      return HermitianTensor(out_, y);
    }
    case Kind::kNormalizedPartialTrace: {
      const auto& modes = in_.mode_sizes();
      const auto strides = mode_strides(modes);
      std::vector<int> kept_modes;
      std::vector<long> kept_strides;
      std::vector<long> traced_strides;
      std::vector<int> traced_sizes;
      for (int k = 0; k < static_cast<int>(modes.size()); ++k) {
        if (std::binary_search(traced_.begin(), traced_.end(), k)) {
          traced_strides.push_back(strides[k]);
          traced_sizes.push_back(modes[k]);
        } else {
          kept_modes.push_back(modes[k]);
          kept_strides.push_back(strides[k]);
        }
      }
      const int d_out = out_.matricized_side();
      long traced_dim = 1;
      for (int t : traced_sizes) traced_dim *= t;

      // Matricized offset of each output index / traced index.
      std::vector<long> base(d_out, 0);
      for (int o = 0; o < d_out; ++o) {
        long rem = o;
        for (int k = static_cast<int>(kept_modes.size()) - 1; k >= 0; --k) {
          base[o] += (rem % kept_modes[k]) * kept_strides[k];
          rem /= kept_modes[k];
        }
      }
      std::vector<long> add(traced_dim, 0);
      for (long t = 0; t < traced_dim; ++t) {
        long rem = t;
        for (int k = static_cast<int>(traced_sizes.size()) - 1; k >= 0; --k) {
          add[t] += (rem % traced_sizes[k]) * traced_strides[k];
          rem /= traced_sizes[k];
        }
      }
      Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(d_out, d_out);
      const auto& m = x.matrix();
      for (int r = 0; r < d_out; ++r)
        for (int c = 0; c < d_out; ++c)
          for (long t = 0; t < traced_dim; ++t)
            y(r, c) += m(base[r] + add[t], base[c] + add[t]);
      y /= static_cast<double>(traced_dim);
      return HermitianTensor(out_, y);
    }
  }
  throw Error("unreachable");
}

}  // namespace tensorwalk
