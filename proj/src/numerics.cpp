#include "tensorwalk/numerics.hpp"

#include <cmath>
#include <cstdio>

namespace tensorwalk {

namespace {

double pairwise_sum_range(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_range(data, half) +
         pairwise_sum_range(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_range(values.data(), values.size());
}

WilsonInterval wilson_interval(long successes, long trials) {
  WilsonInterval w;
  if (trials <= 0) return w;
  const double z = 1.959963984540054;  // 95%
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double radius =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  w.p_hat = p;
  w.lo = successes == 0 ? 0.0 : std::max(0.0, center - radius);
  w.hi = successes == trials ? 1.0 : std::min(1.0, center + radius);
  return w;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

MeanStderr mean_and_stderr(std::span<const double> values) {
  MeanStderr m;
  m.count = static_cast<long>(values.size());
  if (m.count == 0) return m;
  m.mean = pairwise_sum(values) / static_cast<double>(m.count);
  if (m.count < 2) return m;
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - m.mean;
    sq[i] = d * d;
  }
  const double var =
      pairwise_sum(sq) / static_cast<double>(m.count - 1);
  m.stderr_ = std::sqrt(var / static_cast<double>(m.count));
  return m;
}

}  // namespace tensorwalk
