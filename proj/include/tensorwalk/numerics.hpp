#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tensorwalk {

/// Pairwise (cascade) summation; the result depends only on the element
/// order, not on how work was split across threads.
double pairwise_sum(std::span<const double> values);

struct WilsonInterval {
  double p_hat = 0.0;
  double lo = 0.0;
  double hi = 1.0;
};

/// 95% Wilson score interval for `successes` out of `trials`.
WilsonInterval wilson_interval(long successes, long trials);

/// Shortest decimal text that survives a round trip (printed with 17
/// significant digits, '.' decimal point, no locale).
std::string format_double(double value);

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
  long count = 0;
};

/// Sample mean and standard error (stddev / sqrt(n)) via pairwise sums.
MeanStderr mean_and_stderr(std::span<const double> values);

}  // namespace tensorwalk
