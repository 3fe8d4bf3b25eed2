#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace tensorwalk {

/// A real scalar function used in the g/h roles of the operator
/// inequalities.  Built-in kinds have exact derivatives and, where the
/// envelope construction needs it, a closed-form inverse of the derivative.
class ScalarFunctionSpec {
 public:
  enum class Kind {
    kIdentity,
    kAffine,       // a*s + b
    kPower,        // s^p on [0, inf), p > 0
    kExponential,  // base^s, base > 0, base != 1
    kNegativeLog,  // -log(s) on (0, inf)
    kPolynomial,   // c0 + c1 s + ...
  };

  static ScalarFunctionSpec identity();
  static ScalarFunctionSpec affine(double a, double b);
  static ScalarFunctionSpec power(double p);
  static ScalarFunctionSpec exponential(double base);
  static ScalarFunctionSpec negative_log();
  static ScalarFunctionSpec polynomial(std::vector<double> coeffs);

  /// Registry lookup used by the CLI: "identity", "square", "cube", "sqrt",
  /// "exp", "neglog", "affine" (2 params), "power" (1), "exponential" (1),
  /// "poly" (coefficients, constant term first).
  static ScalarFunctionSpec from_name(const std::string& name,
                                      const std::vector<double>& params = {});

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  double operator()(double s) const;
  double derivative(double s) const;

  /// Domain as a closed-from-below/above interval; values outside raise
  /// DomainError from eval.  The lower end of neglog's domain is open.
  double domain_lo() const { return domain_lo_; }
  double domain_hi() const { return domain_hi_; }
  bool contains(double s) const;

  /// Solves derivative(s) == slope for s in [c, d].  Closed form for the
  /// built-ins; monotone bisection (valid for convex functions) otherwise.
  /// Returns nullopt when the derivative never attains the slope on [c, d].
  std::optional<double> inverse_derivative(double slope, double c,
                                           double d) const;

  /// Grid test: second differences on 1000 points of [c, d] are >= -1e-9.
  bool convex_on(double c, double d) const;

 private:
  ScalarFunctionSpec(Kind kind, std::string name);
  std::optional<double> bisect_derivative(double slope, double c,
                                          double d) const;

  Kind kind_;
  std::string name_;
  double a_ = 0.0, b_ = 0.0;  // affine
  double p_ = 1.0;            // power
  double base_ = 1.0;         // exponential
  std::vector<double> coeffs_;
  double domain_lo_ = -std::numeric_limits<double>::infinity();
  double domain_hi_ = std::numeric_limits<double>::infinity();
  bool domain_lo_open_ = false;
};

}  // namespace tensorwalk
