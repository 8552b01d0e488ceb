#pragma once

// Gamma-ratio special functions: the generalized falling function and the
// fractional Taylor monomial.

namespace hilfer {

/// A real number held as sign * exp(log_abs). sign == 0 is an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  [[nodiscard]] double value() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return sign == 0; }
};

/// True when x is within 1e-10 of a non-positive integer.
[[nodiscard]] bool is_gamma_pole(double x) noexcept;

/// sign(Gamma(x)) * log|Gamma(x)| for x off the poles.
[[nodiscard]] SignedLog log_gamma(double x);

/// 1/Gamma(x), zero at the poles.
[[nodiscard]] double rgamma(double x);

/// t^(r) = Gamma(t+1) / Gamma(t-r+1) in sign/log form.
///
/// Zero when only the denominator has a pole; singular_error when only the
/// numerator has one. When both do (t+1 = -m, t-r+1 = -n) the value is the
/// limit of the ratio of residues, (-1)^(n-m) n!/m!.
[[nodiscard]] SignedLog log_falling_factorial(double t, double r);

[[nodiscard]] double falling_factorial(double t, double r);

/// h_r(t, s) = (t-s)^(r) / Gamma(r+1). When r+1 is a pole the monomial is
/// taken as zero (1/Gamma vanishes).
[[nodiscard]] double taylor_monomial(double r, double t, double s);

}  // namespace hilfer
