#include "hilfer/special.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>

#include "hilfer/errors.hpp"

namespace hilfer {

namespace {

constexpr double kPoleTol = 1e-10;
constexpr double kIntegerOrderTol = 1e-12;
constexpr int kProductFormMax = 64;
// Below this magnitude tgamma neither overflows nor loses accuracy to lgamma.
constexpr double kDirectGammaLimit = 150.0;

SignedLog from_value(double v) {
  if (v == 0.0) return {0.0, 0};
  return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

[[noreturn]] void throw_singular(double t, double r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "falling factorial %.17g^(%.17g) is singular", t, r);
  throw singular_error(buf);
}

// t^(m) for a small integer m by direct products.
SignedLog integer_falling(double t, int m) {
  SignedLog acc{0.0, 1};
  if (m >= 0) {
    for (int i = 0; i < m; ++i) {
      const double f = t - i;
      if (std::abs(f) < kPoleTol) return {0.0, 0};
      acc.log_abs += std::log(std::abs(f));
      if (f < 0.0) acc.sign = -acc.sign;
    }
    return acc;
  }
  for (int i = 1; i <= -m; ++i) {
    const double f = t + i;
    if (std::abs(f) < kPoleTol) throw_singular(t, m);
    acc.log_abs -= std::log(std::abs(f));
    if (f < 0.0) acc.sign = -acc.sign;
  }
  return acc;
}

bool small_integer(double r, int& m) {
  const double rr = std::round(r);
  if (std::abs(r - rr) >= kIntegerOrderTol || std::abs(rr) > kProductFormMax) return false;
  m = static_cast<int>(rr);
  return true;
}

// Plain double evaluation where it is exact enough and cannot overflow;
// nullopt sends the caller to the log path.
std::optional<double> direct_falling(double t, double r) {
  int m = 0;
  if (small_integer(r, m)) {
    if (std::abs(t) > 1e6) return std::nullopt;
    double acc = 1.0;
    if (m >= 0) {
      for (int i = 0; i < m; ++i) {
        if (std::abs(t - i) < kPoleTol) return 0.0;
        acc *= t - i;
      }
      return acc;
    }
    for (int i = 1; i <= -m; ++i) {
      if (std::abs(t + i) < kPoleTol) throw_singular(t, r);
      acc /= t + i;
    }
    return acc;
  }
  const double top = t + 1.0;
  const double bottom = t - r + 1.0;
  if (is_gamma_pole(top) || is_gamma_pole(bottom)) return std::nullopt;
  if (std::abs(top) < kDirectGammaLimit && std::abs(bottom) < kDirectGammaLimit)
    return std::tgamma(top) / std::tgamma(bottom);
  return std::nullopt;
}

}  // namespace

double SignedLog::value() const noexcept {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

bool is_gamma_pole(double x) noexcept {
  return x < kPoleTol && std::abs(x - std::round(x)) < kPoleTol;
}

SignedLog log_gamma(double x) {
  if (is_gamma_pole(x)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "Gamma has a pole at %.17g", x);
    throw singular_error(buf);
  }
  int sign = 1;
  if (x < 0.0 && static_cast<long long>(std::floor(x)) % 2 != 0) sign = -1;
  return {std::lgamma(x), sign};
}

double rgamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  if (std::abs(x) < kDirectGammaLimit) return 1.0 / std::tgamma(x);
  const SignedLog g = log_gamma(x);
  return g.sign * std::exp(-g.log_abs);
}

SignedLog log_falling_factorial(double t, double r) {
  int m_int = 0;
  if (small_integer(r, m_int)) return integer_falling(t, m_int);

  const double top = t + 1.0;
  const double bottom = t - r + 1.0;
  const bool top_pole = is_gamma_pole(top);
  const bool bottom_pole = is_gamma_pole(bottom);

  if (bottom_pole && !top_pole) return {0.0, 0};
  if (top_pole && !bottom_pole) throw_singular(t, r);
  if (top_pole && bottom_pole) {
    const double m = -std::round(top);
    const double n = -std::round(bottom);
    const int sign = (static_cast<long long>(n - m) % 2 == 0) ? 1 : -1;
    return {std::lgamma(n + 1.0) - std::lgamma(m + 1.0), sign};
  }
  if (std::abs(top) < kDirectGammaLimit && std::abs(bottom) < kDirectGammaLimit)
    return from_value(std::tgamma(top) / std::tgamma(bottom));
  const SignedLog gt = log_gamma(top);
  const SignedLog gb = log_gamma(bottom);
  return {gt.log_abs - gb.log_abs, gt.sign * gb.sign};
}

double falling_factorial(double t, double r) {
  if (auto v = direct_falling(t, r)) return *v;
  return log_falling_factorial(t, r).value();
}

double taylor_monomial(double r, double t, double s) {
  if (auto v = direct_falling(t - s, r)) {
    if (*v == 0.0) return 0.0;
    if (std::abs(r + 1.0) < kDirectGammaLimit) {
      const double rg = rgamma(r + 1.0);
      if (rg == 0.0) return 0.0;
      return *v * rg;
    }
  }
  const SignedLog ff = log_falling_factorial(t - s, r);
  if (ff.is_zero() || is_gamma_pole(r + 1.0)) return 0.0;
  const SignedLog g = log_gamma(r + 1.0);
  return ff.sign * g.sign * std::exp(ff.log_abs - g.log_abs);
}

}  // namespace hilfer
