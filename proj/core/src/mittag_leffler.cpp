#include "hilfer/mittag_leffler.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "hilfer/errors.hpp"
#include "hilfer/special.hpp"

namespace hilfer {

namespace {

constexpr int kNegligibleRun = 3;

// Argument of the falling function's denominator gamma, t - r + 1, for term k.
double denominator_arg(const MlParams& p, double z, std::size_t k) {
  return (z - p.eta + 2.0) - static_cast<double>(k);
}

}  // namespace

void MlParams::validate() const {
  if (!(mu > 0.0)) throw std::invalid_argument("MlParams: mu must be positive");
  if (!(std::abs(lambda) < 1.0)) throw std::invalid_argument("MlParams: |lambda| must be < 1");
}

double pochhammer(double gamma, std::size_t k) noexcept {
  double acc = 1.0;
  for (std::size_t i = 0; i < k; ++i) acc *= gamma + static_cast<double>(i);
  return acc;
}

double ml_term(const MlParams& p, double z, std::size_t k) {
  const double kk = static_cast<double>(k);
  if (k > 0 && p.lambda == 0.0) return 0.0;
  if (is_gamma_pole(denominator_arg(p, z, k))) return 0.0;

  const double order = p.mu * kk + p.eta - 1.0;
  const SignedLog ff = log_falling_factorial(z + kk * (p.mu - 1.0), order);
  if (ff.is_zero() || is_gamma_pole(order + 1.0)) return 0.0;
  const SignedLog g = log_gamma(order + 1.0);

  double log_abs = ff.log_abs - g.log_abs - std::lgamma(kk + 1.0);
  int sign = ff.sign * g.sign;
  if (k > 0) {
    log_abs += kk * std::log(std::abs(p.lambda));
    if (p.lambda < 0.0 && k % 2 == 1) sign = -sign;
  }
  if (p.gamma != 1.0) {
    for (std::size_t i = 0; i < k; ++i) {
      const double f = p.gamma + static_cast<double>(i);
      if (f == 0.0) return 0.0;
      log_abs += std::log(std::abs(f));
      if (f < 0.0) sign = -sign;
    }
  } else {
    log_abs += std::lgamma(kk + 1.0);  // (1)_k = k!
  }
  return sign * std::exp(log_abs);
}

MlResult ml_plain(const MlParams& p, double z, const SeriesCtl& ctl) {
  p.validate();
  if (p.lambda == 0.0) return {ml_term(p, z, 0), 1, true};

  double sum = 0.0;
  int negligible = 0;
  for (std::size_t k = 0; k < ctl.max_terms; ++k) {
    if (is_gamma_pole(denominator_arg(p, z, k))) return {sum, k + 1, true};
    const double term = ml_term(p, z, k);
    sum += term;
    if (!std::isfinite(sum)) throw convergence_error("ml_plain: series overflowed");
    negligible = std::abs(term) <= ctl.tol * std::max(std::abs(sum), 1e-300) ? negligible + 1 : 0;
    if (negligible >= kNegligibleRun) return {sum, k + 1, false};
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "ml_plain: no convergence within %zu terms at z = %.17g",
                ctl.max_terms, z);
  throw convergence_error(buf);
}

MlResult ml_bold(const MlParams& p, double z, const SeriesCtl& ctl) {
  return ml_plain(p, z + p.eta - 1.0, ctl);
}

}  // namespace hilfer
