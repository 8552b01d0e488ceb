#include "hilfer/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "hilfer/errors.hpp"
#include "hilfer/operators.hpp"

namespace hilfer {

namespace {

constexpr std::size_t kInitialSamples = 64;
constexpr std::size_t kMinTerms = 4;

void validate(const LaplaceCtl& ctl, double y) {
  if (!(ctl.tol > 0.0)) throw std::invalid_argument("LaplaceCtl: tol must be positive");
  if (ctl.max_terms == 0) throw std::invalid_argument("LaplaceCtl: max_terms must be positive");
  if (!(ctl.order_bound > 1.0))
    throw std::invalid_argument("LaplaceCtl: exponential order bound must exceed 1");
  if (!(std::abs(1.0 + y) > ctl.order_bound)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "delta_laplace: |1+y| = %.6g does not exceed order bound %.6g",
                  std::abs(1.0 + y), ctl.order_bound);
    throw std::invalid_argument(buf);
  }
}

enum class Stop { converged, exhausted, budget };

struct Attempt {
  LaplaceResult result;
  Stop stop = Stop::exhausted;
};

Attempt try_laplace(const GridFn& f, double y, const LaplaceCtl& ctl) {
  const double q = 1.0 + y;
  const double ratio = ctl.order_bound / std::abs(q);
  const double log_r = std::log(ctl.order_bound);
  const double log_ratio = std::log(ratio);
  const std::size_t limit = std::min(f.size(), ctl.max_terms);

  double sum = 0.0;
  double factor = 1.0;
  double max_log = -std::numeric_limits<double>::infinity();
  std::size_t argmax = 0;
  Attempt out;
  for (std::size_t k = 0; k < limit; ++k) {
    factor /= q;
    sum += f[k] * factor;
    if (f[k] != 0.0) {
      const double l = std::log(std::abs(f[k])) - static_cast<double>(k) * log_r;
      if (l > max_log) {
        max_log = l;
        argmax = k;
      }
    }
    const std::size_t n = k + 1;
    const double tail =
        std::isinf(max_log) ? 0.0 : std::exp(max_log + n * log_ratio) / (1.0 - ratio);
    out.result = {sum, tail, n};
    // A maximum of |f|/r^k near the end of the prefix means f is still
    // outgrowing the declared order, so the estimate M cannot be trusted yet.
    const bool settled = 4 * argmax < 3 * n;
    if (n >= kMinTerms && tail < ctl.tol && settled) {
      out.stop = Stop::converged;
      return out;
    }
  }
  out.stop = limit >= ctl.max_terms ? Stop::budget : Stop::exhausted;
  return out;
}

[[noreturn]] void throw_budget(const LaplaceCtl& ctl) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "delta_laplace: tail bound not below %.3g within %zu terms "
                "(f may exceed exponential order %.6g)",
                ctl.tol, ctl.max_terms, ctl.order_bound);
  throw convergence_error(buf);
}

// Re-samples f on growing prefixes of N_a until `build` reports convergence.
template <typename Build>
auto adaptive(const PointFn& f, double a, const LaplaceCtl& ctl, Build build) {
  for (std::size_t n = std::min(kInitialSamples, ctl.max_terms);; n = std::min(2 * n, ctl.max_terms)) {
    const GridFn samples = GridFn::sample(Grid(a, n), f);
    if (auto r = build(samples)) return *r;
    if (n >= ctl.max_terms) throw_budget(ctl);
  }
}

std::optional<double> converged(const GridFn& f, double y, const LaplaceCtl& ctl) {
  const Attempt at = try_laplace(f, y, ctl);
  if (at.stop == Stop::converged) return at.result.value;
  return std::nullopt;
}

void require_positive_y(double y) {
  if (!(y > 0.0)) throw std::invalid_argument("transform closed forms need real y > 0");
}

}  // namespace

double IdentityPair::abs_error() const noexcept { return std::abs(lhs - rhs); }

double delta_exp(double p, double x, double y) {
  const auto n = Grid(std::min(x, y), 0).lattice_index(std::max(x, y));
  if (!n) throw off_grid_error("delta_exp: x - y must be an integer");
  if (*n == 0) return 1.0;
  if (1.0 + p == 0.0) throw regressivity_error("delta_exp: p is not regressive (1 + p = 0)");
  double prod = 1.0;
  for (std::size_t k = 0; k < *n; ++k) prod *= 1.0 + p;
  return x >= y ? prod : 1.0 / prod;
}

double delta_exp(const GridFn& p, double x, double y) {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const auto i0 = p.grid().lattice_index(lo);
  const auto i1 = p.grid().lattice_index(hi);
  if (!i0 || !i1) throw off_grid_error("delta_exp: x and y must lie on p's grid");
  if (*i1 > p.size()) throw off_grid_error("delta_exp: p does not cover the traversed range");
  double prod = 1.0;
  for (std::size_t k = *i0; k < *i1; ++k) {
    const double f = 1.0 + p[k];
    if (f == 0.0) throw regressivity_error("delta_exp: p is not regressive (1 + p = 0)");
    prod *= f;
  }
  return x >= y ? prod : 1.0 / prod;
}

LaplaceResult delta_laplace(const GridFn& f, double y, const LaplaceCtl& ctl) {
  validate(ctl, y);
  const Attempt at = try_laplace(f, y, ctl);
  switch (at.stop) {
    case Stop::converged:
      return at.result;
    case Stop::budget:
      throw_budget(ctl);
    case Stop::exhausted:
      break;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "delta_laplace: %zu samples exhausted before the tail bound met %.3g", f.size(),
                ctl.tol);
  throw convergence_error(buf);
}

LaplaceResult delta_laplace(const PointFn& f, double a, double y, const LaplaceCtl& ctl) {
  validate(ctl, y);
  return adaptive(f, a, ctl, [&](const GridFn& samples) -> std::optional<LaplaceResult> {
    const Attempt at = try_laplace(samples, y, ctl);
    if (at.stop == Stop::converged) return at.result;
    return std::nullopt;
  });
}

IdentityPair laplace_of_fractional_sum_check(const PointFn& f, double a, double mu, double y,
                                             const LaplaceCtl& ctl) {
  validate(ctl, y);
  require_positive_y(y);
  return adaptive(f, a, ctl, [&](const GridFn& samples) -> std::optional<IdentityPair> {
    auto lhs = converged(fractional_sum(samples, mu), y, ctl);
    auto transform = converged(samples, y, ctl);
    if (!lhs || !transform) return std::nullopt;
    return IdentityPair{*lhs, std::pow((y + 1.0) / y, mu) * *transform};
  });
}

IdentityPair laplace_of_difference_check(const PointFn& f, double a, int m, double y,
                                         const LaplaceCtl& ctl) {
  if (m < 1) throw std::invalid_argument("laplace_of_difference_check: m must be >= 1");
  validate(ctl, y);
  return adaptive(f, a, ctl, [&](const GridFn& samples) -> std::optional<IdentityPair> {
    if (samples.size() <= static_cast<std::size_t>(m)) return std::nullopt;
    // diffs[i] = Delta^i f on N_a.
    std::vector<GridFn> diffs{samples};
    for (int i = 1; i <= m; ++i) diffs.push_back(forward_difference(diffs.back()));
    auto lhs = converged(diffs[static_cast<std::size_t>(m)], y, ctl);
    auto transform = converged(samples, y, ctl);
    if (!lhs || !transform) return std::nullopt;
    double rhs = std::pow(y, m) * *transform;
    for (int j = 0; j < m; ++j) rhs -= std::pow(y, j) * diffs[static_cast<std::size_t>(m - 1 - j)][0];
    return IdentityPair{*lhs, rhs};
  });
}

IdentityPair laplace_shift_check(const PointFn& f, double a, double y, const LaplaceCtl& ctl) {
  validate(ctl, y);
  return adaptive(f, a, ctl, [&](const GridFn& samples) -> std::optional<IdentityPair> {
    if (samples.size() < 2) return std::nullopt;
    std::vector<double> tail(samples.values().begin() + 1, samples.values().end());
    const std::size_t tail_n = tail.size();
    const GridFn shifted(Grid(a + 1.0, tail_n), std::move(tail));
    auto lhs = converged(shifted, y, ctl);
    auto transform = converged(samples, y, ctl);
    if (!lhs || !transform) return std::nullopt;
    return IdentityPair{*lhs, (1.0 + y) * *transform - samples[0]};
  });
}

double hilfer_laplace_closed_form(double transform, double inner_at_base, const HilferOrder& order,
                                  double y) {
  require_positive_y(y);
  const double mu = order.mu();
  return std::pow(y, mu) * std::pow(y + 1.0, 1.0 - mu) * transform -
         std::pow((y + 1.0) / y, order.outer_order()) * inner_at_base;
}

double rl_laplace_closed_form(double transform, double f_at_a, double mu, double y) {
  require_positive_y(y);
  return std::pow(y, mu) * std::pow(y + 1.0, 1.0 - mu) * transform - f_at_a;
}

double caputo_laplace_closed_form(double transform, double f_at_a, double mu, double y) {
  require_positive_y(y);
  return std::pow(y, mu) * std::pow(y + 1.0, 1.0 - mu) * transform -
         std::pow((y + 1.0) / y, 1.0 - mu) * f_at_a;
}

IdentityPair laplace_of_hilfer(const PointFn& f, double a, const HilferOrder& order, double y,
                               const LaplaceCtl& ctl) {
  validate(ctl, y);
  require_positive_y(y);
  return adaptive(f, a, ctl, [&](const GridFn& samples) -> std::optional<IdentityPair> {
    auto lhs = converged(hilfer_difference(samples, order), y, ctl);
    auto transform = converged(samples, y, ctl);
    if (!lhs || !transform) return std::nullopt;
    const double inner_at_base = fractional_sum(samples, order.inner_order())[0];
    return IdentityPair{*lhs, hilfer_laplace_closed_form(*transform, inner_at_base, order, y)};
  });
}

}  // namespace hilfer
