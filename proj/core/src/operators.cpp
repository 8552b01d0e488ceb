#include "hilfer/operators.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilfer/errors.hpp"
#include "hilfer/special.hpp"

namespace hilfer {

namespace {

void require_open_unit(double mu, const char* who) {
  if (!(mu > 0.0 && mu < 1.0))
    throw std::invalid_argument(std::string(who) + ": order must lie in (0,1)");
}

// Index of x on the output lattice `base + N_0`, checked against the number of
// f samples the evaluation needs (`needed(index)` must be <= f.size()).
template <typename Needed>
std::size_t output_index(const GridFn& f, double base, double x, Needed needed, const char* who) {
  const Grid out(base, 0);
  auto k = out.lattice_index(x);
  if (!k) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.17g is not on N_%.17g", who, x, base);
    throw off_grid_error(buf);
  }
  if (needed(*k) > f.size()) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: f on N_%.17g with %zu points does not cover x = %.17g",
                  who, f.base(), f.size(), x);
    throw off_grid_error(buf);
  }
  return *k;
}

// Definition-level kernel h_{mu-1}(x, sigma(tau)) where x - sigma(tau) = mu - 1 + lag.
double sum_kernel(double mu, std::size_t lag) {
  return taylor_monomial(mu - 1.0, mu - 1.0 + static_cast<double>(lag), 0.0);
}

// Pointwise fractional sum of the sample vector v at output index n.
double pointwise_sum(std::span<const double> v, double mu, std::size_t n) {
  if (mu == 0.0) return v[n];
  double s = 0.0;
  for (std::size_t j = 0; j <= n; ++j) s += sum_kernel(mu, n - j) * v[j];
  return s;
}

}  // namespace

GridFn fractional_sum(const GridFn& f, double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("fractional_sum: order must be >= 0");
  if (mu == 0.0) return f;
  const std::size_t n = f.size();
  const std::vector<double> w = kernel_weights(mu, n);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += w[i - j] * f[j];
    out[i] = s;
  }
  return {Grid(f.base() + mu, n), std::move(out)};
}

double fractional_sum(const GridFn& f, double mu, double x) {
  if (!(mu >= 0.0)) throw std::invalid_argument("fractional_sum: order must be >= 0");
  const std::size_t n = output_index(
      f, f.base() + mu, x, [](std::size_t k) { return k + 1; }, "fractional_sum");
  return pointwise_sum(f.values(), mu, n);
}

GridFn rl_difference(const GridFn& f, double mu) {
  require_open_unit(mu, "rl_difference");
  return forward_difference(fractional_sum(f, 1.0 - mu));
}

double rl_difference(const GridFn& f, double mu, double x) {
  require_open_unit(mu, "rl_difference");
  const std::size_t m = output_index(
      f, f.base() + (1.0 - mu), x, [](std::size_t k) { return k + 2; }, "rl_difference");
  return pointwise_sum(f.values(), 1.0 - mu, m + 1) - pointwise_sum(f.values(), 1.0 - mu, m);
}

GridFn caputo_difference(const GridFn& f, double mu) {
  require_open_unit(mu, "caputo_difference");
  return fractional_sum(forward_difference(f), 1.0 - mu);
}

double caputo_difference(const GridFn& f, double mu, double x) {
  require_open_unit(mu, "caputo_difference");
  const std::size_t m = output_index(
      f, f.base() + (1.0 - mu), x, [](std::size_t k) { return k + 2; }, "caputo_difference");
  double s = 0.0;
  for (std::size_t j = 0; j <= m; ++j) s += sum_kernel(1.0 - mu, m - j) * (f[j + 1] - f[j]);
  return s;
}

GridFn hilfer_difference(const GridFn& f, const HilferOrder& order) {
  const GridFn inner = fractional_sum(f, order.inner_order());
  const GridFn outer = fractional_sum(forward_difference(inner), order.outer_order());
  return outer.rebased(f.base() + (1.0 - order.mu()));
}

double hilfer_difference(const GridFn& f, const HilferOrder& order, double x) {
  const std::size_t m =
      output_index(f, f.base() + (1.0 - order.mu()), x, [](std::size_t k) { return k + 2; },
                   "hilfer_difference");
  const double inner_order = order.inner_order();
  // Inner sum on N_{a+(1-nu)(1-mu)} at indices 0..m+1, then its difference.
  std::vector<double> inner(m + 2);
  for (std::size_t k = 0; k < inner.size(); ++k) inner[k] = pointwise_sum(f.values(), inner_order, k);
  std::vector<double> diff(m + 1);
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = inner[k + 1] - inner[k];
  return pointwise_sum(diff, order.outer_order(), m);
}

}  // namespace hilfer
