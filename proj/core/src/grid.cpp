#include "hilfer/grid.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "hilfer/errors.hpp"

namespace hilfer {

namespace {

std::string describe(double x, const Grid& g) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "point %.17g is not on grid N_%.17g^(%zu points)", x, g.base(),
                g.count());
  return buf;
}

}  // namespace

std::optional<std::size_t> Grid::lattice_index(double x) const noexcept {
  const double d = x - base_;
  const double k = std::round(d);
  if (!std::isfinite(d) || k < 0.0) return std::nullopt;
  if (std::abs(d - k) > kGridSnapTol * std::max(1.0, std::abs(d))) return std::nullopt;
  return static_cast<std::size_t>(k);
}

std::optional<std::size_t> Grid::index_of(double x) const noexcept {
  auto k = lattice_index(x);
  if (!k || *k >= count_) return std::nullopt;
  return k;
}

std::size_t Grid::require_index(double x) const {
  auto k = index_of(x);
  if (!k) throw off_grid_error(describe(x, *this));
  return *k;
}

bool Grid::same_lattice(const Grid& other) const noexcept {
  const double d = base_ - other.base_;
  return std::abs(d - std::round(d)) <= kGridSnapTol * std::max(1.0, std::abs(d));
}

GridFn::GridFn(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count())
    throw std::invalid_argument("GridFn: value count does not match grid size");
}

GridFn GridFn::prefix(std::size_t count) const {
  if (count > size()) throw off_grid_error("GridFn::prefix: not enough samples");
  return {grid_.with_count(count),
          std::vector<double>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count))};
}

HilferOrder::HilferOrder(double mu, double nu) : mu_(mu), nu_(nu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("HilferOrder: mu must lie in (0,1)");
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("HilferOrder: nu must lie in [0,1]");
  if (nu == 0.0)
    eta_ = mu;
  else if (nu == 1.0)
    eta_ = 1.0;
  else
    eta_ = mu + nu - mu * nu;
}

double delta_sum(const GridFn& f, double lo, double hi) {
  if (hi <= lo + kGridSnapTol) return 0.0;
  const Grid& g = f.grid();
  auto i0 = g.lattice_index(lo);
  auto i1 = g.lattice_index(hi);
  if (!i0 || *i0 >= g.count()) throw off_grid_error(describe(lo, g));
  if (!i1 || *i1 > g.count()) throw off_grid_error(describe(hi, g));
  double s = 0.0;
  for (std::size_t k = *i0; k < *i1; ++k) s += f[k];
  return s;
}

GridFn forward_difference(const GridFn& f) {
  if (f.size() < 2) return {f.grid().with_count(0), {}};
  std::vector<double> d(f.size() - 1);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = f[k + 1] - f[k];
  const std::size_t n = d.size();
  return {f.grid().with_count(n), std::move(d)};
}

std::vector<double> kernel_weights(double order, std::size_t count) {
  if (!(order >= 0.0)) throw std::invalid_argument("kernel_weights: order must be >= 0");
  std::vector<double> w(count, 0.0);
  if (count == 0) return w;
  w[0] = 1.0;
  if (order == 0.0) return w;
  for (std::size_t k = 1; k < count; ++k) {
    const double kk = static_cast<double>(k);
    w[k] = w[k - 1] * (kk - 1.0 + order) / kk;
  }
  return w;
}

}  // namespace hilfer
