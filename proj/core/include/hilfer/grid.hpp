#pragma once

// Shifted unit-step grids N_b^{b+count-1} and functions sampled on them.
//
// A point is stored as (base, index); arithmetic on positions happens on the
// integer index so that grids based at a+1-mu, a+(1-nu)(1-mu), ... never pick
// up drift in the step.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <span>
#include <vector>

namespace hilfer {

/// Absolute tolerance used to decide whether a real x sits on a grid.
inline constexpr double kGridSnapTol = 1e-9;

/// Library-wide default relative tolerance for identity checks.
inline constexpr double kIdentityTol = 1e-10;

class Grid {
 public:
  Grid() = default;
  Grid(double base, std::size_t count) : base_(base), count_(count) {}

  [[nodiscard]] double base() const noexcept { return base_; }
  [[nodiscard]] std::size_t count() const noexcept { return count_; }
  [[nodiscard]] bool empty() const noexcept { return count_ == 0; }

  [[nodiscard]] double point(std::size_t k) const noexcept {
    return base_ + static_cast<double>(k);
  }
  [[nodiscard]] double last() const noexcept { return point(count_ - 1); }

  /// Index k >= 0 of x on the infinite lattice base + N_0, ignoring count.
  [[nodiscard]] std::optional<std::size_t> lattice_index(double x) const noexcept;

  /// Index of x when it is one of the `count` points, nullopt otherwise.
  [[nodiscard]] std::optional<std::size_t> index_of(double x) const noexcept;

  /// As index_of, but throws off_grid_error.
  [[nodiscard]] std::size_t require_index(double x) const;

  [[nodiscard]] bool same_lattice(const Grid& other) const noexcept;

  [[nodiscard]] Grid with_count(std::size_t count) const noexcept { return {base_, count}; }
  [[nodiscard]] Grid shifted(double offset) const noexcept { return {base_ + offset, count_}; }

 private:
  double base_ = 0.0;
  std::size_t count_ = 0;
};

/// Real values on a grid, one per point. Immutable once built.
class GridFn {
 public:
  GridFn() = default;
  GridFn(Grid grid, std::vector<double> values);

  template <typename F>
  static GridFn sample(Grid grid, F&& f) {
    std::vector<double> v(grid.count());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(grid.point(k));
    return {grid, std::move(v)};
  }

  [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
  [[nodiscard]] double base() const noexcept { return grid_.base(); }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  [[nodiscard]] std::span<const double> values() const& noexcept { return values_; }
  // A temporary hands over its storage so range-for over f().values() stays valid.
  [[nodiscard]] std::vector<double> values() && noexcept { return std::move(values_); }

  [[nodiscard]] double operator[](std::size_t k) const noexcept { return values_[k]; }

  /// Value at the grid point x; throws off_grid_error if x is not a point.
  [[nodiscard]] double at(double x) const { return values_[grid_.require_index(x)]; }

  /// The first `count` samples (count <= size()).
  [[nodiscard]] GridFn prefix(std::size_t count) const;

  /// Same values re-labelled on a grid with another base point.
  [[nodiscard]] GridFn rebased(double base) const { return {Grid(base, size()), values_}; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Order mu in (0,1) and type nu in [0,1] of the Hilfer difference, with
/// eta = mu + nu - mu*nu. The endpoints nu = 0 and nu = 1 produce eta = mu
/// and eta = 1 exactly.
class HilferOrder {
 public:
  HilferOrder(double mu, double nu);

  [[nodiscard]] double mu() const noexcept { return mu_; }
  [[nodiscard]] double nu() const noexcept { return nu_; }
  [[nodiscard]] double eta() const noexcept { return eta_; }

  /// (1-nu)(1-mu): order of the inner sum, also the offset of its grid.
  [[nodiscard]] double inner_order() const noexcept { return (1.0 - nu_) * (1.0 - mu_); }
  /// nu(1-mu): order of the outer sum.
  [[nodiscard]] double outer_order() const noexcept { return nu_ * (1.0 - mu_); }

 private:
  double mu_;
  double nu_;
  double eta_;
};

[[nodiscard]] inline double jump_forward(double x) noexcept { return x + 1.0; }
[[nodiscard]] inline double jump_backward(double x) noexcept { return x - 1.0; }

/// Sum of f over {lo, ..., hi-1}; zero when hi <= lo.
[[nodiscard]] double delta_sum(const GridFn& f, double lo, double hi);

/// First forward difference on the same base; one point shorter.
[[nodiscard]] GridFn forward_difference(const GridFn& f);

/// Weights Gamma(order+k) / (Gamma(order) Gamma(k+1)) for k = 0..count-1,
/// i.e. h_{order-1}(order-1+k, 0). Order 0 gives the unit impulse.
[[nodiscard]] std::vector<double> kernel_weights(double order, std::size_t count);

}  // namespace hilfer
