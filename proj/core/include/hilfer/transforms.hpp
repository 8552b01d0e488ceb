#pragma once

// Delta exponential and the truncated delta Laplace transform
//
//   L_a{f}(y) = sum_{k>=0} f(a+k) (1+y)^{-(k+1)},
//
// evaluated for real y with |1+y| > r, where r > 1 is the assumed exponential
// order of f. Truncation stops once the geometric tail estimate
// M (r/|1+y|)^N / (1 - r/|1+y|) drops below the requested tolerance, with M
// the largest |f(a+k)| / r^k seen so far.

#include <cstddef>
#include <functional>

#include "hilfer/grid.hpp"

namespace hilfer {

struct LaplaceCtl {
  double tol = 1e-10;
  std::size_t max_terms = 4096;
  double order_bound = 1.5;  // exponential order r of f, must exceed 1
};

struct LaplaceResult {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

/// Left and right side of a transform identity; the caller picks the tolerance.
struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;

  [[nodiscard]] double abs_error() const noexcept;
};

/// A function of a real grid point, sampled as needed by the transform checks.
using PointFn = std::function<double(double)>;

/// e_p(x, y) for constant p.
[[nodiscard]] double delta_exp(double p, double x, double y);
/// e_p(x, y) with p sampled on a grid covering the traversed points.
[[nodiscard]] double delta_exp(const GridFn& p, double x, double y);

/// Transform of the samples of f, based at f.base(). Throws convergence_error
/// when the samples run out or max_terms is reached before the tail bound
/// meets ctl.tol, or when f outgrows the declared order bound.
[[nodiscard]] LaplaceResult delta_laplace(const GridFn& f, double y, const LaplaceCtl& ctl = {});

/// Transform of f on N_a, sampling as many points as the truncation needs.
[[nodiscard]] LaplaceResult delta_laplace(const PointFn& f, double a, double y,
                                          const LaplaceCtl& ctl = {});

/// L_{a+mu}{sum^mu f}(y) against ((y+1)/y)^mu L_a{f}(y). mu = 0 is allowed.
[[nodiscard]] IdentityPair laplace_of_fractional_sum_check(const PointFn& f, double a, double mu,
                                                           double y, const LaplaceCtl& ctl = {});

/// L_a{Delta^m f}(y) against y^m F(y) - sum_{j<m} y^j Delta^{m-1-j} f(a).
[[nodiscard]] IdentityPair laplace_of_difference_check(const PointFn& f, double a, int m, double y,
                                                       const LaplaceCtl& ctl = {});

/// L_{a+1}{f}(y) against (1+y) L_a{f}(y) - f(a).
[[nodiscard]] IdentityPair laplace_shift_check(const PointFn& f, double a, double y,
                                               const LaplaceCtl& ctl = {});

/// Closed form of L_{a+1-mu}{Hilfer f}(y) given F = L_a{f}(y) and the inner
/// sum's value at its base point (which equals f(a)).
[[nodiscard]] double hilfer_laplace_closed_form(double transform, double inner_at_base,
                                                const HilferOrder& order, double y);
/// y^mu (y+1)^{1-mu} F - f(a).
[[nodiscard]] double rl_laplace_closed_form(double transform, double f_at_a, double mu, double y);
/// y^mu (y+1)^{1-mu} F - ((y+1)/y)^{1-mu} f(a).
[[nodiscard]] double caputo_laplace_closed_form(double transform, double f_at_a, double mu,
                                                double y);

/// L_{a+1-mu}{Hilfer f}(y) by truncated summation against the closed form.
[[nodiscard]] IdentityPair laplace_of_hilfer(const PointFn& f, double a, const HilferOrder& order,
                                             double y, const LaplaceCtl& ctl = {});

}  // namespace hilfer
