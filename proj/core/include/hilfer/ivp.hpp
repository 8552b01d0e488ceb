#pragma once

// Solvers for the Hilfer initial value problem
//
//   Delta_a^{mu,nu} u(x) + g(x+mu-1, u(x+mu-1)) = 0,   x in N_{a+1-mu},
//   Delta_a^{-(1-eta)} u(a+1-eta) = zeta,
//
// on the index grid {a, a+1, ..., a+steps}. The equivalent summation equation
//
//   u(a+n) = zeta h_{eta-1}(a+n, a+1-eta) - sum_{j=1}^{n} w_mu(n-j) g(a+j-1, u(a+j-1))
//
// only references earlier samples, so forward stepping yields its exact
// fixed point. w_mu(k) = Gamma(k+mu) / (Gamma(mu) Gamma(k+1)).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "hilfer/grid.hpp"
#include "hilfer/mittag_leffler.hpp"

namespace hilfer {

/// g(x, u) evaluated at x in N_a.
using RhsFn = std::function<double(double, double)>;

/// Delta u - lambda u(x+mu-1) = 0, i.e. g(x, u) = -lambda u.
struct LinearRhs {
  double lambda = 0.0;
};

struct NonlinearRhs {
  RhsFn g;
  std::string name = "custom";
};

/// Delta u - lambda u(x+mu-1) = f(x); f sampled on N_{a+1-mu} with at least `steps` points.
struct NonHomogeneousRhs {
  double lambda = 0.0;
  GridFn f;
};

using Rhs = std::variant<LinearRhs, NonlinearRhs, NonHomogeneousRhs>;

struct IvpSpec {
  double a = 0.0;
  std::size_t steps = 1;
  HilferOrder order{0.5, 0.5};
  double zeta = 1.0;
  Rhs rhs = LinearRhs{};

  [[nodiscard]] double horizon() const noexcept { return a + static_cast<double>(steps); }

  /// Throws std::invalid_argument for steps == 0, a non-finite lambda, a
  /// missing g, or an f that is too short. |lambda| < 1 is checked only by the
  /// series evaluators.
  void validate() const;

  /// g(x, u) of the (1.1) form for any right-hand side variant.
  [[nodiscard]] RhsFn g() const;
};

/// Trajectories past this magnitude are truncated.
inline constexpr double kOverflowLimit = 1e300;

struct Solution {
  GridFn values;  // on {a, ..., a+steps}, shorter if truncated
  std::string solver;
  std::size_t terms_used = 0;
  std::optional<std::size_t> overflow_index;
  /// Bold-E consistency discrepancy, when solve_nonhomogeneous was asked for it.
  std::optional<double> bold_discrepancy;

  [[nodiscard]] bool truncated() const noexcept { return overflow_index.has_value(); }
};

/// Forward recursion for the linear problem.
[[nodiscard]] Solution solve_linear(const IvpSpec& spec);

/// u(a+n) = zeta E_{mu,eta}(lambda, n+eta-1), term by term.
[[nodiscard]] Solution solve_linear_series(const IvpSpec& spec, const SeriesCtl& ctl = {});

/// Explicit stepping of the summation equation for any right-hand side.
[[nodiscard]] Solution solve_nonlinear(const IvpSpec& spec);

/// Closed form with plain Mittag-Leffler kernels. With bold_check the
/// shifted-family form is evaluated too and the largest gap is recorded.
[[nodiscard]] Solution solve_nonhomogeneous(const IvpSpec& spec, const SeriesCtl& ctl = {},
                                            bool bold_check = false);

/// Dispatch on the right-hand side: recursion for linear, stepping for
/// nonlinear, closed form for non-homogeneous.
[[nodiscard]] Solution solve(const IvpSpec& spec);

/// Riemann-Liouville problem Delta_a^mu u = lambda u(x+mu-1),
/// Delta_a^{-(1-mu)} u(a+1-mu) = zeta, solved by its own recursion.
[[nodiscard]] Solution solve_rl_linear(double a, std::size_t steps, double mu, double lambda,
                                       double zeta);

/// Caputo problem ^c Delta_a^mu u = lambda u(x+mu-1), u(a) = zeta.
[[nodiscard]] Solution solve_caputo_linear(double a, std::size_t steps, double mu, double lambda,
                                           double zeta);

/// The fixed-point operator A of the summation equation applied to u on N_a.
[[nodiscard]] GridFn summation_operator(const IvpSpec& spec, const GridFn& u);

/// Delta^{mu,nu} u(x) + g(x+mu-1, u(x+mu-1)) at every x in N_{a+1-mu} the samples reach.
[[nodiscard]] GridFn equation_residual(const IvpSpec& spec, const GridFn& u);

/// Delta_a^{-(1-eta)} u evaluated at a+1-eta.
[[nodiscard]] double initial_sum_value(const GridFn& u, const HilferOrder& order);

/// Named right-hand sides for the CLI: "example45" is g(x,u) = (x-a) u;
/// "example45-scaled" is K (x-a)/(T-a) u and "example45-sine" is
/// K (x-a)/(T-a) sin u, both K-Lipschitz in u on [a, T].
[[nodiscard]] NonlinearRhs named_rhs(const std::string& name, double a, double horizon, double K);

/// g(x, u) = c0 + c1 u (x - a).
[[nodiscard]] NonlinearRhs affine_rhs(double c0, double c1, double a);

}  // namespace hilfer
