#include "hilfer/ivp.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilfer/errors.hpp"
#include "hilfer/operators.hpp"

namespace hilfer {

namespace {

template <typename... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool overflowed(double v) { return !std::isfinite(v) || std::abs(v) > kOverflowLimit; }

Solution finish(double a, std::vector<double> y, std::string solver, std::size_t terms) {
  Solution s;
  for (std::size_t n = 0; n < y.size(); ++n) {
    if (overflowed(y[n])) {
      s.overflow_index = n;
      y.resize(n);
      break;
    }
  }
  const std::size_t n_pts = y.size();
  s.values = GridFn(Grid(a, n_pts), std::move(y));
  s.solver = std::move(solver);
  s.terms_used = terms;
  return s;
}

void require_series_lambda(double lambda) {
  if (!(std::abs(lambda) < 1.0))
    throw std::invalid_argument("series evaluation needs |lambda| < 1");
}

const GridFn& forcing_of(const IvpSpec& spec) { return std::get<NonHomogeneousRhs>(spec.rhs).f; }

double lambda_of(const IvpSpec& spec) {
  return std::visit(overloaded{[](const LinearRhs& r) { return r.lambda; },
                               [](const NonHomogeneousRhs& r) { return r.lambda; },
                               [](const NonlinearRhs&) -> double {
                                 throw std::invalid_argument("right-hand side is not linear");
                               }},
                    spec.rhs);
}

}  // namespace

void IvpSpec::validate() const {
  if (steps == 0) throw std::invalid_argument("IvpSpec: steps must be >= 1");
  if (!std::isfinite(a) || !std::isfinite(zeta))
    throw std::invalid_argument("IvpSpec: a and zeta must be finite");
  std::visit(overloaded{[](const LinearRhs& r) {
                          if (!std::isfinite(r.lambda))
                            throw std::invalid_argument("IvpSpec: lambda must be finite");
                        },
                        [](const NonlinearRhs& r) {
                          if (!r.g) throw std::invalid_argument("IvpSpec: nonlinear g is empty");
                        },
                        [this](const NonHomogeneousRhs& r) {
                          if (!std::isfinite(r.lambda))
                            throw std::invalid_argument("IvpSpec: lambda must be finite");
                          if (r.f.size() < steps)
                            throw std::invalid_argument(
                                "IvpSpec: forcing f must cover a+1-mu, ..., T-mu");
                          const Grid expected(a + (1.0 - order.mu()), 0);
                          if (!expected.lattice_index(r.f.base()).has_value() ||
                              *expected.lattice_index(r.f.base()) != 0)
                            throw std::invalid_argument("IvpSpec: forcing f must be based at a+1-mu");
                        }},
             rhs);
}

RhsFn IvpSpec::g() const {
  return std::visit(
      overloaded{[](const LinearRhs& r) -> RhsFn {
                   const double lambda = r.lambda;
                   return [lambda](double, double u) { return -lambda * u; };
                 },
                 [](const NonlinearRhs& r) -> RhsFn { return r.g; },
                 [this](const NonHomogeneousRhs& r) -> RhsFn {
                   const double lambda = r.lambda;
                   const double shift = 1.0 - order.mu();
                   const GridFn f = r.f;
                   return [lambda, shift, f](double x, double u) {
                     return -lambda * u - f.at(x + shift);
                   };
                 }},
      rhs);
}

Solution solve_linear(const IvpSpec& spec) {
  spec.validate();
  const double lambda = lambda_of(spec);
  const std::size_t n_pts = spec.steps + 1;
  const std::vector<double> monomial = kernel_weights(spec.order.eta(), n_pts);
  const std::vector<double> w = kernel_weights(spec.order.mu(), n_pts);
  std::vector<double> y(n_pts);
  for (std::size_t n = 0; n < n_pts; ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += w[n - j] * y[j - 1];
    y[n] = spec.zeta * monomial[n] + lambda * acc;
    if (overflowed(y[n])) break;
  }
  return finish(spec.a, std::move(y), "linear-recursion", n_pts * (n_pts + 1) / 2);
}

Solution solve_linear_series(const IvpSpec& spec, const SeriesCtl& ctl) {
  spec.validate();
  const double lambda = lambda_of(spec);
  require_series_lambda(lambda);
  const MlParams p{spec.order.mu(), spec.order.eta(), 1.0, lambda};
  std::vector<double> y(spec.steps + 1);
  std::size_t terms = 0;
  for (std::size_t n = 0; n < y.size(); ++n) {
    const MlResult r = ml_plain(p, static_cast<double>(n) + spec.order.eta() - 1.0, ctl);
    y[n] = spec.zeta * r.value;
    terms += r.terms;
  }
  return finish(spec.a, std::move(y), "linear-series", terms);
}

Solution solve_nonlinear(const IvpSpec& spec) {
  spec.validate();
  const RhsFn g = spec.g();
  const std::size_t n_pts = spec.steps + 1;
  const std::vector<double> monomial = kernel_weights(spec.order.eta(), n_pts);
  const std::vector<double> w = kernel_weights(spec.order.mu(), n_pts);
  std::vector<double> y(n_pts);
  std::vector<double> gv(n_pts);  // g(a+i, y(i)), evaluated once per point
  for (std::size_t n = 0; n < n_pts; ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += w[n - j] * gv[j - 1];
    y[n] = spec.zeta * monomial[n] - acc;
    if (overflowed(y[n])) break;
    if (n + 1 == n_pts) break;  // g at the last point is never needed
    gv[n] = g(spec.a + static_cast<double>(n), y[n]);
  }
  return finish(spec.a, std::move(y), "nonlinear-stepping", n_pts);
}

Solution solve_nonhomogeneous(const IvpSpec& spec, const SeriesCtl& ctl, bool bold_check) {
  spec.validate();
  if (!std::holds_alternative<NonHomogeneousRhs>(spec.rhs))
    throw std::invalid_argument("solve_nonhomogeneous: right-hand side is not non-homogeneous");
  const double lambda = lambda_of(spec);
  require_series_lambda(lambda);
  const GridFn& f = forcing_of(spec);
  const double mu = spec.order.mu();
  const double eta = spec.order.eta();
  const std::size_t n_pts = spec.steps + 1;
  const MlParams initial{mu, eta, 1.0, lambda};
  const MlParams kernel{mu, mu, 1.0, lambda};

  std::size_t terms = 0;
  // kern[m] = E_{mu,mu}(lambda, x - sigma(tau)) with x - sigma(tau) = m - 1 + mu.
  std::vector<double> kern(spec.steps);
  std::vector<double> kern_bold(bold_check ? spec.steps : 0);
  for (std::size_t m = 0; m < kern.size(); ++m) {
    const MlResult r = ml_plain(kernel, static_cast<double>(m) - 1.0 + mu, ctl);
    kern[m] = r.value;
    terms += r.terms;
    if (bold_check) kern_bold[m] = ml_bold(kernel, static_cast<double>(m), ctl).value;
  }

  std::vector<double> y(n_pts);
  double gap = 0.0;
  for (std::size_t n = 0; n < n_pts; ++n) {
    const MlResult r = ml_plain(initial, static_cast<double>(n) + eta - 1.0, ctl);
    terms += r.terms;
    double forced = 0.0;
    for (std::size_t i = 0; i < n; ++i) forced += kern[n - 1 - i] * f[i];
    y[n] = spec.zeta * r.value + forced;
    if (bold_check) {
      double forced_bold = 0.0;
      for (std::size_t i = 0; i < n; ++i) forced_bold += kern_bold[n - 1 - i] * f[i];
      const double alt =
          spec.zeta * ml_bold(initial, static_cast<double>(n), ctl).value + forced_bold;
      gap = std::max(gap, std::abs(alt - y[n]));
    }
  }
  Solution s = finish(spec.a, std::move(y), "nonhomogeneous-closed-form", terms);
  if (bold_check) s.bold_discrepancy = gap;
  return s;
}

Solution solve(const IvpSpec& spec) {
  return std::visit(overloaded{[&](const LinearRhs&) { return solve_linear(spec); },
                               [&](const NonlinearRhs&) { return solve_nonlinear(spec); },
                               [&](const NonHomogeneousRhs&) { return solve_nonhomogeneous(spec); }},
                    spec.rhs);
}

Solution solve_rl_linear(double a, std::size_t steps, double mu, double lambda, double zeta) {
  if (steps == 0) throw std::invalid_argument("solve_rl_linear: steps must be >= 1");
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("solve_rl_linear: mu must lie in (0,1)");
  // u(a+n) = zeta h_{mu-1}(a+n, a+1-mu) + lambda sum_j w_mu(n-j) u(a+j-1)
  const std::vector<double> w = kernel_weights(mu, steps + 1);
  std::vector<double> y(steps + 1);
  for (std::size_t n = 0; n <= steps; ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += w[n - j] * y[j - 1];
    y[n] = zeta * w[n] + lambda * acc;
    if (overflowed(y[n])) break;
  }
  return finish(a, std::move(y), "rl-recursion", (steps + 1) * (steps + 2) / 2);
}

Solution solve_caputo_linear(double a, std::size_t steps, double mu, double lambda, double zeta) {
  if (steps == 0) throw std::invalid_argument("solve_caputo_linear: steps must be >= 1");
  if (!(mu > 0.0 && mu < 1.0))
    throw std::invalid_argument("solve_caputo_linear: mu must lie in (0,1)");
  // u(a+n) = zeta + lambda sum_j w_mu(n-j) u(a+j-1)
  const std::vector<double> w = kernel_weights(mu, steps + 1);
  std::vector<double> y(steps + 1);
  for (std::size_t n = 0; n <= steps; ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += w[n - j] * y[j - 1];
    y[n] = zeta + lambda * acc;
    if (overflowed(y[n])) break;
  }
  return finish(a, std::move(y), "caputo-recursion", (steps + 1) * (steps + 2) / 2);
}

GridFn summation_operator(const IvpSpec& spec, const GridFn& u) {
  spec.validate();
  if (std::abs(u.base() - spec.a) > kGridSnapTol)
    throw std::invalid_argument("summation_operator: u must be based at a");
  const RhsFn g = spec.g();
  const std::size_t n_pts = u.size();
  const std::vector<double> monomial = kernel_weights(spec.order.eta(), n_pts);
  const std::vector<double> w = kernel_weights(spec.order.mu(), n_pts);
  std::vector<double> gv(n_pts);
  for (std::size_t i = 0; i < n_pts; ++i) gv[i] = g(spec.a + static_cast<double>(i), u[i]);
  std::vector<double> out(n_pts);
  for (std::size_t n = 0; n < n_pts; ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += w[n - j] * gv[j - 1];
    out[n] = spec.zeta * monomial[n] - acc;
  }
  return {u.grid(), std::move(out)};
}

GridFn equation_residual(const IvpSpec& spec, const GridFn& u) {
  const RhsFn g = spec.g();
  const GridFn h = hilfer_difference(u, spec.order);
  std::vector<double> r(h.size());
  for (std::size_t m = 0; m < r.size(); ++m) r[m] = h[m] + g(u.grid().point(m), u[m]);
  return {h.grid(), std::move(r)};
}

double initial_sum_value(const GridFn& u, const HilferOrder& order) {
  const double gap = 1.0 - order.eta();
  return fractional_sum(u, gap, u.base() + gap);
}

NonlinearRhs named_rhs(const std::string& name, double a, double horizon, double K) {
  if (name == "example45") return {[a](double x, double u) { return (x - a) * u; }, name};
  const double span = horizon - a;
  if (!(span > 0.0)) throw std::invalid_argument("named_rhs: horizon must exceed a");
  if (name == "example45-scaled")
    return {[a, span, K](double x, double u) { return K * (x - a) / span * u; }, name};
  if (name == "example45-sine")
    return {[a, span, K](double x, double u) { return K * (x - a) / span * std::sin(u); }, name};
  throw std::invalid_argument("unknown right-hand side '" + name + "'");
}

NonlinearRhs affine_rhs(double c0, double c1, double a) {
  return {[=](double x, double u) { return c0 + c1 * u * (x - a); }, "affine"};
}

}  // namespace hilfer
