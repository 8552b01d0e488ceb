#include "hilfer/stability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hilfer/errors.hpp"
#include "hilfer/operators.hpp"
#include "hilfer/special.hpp"

namespace hilfer {

namespace {

constexpr double kRelSlack = 1e-12;
constexpr double kAbsSlack = 1e-14;

bool below(double lhs, double rhs) {
  return lhs <= rhs + kRelSlack * std::abs(rhs) + kAbsSlack;
}

std::size_t steps_between(double a, double T) {
  const double span = T - a;
  const double r = std::round(span);
  if (!(r >= 1.0) || std::abs(span - r) > kGridSnapTol)
    throw std::invalid_argument("T - a must be a positive integer");
  return static_cast<std::size_t>(r);
}

double sup_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// (T psi)(n) = sum_{i<n} w(n-1-i) c_i psi_i, strictly lower triangular.
std::vector<double> lagged_apply(const std::vector<double>& w, std::span<const double> c,
                                 const std::vector<double>& psi) {
  const std::size_t n = psi.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += w[m - 1 - i] * c[i] * psi[i];
    out[m] = acc;
  }
  return out;
}

void require_on_base(const GridFn& f, double a, const char* who) {
  if (!f.grid().same_lattice(Grid(a, 1)) || std::abs(f.base() - a) > kGridSnapTol)
    throw std::invalid_argument(std::string(who) + ": function must be based at a");
}

// Comparison solution B(n) = c0 w_eta(n) + sum_{j=1}^n w_mu(n-j) [rho_{j-1} + K B(j-1)].
std::vector<double> comparison_bound(double c0, const std::vector<double>& rho, double K,
                                     double mu, double eta, std::size_t count) {
  const auto wm = kernel_weights(mu, count);
  const auto we = kernel_weights(eta, count);
  std::vector<double> B(count, 0.0);
  for (std::size_t n = 0; n < count; ++n) {
    double acc = c0 * we[n];
    for (std::size_t j = 1; j <= n; ++j) acc += wm[n - j] * (rho[j - 1] + K * B[j - 1]);
    B[n] = acc;
  }
  return B;
}

}  // namespace

double existence_bound(double a, double T, double mu) {
  steps_between(a, T);
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("existence_bound: mu must lie in (0,1)");
  return std::tgamma(mu + 1.0) / falling_factorial(T - a - 1.0 + mu, mu);
}

BoundReport check_existence(double a, double T, double mu, double l_star) {
  BoundReport r;
  r.bound = existence_bound(a, T, mu);
  r.supplied = l_star;
  r.strict = false;
  r.satisfied = l_star <= r.bound;
  return r;
}

BoundReport verify_contraction(const IvpSpec& spec, double K, std::size_t pairs,
                               std::uint64_t seed) {
  spec.validate();
  const double mu = spec.order.mu();
  BoundReport r;
  r.bound = existence_bound(spec.a, spec.horizon(), mu);
  r.supplied = K;
  r.strict = true;
  r.satisfied = K < r.bound;
  r.contraction_factor = K / r.bound;

  const Grid grid(spec.a, spec.steps + 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t p = 0; p < pairs; ++p) {
    std::vector<double> u(grid.count()), v(grid.count());
    for (auto& x : u) x = dist(rng);
    for (auto& x : v) x = dist(rng);
    const GridFn gu(grid, u), gv(grid, v);
    const GridFn au = summation_operator(spec, gu);
    const GridFn av = summation_operator(spec, gv);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < grid.count(); ++k) {
      num = std::max(num, std::abs(au[k] - av[k]));
      den = std::max(den, std::abs(u[k] - v[k]));
    }
    if (den > 0.0) worst = std::max(worst, num / den);
  }
  r.empirical_ratio = worst;
  r.empirical_ok = below(worst, *r.contraction_factor);
  return r;
}

BoundReport verify_contraction(const IvpSpec& spec) {
  spec.validate();
  const double K = estimate_lipschitz(spec.g(), spec.a, spec.steps, -1.0, 1.0);
  BoundReport r = verify_contraction(spec, K);
  r.lipschitz_estimated = true;
  return r;
}

double estimate_lipschitz(const RhsFn& g, double a, std::size_t steps, double u_lo, double u_hi,
                          std::size_t samples) {
  if (!g) throw std::invalid_argument("estimate_lipschitz: g is empty");
  if (!(u_hi > u_lo) || samples < 2)
    throw std::invalid_argument("estimate_lipschitz: need u_lo < u_hi and at least 2 samples");
  const double du = (u_hi - u_lo) / static_cast<double>(samples - 1);
  double slope = 0.0;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double x = a + static_cast<double>(k);
    double prev = g(x, u_lo);
    for (std::size_t i = 1; i < samples; ++i) {
      const double cur = g(x, u_lo + du * static_cast<double>(i));
      slope = std::max(slope, std::abs(cur - prev) / du);
      prev = cur;
    }
  }
  return slope;
}

GronwallOrder::GronwallOrder(double mu_, double eta_) : mu(mu_), eta(eta_) {
  if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("GronwallOrder: mu must lie in (0,1]");
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("GronwallOrder: eta must lie in (0,1]");
}

GridFn ev_operator(const GridFn& v, const GridFn& phi, double mu, double a) {
  const double base = a + 1.0 - mu;
  if (std::abs(v.base() - base) > kGridSnapTol || std::abs(phi.base() - base) > kGridSnapTol)
    throw off_grid_error("ev_operator: v and phi must be based at a+1-mu");
  const std::size_t n = std::min(v.size(), phi.size());
  std::vector<double> prod(n);
  for (std::size_t k = 0; k < n; ++k) prod[k] = v[k] * phi[k];
  return fractional_sum(GridFn(Grid(base, n), std::move(prod)), mu);
}

GridFn gronwall_term(double u_a, const GridFn& v, const GronwallOrder& order, std::size_t ell) {
  const std::size_t count = v.size();
  const double a = v.base();
  const double shift = 1.0 - order.mu;
  auto seed = kernel_weights(order.eta, count);
  for (auto& s : seed) s *= u_a;
  GridFn phi(v.grid(), std::move(seed));
  const GridFn vs = v.rebased(a + shift);
  for (std::size_t l = 0; l < ell; ++l) {
    // Output on N_{a+1}; re-index onto N_a with the empty sum at a.
    const GridFn out = ev_operator(vs, phi.rebased(a + shift), order.mu, a);
    std::vector<double> next(count, 0.0);
    for (std::size_t m = 1; m < count; ++m) next[m] = out[m - 1];
    phi = GridFn(v.grid(), std::move(next));
  }
  return phi;
}

GridFn gronwall_series(double u_a, const GridFn& v, const GronwallOrder& order) {
  const std::size_t count = v.size();
  const auto w = kernel_weights(order.mu, count);
  std::vector<double> term = kernel_weights(order.eta, count);
  for (auto& t : term) t *= u_a;
  std::vector<double> sum = term;
  for (std::size_t l = 1; l < count; ++l) {
    term = lagged_apply(w, v.values(), term);
    for (std::size_t k = 0; k < count; ++k) sum[k] += term[k];
  }
  return {v.grid(), std::move(sum)};
}

double gronwall_series(double u_a, const GridFn& v, const GronwallOrder& order, double x,
                       const SeriesCtl& ctl) {
  const std::size_t n = v.grid().require_index(x);
  if (n > ctl.max_terms) throw convergence_error("gronwall_series: term budget below x - a");
  for (std::size_t k = 0; k <= n; ++k)
    if (!(std::abs(v[k]) < 1.0)) throw std::invalid_argument("gronwall_series: |v| must be < 1");
  return gronwall_series(u_a, v.prefix(n + 1), order)[n];
}

GridFn gronwall_rhs(const GridFn& u, double u_a, const GridFn& v, const GronwallOrder& order,
                    Coupling coupling) {
  if (v.size() < u.size()) throw off_grid_error("gronwall_rhs: v does not cover u's grid");
  require_on_base(v, u.base(), "gronwall_rhs");
  const std::size_t count = u.size();
  const auto w = kernel_weights(order.mu, count);
  const auto we = kernel_weights(order.eta, count);
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    double acc = 0.0;
    if (coupling == Coupling::lagged) {
      for (std::size_t i = 0; i < n; ++i) acc += w[n - 1 - i] * v[i] * u[i];
    } else {
      for (std::size_t j = 1; j <= n; ++j) acc += w[n - j] * v[j] * u[j];
    }
    out[n] = u_a * we[n] + acc;
  }
  return {u.grid(), std::move(out)};
}

GridFn gronwall_equality_solution(double u_a, const GridFn& v, const GronwallOrder& order,
                                  Coupling coupling) {
  if (coupling == Coupling::lagged) return gronwall_series(u_a, v, order);
  const std::size_t count = v.size();
  const auto w = kernel_weights(order.mu, count);
  const auto we = kernel_weights(order.eta, count);
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    double acc = u_a * we[n];
    for (std::size_t j = 1; j < n; ++j) acc += w[n - j] * v[j] * out[j];
    if (n == 0) {
      out[0] = acc;
      continue;
    }
    if (!(v[n] < 1.0)) throw std::invalid_argument("gronwall_equality_solution: v must be < 1");
    out[n] = acc / (1.0 - w[0] * v[n]);
  }
  return {v.grid(), std::move(out)};
}

bool GronwallCheck::hypothesis_ok() const {
  return std::all_of(hypothesis.begin(), hypothesis.end(), [](bool b) { return b; });
}

bool GronwallCheck::bound_ok() const {
  return std::all_of(bound_holds.begin(), bound_holds.end(), [](bool b) { return b; });
}

GronwallCheck gronwall_check(const GridFn& u, double u_a, const GridFn& v,
                             const GronwallOrder& order, double tol) {
  if (v.size() < u.size()) throw off_grid_error("gronwall_check: v does not cover u's grid");
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!(v[k] >= 0.0 && v[k] < 1.0))
      throw std::invalid_argument("gronwall_check: v must satisfy 0 <= v < 1");

  const GridFn vv = v.prefix(u.size());
  const GridFn rhs = gronwall_rhs(u, u_a, vv, order, Coupling::lagged);
  GronwallCheck c;
  c.bound = gronwall_series(u_a, vv, order);
  c.hypothesis.resize(u.size());
  c.bound_holds.resize(u.size());
  c.max_gap = -HUGE_VAL;
  c.min_gap = HUGE_VAL;
  for (std::size_t k = 0; k < u.size(); ++k) {
    c.hypothesis[k] = u[k] <= rhs[k] + tol * std::max(1.0, std::abs(rhs[k]));
    c.bound_holds[k] = u[k] <= c.bound[k] + tol * std::max(1.0, std::abs(c.bound[k]));
    const double gap = c.bound[k] - u[k];
    c.max_gap = std::max(c.max_gap, gap);
    c.min_gap = std::min(c.min_gap, gap);
  }
  return c;
}

StabilityReport ulam_experiment(const IvpSpec& spec, const UlamConfig& cfg) {
  spec.validate();
  if (!(cfg.epsilon >= 0.0)) throw std::invalid_argument("ulam_experiment: epsilon must be >= 0");
  if (!(cfg.K >= 0.0)) throw std::invalid_argument("ulam_experiment: K must be >= 0");

  const double a = spec.a;
  const double mu = spec.order.mu();
  const double nu = spec.order.nu();
  const double eta = spec.order.eta();
  const std::size_t count = spec.steps + 1;
  const double dzeta = std::abs(cfg.perturbed_zeta.value_or(spec.zeta) - spec.zeta);
  const bool rassias = cfg.residual.has_value() && static_cast<bool>(cfg.psi);

  // Weight attached to the residual at x = a+1-mu+m.
  std::vector<double> rho(spec.steps, 0.0);
  if (cfg.residual) {
    const GridFn& r = *cfg.residual;
    if (std::abs(r.base() - (a + 1.0 - mu)) > kGridSnapTol)
      throw std::invalid_argument("ulam_experiment: residual must be based at a+1-mu");
    if (r.size() < spec.steps) throw off_grid_error("ulam_experiment: residual too short");
    for (std::size_t m = 0; m < spec.steps; ++m) {
      const double x = r.grid().point(m);
      double weight = 1.0;
      if (rassias) {
        weight = cfg.psi_argument == PsiArgument::backward_jump_plus_type ? cfg.psi(x - 1.0 + nu)
                                                                          : cfg.psi(x - a);
        if (!(weight > 0.0)) throw std::invalid_argument("ulam_experiment: psi must be positive");
      }
      rho[m] = weight;
      if (!below(std::abs(r[m]), cfg.epsilon * weight))
        throw std::invalid_argument("ulam_experiment: residual exceeds its epsilon bound");
    }
  }

  const RhsFn g = spec.g();
  IvpSpec exact = spec;
  exact.rhs = NonlinearRhs{g, "exact"};
  IvpSpec perturbed = exact;
  perturbed.zeta = cfg.perturbed_zeta.value_or(spec.zeta);
  if (cfg.residual) {
    const GridFn r = *cfg.residual;
    perturbed.rhs = NonlinearRhs{[g, r, mu](double s, double u) {
                                   return g(s, u) - r.at(s + 1.0 - mu);
                                 },
                                 "perturbed"};
  }
  const Solution su = solve_nonlinear(exact);
  const Solution sv = solve_nonlinear(perturbed);
  if (su.truncated() || sv.truncated())
    throw convergence_error("ulam_experiment: trajectory overflowed");

  const Grid grid(a, count);
  std::vector<double> dev(count);
  for (std::size_t k = 0; k < count; ++k) dev[k] = std::abs(sv.values[k] - su.values[k]);

  // Unit responses: to a zeta offset (E_{mu,eta}(K, n+eta-1)) and to the residual weights.
  const std::vector<double> zero(spec.steps, 0.0);
  const auto ezeta = comparison_bound(1.0, zero, cfg.K, mu, eta, count);
  const auto eres = comparison_bound(0.0, rho, cfg.K, mu, eta, count);

  StabilityReport rep;
  rep.epsilon = cfg.epsilon;
  rep.deviation = sup_abs(dev);
  rep.existence_bound = existence_bound(a, spec.horizon(), mu);
  rep.certificate_applies = cfg.K < rep.existence_bound;
  rep.deviation_profile = GridFn(grid, dev);

  std::vector<double> bound(count);
  for (std::size_t k = 0; k < count; ++k) bound[k] = dzeta * ezeta[k] + cfg.epsilon * eres[k];
  rep.pointwise_bound = GridFn(grid, bound);

  double ezeta_max = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    double e = ezeta[k];
    if (cfg.K < 1.0) {
      e = ml_plain(MlParams{mu, eta, 1.0, cfg.K}, static_cast<double>(k) + eta - 1.0).value;
    }
    ezeta_max = std::max(ezeta_max, e);
  }

  if (!cfg.residual) {
    rep.kind = "zeta";
    rep.constant = ezeta_max;
    rep.verdict = true;
    for (std::size_t k = 0; k < count; ++k) rep.verdict = rep.verdict && below(dev[k], bound[k]);
  } else if (!rassias) {
    rep.kind = "hyers";
    rep.constant = *std::max_element(eres.begin(), eres.end());
    rep.verdict = below(rep.deviation, cfg.epsilon * rep.constant + dzeta * ezeta_max);
  } else {
    rep.kind = "rassias";
    std::vector<double> psi(count);
    double d = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      psi[k] = cfg.psi(grid.point(k));
      if (!(psi[k] > 0.0)) throw std::invalid_argument("ulam_experiment: psi must be positive");
      d = std::max(d, eres[k] / psi[k]);
    }
    rep.constant = d;
    rep.verdict = true;
    for (std::size_t k = 0; k < count; ++k)
      rep.verdict = rep.verdict && below(dev[k], cfg.epsilon * psi[k] * d + dzeta * ezeta[k]);
    rep.psi = GridFn(grid, std::move(psi));
  }
  return rep;
}

}  // namespace hilfer
