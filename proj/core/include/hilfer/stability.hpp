#pragma once

// Existence/uniqueness thresholds, the discrete Gronwall machinery, and
// Ulam-Hyers / Ulam-Hyers-Rassias experiments for the Hilfer IVP.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilfer/grid.hpp"
#include "hilfer/ivp.hpp"
#include "hilfer/mittag_leffler.hpp"

namespace hilfer {

/// Gamma(mu+1) / (T-a-1+mu)^(mu). Needs T - a a positive integer and 0 < mu < 1.
[[nodiscard]] double existence_bound(double a, double T, double mu);

struct BoundReport {
  double bound = 0.0;
  double supplied = 0.0;
  bool satisfied = false;
  bool strict = false;  // uniqueness (strict) or existence (non-strict) comparison

  // Filled by verify_contraction from random pairs u, v.
  std::optional<double> contraction_factor;  // K (T-a-1+mu)^(mu) / Gamma(mu+1)
  std::optional<double> empirical_ratio;     // max ||Au - Av|| / ||u - v||
  bool empirical_ok = true;
  bool lipschitz_estimated = false;
};

/// Existence: L* <= bound.
[[nodiscard]] BoundReport check_existence(double a, double T, double mu, double l_star);

/// Uniqueness: K < bound, plus an empirical contraction check of the
/// summation operator on `pairs` random pairs drawn from [-1, 1].
[[nodiscard]] BoundReport verify_contraction(const IvpSpec& spec, double K, std::size_t pairs = 32,
                                             std::uint64_t seed = 1);

/// As above with K estimated by estimate_lipschitz over u in [-1, 1].
[[nodiscard]] BoundReport verify_contraction(const IvpSpec& spec);

/// Largest |g(x,u1) - g(x,u2)| / |u1 - u2| over x in {a, ..., a+steps} and a
/// uniform sample of u in [u_lo, u_hi].
[[nodiscard]] double estimate_lipschitz(const RhsFn& g, double a, std::size_t steps, double u_lo,
                                        double u_hi, std::size_t samples = 64);

/// (mu, eta) for the Gronwall series. Unlike HilferOrder, mu = 1 is allowed,
/// where the sum kernel is the plain delta sum.
struct GronwallOrder {
  GronwallOrder(double mu, double eta);
  GronwallOrder(const HilferOrder& order)  // NOLINT(google-explicit-constructor)
      : GronwallOrder(order.mu(), order.eta()) {}

  double mu;
  double eta;
};

/// E_v phi = Delta_{a+1-mu}^{-mu} [v phi] for v, phi on N_{a+1-mu}; result on N_{a+1}.
[[nodiscard]] GridFn ev_operator(const GridFn& v, const GridFn& phi, double mu, double a);

/// The l-th series term: u_a/Gamma(eta) E_v^l applied to the monomial seed,
/// on v's grid N_a.
[[nodiscard]] GridFn gronwall_term(double u_a, const GridFn& v, const GronwallOrder& order,
                                   std::size_t ell);

/// Sum of every non-zero series term, on v's grid N_a.
[[nodiscard]] GridFn gronwall_series(double u_a, const GridFn& v, const GronwallOrder& order);

/// The series at a single point x of v's grid. Terms vanish past l = x - a;
/// ctl.max_terms guards that count.
[[nodiscard]] double gronwall_series(double u_a, const GridFn& v, const GronwallOrder& order,
                                     double x, const SeriesCtl& ctl = {});

/// How the summation couples to u: `lagged` uses v(x+mu-1) u(x+mu-1) (the
/// Gronwall theorem form); `implicit` uses phi(x+mu) u(x+mu) (the comparison
/// lemma form, whose last term involves u(x) itself).
enum class Coupling { lagged, implicit };

/// u_a h_{eta-1}(x, a+1-eta) + Delta_{a+1-mu}^{-mu}[v u](shifted), on u's grid N_a.
[[nodiscard]] GridFn gronwall_rhs(const GridFn& u, double u_a, const GridFn& v,
                                  const GronwallOrder& order, Coupling coupling = Coupling::lagged);

/// Solution w on v's grid of the equality w = gronwall_rhs(w, u_a, v, order, coupling).
/// The implicit form divides by 1 - v(x), so needs v < 1.
[[nodiscard]] GridFn gronwall_equality_solution(double u_a, const GridFn& v,
                                                const GronwallOrder& order,
                                                Coupling coupling = Coupling::lagged);

struct GronwallCheck {
  std::vector<bool> hypothesis;   // u(x) <= rhs(x)
  std::vector<bool> bound_holds;  // u(x) <= series(x)
  GridFn bound;                   // the series
  double max_gap = 0.0;           // max (series - u)
  double min_gap = 0.0;           // min (series - u)

  [[nodiscard]] bool hypothesis_ok() const;
  [[nodiscard]] bool bound_ok() const;
};

/// Pointwise Gronwall verdict for nonnegative v with |v| < 1 (checked).
[[nodiscard]] GronwallCheck gronwall_check(const GridFn& u, double u_a, const GridFn& v,
                                           const GronwallOrder& order, double tol = 1e-12);

/// Where the Rassias weight psi is evaluated for the residual at x in N_{a+1-mu}.
enum class PsiArgument {
  backward_jump_plus_type,  // psi(rho(x) + nu) = psi(x - 1 + nu)
  offset_from_base,         // psi(x - a)
};

struct UlamConfig {
  double epsilon = 0.0;
  /// r(x) on N_{a+1-mu}: the perturbed solution satisfies Delta v + g = r.
  std::optional<GridFn> residual;
  /// Rassias weight; empty for the Hyers form.
  std::function<double(double)> psi;
  PsiArgument psi_argument = PsiArgument::backward_jump_plus_type;
  /// Initial sum value of the perturbed system; defaults to zeta.
  std::optional<double> perturbed_zeta;
  double K = 0.0;  // Lipschitz constant of g in u
};

struct StabilityReport {
  std::string kind;  // "zeta", "hyers" or "rassias"
  double epsilon = 0.0;
  double deviation = 0.0;  // sup |v - u|
  double constant = 0.0;   // d_f, d_{f,psi}, or max E_{mu,eta}(K, .) for a zeta perturbation
  std::optional<GridFn> psi;  // psi(a+n), Rassias only
  bool verdict = false;
  bool certificate_applies = false;  // K < existence_bound
  double existence_bound = 0.0;
  GridFn deviation_profile;  // |v - u| on N_a
  GridFn pointwise_bound;    // Gronwall comparison bound on N_a
};

[[nodiscard]] StabilityReport ulam_experiment(const IvpSpec& spec, const UlamConfig& cfg);

}  // namespace hilfer
