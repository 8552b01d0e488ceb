#pragma once

// Discrete Mittag-Leffler functions built on the falling function:
//
//   E^g_{mu,eta}(lambda, z) = sum_k lambda^k (z + k(mu-1))^(mu k + eta - 1) (g)_k
//                                      / (Gamma(mu k + eta) k!)
//
// and the shifted ("bold") family, which evaluates the same series at
// z + eta - 1. At the arguments a solution grid produces, z = n + eta - 1,
// every term past k = n has a pole in the falling function's denominator
// and the series is a finite sum.

#include <cstddef>

namespace hilfer {

struct SeriesCtl {
  double tol = 1e-17;  // relative size of a term considered negligible
  std::size_t max_terms = 100000;
};

struct MlParams {
  double mu = 1.0;
  double eta = 1.0;
  double gamma = 1.0;
  double lambda = 0.0;

  /// Throws std::invalid_argument unless mu > 0 and |lambda| < 1.
  void validate() const;
};

struct MlResult {
  double value = 0.0;
  std::size_t terms = 0;  // terms evaluated, including the terminating zero
  bool exact = false;     // terminated by a denominator pole rather than by tol
};

/// Rising factorial gamma (gamma+1) ... (gamma+k-1); (gamma)_0 = 1.
[[nodiscard]] double pochhammer(double gamma, std::size_t k) noexcept;

/// k-th term of the plain series; exactly zero once the denominator has a pole.
[[nodiscard]] double ml_term(const MlParams& p, double z, std::size_t k);

[[nodiscard]] MlResult ml_plain(const MlParams& p, double z, const SeriesCtl& ctl = {});
[[nodiscard]] MlResult ml_bold(const MlParams& p, double z, const SeriesCtl& ctl = {});

}  // namespace hilfer
