#pragma once

// Delta fractional sums and differences on N_a.
//
// Each operator comes in two forms. The whole-grid form takes f on N_a and
// returns the operator on its natural output grid, computing every stage
// once (O(n^2)). The pointwise form evaluates at a single x directly from
// the defining sum and validates that f covers every index it touches.
//
//   fractional sum of order mu     N_a        -> N_{a+mu}      (same count)
//   Riemann-Liouville, Caputo      N_a        -> N_{a+1-mu}    (count - 1)
//   Hilfer, type nu                N_a        -> N_{a+1-mu}    (count - 1)
//
// The Hilfer difference materializes its inner sum on N_{a+(1-nu)(1-mu)}, takes
// the forward difference there, and applies the outer sum based at that same
// point. An order-0 sum is the identity.

#include "hilfer/grid.hpp"

namespace hilfer {

[[nodiscard]] GridFn fractional_sum(const GridFn& f, double mu);
[[nodiscard]] double fractional_sum(const GridFn& f, double mu, double x);

[[nodiscard]] GridFn rl_difference(const GridFn& f, double mu);
[[nodiscard]] double rl_difference(const GridFn& f, double mu, double x);

[[nodiscard]] GridFn caputo_difference(const GridFn& f, double mu);
[[nodiscard]] double caputo_difference(const GridFn& f, double mu, double x);

[[nodiscard]] GridFn hilfer_difference(const GridFn& f, const HilferOrder& order);
[[nodiscard]] double hilfer_difference(const GridFn& f, const HilferOrder& order, double x);

}  // namespace hilfer
