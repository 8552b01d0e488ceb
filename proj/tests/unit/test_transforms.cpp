#include <gtest/gtest.h>

#include <cmath>

#include "hilfer/errors.hpp"
#include "hilfer/transforms.hpp"

using namespace hilfer;

TEST(DeltaExp, ConstantAndEmptyProduct) {
  EXPECT_DOUBLE_EQ(delta_exp(0.5, 4.0, 0.0), std::pow(1.5, 4));
  EXPECT_EQ(delta_exp(0.5, 2.3, 2.3), 1.0);
  EXPECT_DOUBLE_EQ(delta_exp(0.25, 0.0, 3.0), std::pow(1.25, -3));
  EXPECT_THROW((void)delta_exp(-1.0, 3.0, 0.0), regressivity_error);
}

TEST(DeltaExp, GridCoefficient) {
  const GridFn p = GridFn::sample(Grid(0.0, 6), [](double t) { return 0.1 * t; });
  EXPECT_NEAR(delta_exp(p, 4.0, 1.0), 1.1 * 1.2 * 1.3, 1e-15);
  EXPECT_THROW((void)delta_exp(p, 9.0, 0.0), off_grid_error);
}

TEST(DeltaLaplace, ClosedForms) {
  // L{1} = 1/y, L{(1+p)^(x-a)} = 1/(y-p)
  for (double y : {1.5, 2.0, 3.0}) {
    const LaplaceResult one = delta_laplace([](double) { return 1.0; }, 0.0, y);
    EXPECT_NEAR(one.value, 1.0 / y, 1e-10);
    EXPECT_LE(one.tail_bound, 1e-10);
    const LaplaceResult e = delta_laplace([](double x) { return std::pow(1.2, x - 0.5); }, 0.5, y);
    EXPECT_NEAR(e.value, 1.0 / (y - 0.2), 1e-10);
  }
}

TEST(DeltaLaplace, SampledInputRunsOut) {
  const GridFn f = GridFn::sample(Grid(0.0, 5), [](double) { return 1.0; });
  EXPECT_THROW((void)delta_laplace(f, 2.0), convergence_error);
}

TEST(DeltaLaplace, RejectsGrowthBeyondOrderBound) {
  LaplaceCtl ctl;
  ctl.max_terms = 512;
  EXPECT_THROW((void)delta_laplace([](double x) { return std::pow(1.9, x); }, 0.0, 2.0, ctl),
               convergence_error);
  EXPECT_THROW((void)delta_laplace([](double) { return 1.0; }, 0.0, 0.2), std::invalid_argument);
}

TEST(LaplaceIdentities, FractionalSumDifferenceShift) {
  const PointFn f = [](double x) { return std::cos(0.7 * x) + 0.3 * std::pow(1.05, x); };
  for (double y : {1.5, 2.0, 3.0}) {
    for (double mu : {0.0, 0.25, 0.8}) EXPECT_LT(laplace_of_fractional_sum_check(f, 0.1, mu, y).abs_error(), 1e-8);
    EXPECT_LT(laplace_of_difference_check(f, 0.1, 1, y).abs_error(), 1e-8);
    EXPECT_LT(laplace_of_difference_check(f, 0.1, 2, y).abs_error(), 1e-8);
    EXPECT_LT(laplace_shift_check(f, 0.1, y).abs_error(), 1e-8);
  }
}

TEST(LaplaceIdentities, HilferTransform) {
  const PointFn f = [](double x) { return std::sin(x) + std::pow(1.1, x); };
  for (double y : {1.5, 2.0, 3.0})
    for (double mu : {0.2, 0.7})
      for (double nu : {0.0, 0.5, 1.0}) EXPECT_LT(laplace_of_hilfer(f, -0.3, {mu, nu}, y).abs_error(), 1e-8);
}

TEST(LaplaceIdentities, ClosedFormEndpoints) {
  const double F = 0.73, fa = 1.4;
  for (double y : {1.5, 2.0}) {
    EXPECT_EQ(hilfer_laplace_closed_form(F, fa, {0.4, 0.0}, y), rl_laplace_closed_form(F, fa, 0.4, y));
    EXPECT_DOUBLE_EQ(hilfer_laplace_closed_form(F, fa, {0.4, 1.0}, y),
                     caputo_laplace_closed_form(F, fa, 0.4, y));
  }
  EXPECT_THROW((void)rl_laplace_closed_form(F, fa, 0.4, -0.5), std::invalid_argument);
}
