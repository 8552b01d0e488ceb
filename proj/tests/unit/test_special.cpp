#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hilfer/errors.hpp"
#include "hilfer/special.hpp"

using namespace hilfer;

TEST(FallingFactorial, FrozenValues) {
  EXPECT_NEAR(falling_factorial(3.5, 0.5), 1.938621399427908, 1e-14);
  EXPECT_DOUBLE_EQ(falling_factorial(5.0, 2.0), 20.0);
  EXPECT_DOUBLE_EQ(falling_factorial(4.0, 0.0), 1.0);
  EXPECT_NEAR(falling_factorial(0.7, 0.7), std::tgamma(1.7), 1e-15);
}

TEST(FallingFactorial, DenominatorPoleIsZero) {
  EXPECT_EQ(falling_factorial(-0.5, 1.5), 0.0);
  EXPECT_EQ(falling_factorial(2.0, 3.0), 0.0);
  EXPECT_EQ(falling_factorial(2.0, 7.0), 0.0);
}

TEST(FallingFactorial, NumeratorPoleIsSingular) {
  EXPECT_THROW((void)falling_factorial(-1.0, 0.5), singular_error);
  EXPECT_THROW((void)falling_factorial(-3.0, -0.25), singular_error);
}

TEST(FallingFactorial, PoleOverPoleUsesResidueLimit) {
  // t+1 = -m, t-r+1 = -n  ->  (-1)^(n-m) n!/m!
  EXPECT_DOUBLE_EQ(falling_factorial(-1.0, 2.0), 2.0);   // m=0, n=2
  EXPECT_DOUBLE_EQ(falling_factorial(-3.0, 0.0), 1.0);   // m=n
  EXPECT_DOUBLE_EQ(falling_factorial(-3.0, -1.0), -0.5);  // m=2, n=1
}

TEST(FallingFactorial, AdditionLaw) {
  // t^(r+s) = (t-s)^(r) t^(s)
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> T(2.0, 40.0), R(0.0, 1.5);
  for (int i = 0; i < 200; ++i) {
    const double t = T(rng), r = R(rng), s = R(rng);
    const double lhs = falling_factorial(t, r + s);
    const double rhs = falling_factorial(t - s, r) * falling_factorial(t, s);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::abs(lhs)) << t << " " << r << " " << s;
  }
}

TEST(FallingFactorial, LargeArgumentsUseLogPath) {
  const double v = falling_factorial(500.5, 0.5);
  EXPECT_NEAR(v, std::exp(std::lgamma(501.5) - std::lgamma(501.0)), 1e-10 * v);
  EXPECT_NEAR(v, std::sqrt(500.75), 1e-4);  // Gamma(x+1/2)/Gamma(x) ~ sqrt(x-1/4)
}

TEST(TaylorMonomial, FrozenValues) {
  EXPECT_NEAR(taylor_monomial(0.5, 2.5, 0.0), 1.875, 1e-14);
  EXPECT_DOUBLE_EQ(taylor_monomial(0.0, 7.3, 1.1), 1.0);
  EXPECT_EQ(taylor_monomial(-1.0, 4.0, 0.0), 0.0);
  EXPECT_NEAR(taylor_monomial(1.0, 5.0, 2.0), 3.0, 1e-15);
}

TEST(TaylorMonomial, TranslationInvariance) {
  for (double shift : {-2.5, 0.3, 11.0})
    for (double r : {-0.4, 0.3, 1.7})
      EXPECT_NEAR(taylor_monomial(r, 6.0 + r + shift, shift), taylor_monomial(r, 6.0 + r, 0.0), 1e-12);
}

TEST(SignedLog, Value) {
  EXPECT_DOUBLE_EQ((SignedLog{std::log(3.0), -1}).value(), -3.0);
  EXPECT_EQ((SignedLog{0.0, 0}).value(), 0.0);
  EXPECT_TRUE(is_gamma_pole(-4.0));
  EXPECT_TRUE(is_gamma_pole(0.0));
  EXPECT_FALSE(is_gamma_pole(1.0));
  EXPECT_FALSE(is_gamma_pole(-3.5));
  EXPECT_EQ(rgamma(-2.0), 0.0);
  EXPECT_EQ(log_gamma(-0.5).sign, -1);
}
