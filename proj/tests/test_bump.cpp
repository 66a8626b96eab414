#include <doctest.h>

#include "deltalab/bump.hpp"

using namespace deltalab::exactcalc;
using namespace deltalab::mollifiers;

namespace {

// Same independent binomial oracle as in the piecewise tests.
Rational symmetric_power_integral(int m) {
  Rational total(0), binom(1);
  for (int k = 0; k <= m; ++k) {
    Rational term = binom * rat(2, 2 * k + 1);
    total += (k % 2 == 0) ? term : Rational(-term);
    binom *= rat(m - k, k + 1);
  }
  total.canonicalize();
  return total;
}

}  // namespace

TEST_CASE("unit-mass bump on [-1,1] at C^2 is (35/32)(1-x^2)^3") {
  // Int (1-x^2)^3 = 32/35 by the oracle, so the normalizer is 35/32.
  CHECK(symmetric_power_integral(3) == rat(32, 35));
  const PiecewisePolynomial b = build_bump({Interval(rat(-1), rat(1)), 2, {{0, rat(1)}}});
  Polynomial base({Scalar(rat(1)), Scalar(), Scalar(rat(-1))});
  Polynomial cubed = base * base * base;
  const PiecewisePolynomial expect =
      PiecewisePolynomial::on_interval(Scalar(rat(35, 32)) * cubed, rat(-1), rat(1), 2);
  CHECK(b == expect);
}

TEST_CASE("built bumps are exactly C^k and no better at the edges") {
  for (int k = 2; k <= 6; k += 2) {
    const PiecewisePolynomial b =
        build_bump({Interval(rat(-1, 2), rat(3, 4)), k, {{0, rat(1)}}});
    CHECK(b.smoothness() == k);
    CHECK(b.smoothness_check(k));
    CHECK_FALSE(b.smoothness_check(k + 1));
  }
}

TEST_CASE("moment constraints are met exactly") {
  // A_2-style bump: unit mass, vanishing first and second moments.
  const BumpSpec spec{Interval(rat(-1), rat(1)), 6, {{0, rat(1)}, {1, rat(0)}, {2, rat(0)}}};
  const PiecewisePolynomial phi = build_bump(spec);
  for (const auto& [order, value] : spec.moments) {
    const PiecewisePolynomial weighted =
        PiecewisePolynomial::global(Polynomial::monomial(Scalar(rat(1)), order)) * phi;
    CHECK(weighted.integrate(rat(-1), rat(1)) == Scalar(value));
  }
  // and on an asymmetric support too
  const BumpSpec skew{Interval(rat(0), rat(1)), 4, {{0, rat(2)}, {1, rat(1)}}};
  const PiecewisePolynomial psi = build_bump(skew);
  CHECK(psi.integrate(rat(0), rat(1)) == Scalar(rat(2)));
  const PiecewisePolynomial x_psi =
      PiecewisePolynomial::global(Polynomial::monomial(Scalar(rat(1)), 1)) * psi;
  CHECK(x_psi.integrate(rat(0), rat(1)) == Scalar(rat(1)));
}

TEST_CASE("singular moment systems are reported, not regularized") {
  // On a symmetric support with an even base, odd-order rows have no even
  // component to draw on: requesting only orders 1 and 3 gives a singular
  // 2x2 system (first column identically zero).
  const BumpSpec bad{Interval(rat(-1), rat(1)), 3, {{1, rat(0)}, {3, rat(0)}}};
  CHECK_THROWS_AS(build_bump(bad), std::runtime_error);
}

TEST_CASE("bump spec validation") {
  CHECK_THROWS_AS(build_bump({Interval(rat(1), rat(1)), 3, {{0, rat(1)}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_bump({Interval(rat(-1), rat(1)), 3, {{0, rat(1)}, {0, rat(2)}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_bump({Interval(rat(-1), rat(1)), -1, {{0, rat(1)}}}),
                  std::invalid_argument);
}

TEST_CASE("plateau is exactly 1 on the core, 0 outside, and flat at 0") {
  const PiecewisePolynomial plat =
      build_plateau(Interval(rat(-1, 4), rat(1, 4)), Interval(rat(-1, 2), rat(1, 2)), 6);
  CHECK(plat.evaluate(rat(0)) == Scalar(rat(1)));
  CHECK(plat.evaluate(rat(1, 4)) == Scalar(rat(1)));
  CHECK(plat.evaluate(rat(5, 8)).is_zero());
  CHECK(plat.evaluate(rat(-99)).is_zero());
  for (int i = 1; i <= 6; ++i) CHECK(plat.derivative_at(rat(0), i).is_zero());
  CHECK(plat.smoothness() == 7);  // antiderivative of a C^6 ramp
  CHECK(plat.smoothness_check(7));
  CHECK_THROWS_AS(build_plateau(Interval(rat(-1), rat(1)), Interval(rat(-1), rat(2)), 3),
                  std::invalid_argument);
}
