#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "superracah/su2.hpp"
#include "superracah/suq2.hpp"

using namespace sr;

TEST_CASE("q-numbers and series") {
  suq2::QContext q2(2), q1(1);
  CHECK(q2.qnum(2) == Rational(5, 2));
  CHECK(q2.qnum(3) == Rational(21, 4));
  CHECK(q1.qnum(9) == 9);
  CHECK(q2.series_F(1) == 1);
  CHECK(q2.series_F(2) == Rational(7, 2));
  CHECK(q1.series_F(3) == 6);
  for (int n = 2; n <= 6; ++n) CHECK(q2.series_F(n) == q2.qnum(n + 1) * q2.series_F(n - 1) / (q2.qnum(n) - 1));
  CHECK(q1.series_Phi(5) == 1);
  CHECK(q2.series_Phi(2) == Rational(2, 3));
  CHECK(q2.phi_factorial(1) == 1);
}

TEST_CASE("gamma squared") {
  suq2::QContext q2(2), q1(1), q3(Rational(3, 2));
  CHECK(q2.gamma_q_squared(Spin(1)) == 1);
  CHECK(q3.gamma_q_squared(Spin(1)) == 1);
  CHECK(q1.gamma_q_squared(Spin(2)) == 3);
  CHECK(q2.gamma_q_squared(Spin(2)) == Rational(7, 3));
}

TEST_CASE("omega coefficients") {
  for (Rational q : {Rational(2), Rational(3, 2)}) {
    suq2::QContext ctx(q);
    CHECK(ctx.omega_rec(0, Spin(3), Spin(5)) == 1);
    CHECK(ctx.omega_rec(3, Spin(3), Spin(5)) == ctx.phi_factorial(5) / ctx.phi_factorial(2));
    CHECK(ctx.omega_closed(3, Spin(3), Spin(5)) == ctx.phi_factorial(5) / ctx.phi_factorial(2));
    Rational s = 0;
    for (int m = 0; m < 3; ++m) s += ctx.series_Phi(5 + m);
    CHECK(ctx.omega_closed(1, Spin(3), Spin(5)) == s / ctx.qnum(3));
  }
  suq2::QContext q2(2), q1(1);
  CHECK(q2.omega_closed(1, Spin(1), Spin(1)) == 1);
  for (int p = 0; p <= 4; ++p) CHECK(q1.omega_rec(p, Spin(4), Spin(6)) == 1);
}

TEST_CASE("q-6j") {
  suq2::QContext q2(2), q1(1);
  CHECK(q2.q_sixj_twice(0, 0, 0, 0, 0, 0) == ExactValue(1));
  CHECK(q2.q_sixj_twice(1, 1, 0, 1, 1, 2) == ExactValue(Rational(2, 5)));
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int f = 0; f <= 2; ++f) {
          CHECK(q1.q_sixj_twice(a, b, c, b, a, f) == su2::sixj_twice(a, b, c, b, a, f));
          CHECK(q2.q_sixj_twice(a, b, c, b, a, f) == oracle::q_sixj_by_contraction(Rational(2), a, b, c, b, a, f));
        }
}

TEST_CASE("q sum rule samples") {
  suq2::QContext q2(2), q32(Rational(3, 2)), q1(1);
  CHECK(q2.check_q_sum_rule(Spin(1), Spin(1), Spin(0), Spin(1), Spin(1)) == 0);
  CHECK(q32.check_q_sum_rule(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2)) == 0);
  CHECK(q1.check_q_sum_rule(Spin(3), Spin(2), Spin(3), Spin(4), Spin(3)) == 0);
  CHECK_THROWS_AS(q2.check_q_sum_rule(Spin(1), Spin(1), Spin(1), Spin(1), Spin(1)), DomainError);
}
