#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superracah/exact.hpp"
#include "superracah/poly.hpp"
#include "superracah/spin.hpp"

using namespace sr;

TEST_CASE("tau and 2kappa phase") {
  CHECK(tau(Spin(2)) == 0);
  CHECK(tau(Spin(1)) == 1);
  CHECK(tau(Spin(0)) == 0);
  CHECK(phase_two_kappa(Spin(1)) == -1);
  CHECK(phase_two_kappa(Spin(2)) == 1);
  CHECK(phase_two_kappa(Spin(7)) == -1);
}

TEST_CASE("spin parsing") {
  CHECK(parse_spin("3/2") == Spin(3));
  CHECK(parse_spin("2") == Spin(4));
  CHECK(parse_spin("1.5") == Spin(3));
  CHECK_THROWS_AS(parse_spin("1/3"), DomainError);
  CHECK_THROWS_AS(Spin(-1), DomainError);
  CHECK(Spin(5).str() == "5/2");
  CHECK(Spin(4).str() == "2");
}

TEST_CASE("factorials") {
  CHECK(exact_factorial(5) == 120);
  CHECK(exact_factorial(0, FactorialKind::dbl) == 1);
  CHECK(exact_factorial(7, FactorialKind::dbl) == 105);
  CHECK(exact_factorial(-1, FactorialKind::dbl) == 1);
  CHECK(binomial(6, 2) == 15);
}

TEST_CASE("surd arithmetic") {
  ExactValue a = ExactValue::make(2, 3), b = ExactValue::make(5, 3);
  CHECK(surd_mul(a, b) == ExactValue(30));
  auto s = surd_try_add(ExactValue::make(1, 2), ExactValue::make(3, 2));
  REQUIRE(s);
  CHECK(*s == ExactValue::make(4, 2));
  CHECK_FALSE(surd_try_add(ExactValue::make(1, 2), ExactValue::make(1, 3)));
  CHECK_THROWS_AS(ExactValue::make(1, 2) + ExactValue::make(1, 3), RadicandMismatch);
}

TEST_CASE("canonical surd form") {
  CHECK(ExactValue::sqrt_of(Rational(1, 2)).str() == "1/2*sqrt(2)");
  CHECK(ExactValue::sqrt_of(Rational(24)).str() == "2*sqrt(6)");
  CHECK(ExactValue::make(3, 4) == ExactValue(6));
  CHECK(ExactValue::sqrt_of(Rational(8, 18)) == ExactValue(Rational(2, 3)));
  CHECK((ExactValue::make(1, 6) / ExactValue::make(1, 2)) == ExactValue::make(1, 3));
}

TEST_CASE("surd sums and parsing") {
  SurdSum s;
  s += ExactValue::make(1, 2);
  s += ExactValue::make(1, 3);
  s += ExactValue::make(-1, 2);
  REQUIRE(s.as_single());
  CHECK(*s.as_single() == ExactValue::make(1, 3));
  CHECK(parse_exact("-3/4*sqrt(5/2)") == ExactValue::make(Rational(-3, 4), Rational(5, 2)));
  CHECK(parse_exact("7/9") == ExactValue(Rational(7, 9)));
  CHECK(looks_exact("1/2*sqrt(3)"));
  CHECK_FALSE(looks_exact("0.25"));
}

TEST_CASE("triangle rules") {
  CHECK(is_triangle(Spin(1), Spin(1), Spin(1), Algebra::osp));
  CHECK_FALSE(is_triangle(Spin(1), Spin(1), Spin(1), Algebra::su2));
  CHECK_FALSE(is_triangle(Spin(2), Spin(6), Spin(2), Algebra::su2));
}

TEST_CASE("homogeneous polynomials") {
  BiHomPoly u = BiHomPoly::linear(1, 0), v = BiHomPoly::linear(0, 1);
  CHECK((u - v).str() == "u - v");
  BiHomPoly d = BiHomPoly::d0();
  CHECK((d * d) == v);
  CHECK((d * (u - v)).str() == "d0*(u - v)");
  CHECK((u * u).c0_basis()[0] == 1);
  CHECK((u * u).str(true) == "c0^2 + 2*c0*d0^2 + d0^4");
}
