#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "superracah/su2.hpp"

using namespace sr;

TEST_CASE("nabla") {
  CHECK(su2::nabla(Spin(0), Spin(0), Spin(0)) == ExactValue(1));
  CHECK(su2::nabla(Spin(1), Spin(1), Spin(0)).str() == "sqrt(2)");
  CHECK(su2::nabla(Spin(2), Spin(2), Spin(2)).str() == "2*sqrt(6)");
  CHECK_THROWS_AS(su2::nabla(Spin(1), Spin(1), Spin(1)), DomainError);
}

TEST_CASE("sixj values") {
  CHECK(su2::sixj_twice(0, 0, 0, 0, 0, 0) == ExactValue(1));
  CHECK(su2::sixj_twice(2, 2, 2, 2, 2, 2) == ExactValue(Rational(1, 6)));
  CHECK(su2::sixj_twice(1, 1, 0, 1, 1, 2) == ExactValue(Rational(1, 2)));
  CHECK(su2::sixj_twice(1, 1, 1, 1, 1, 1).is_zero());
}

TEST_CASE("sixj against contraction") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f) CHECK(su2::sixj_twice(a, b, c, d, e, f) == oracle::sixj_by_contraction(a, b, c, d, e, f));
}

TEST_CASE("gamma and beta") {
  auto g1 = su2::gamma_su2(Spin(2));
  CHECK(g1.c0_exponent == 1);
  CHECK(g1.magnitude.str() == "sqrt(3)");
  auto gh = su2::gamma_su2(Spin(1));
  CHECK(gh.magnitude == ExactValue(1));
  CHECK(su2::gamma_su2(Spin(0)).magnitude.is_zero());
  CHECK(su2::beta_coeff(1, 4) == 4);
  CHECK(su2::beta_coeff(0, 7) == 1);
  CHECK(su2::beta_coeff(2, 4) == 6);
}

TEST_CASE("closure coefficients") {
  auto top = su2::closure_coeff_su2(Spin(2), Spin(3), Spin(5));
  CHECK(top.c0_exponent == 0);
  CHECK(top.magnitude == ExactValue(1));
  auto s = su2::closure_coeff_su2(Spin(1), Spin(1), Spin(0));
  CHECK(s.c0_exponent == 1);
  CHECK(s.magnitude == ExactValue(1));
  auto g = su2::closure_coeff_su2(Spin(2), Spin(2), Spin(2));
  CHECK(g.c0_exponent == 1);
  CHECK(g.magnitude.str() == "2*sqrt(2)");
}

TEST_CASE("triangle sum rule samples") {
  CHECK(su2::check_sum_rule_su2(Spin(1), Spin(1), Spin(0), Spin(1), Spin(1)) == 0);
  CHECK(su2::check_sum_rule_su2(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2)) == 0);
  CHECK(su2::check_sum_rule_su2(Spin(3), Spin(2), Spin(3), Spin(4), Spin(3)) == 0);
}

TEST_CASE("triangle sum rule small range") {
  for (const auto& t : su2::admissible_quintuples(6)) CHECK(su2::sum_rule_residual_twice(t.a, t.b, t.c, t.d, t.e) == 0);
}
