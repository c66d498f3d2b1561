#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superracah/osp.hpp"
#include "superracah/redmat.hpp"

using namespace sr;
using namespace sr::redmat;

TEST_CASE("S^1/2 elements") {
  PhaseClass pc;
  for (int t = 1; t <= 8; ++t) {
    CHECK(rme_S_half(Spin(t), Spin(t), pc).factor == osp::alpha_osp(Spin(t)));
    auto prod = rme_S_half(Spin(t), Spin(t - 1), pc) * rme_S_half(Spin(t - 1), Spin(t), pc);
    CHECK(prod.sqrt_gammas.empty());
    CHECK(prod.factor == lift<ExactValue>(osp::gamma_osp(Spin(t))) * ExactValue(-1));
  }
  CHECK(rme_S_half(Spin(0), Spin(0), pc).is_zero());
  CHECK_THROWS_AS(rme_S_half(Spin(1), Spin(3), pc), DomainError);
  CHECK(rme_S_half(Spin(2), Spin(1), pc).str() == "sqrt(gamma_1)");
}

TEST_CASE("S^1 elements") {
  PhaseClass pc;
  CHECK(rme_S_one(Spin(3), Spin(2), pc).is_zero());
  CHECK(rme_S_one(Spin(2), Spin(3), pc).is_zero());
  CHECK(rme_S_one(Spin(2), Spin(2), pc).factor.str() == "-2*sqrt(3)*u");
  for (int t = 1; t <= 6; ++t) {
    auto e = rme_S_one(Spin(t), Spin(t), pc);
    CHECK(e.factor == BasicHomPoly<ExactValue>::linear(ExactValue::make(-1, Rational(2 * t * (t + 1))), 0));
  }
  auto down = rme_S_one(Spin(2), Spin(0), pc);
  auto parts = rme_S_half(Spin(2), Spin(1), pc) * rme_S_half(Spin(1), Spin(0), pc);
  CHECK(down.factor == parts.factor);
  CHECK(down.sqrt_gammas == parts.sqrt_gammas);
  CHECK_FALSE(rme_S_one(Spin(4), Spin(3), pc).is_zero());
}

TEST_CASE("identity suites") {
  CHECK(identity_suite_A(40).pass());
  CHECK(alpha_gamma_suite(40).pass());
  CHECK(phase_class_suite(12).pass());
}

TEST_CASE("hand-evaluated identities at j = 1/2 and j = 1") {
  using P = BasicHomPoly<ExactValue>;
  P u = P::linear(1, 0), v = P::linear(0, 1), c0 = P::linear(1, -1);
  auto g = [](int t) { return lift<ExactValue>(osp::gamma_osp(Spin(t))); };
  CHECK(c0 + v * ExactValue(2) == g(2) - g(1));
  CHECK(g(1) * ExactValue(2) + v * ExactValue(2) + g(2) == u * ExactValue(4));
  auto lhs = osp::alpha_osp(Spin(1)) * ExactValue::sqrt_of(Rational(3, 2)) +
             osp::alpha_osp(Spin(2)) * ExactValue::sqrt_of(Rational(1, 2));
  CHECK(lhs == P::d0() * ExactValue::make(2, Rational(1, 3)));
}

TEST_CASE("phase class regimes") {
  CHECK(phase_class_real(PhaseClass{0, 1}, Rational(1, 3), Rational(1, 2), 10));
  CHECK_FALSE(phase_class_real(PhaseClass{0, 0}, Rational(1, 3), Rational(1, 2), 10));
  CHECK(phase_class_real(PhaseClass{1, 1}, Rational(-1), Rational(1, 2), 10));
}

TEST_CASE("generator conditions") {
  auto g = generator_conditions();
  CHECK(g.report.pass());
  CHECK(g.su2_c0 == ExactValue(Rational(-1, 4)));
  CHECK(g.osp_u == ExactValue::make(Rational(-1, 4), Rational(1, 2)));
  CHECK(g.osp_closure_111.str() == "2*sqrt(3)");
}
