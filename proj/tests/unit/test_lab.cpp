#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superracah/lab.hpp"
#include "superracah/osp.hpp"
#include "superracah/recoupling.hpp"

using namespace sr;
using namespace sr::lab;

TEST_CASE("R polynomials") {
  CHECK(poly_R(Spin(2), Spin(2), Spin(4), Spin(2), Spin(6)).base == BiHomPoly::one());
  auto r = poly_R(Spin(1), Spin(1), Spin(1), Spin(1), Spin(1));
  CHECK(r.base.str() == "4");
  CHECK(r.stripped_d0 == 2);
  CHECK(r.with_d0() == BiHomPoly::linear(0, 4));
  CHECK_THROWS_AS(poly_R(Spin(1), Spin(1), Spin(4), Spin(1), Spin(1)), DomainError);
  CHECK(poly_R_scan(6).pass());
}

TEST_CASE("degree bookkeeping") {
  auto g = degrees(Spin(1), Spin(1), Spin(1), Spin(1), Spin(1));
  CHECK(g.omega_published == 0);
  CHECK(g.omega_structural == 0);
  CHECK(g.branch == DegreeBranch::both_half_integral);
  auto m = degrees(Spin(1), Spin(1), Spin(1), Spin(1), Spin(2));
  CHECK(m.branch == DegreeBranch::d0_frontal);
  auto f = degrees(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2), Spin(2));
  REQUIRE(f.omega_f_structural);
  CHECK(*f.omega_f_structural == poly_R_pair({2, 2, 2}, {2, 2, 2}).base.degree());
  CHECK(degree_scan(6).pass());
}

TEST_CASE("phase phi") {
  CHECK(phase_phi(Spin(1), Spin(1), Spin(1), Spin(1), Spin(1)) == -1);
  CHECK(phase_phi(Spin(2), Spin(2), Spin(2), Spin(4), Spin(2)) == sign_of_exponent(5));
  CHECK(phase_phi(Spin(1), Spin(2), Spin(2), Spin(2), Spin(3)) == sign_of_exponent(3));
}

TEST_CASE("gamma products") {
  CHECK(gamma_product(Spin(1), Spin(2)).expand() == BiHomPoly::one());
  CHECK(gamma_product(Spin(1), Spin(2)).empty);
  CHECK(gamma_product(Spin(2), Spin(2)).expand() == BiHomPoly::linear(2, 0));
  auto h = gamma_product(Spin(1), Spin(1));
  CHECK(h.z.base == osp::gamma_osp(Spin(1)));
  CHECK(h.z.degree() == 1);
  CHECK_THROWS_AS(gamma_product(Spin(2), Spin(0)), DomainError);
  CHECK(gamma_product_scan(20).pass());
}

TEST_CASE("supertriangle pair") {
  auto [n, d] = supertriangles(Spin(1), Spin(1), Spin(2));
  CHECK(n.str() == "sqrt(2)");
  CHECK(n * d == ExactValue(1));
}

TEST_CASE("residual with an empty table") {
  FileProvider empty;
  auto r = residual_delta_sum_rule(Spin(1), Spin(1), Spin(4), Spin(1), Spin(3), empty);
  for (const auto& c : r.coeffs) {
    CHECK(c.lhs == 0);
    CHECK(c.rhs == 0);
  }
  CHECK_THROWS_AS(residual_delta_sum_rule(Spin(1), Spin(1), Spin(2), Spin(1), Spin(1), empty), MissingEntry);
}

TEST_CASE("stretched tuples have zero residual") {
  ExperimentalProvider ep(8);
  int tuples[][5] = {{1, 1, 2, 1, 3}, {1, 2, 3, 1, 4}, {2, 2, 4, 2, 6}, {2, 1, 3, 3, 6}};
  for (auto& t : tuples) {
    auto r = residual_delta_sum_rule(Spin(t[0]), Spin(t[1]), Spin(t[2]), Spin(t[3]), Spin(t[4]), ep);
    CHECK(family_f_range(t[0], t[1], t[3], t[4]).size() == 1);
    CHECK(r.max_abs < tolerance_from_exponent(30));
  }
}

TEST_CASE("identification system shape") {
  auto sys = emit_identification_system(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2));
  CHECK(sys.rows.size() == std::size_t(sys.basis_degree + 1));
  CHECK(sys.unknowns == family_f_range(2, 2, 2, 2));
  CHECK(sys.unknowns == std::vector<int>{0, 1, 2, 3, 4});
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    CHECK(sys.rows[i].m == int(i));
    CHECK(sys.rows[i].unknown_coeffs.size() == sys.unknowns.size());
  }
  CHECK_THROWS_AS(emit_identification_system(Spin(1), Spin(1), Spin(2), Spin(2), Spin(4)), DomainError);
}

TEST_CASE("emitted system reproduces residuals") {
  ExperimentalProvider ep(4);
  for (const auto& fam : ep.families()) CHECK(system_consistency(ep, fam).pass());
}

TEST_CASE("orthogonality detection path") {
  ExperimentalProvider ep(4);
  FileProvider fp;
  for (const auto& [k, v] : ep.materialize()) fp.set(k, v);
  CHECK(orthogonality_check_all(fp).pass());
  SixKey bad{2, 2, 2, 2, 2, 2};
  fp.set(bad, ProviderValue::of_decimal(-fp.find(bad)->decimal(), 60));
  auto r = orthogonality_check(fp, {2, 2, 2, 2});
  CHECK_FALSE(r.pass());
  REQUIRE(!r.counterexamples.empty());
  CHECK(r.counterexamples[0].find("x=1") != std::string::npos);

  FileProvider partial;
  partial.set({1, 1, 0, 1, 1, 0}, ProviderValue::of_exact(ExactValue(1)));
  auto inc = orthogonality_check(partial, {1, 1, 1, 1});
  CHECK_FALSE(inc.pass());
  CHECK(inc.counterexamples[0].find("incomplete") != std::string::npos);
}

TEST_CASE("exact tables use the exact path") {
  // {0 b b; d e f} family with a single x and f: value forced to a sign
  FileProvider fp;
  fp.set({0, 1, 1, 1, 0, 1}, ProviderValue::of_exact(ExactValue(1)));
  auto r = orthogonality_check(fp, {0, 1, 1, 0});
  CHECK(r.checked == 1);
}
