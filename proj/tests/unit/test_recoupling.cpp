#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "superracah/cache.hpp"
#include "superracah/lab.hpp"
#include "superracah/osp.hpp"
#include "superracah/recoupling.hpp"
#include "superracah/zeng.hpp"

using namespace sr;
using namespace sr::lab;

TEST_CASE("experimental provider is pseudo-orthogonal") {
  ExperimentalProvider ep(4);
  CHECK(ep.provenance() == "experimental-recoupling");
  auto r = orthogonality_check_all(ep);
  CHECK(r.checked > 500);
  CHECK(r.pass());
}

TEST_CASE("recoupling matrix data") {
  auto m = recoupling_matrix(1, 1, 1, 1, 80);
  CHECK(m.xs == std::vector<int>{0, 1, 2});
  CHECK(m.fs == m.xs);
  CHECK(m.fit_residual < tolerance_from_exponent(40));
  auto empty = recoupling_matrix(0, 0, 1, 0, 60);
  CHECK(empty.xs.empty());
}

TEST_CASE("provider lookups") {
  ExperimentalProvider ep(2);
  CHECK(ep.get({1, 1, 1, 1, 1, 4}).exact->is_zero());
  CHECK_FALSE(ep.find({1, 1, 1, 1, 1, 3}).has_value());
  CHECK_THROWS_AS(ep.get({1, 1, 2, 1, 3, 2}), MissingEntry);
  auto v = ep.get({0, 0, 0, 0, 0, 0});
  CHECK_FALSE(v.exact);
  CHECK(abs(v.decimal() - 1) < tolerance_from_exponent(50));
  // families with an x or f past the bound are not listed
  ExperimentalProvider small(3);
  for (const auto& fam : small.families()) CHECK(fam != std::array<int, 4>{2, 2, 2, 2});
}

TEST_CASE("TSV round trip") {
  ExperimentalProvider ep(3);
  auto table = ep.materialize();
  std::string text = to_tsv(table, "experimental-recoupling");
  auto back = FileProvider::parse(text);
  CHECK(back.table().size() == table.size());
  PrecisionScope scope(60);
  for (const auto& [k, v] : table) {
    auto w = back.find(k);
    REQUIRE(w);
    CHECK(abs(w->decimal() - v.decimal()) < tolerance_from_exponent(55));
  }
  CHECK(orthogonality_check_all(back).pass());
  for (const auto& fam : back.families()) {
    CHECK(system_consistency(back, fam).pass());
    CHECK(contraction_invariance(back, fam).pass());
  }
}

TEST_CASE("TSV parsing errors") {
  CHECK_THROWS_AS(FileProvider::parse("1 1 0 1 1\n"), DomainError);
  CHECK_THROWS_AS(FileProvider::parse("1 1 0 1 1 0 1\n1 1 0 1 1 0 1\n"), DomainError);
  CHECK_THROWS_AS(FileProvider::parse("1 1 x 1 1 0 1\n"), DomainError);
  auto ok = FileProvider::parse("# comment\n1 1 0 1 1 0 -1/2*sqrt(2)  # trailing\n1 1 2 1 1 0 0.5\n");
  CHECK(ok.table().size() == 2);
  CHECK(*ok.find({1, 1, 0, 1, 1, 0})->exact == ExactValue::make(Rational(-1, 2), 2));
  CHECK_FALSE(ok.find({1, 1, 2, 1, 1, 0})->exact);
}

TEST_CASE("contraction invariance on the experimental table") {
  ExperimentalProvider ep(4);
  for (const auto& fam : ep.families()) CHECK(contraction_invariance(ep, fam).pass());
}

TEST_CASE("scalar factors") {
  // integral perimeter: nabla(l)^2 deltaS(j); half-integral: nablaS(j)
  CHECK(scalar_factor_nabla(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2), Spin(2)) ==
        ExactValue(24) * osp::deltaS(Spin(2), Spin(2), Spin(2)));
  CHECK(scalar_factor_nabla(Spin(1), Spin(1), Spin(1), Spin(1), Spin(0), Spin(1)) ==
        osp::nablaS(Spin(1), Spin(1), Spin(1)));
  CHECK(scalar_factor_nabla(Spin(1), Spin(1), Spin(4), Spin(1), Spin(1), Spin(2)).is_zero());
  CHECK(scalar_factor_nabla(Spin(2), Spin(2), Spin(2), Spin(2), Spin(1), Spin(2)).is_zero());
}

TEST_CASE("Zeng relation reports all sixteen choices") {
  ExperimentalProvider ep(8);
  auto all = zeng_all_choices(Spin(2), Spin(2), Spin(1), Spin(1), Spin(1), ep);
  CHECK(all.size() == 16);
  int valid = 0;
  for (const auto& r : all) valid += r.valid;
  CHECK(valid == 8);
  CHECK(all[0].valid);
  CHECK(abs(all[0].lhs - 9) < tolerance_from_exponent(40));
  CHECK(abs(all[0].rhs - 9) < tolerance_from_exponent(40));
  ZengChoice bad{Spin(2), Spin(2), Spin(1), Spin(0)};
  CHECK_FALSE(zeng_choice_valid(Spin(2), Spin(2), Spin(1), Spin(1), bad));
  CHECK_THROWS_AS(zeng_relation_check(Spin(2), Spin(2), Spin(1), Spin(1), Spin(1), bad, ep), DomainError);
  ZengChoice off{Spin(0), Spin(2), Spin(1), Spin(1)};
  CHECK_FALSE(zeng_choice_valid(Spin(2), Spin(2), Spin(1), Spin(1), off));
}

TEST_CASE("Zeng relation on a non-triangular super triad") {
  ExperimentalProvider ep(8);
  auto all = zeng_all_choices(Spin(1), Spin(1), Spin(1), Spin(1), Spin(6), ep);
  for (const auto& r : all)
    if (r.valid) {
      CHECK(r.lhs == 0);
      CHECK(r.rhs == 0);
    }
}

TEST_CASE("poly cache file") {
  std::string path = "superracah_test_cache.bin";
  auto p = osp::poly_P(Spin(5), Spin(5), Spin(6));
  auto q = osp::poly_Q(Spin(3), Spin(4), Spin(7));
  std::size_t n = save_poly_cache(path);
  CHECK(n > 0);
  osp::clear_poly_cache();
  std::size_t loaded = 0;
  CHECK(load_poly_cache(path, &loaded) == CacheLoad::loaded);
  CHECK(loaded == n);
  CHECK(osp::poly_P(Spin(5), Spin(5), Spin(6)) == p);
  CHECK(osp::poly_Q(Spin(3), Spin(4), Spin(7)) == q);
  {
    std::FILE* f = std::fopen(path.c_str(), "r+b");
    REQUIRE(f);
    std::fseek(f, 4, SEEK_SET);
    std::fputc(99, f);
    std::fclose(f);
  }
  CHECK(load_poly_cache(path) == CacheLoad::mismatched);
  std::remove(path.c_str());
  CHECK(load_poly_cache(path) == CacheLoad::missing);
}
