// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "superracah/decimal.hpp"
#include "superracah/lab.hpp"
#include "superracah/osp.hpp"
#include "superracah/recoupling.hpp"
#include "superracah/redmat.hpp"
#include "superracah/su2.hpp"
#include "superracah/suq2.hpp"

using namespace sr;

namespace {

// Pinned bounds and tolerances.
constexpr int kSu2Bound = 12;
constexpr int kQBound = 8;
constexpr int kOmegaLambda = 8;
constexpr int kOmegaKappa = 12;
constexpr int kPolyBound = 14;
constexpr int kTheoremBound = 20;
constexpr int kConjectureVerified = 7;
constexpr int kConjectureExtended = 14;
constexpr int kGammaBound = 20;
constexpr int kIdentityBound = 40;
constexpr unsigned kLabDigits = 60;
constexpr int kLabToleranceExponent = 30;
constexpr int kLabProviderBound = 5;
constexpr int kKernelBound = 4;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> failures;
  // Failing exactly on a documented and analysed misprint.
  bool known_misprint = false;
};

std::vector<Rational> q_values() { return {Rational(2), Rational(3, 2), Rational(5, 4)}; }

std::string q_list() {
  std::string s;
  for (const auto& q : q_values()) s += (s.empty() ? "" : ",") + to_string(q);
  return s;
}

void absorb(Outcome& o, const ScanReport& r, std::uint64_t& checked) {
  checked += r.checked;
  for (const auto& c : r.counterexamples) o.failures.push_back(r.name + ": " + c);
  if (!r.pass() && r.counterexamples.empty()) o.failures.push_back(r.name + ": failures not recorded");
}

Outcome c1_su2_sum_rule(unsigned threads) {
  auto tuples = su2::admissible_quintuples(kSu2Bound);
  auto r = run_scan("su2-sumrule", tuples.size(), threads, [&](std::size_t i, ScanReport& part) {
    auto [a, b, c, d, e] = tuples[i];
    Rational res = su2::sum_rule_residual_twice(a, b, c, d, e);
    part.check(sgn(res) == 0, "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                                  std::to_string(d) + "," + std::to_string(e) + ") residual " + to_string(res));
  });
  Outcome o;
  std::uint64_t n = 0;
  absorb(o, r, n);
  o.pass = o.failures.empty();
  o.detail = std::to_string(n) + " quintuples, 2j<=" + std::to_string(kSu2Bound) + ", exact";
  return o;
}

Outcome c2_q_sum_rule(unsigned threads) {
  Outcome o;
  std::uint64_t rule = 0, omega = 0;
  auto tuples = su2::admissible_quintuples(kQBound);
  for (const auto& q : q_values()) {
    suq2::QContext ctx(q);
    auto r = run_scan("q-sumrule q=" + to_string(q), tuples.size(), threads, [&](std::size_t i, ScanReport& part) {
      auto [a, b, c, d, e] = tuples[i];
      Rational res = ctx.check_q_sum_rule(Spin(a), Spin(b), Spin(c), Spin(d), Spin(e));
      part.check(sgn(res) == 0, "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                                    std::to_string(d) + "," + std::to_string(e) + ") residual " + to_string(res));
    });
    absorb(o, r, rule);
    ScanReport w;
    w.name = "omega q=" + to_string(q);
    for (int l2 = 1; l2 <= kOmegaLambda; ++l2)
      for (int k2 = 1; k2 <= kOmegaKappa; ++k2)
        for (int p = 1; p <= std::min(l2, k2); ++p) {
          Rational rec = ctx.omega_rec(p, Spin(l2), Spin(k2)), cl = ctx.omega_closed(p, Spin(l2), Spin(k2));
          w.check(rec == cl, "p=" + std::to_string(p) + " (" + Spin(l2).str() + "," + Spin(k2).str() + "): rec " +
                                 to_string(rec) + ", closed " + to_string(cl));
        }
    absorb(o, w, omega);
  }
  suq2::QContext one(1);
  ScanReport u;
  u.name = "omega q=1";
  for (int l2 = 0; l2 <= kOmegaLambda; ++l2)
    for (int k2 = 0; k2 <= kOmegaKappa; ++k2)
      for (int p = 0; p <= std::min(l2, k2); ++p) {
        Rational v = one.omega_rec(p, Spin(l2), Spin(k2));
        u.check(v == 1, "p=" + std::to_string(p) + " (" + Spin(l2).str() + "," + Spin(k2).str() + ") = " + to_string(v));
      }
  absorb(o, u, omega);
  o.pass = o.failures.empty();
  o.detail = std::to_string(rule) + " sum-rule checks at q in {" + q_list() + "}, 2j<=" + std::to_string(kQBound) +
             "; " + std::to_string(omega) + " omega checks";
  return o;
}

// The pi=3 case (b) closed form carries half the recursion's x1; everything else must agree.
bool is_recorded_misprint(int w2, int l2, int k2) {
  if (w2 != 6 || l2 % 2 == 0 || k2 % 2 == 0 || w2 > std::min(l2, k2)) return false;
  auto closed = osp::published::closed_P(Spin(w2), Spin(l2), Spin(k2));
  if (!closed) return false;
  BiHomPoly rec = osp::poly_P_twice(w2, l2, k2);
  if (rec.degree() != closed->degree() || rec.coeff(1) != 2 * closed->coeff(1) || rec.coeff(1) == 0) return false;
  for (int m = 0; m <= rec.degree(); ++m)
    if (m != 1 && rec.coeff(m) != closed->coeff(m)) return false;
  return true;
}

Outcome c3_closed_forms(unsigned threads) {
  Outcome o;
  std::uint64_t n = 0;
  auto r = osp::closed_form_scan(kPolyBound, threads);
  absorb(o, r, n);
  std::set<std::array<int, 3>> expected;
  for (int l2 = 1; l2 <= kPolyBound; ++l2)
    for (int k2 = 1; k2 <= kPolyBound; ++k2)
      if (is_recorded_misprint(6, l2, k2)) expected.insert({6, l2, k2});
  o.pass = o.failures.empty();
  o.known_misprint = !o.pass && r.failed == expected.size() && r.failed == 16 &&
                     r.counterexamples.size() == expected.size();
  // Each reported tuple must be one of the analysed ones.
  if (o.known_misprint)
    for (const auto& c : r.counterexamples) {
      bool hit = false;
      for (const auto& [w2, l2, k2] : expected)
        if (c.rfind("P^3(" + Spin(l2).str() + "," + Spin(k2).str() + ")", 0) == 0) hit = true;
      if (!hit) o.known_misprint = false;
    }
  o.detail = std::to_string(n) + " polynomials, all four parity cases, 2j<=" + std::to_string(kPolyBound) +
             ", symbolic equality";
  if (!o.pass)
    o.detail += "; " + std::to_string(r.failed) + " mismatches" +
                (o.known_misprint ? " (all pi=3 case (b), x1 halved in the closed form)" : "");
  return o;
}

Outcome c4_tables(unsigned threads) {
  Outcome o;
  std::uint64_t n = 0;
  absorb(o, osp::table_scan(kPolyBound, threads), n);
  absorb(o, osp::x0_closed_scan(kPolyBound, threads), n);
  absorb(o, osp::x_top_scan(kPolyBound, threads), n);
  o.pass = o.failures.empty();
  o.detail = std::to_string(n) + " checks: x0 tables p=0..3, x0 closed form, x_top = 0, 2j<=" +
             std::to_string(kPolyBound);
  return o;
}

Outcome c5_theorems(unsigned threads) {
  Outcome o;
  std::uint64_t n = 0;
  absorb(o, osp::theorem_zero_checks(osp::TheoremFamily::T1, kTheoremBound, threads), n);
  absorb(o, osp::theorem_zero_checks(osp::TheoremFamily::T2, kTheoremBound, threads), n);
  o.pass = o.failures.empty() && n > 0;
  o.detail = std::to_string(n) + " family instances, 2j<=" + std::to_string(kTheoremBound);
  return o;
}

Outcome c6_conjectures(unsigned threads) {
  Outcome o;
  std::uint64_t n = 0;
  absorb(o, osp::conjecture1_scan(kConjectureVerified, threads), n);
  absorb(o, osp::conjecture2_scan(kConjectureVerified, threads), n);
  o.pass = o.failures.empty();
  auto e1 = osp::conjecture1_scan(kConjectureExtended, threads);
  auto e2 = osp::conjecture2_scan(kConjectureExtended, threads);
  o.detail = std::to_string(n) + " checks, 2j<=" + std::to_string(kConjectureVerified) + "; extended 2j<=" +
             std::to_string(kConjectureExtended) + ": conjecture1 " + std::to_string(e1.failed) + "/" +
             std::to_string(e1.checked) + ", conjecture2 " + std::to_string(e2.failed) + "/" +
             std::to_string(e2.checked) + " counterexamples (informational)";
  for (const auto& c : e1.counterexamples) std::cout << "  finding conjecture1: " << c << "\n";
  for (const auto& c : e2.counterexamples) std::cout << "  finding conjecture2: " << c << "\n";
  return o;
}

Outcome c7_gamma(unsigned threads) {
  Outcome o;
  std::uint64_t n = 0;
  absorb(o, lab::gamma_product_scan(kGammaBound, threads), n);
  o.pass = o.failures.empty();
  o.detail = std::to_string(n) + " ranges, 2k<=" + std::to_string(kGammaBound) + ", symbolic";
  return o;
}

Outcome c8_identities() {
  Outcome o;
  std::uint64_t n = 0;
  absorb(o, redmat::identity_suite_A(kIdentityBound), n);
  absorb(o, redmat::alpha_gamma_suite(kIdentityBound), n);
  auto g = redmat::generator_conditions();
  absorb(o, g.report, n);
  ExactValue su2_want(Rational(-1, 4));
  ExactValue osp_want = ExactValue(Rational(-1, 4)) * ExactValue::sqrt_of(Rational(1, 2));
  if (g.su2_c0 != su2_want) o.failures.push_back("su(2) c0 = " + g.su2_c0.str());
  if (g.osp_u != osp_want) o.failures.push_back("osp c0+d0^2 = " + g.osp_u.str());
  o.pass = o.failures.empty();
  o.detail = std::to_string(n) + " identity checks, 2j<=" + std::to_string(kIdentityBound) + "; c0 = " +
             g.su2_c0.str() + ", c0+d0^2 = " + g.osp_u.str();
  return o;
}

// Provider tables: the live experimental provider, its frozen TSV export, and a corrupted copy.
Outcome c9_lab_properties(const std::string& data_dir) {
  Outcome o;
  lab::OrthogonalityOptions opt{kLabDigits, kLabToleranceExponent};
  lab::ExperimentalProvider live(kLabProviderBound, kLabDigits);
  auto frozen = lab::FileProvider::load(data_dir + "/experimental_t4.tsv");
  auto corrupted = frozen;
  lab::SixKey bad{2, 2, 2, 2, 2, 2};
  {
    PrecisionScope scope(kLabDigits + 20);
    corrupted.set(bad, lab::ProviderValue::of_decimal(-frozen.get(bad).decimal(), kLabDigits));
  }
  std::uint64_t families = 0, checks = 0, rejected = 0;
  auto run = [&](const std::string& tag, const lab::SixJSuperProvider& table) {
    for (const auto& fam : table.families()) {
      auto orth = lab::orthogonality_check(table, fam, opt);
      if (!orth.pass()) {
        ++rejected;
        continue;
      }
      ++families;
      auto cons = lab::system_consistency(table, fam, opt);
      auto inv = lab::contraction_invariance(table, fam, opt);
      cons.name = tag + " consistency";
      inv.name = tag + " contraction";
      absorb(o, cons, checks);
      absorb(o, inv, checks);
    }
  };
  run("live", live);
  run("frozen", frozen);
  run("corrupted", corrupted);
  // The corrupted family must be rejected by the orthogonality gate.
  if (lab::orthogonality_check(corrupted, {2, 2, 2, 2}, opt).pass())
    o.failures.push_back("orthogonality_check accepted a sign-flipped table");
  // Frozen export and live provider must agree.
  {
    PrecisionScope scope(kLabDigits + 20);
    auto tol = tolerance_from_exponent(kLabToleranceExponent);
    for (const auto& [k, v] : frozen.table()) {
      auto w = live.find(k);
      if (!w || abs(w->decimal() - v.decimal()) >= tol) o.failures.push_back("frozen table differs at " + lab::key_str(k));
    }
  }
  o.pass = o.failures.empty() && families > 0;
  o.detail = std::to_string(families) + " orthogonal families (" + std::to_string(rejected) + " rejected), " +
             std::to_string(checks) + " residual/contraction checks, tol 1e-" + std::to_string(kLabToleranceExponent) +
             " at " + std::to_string(kLabDigits) + " digits";
  return o;
}

Outcome c10_kernels() {
  Outcome o;
  std::uint64_t n = 0;
  std::deque<suq2::QContext> ctxs;
  for (const auto& q : q_values()) ctxs.emplace_back(q);
  ScanReport r;
  r.name = "kernels";
  const int B = kKernelBound;
  for (int a = 0; a <= B; ++a)
    for (int b = 0; b <= B; ++b)
      for (int c = 0; c <= B; ++c)
        for (int d = 0; d <= B; ++d)
          for (int e = 0; e <= B; ++e)
            for (int f = 0; f <= B; ++f) {
              std::string args = "{" + Spin(a).str() + " " + Spin(b).str() + " " + Spin(c).str() + "; " +
                                 Spin(d).str() + " " + Spin(e).str() + " " + Spin(f).str() + "}";
              ExactValue k = su2::sixj_twice(a, b, c, d, e, f), w = oracle::sixj_by_contraction(a, b, c, d, e, f);
              r.check(k == w, "6j" + args + " kernel " + k.str() + ", oracle " + w.str());
              for (std::size_t i = 0; i < ctxs.size(); ++i) {
                ExactValue kq = ctxs[i].q_sixj(Spin(a), Spin(b), Spin(c), Spin(d), Spin(e), Spin(f));
                ExactValue wq = oracle::q_sixj_by_contraction(ctxs[i].q(), a, b, c, d, e, f);
                r.check(kq == wq, "q=" + to_string(ctxs[i].q()) + " 6j" + args + " kernel " + kq.str() + ", oracle " +
                                      wq.str());
              }
            }
  absorb(o, r, n);
  o.pass = o.failures.empty();
  o.detail = std::to_string(n) + " symbols, 2j<=" + std::to_string(kKernelBound) + ", q in {1," + q_list() +
             "}, exact";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superracah acceptance suite"};
  bool ctest = false;
  unsigned threads = 1;
  std::string data_dir = SUPERRACAH_TEST_DATA_DIR;
  std::vector<int> only;
  app.add_flag("--ctest", ctest, "exit 0 when every failure is a recorded misprint");
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--data", data_dir, "directory holding provider fixtures");
  app.add_option("--only", only, "run only these criteria")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"su(2) triangle sum rule", [&] { return c1_su2_sum_rule(threads); }},
      {"su_q(2) sum rule and omega", [&] { return c2_q_sum_rule(threads); }},
      {"P recursion vs closed forms", [&] { return c3_closed_forms(threads); }},
      {"x0 tables and x_top", [&] { return c4_tables(threads); }},
      {"Theorems 1-2 closure zeros", [&] { return c5_theorems(threads); }},
      {"Conjectures 1-2", [&] { return c6_conjectures(threads); }},
      {"gamma-product formula", [&] { return c7_gamma(threads); }},
      {"reduced-matrix identities and generator conditions", [] { return c8_identities(); }},
      {"lab residual properties", [&] { return c9_lab_properties(data_dir); }},
      {"6-j and q-6-j kernels vs CG oracles", [] { return c10_kernels(); }},
  };

  int failed = 0, unexplained = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = int(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " C" << id << " " << criteria[i].first << ": " << o.detail << "\n";
    for (const auto& f : o.failures) std::cout << "  " << f << "\n";
    std::cout.flush();
    std::fprintf(stderr, "  C%d took %.1fs\n", id, secs);
    if (!o.pass) {
      ++failed;
      if (!o.known_misprint) ++unexplained;
    }
  }
  std::cout << "summary: " << failed << " failing criteria";
  if (failed) std::cout << " (" << (failed - unexplained) << " recorded misprint, " << unexplained << " unexplained)";
  std::cout << "\n";
  if (ctest) return unexplained == 0 ? 0 : 1;
  return failed == 0 ? 0 : 1;
}
