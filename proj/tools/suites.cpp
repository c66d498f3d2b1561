#include "suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "superracah/lab.hpp"
#include "superracah/osp.hpp"
#include "superracah/recoupling.hpp"
#include "superracah/redmat.hpp"
#include "superracah/su2.hpp"
#include "superracah/suq2.hpp"
#include "superracah/zeng.hpp"

namespace sr::cli {

namespace {

std::string tuple_str(std::initializer_list<int> twice) {
  std::string s = "(";
  for (int t : twice) s += (s.size() > 1 ? "," : "") + Spin(t).str();
  return s + ")";
}

ScanReport su2_sumrule(int bound, unsigned threads) {
  auto tuples = su2::admissible_quintuples(bound);
  return run_scan("su2-sumrule", tuples.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [a, b, c, d, e] = tuples[i];
    Rational res = su2::sum_rule_residual_twice(a, b, c, d, e);
    r.check(sgn(res) == 0, tuple_str({a, b, c, d, e}) + " residual " + to_string(res));
  });
}

ScanReport q_sumrule(int bound, const Rational& q, unsigned threads) {
  suq2::QContext ctx(q);
  auto tuples = su2::admissible_quintuples(bound);
  return run_scan("q-sumrule q=" + to_string(q), tuples.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [a, b, c, d, e] = tuples[i];
    Rational res = ctx.check_q_sum_rule(Spin(a), Spin(b), Spin(c), Spin(d), Spin(e));
    r.check(sgn(res) == 0, tuple_str({a, b, c, d, e}) + " residual " + to_string(res));
  });
}

ScanReport omega_check(int bound, const Rational& q) {
  suq2::QContext ctx(q);
  ScanReport r;
  r.name = "omega q=" + to_string(q);
  for (int l2 = 1; l2 <= bound; ++l2)
    for (int k2 = 1; k2 <= bound; ++k2)
      for (int p = 1; p <= std::min(l2, k2); ++p) {
        Rational a = ctx.omega_rec(p, Spin(l2), Spin(k2)), b = ctx.omega_closed(p, Spin(l2), Spin(k2));
        r.check(a == b, "p=" + std::to_string(p) + " " + tuple_str({l2, k2}) + " rec " + to_string(a) + ", closed " +
                            to_string(b));
      }
  return r;
}

void lab_residuals(VerificationReport& rep, const lab::SixJSuperProvider& table, const Config& cfg) {
  lab::OrthogonalityOptions opt{cfg.precision, cfg.tolerance_exponent};
  ScanReport orth, cons, inv;
  orth.name = "orthogonality";
  cons.name = "system-consistency";
  inv.name = "contraction-invariance";
  std::uint64_t raw_nonzero = 0, raw_total = 0;
  PrecisionScope scope(cfg.precision + 20);
  auto tol = tolerance_from_exponent(cfg.tolerance_exponent);
  for (const auto& fam : table.families()) {
    auto o = lab::orthogonality_check(table, fam, opt);
    bool orthogonal = o.pass();
    std::string tag = orthogonal ? "structural residual" : "provider not orthogonal";
    if (!orthogonal)
      for (const auto& c : o.counterexamples) rep.findings.push_back("orthogonality: " + c);
    else {
      cons.merge(lab::system_consistency(table, fam, opt));
      inv.merge(lab::contraction_invariance(table, fam, opt));
    }
    orth.checked += o.checked;
    auto [a, b, d, e] = fam;
    for (int c : lab::family_x_range(a, b, d, e)) {
      if (!is_triangle_twice(a, b, c, Algebra::osp) || !is_triangle_twice(c, d, e, Algebra::osp)) continue;
      auto r = lab::residual_delta_sum_rule(Spin(a), Spin(b), Spin(c), Spin(d), Spin(e), table, cfg.precision);
      ++raw_total;
      if (r.max_abs >= tol) {
        ++raw_nonzero;
        rep.findings.push_back(tag + " " + tuple_str({a, b, c, d, e}) + " max |residual| " +
                               format_decimal(r.max_abs, 12));
      }
    }
  }
  rep.parts.push_back(cons);
  rep.parts.push_back(inv);
  rep.findings.insert(rep.findings.begin(), "raw residuals: " + std::to_string(raw_nonzero) + " of " +
                                                std::to_string(raw_total) + " tuples nonzero; " +
                                                std::to_string(orth.checked) + " orthogonality checks");
}

void zeng_suite(VerificationReport& rep, const lab::SixJSuperProvider& table, int bound, const Config& cfg) {
  ScanReport r;
  r.name = "zeng";
  PrecisionScope scope(cfg.precision + 20);
  auto tol = tolerance_from_exponent(cfg.tolerance_exponent);
  for (int J1 = 0; J1 <= bound; ++J1)
    for (int J2 = 0; J2 <= bound; ++J2)
      for (int j1 = 0; j1 <= bound; ++j1)
        for (int j2 = 0; j2 <= bound; ++j2)
          for (int j3 = std::abs(j1 - j2); j3 <= std::min(j1 + j2, bound); ++j3) {
            if (!is_triangle_twice(j1, j2, j3, Algebra::osp)) continue;
            std::string args = tuple_str({J1, J2, j1, j2, j3});
            std::vector<lab::ZengResult> all;
            try {
              all = lab::zeng_all_choices(Spin(J1), Spin(J2), Spin(j1), Spin(j2), Spin(j3), table, cfg.precision);
            } catch (const lab::MissingEntry& e) {
              r.fail(args + " " + e.what());
              continue;
            }
            for (const auto& z : all) {
              if (!z.valid) continue;
              std::string choice = "(L1,L2,l1,l2)=" + tuple_str({z.choice.L1.twice, z.choice.L2.twice,
                                                                 z.choice.l1.twice, z.choice.l2.twice});
              r.check(abs(z.residual) < tol, args + " " + choice + " lhs " + format_decimal(z.lhs, 20) + " rhs " +
                                                 format_decimal(z.rhs, 20));
            }
          }
  rep.parts.push_back(r);
}

}  // namespace

std::vector<Rational> q_values(const Config& cfg) {
  if (!cfg.q.empty()) return cfg.q;
  return {Rational(2), Rational(3, 2), Rational(5, 4)};
}

std::uint64_t VerificationReport::checked() const {
  std::uint64_t n = 0;
  for (const auto& p : parts) n += p.checked;
  return n;
}

std::uint64_t VerificationReport::failed() const {
  std::uint64_t n = 0;
  for (const auto& p : parts) n += p.failed;
  return n;
}

std::vector<std::string> VerificationReport::counterexamples() const {
  std::vector<std::string> out;
  for (const auto& p : parts)
    for (const auto& c : p.counterexamples) out.push_back(p.name + ": " + c);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "su2-sumrule", "q-sumrule",         "poly-oracles",   "conjecture1",   "conjecture2",
      "theorems",    "redmat-identities", "gamma-products", "lab-residuals", "zeng"};
  return names;
}

int default_bound(const std::string& suite) {
  static const std::map<std::string, int> d = {
      {"su2-sumrule", 12}, {"q-sumrule", 8},          {"poly-oracles", 14},  {"conjecture1", 7},
      {"conjecture2", 7},  {"theorems", 20},          {"redmat-identities", 40}, {"gamma-products", 20},
      {"lab-residuals", 4}, {"zeng", 3}};
  auto it = d.find(suite);
  if (it == d.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second;
}

std::unique_ptr<lab::SixJSuperProvider> open_provider(const std::string& source, int bound, unsigned digits) {
  if (source.empty()) throw std::invalid_argument("this command requires --provider <path|experimental>");
  if (source == "experimental") return std::make_unique<lab::ExperimentalProvider>(bound, digits);
  return std::make_unique<lab::FileProvider>(lab::FileProvider::load(source));
}

VerificationReport run_suite(const std::string& name, const Config& cfg) {
  VerificationReport rep;
  rep.suite = name;
  int bound = cfg.twice_max.value_or(default_bound(name));
  rep.twice_max = bound;
  unsigned th = cfg.threads;
  if (name == "su2-sumrule") {
    rep.parts.push_back(su2_sumrule(bound, th));
  } else if (name == "q-sumrule") {
    for (const auto& q : q_values(cfg)) {
      rep.q.push_back(to_string(q));
      rep.parts.push_back(q_sumrule(bound, q, th));
      rep.parts.push_back(omega_check(bound, q));
    }
  } else if (name == "poly-oracles") {
    rep.parts.push_back(osp::closed_form_scan(bound, th));
    rep.parts.push_back(osp::table_scan(bound, th));
    rep.parts.push_back(osp::x0_closed_scan(bound, th));
    rep.parts.push_back(osp::x_top_scan(bound, th));
    rep.parts.push_back(osp::x_recursion_scan(bound, th));
    rep.parts.push_back(osp::symmetry_scan(bound, th));
    rep.parts.push_back(osp::closure_sets_scan(bound, th));
  } else if (name == "conjecture1") {
    rep.parts.push_back(osp::conjecture1_scan(bound, th));
  } else if (name == "conjecture2") {
    rep.parts.push_back(osp::conjecture2_scan(bound, th));
  } else if (name == "theorems") {
    rep.parts.push_back(osp::theorem_zero_checks(osp::TheoremFamily::T1, bound, th));
    rep.parts.push_back(osp::theorem_zero_checks(osp::TheoremFamily::T2, bound, th));
  } else if (name == "redmat-identities") {
    rep.parts.push_back(redmat::identity_suite_A(bound));
    rep.parts.push_back(redmat::alpha_gamma_suite(bound));
    rep.parts.push_back(redmat::phase_class_suite(bound));
    auto g = redmat::generator_conditions();
    rep.parts.push_back(g.report);
    rep.findings.push_back("su(2) c0 = " + g.su2_c0.str());
    rep.findings.push_back("osp(1|2) c0+d0^2 = " + g.osp_u.str());
  } else if (name == "gamma-products") {
    rep.parts.push_back(lab::gamma_product_scan(bound, th));
  } else if (name == "lab-residuals") {
    rep.provider = cfg.provider;
    auto table = open_provider(cfg.provider, bound, cfg.precision);
    lab_residuals(rep, *table, cfg);
  } else if (name == "zeng") {
    rep.provider = cfg.provider;
    // J3 reaches min(J1+J2, j1+j2), so the experimental table needs twice the scan bound.
    auto table = open_provider(cfg.provider, 2 * bound, cfg.precision);
    zeng_suite(rep, *table, bound, cfg);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  for (auto& p : rep.parts)
    if (p.name.empty()) p.name = name;
  return rep;
}

nlohmann::ordered_json to_json(const VerificationReport& r, const Config& cfg) {
  nlohmann::ordered_json j;
  j["schema"] = "superracah.report/1";
  j["suite"] = r.suite;
  j["status"] = r.pass() ? "pass" : "fail";
  nlohmann::ordered_json params;
  params["twice_max"] = r.twice_max;
  params["q"] = r.q;
  params["provider"] = r.provider.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.provider);
  params["precision"] = cfg.precision;
  params["tolerance_exponent"] = cfg.tolerance_exponent;
  params["threads"] = cfg.threads;
  j["parameters"] = params;
  j["checked"] = r.checked();
  j["failed"] = r.failed();
  auto parts = nlohmann::ordered_json::array();
  for (const auto& p : r.parts) {
    nlohmann::ordered_json e;
    e["name"] = p.name;
    e["checked"] = p.checked;
    e["failed"] = p.failed;
    parts.push_back(e);
  }
  j["parts"] = parts;
  j["counterexamples"] = r.counterexamples();
  j["findings"] = r.findings;
  if (r.wall_seconds) j["wall_time_seconds"] = *r.wall_seconds;
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " (2j <= " << r.twice_max << ")";
  if (!r.q.empty()) {
    out << " q in {";
    for (std::size_t i = 0; i < r.q.size(); ++i) out << (i ? "," : "") << r.q[i];
    out << "}";
  }
  if (!r.provider.empty()) out << " provider " << r.provider;
  out << "\n";
  for (const auto& p : r.parts)
    out << "  " << p.name << ": " << p.checked << " checked, " << p.failed << " failed\n";
  for (const auto& c : r.counterexamples()) out << "  counterexample " << c << "\n";
  for (const auto& f : r.findings) out << "  finding " << f << "\n";
  if (r.wall_seconds) out << "  wall time " << *r.wall_seconds << " s\n";
  out << (r.pass() ? "PASS" : "FAIL") << " " << r.checked() << " checked, " << r.failed() << " failed\n";
  return out.str();
}

}  // namespace sr::cli
