#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suites.hpp"
#include "superracah/cache.hpp"
#include "superracah/lab.hpp"
#include "superracah/osp.hpp"
#include "superracah/su2.hpp"
#include "superracah/suq2.hpp"
#include "superracah/zeng.hpp"

using namespace sr;
using json = nlohmann::ordered_json;

namespace {

std::vector<Spin> spins(const std::vector<std::string>& args, std::size_t from, std::size_t n, const std::string& what) {
  if (args.size() != from + n)
    throw std::invalid_argument(what + " expects " + std::to_string(n) + " spin arguments");
  std::vector<Spin> out;
  for (std::size_t i = from; i < args.size(); ++i) out.push_back(parse_spin(args[i]));
  return out;
}

std::string compute_value(const std::string& symbol, const std::vector<std::string>& args, const cli::Config& cfg) {
  if (symbol == "sixj") {
    auto s = spins(args, 0, 6, symbol);
    return su2::sixj(s[0], s[1], s[2], s[3], s[4], s[5]).str();
  }
  if (symbol == "qsixj") {
    auto s = spins(args, 0, 6, symbol);
    suq2::QContext ctx(cfg.q.empty() ? Rational(2) : cfg.q.front());
    return ctx.q_sixj(s[0], s[1], s[2], s[3], s[4], s[5]).str();
  }
  if (symbol == "nabla") {
    auto s = spins(args, 0, 3, symbol);
    return su2::nabla(s[0], s[1], s[2]).str();
  }
  if (symbol == "nablaS") {
    auto s = spins(args, 0, 3, symbol);
    return osp::nablaS(s[0], s[1], s[2]).str();
  }
  if (symbol == "P") {
    auto s = spins(args, 0, 3, symbol);
    return osp::poly_P(s[0], s[1], s[2]).str();
  }
  if (symbol == "Q") {
    auto s = spins(args, 0, 3, symbol);
    return osp::poly_Q(s[0], s[1], s[2]).str();
  }
  if (symbol == "closure") {
    auto s = spins(args, 0, 3, symbol);
    return osp::closure_unified(s[0], s[1], s[2]).polynomial().str();
  }
  if (symbol == "gamma-product") {
    auto s = spins(args, 0, 2, symbol);
    return lab::gamma_product(s[0], s[1]).expand().str();
  }
  if (symbol == "x") {
    if (args.empty()) throw std::invalid_argument("x expects m then three spins");
    int m = std::stoi(args[0]);
    auto s = spins(args, 1, 3, symbol);
    return to_string(osp::x_coeff(m, s[0], s[1], s[2]));
  }
  throw std::invalid_argument("unknown symbol '" + symbol + "'");
}

void emit(const json& j, const std::string& text, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json residual_json(const lab::SumRuleResidual& r, unsigned digits) {
  json j;
  std::vector<std::string> s;
  for (int t : r.spins) s.push_back(Spin(t).str());
  j["spins"] = s;
  j["basis_degree"] = r.basis_degree;
  j["d0_power"] = r.d0_power;
  j["all_exact"] = r.all_exact;
  auto rows = json::array();
  for (const auto& c : r.coeffs) {
    json e;
    e["m"] = c.m;
    e["lhs"] = format_decimal(c.lhs, digits);
    e["rhs"] = format_decimal(c.rhs, digits);
    e["residual"] = c.exact ? c.exact_residual.str() : format_decimal(c.residual, digits);
    e["exact"] = c.exact;
    rows.push_back(e);
  }
  j["coefficients"] = rows;
  j["max_abs"] = format_decimal(r.max_abs, digits);
  return j;
}

json system_json(const lab::IdentificationSystem& sys) {
  json j;
  std::vector<std::string> fixed;
  for (int t : sys.fixed_spins) fixed.push_back(Spin(t).str());
  j["fixed_spins"] = fixed;
  j["basis_degree"] = sys.basis_degree;
  j["d0_power"] = sys.d0_power;
  j["unknowns"] = sys.unknowns;
  auto rows = json::array();
  for (const auto& r : sys.rows) {
    json e;
    e["m"] = r.m;
    json coeffs = json::object();
    for (const auto& [f, v] : r.unknown_coeffs) coeffs[std::to_string(f)] = v.str();
    e["unknown_coeffs"] = coeffs;
    e["rhs"] = r.rhs.str();
    rows.push_back(e);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superracah: Racah-algebra sum rules for su(2), su_q(2) and osp(1|2)"};
  app.require_subcommand(1);
  cli::Config cfg;
  std::string format = "text", cache_path;
  std::vector<std::string> q_text;
  int twice_max = -1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--twice-max", twice_max, "bound on twice-spins")->check(CLI::Range(0, 200));
    sub->add_option("--q", q_text, "deformation parameter, repeatable rational");
    sub->add_option("--provider", cfg.provider, "6-j^S table: TSV path or 'experimental'");
    sub->add_option("--precision", cfg.precision, "significant digits")->check(CLI::Range(20u, 2000u));
    sub->add_option("--tolerance", cfg.tolerance_exponent, "tolerance 10^-N")->check(CLI::Range(1, 1000));
    sub->add_option("--threads", cfg.threads, "worker threads (0: hardware)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", cfg.timing, "include wall time in reports");
    sub->add_option("--cache", cache_path, "persisted P/Q memo file");
  };

  std::string symbol;
  std::vector<std::string> args;
  auto* compute = app.add_subcommand("compute", "evaluate a symbol exactly");
  common(compute);
  compute->add_option("symbol", symbol, "sixj qsixj nabla nablaS P Q closure gamma-product x")->required();
  compute->add_option("args", args, "spins, e.g. 1/2 1 3/2");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(cli::suite_names()));

  auto* lab_cmd = app.add_subcommand("lab", "6-j^S laboratory");
  lab_cmd->require_subcommand(1);
  auto* residual = lab_cmd->add_subcommand("residual", "preliminary Delta^S sum-rule residual for a b c d e");
  common(residual);
  residual->add_option("args", args, "a b c d e")->required();
  auto* emit_sys = lab_cmd->add_subcommand("emit-system", "identification system for a b d e c");
  common(emit_sys);
  emit_sys->add_option("args", args, "a b d e c")->required();

  auto* zeng = app.add_subcommand("zeng", "Zeng relation");
  zeng->require_subcommand(1);
  auto* zeng_check = zeng->add_subcommand("check", "all 16 sublevel choices for J1 J2 j1 j2 j3");
  common(zeng_check);
  zeng_check->add_option("args", args, "J1 J2 j1 j2 j3")->required();

  auto* table = app.add_subcommand("table", "6-j^S tables");
  table->require_subcommand(1);
  std::string table_path;
  auto* validate = table->add_subcommand("validate", "pseudo-orthogonality of a TSV table");
  common(validate);
  validate->add_option("path", table_path, "TSV file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (twice_max >= 0) cfg.twice_max = twice_max;
    for (const auto& t : q_text) {
      Rational q = parse_rational(t);
      if (sgn(q) <= 0) throw std::invalid_argument("--q must be positive");
      cfg.q.push_back(q);
    }
    if (!cache_path.empty()) {
      auto st = load_poly_cache(cache_path);
      if (st == CacheLoad::mismatched) std::cerr << "cache " << cache_path << ": format mismatch, rebuilding\n";
    }
    PrecisionScope scope(cfg.precision + 20);
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    int code = 0;

    if (*compute) {
      std::string v = compute_value(symbol, args, cfg);
      json j;
      j["symbol"] = symbol;
      j["args"] = args;
      if (symbol == "qsixj") j["q"] = to_string(cfg.q.empty() ? Rational(2) : cfg.q.front());
      j["value"] = v;
      emit(j, v + "\n", format);
    } else if (*verify) {
      auto rep = cli::run_suite(suite, cfg);
      if (cfg.timing) rep.wall_seconds = elapsed();
      emit(cli::to_json(rep, cfg), cli::to_text(rep), format);
      code = rep.pass() ? 0 : 1;
    } else if (*residual) {
      auto s = spins(args, 0, 5, "lab residual");
      int bound = cfg.twice_max.value_or(std::max({s[0].twice, s[1].twice, s[2].twice, s[3].twice, s[4].twice}) * 2);
      auto prov = cli::open_provider(cfg.provider, bound, cfg.precision);
      auto r = lab::residual_delta_sum_rule(s[0], s[1], s[2], s[3], s[4], *prov, cfg.precision);
      auto j = residual_json(r, cfg.precision);
      j["provider"] = prov->provenance();
      bool zero = r.max_abs < tolerance_from_exponent(cfg.tolerance_exponent);
      j["status"] = zero ? "zero" : "nonzero";
      std::string text;
      for (const auto& c : r.coeffs)
        text += "m=" + std::to_string(c.m) + " lhs " + format_decimal(c.lhs, 25) + " rhs " + format_decimal(c.rhs, 25) +
                " residual " + (c.exact ? c.exact_residual.str() : format_decimal(c.residual, 25)) + "\n";
      text += std::string(zero ? "ZERO" : "NONZERO") + " max |residual| " + format_decimal(r.max_abs, 25) + "\n";
      emit(j, text, format);
      code = zero ? 0 : 1;
    } else if (*emit_sys) {
      auto s = spins(args, 0, 5, "lab emit-system");
      auto sys = lab::emit_identification_system(s[0], s[1], s[2], s[3], s[4]);
      std::string text;
      for (const auto& r : sys.rows) {
        text += "m=" + std::to_string(r.m) + ":";
        for (const auto& [f, v] : r.unknown_coeffs) text += " [" + Spin(f).str() + "] " + v.str();
        text += " = " + r.rhs.str() + "\n";
      }
      emit(system_json(sys), text, format);
    } else if (*zeng_check) {
      auto s = spins(args, 0, 5, "zeng check");
      int bound = cfg.twice_max.value_or(std::max({s[0].twice + s[1].twice, s[2].twice, s[3].twice, s[4].twice}));
      auto prov = cli::open_provider(cfg.provider, bound, cfg.precision);
      auto all = lab::zeng_all_choices(s[0], s[1], s[2], s[3], s[4], *prov, cfg.precision);
      auto tol = tolerance_from_exponent(cfg.tolerance_exponent);
      json j;
      j["args"] = args;
      j["provider"] = prov->provenance();
      auto rows = json::array();
      std::string text;
      for (const auto& z : all) {
        json e;
        std::string choice = z.choice.L1.str() + "," + z.choice.L2.str() + "," + z.choice.l1.str() + "," +
                             z.choice.l2.str();
        e["choice"] = {z.choice.L1.str(), z.choice.L2.str(), z.choice.l1.str(), z.choice.l2.str()};
        e["valid"] = z.valid;
        if (z.valid) {
          e["l3"] = Spin(z.twice_l3).str();
          e["lhs"] = format_decimal(z.lhs, cfg.precision);
          e["rhs"] = format_decimal(z.rhs, cfg.precision);
          e["residual"] = format_decimal(z.residual, cfg.precision);
          bool ok = abs(z.residual) < tol;
          e["status"] = ok ? "zero" : "nonzero";
          if (!ok) code = 1;
          text += "(" + choice + ") lhs " + format_decimal(z.lhs, 20) + " rhs " + format_decimal(z.rhs, 20) +
                  (ok ? " ZERO\n" : " NONZERO\n");
        } else {
          text += "(" + choice + ") invalid sublevel choice\n";
        }
        rows.push_back(e);
      }
      j["choices"] = rows;
      emit(j, text, format);
    } else if (*validate) {
      auto prov = lab::FileProvider::load(table_path);
      cli::VerificationReport rep;
      rep.suite = "table-validate";
      rep.provider = table_path;
      for (const auto& [k, v] : prov.table()) rep.twice_max = std::max(rep.twice_max, *std::max_element(k.begin(), k.end()));
      rep.parts.push_back(lab::orthogonality_check_all(prov, {cfg.precision, cfg.tolerance_exponent}));
      if (cfg.timing) rep.wall_seconds = elapsed();
      emit(cli::to_json(rep, cfg), cli::to_text(rep), format);
      code = rep.pass() ? 0 : 1;
    }

    std::cerr << "wall time " << elapsed() << " s\n";
    if (!cache_path.empty()) save_poly_cache(cache_path);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
