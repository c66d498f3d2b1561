#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "superracah/exact.hpp"
#include "superracah/provider.hpp"
#include "superracah/report.hpp"

namespace sr::cli {

struct Config {
  std::optional<int> twice_max;  // suite default when unset
  std::vector<Rational> q;       // empty: {2, 3/2, 5/4}
  std::string provider;          // TSV path or "experimental"
  unsigned precision = 60;
  int tolerance_exponent = 30;
  unsigned threads = 1;
  bool timing = false;
};

struct VerificationReport {
  std::string suite;
  int twice_max = 0;
  std::vector<std::string> q;
  std::string provider;
  std::vector<ScanReport> parts;
  std::vector<std::string> findings;
  std::optional<double> wall_seconds;

  std::uint64_t checked() const;
  std::uint64_t failed() const;
  bool pass() const { return failed() == 0; }
  std::vector<std::string> counterexamples() const;
};

const std::vector<std::string>& suite_names();
int default_bound(const std::string& suite);

// Throws std::invalid_argument for an unknown suite or a missing provider.
VerificationReport run_suite(const std::string& name, const Config& cfg);

nlohmann::ordered_json to_json(const VerificationReport& r, const Config& cfg);
std::string to_text(const VerificationReport& r);

// "experimental" builds the recoupling provider up to `bound`; anything else is a TSV path.
std::unique_ptr<lab::SixJSuperProvider> open_provider(const std::string& source, int bound, unsigned digits);

std::vector<Rational> q_values(const Config& cfg);

}  // namespace sr::cli
