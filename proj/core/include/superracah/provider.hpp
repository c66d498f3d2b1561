#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superracah/decimal.hpp"
#include "superracah/exact.hpp"

namespace sr::lab {

// Twice-values of {a b c; d e f}^S; triads (abc), (cde), (bdf), (afe).
using SixKey = std::array<int, 6>;

std::string key_str(const SixKey& k);
bool six_admissible(const SixKey& k);

struct ProviderValue {
  std::optional<ExactValue> exact;
  std::string text;  // decimal rendering when not exact

  static ProviderValue of_exact(const ExactValue& v);
  static ProviderValue of_decimal(const Decimal& d, unsigned digits);
  Decimal decimal() const;
  std::string str() const { return exact ? exact->str() : text; }
};

class MissingEntry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SixJSuperProvider {
 public:
  virtual ~SixJSuperProvider() = default;
  virtual std::string provenance() const = 0;
  virtual std::optional<ProviderValue> find(const SixKey& key) const = 0;
  // Symbols off the triangle rules are 0; an admissible symbol without an entry throws MissingEntry.
  ProviderValue get(const SixKey& key) const;
  // Families (a,b,d,e) the provider knows about, ascending.
  virtual std::vector<std::array<int, 4>> families() const = 0;
};

// Table read from TSV: six twice-spins then "r/s", "r/s*sqrt(p/q)" or a decimal; '#' starts a comment.
class FileProvider : public SixJSuperProvider {
 public:
  static FileProvider load(const std::string& path);
  static FileProvider parse(const std::string& text, const std::string& origin = "<string>");
  void set(const SixKey& key, ProviderValue v) { table_[key] = std::move(v); }

  std::string provenance() const override { return "file"; }
  std::optional<ProviderValue> find(const SixKey& key) const override;
  std::vector<std::array<int, 4>> families() const override;
  const std::map<SixKey, ProviderValue>& table() const { return table_; }

 private:
  std::map<SixKey, ProviderValue> table_;
};

std::string to_tsv(const std::map<SixKey, ProviderValue>& table, const std::string& header = "");
void write_tsv(const std::string& path, const std::map<SixKey, ProviderValue>& table, const std::string& header = "");

// Admissible x (the c slot) and f for a family (a,b,d,e), ascending.
std::vector<int> family_x_range(int a, int b, int d, int e);
std::vector<int> family_f_range(int a, int b, int d, int e);

}  // namespace sr::lab
