#include "superracah/provider.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sr::lab {

std::string key_str(const SixKey& k) {
  return "{" + Spin(k[0]).str() + " " + Spin(k[1]).str() + " " + Spin(k[2]).str() + "; " + Spin(k[3]).str() + " " +
         Spin(k[4]).str() + " " + Spin(k[5]).str() + "}";
}

bool six_admissible(const SixKey& k) {
  auto t = [](int a, int b, int c) { return is_triangle_twice(a, b, c, Algebra::osp); };
  return t(k[0], k[1], k[2]) && t(k[2], k[3], k[4]) && t(k[1], k[3], k[5]) && t(k[0], k[5], k[4]);
}

ProviderValue ProviderValue::of_exact(const ExactValue& v) {
  ProviderValue p;
  p.exact = v;
  return p;
}

ProviderValue ProviderValue::of_decimal(const Decimal& d, unsigned digits) {
  ProviderValue p;
  p.text = format_decimal(d, digits);
  return p;
}

Decimal ProviderValue::decimal() const {
  if (exact) return to_decimal(*exact);
  return Decimal(text);
}

ProviderValue SixJSuperProvider::get(const SixKey& key) const {
  if (!six_admissible(key)) return ProviderValue::of_exact(ExactValue());
  auto v = find(key);
  if (!v) throw MissingEntry("provider (" + provenance() + ") has no entry for " + key_str(key));
  return *v;
}

std::optional<ProviderValue> FileProvider::find(const SixKey& key) const {
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::array<int, 4>> FileProvider::families() const {
  std::set<std::array<int, 4>> fam;
  for (const auto& [k, v] : table_) fam.insert({k[0], k[1], k[3], k[4]});
  return {fam.begin(), fam.end()};
}

FileProvider FileProvider::parse(const std::string& text, const std::string& origin) {
  FileProvider p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> fields;
    std::string f;
    while (ls >> f) fields.push_back(f);
    if (fields.empty()) continue;
    auto where = origin + ":" + std::to_string(lineno);
    if (fields.size() != 7) throw DomainError(where + ": expected 6 twice-spins and a value");
    SixKey key;
    for (int i = 0; i < 6; ++i) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(fields[i], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != fields[i].size() || v < 0) throw DomainError(where + ": bad twice-spin '" + fields[i] + "'");
      key[i] = v;
    }
    ProviderValue val;
    try {
      if (looks_exact(fields[6])) {
        val = ProviderValue::of_exact(parse_exact(fields[6]));
      } else {
        Decimal d(fields[6]);
        val.text = fields[6];
      }
    } catch (const std::exception& e) {
      throw DomainError(where + ": bad value '" + fields[6] + "'");
    }
    if (p.table_.count(key)) throw DomainError(where + ": duplicate entry " + key_str(key));
    p.table_[key] = std::move(val);
  }
  return p;
}

FileProvider FileProvider::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open provider file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string to_tsv(const std::map<SixKey, ProviderValue>& table, const std::string& header) {
  std::ostringstream out;
  if (!header.empty()) out << "# " << header << "\n";
  for (const auto& [k, v] : table) {
    for (int x : k) out << x << '\t';
    out << v.str() << '\n';
  }
  return out.str();
}

void write_tsv(const std::string& path, const std::map<SixKey, ProviderValue>& table, const std::string& header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << to_tsv(table, header);
}

std::vector<int> family_x_range(int a, int b, int d, int e) {
  std::vector<int> out;
  for (int x = std::abs(a - b); x <= a + b; ++x)
    if (is_triangle_twice(x, d, e, Algebra::osp)) out.push_back(x);
  return out;
}

std::vector<int> family_f_range(int a, int b, int d, int e) {
  std::vector<int> out;
  for (int f = std::abs(b - d); f <= b + d; ++f)
    if (is_triangle_twice(a, f, e, Algebra::osp)) out.push_back(f);
  return out;
}

}  // namespace sr::lab
