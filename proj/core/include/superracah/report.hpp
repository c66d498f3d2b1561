#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superracah/parallel.hpp"

namespace sr {

// Outcome of an exhaustive check. Counterexamples are kept in input order.
struct ScanReport {
  static constexpr std::size_t kMaxStored = 1000;

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> counterexamples;

  bool pass() const { return failed == 0; }
  void ok() { ++checked; }
  void fail(std::string what) {
    ++checked;
    ++failed;
    if (counterexamples.size() < kMaxStored) counterexamples.push_back(std::move(what));
  }
  void check(bool good, const std::string& what) { good ? ok() : fail(what); }
  void merge(const ScanReport& o) {
    checked += o.checked;
    failed += o.failed;
    for (const auto& c : o.counterexamples)
      if (counterexamples.size() < kMaxStored) counterexamples.push_back(c);
  }
};

// Runs body(i, partial) for every i and merges the partials by index.
template <class Fn>
ScanReport run_scan(std::string name, std::size_t n, unsigned threads, Fn&& body) {
  std::vector<ScanReport> parts(n);
  parallel_for(n, threads, [&](std::size_t i) { body(i, parts[i]); });
  ScanReport out;
  out.name = std::move(name);
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace sr
