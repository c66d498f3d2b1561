#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "superracah/decimal.hpp"
#include "superracah/provider.hpp"

namespace sr::lab {

// 6-j^S symbols computed numerically by graded recoupling of three osp(1|2)
// irreps. Conventions (local, not the reference phases):
//   states of irrep j: even L=j with m=j..-j, then odd L=j-1/2;
//   F+|j m> = 1/2 sqrt(j-m), F+|j-1/2 m> = 1/2 sqrt(j+m+1/2),
//   F-|j m> = 1/2 sqrt(j+m), F-|j-1/2 m> = -1/2 sqrt(j-m+1/2);
//   coproduct F (x) 1 + P (x) F; highest-weight coupling vectors of unit
//   Euclidean norm with the first nonzero coefficient positive; composite maps
//   normalized by the invariant form; {a b x; d e f}^S = (-1)^{[a+b+x]+[x+d+e]+2x} U_xf.
class ExperimentalProvider : public SixJSuperProvider {
 public:
  // Families with all four twice-spins <= twice_max; values rendered with `digits` significant digits.
  explicit ExperimentalProvider(int twice_max, unsigned digits = kDefaultDigits);
  ~ExperimentalProvider() override;

  std::string provenance() const override { return "experimental-recoupling"; }
  std::optional<ProviderValue> find(const SixKey& key) const override;
  std::vector<std::array<int, 4>> families() const override;

  int twice_max() const { return twice_max_; }
  unsigned digits() const { return digits_; }
  // Every admissible symbol of every family, for TSV export.
  std::map<SixKey, ProviderValue> materialize() const;

 private:
  using FamilyTable = std::map<std::array<int, 2>, ProviderValue>;  // (x, f)
  const FamilyTable& family(const std::array<int, 4>& fam) const;

  int twice_max_;
  unsigned digits_;
  mutable std::mutex mu_;
  mutable std::map<std::array<int, 4>, std::shared_ptr<const FamilyTable>> cache_;
};

// Raw recoupling data of one family: U (rows x, columns f) and the invariant-form signs.
struct RecouplingMatrix {
  std::vector<int> xs, fs;
  std::vector<std::vector<Decimal>> U;
  std::vector<int> s1, s2;
  Decimal fit_residual;
};
RecouplingMatrix recoupling_matrix(int a, int b, int d, int e, unsigned digits);

}  // namespace sr::lab
