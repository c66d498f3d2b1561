#pragma once

#include <array>
#include <string>
#include <vector>

#include "superracah/decimal.hpp"
#include "superracah/exact.hpp"
#include "superracah/provider.hpp"
#include "superracah/spin.hpp"

namespace sr::lab {

// Sublevels L_i in {J_i, J_i - 1/2}, l_i in {j_i, j_i - 1/2}.
struct ZengChoice {
  Spin L1, L2, l1, l2;
};

struct ZengTerm {
  int twice_J3 = 0;
  int twice_L3 = 0;
  Decimal value;
};

struct ZengResult {
  ZengChoice choice;
  bool valid = false;
  int twice_l3 = -1;
  std::vector<ZengTerm> terms;  // left side, one per J3
  Decimal lhs, rhs, residual;
};

// |[j1 j2 j3; l1 l2 l3]| * nabla(l1 l2 l3); 0 off either triangle rule.
ExactValue scalar_factor_nabla(Spin j1, Spin j2, Spin j3, Spin l1, Spin l2, Spin l3);

// Both sublevel expressions for l3 (and L3) agree.
bool zeng_choice_valid(Spin J1, Spin J2, Spin j1, Spin j2, const ZengChoice& c);

// Sum over J3 against the fixed-l3 right side; {J1 j2 j3; j1 J2 J3}^S from the provider.
// Throws DomainError for an invalid choice.
ZengResult zeng_relation_check(Spin J1, Spin J2, Spin j1, Spin j2, Spin j3, const ZengChoice& choice,
                               const SixJSuperProvider& provider, unsigned digits = kDefaultDigits);

// All 16 combinations, ordered (L1, L2, l1, l2) with the top sublevel first; invalid ones carry valid=false.
std::vector<ZengResult> zeng_all_choices(Spin J1, Spin J2, Spin j1, Spin j2, Spin j3,
                                         const SixJSuperProvider& provider, unsigned digits = kDefaultDigits);

int zeng_psi(int J1, int J2, int J3, int j1, int j2, int j3, int L1, int L2, int l1, int l2);
int zeng_phi(int J1, int J2, int j1, int j2, int j3, int L1, int L2, int l1, int l2);

}  // namespace sr::lab
