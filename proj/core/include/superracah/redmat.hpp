#pragma once

#include <string>
#include <vector>

#include "superracah/exact.hpp"
#include "superracah/poly.hpp"
#include "superracah/report.hpp"
#include "superracah/spin.hpp"

namespace sr::redmat {

using SymPoly = BasicHomPoly<ExactValue>;

// (j||S^1/2||j-1/2) = (-1)^eps_r |.|, (j-1/2||S^1/2||j) = (-1)^eps_l |.|.
struct PhaseClass {
  int eps_r = 0;
  int eps_l = 1;
  // +1: elements are +-sqrt(gamma) (c0 > 0); -1: +-sqrt(-gamma) (c0 + d0^2 < 0).
  int sigma() const { return ((eps_r + eps_l) & 1) ? 1 : -1; }
};

// factor * prod_k sqrt(sigma * gamma_k)
struct ReducedElement {
  Spin bra, ket, op_rank;
  SymPoly factor;
  std::vector<Spin> sqrt_gammas;
  int sigma = 1;

  bool is_zero() const { return factor.is_zero(); }
  // Pairs of equal sqrt factors are folded back into the polynomial part.
  ReducedElement operator*(const ReducedElement& o) const;
  std::string str() const;
  // Exact square, a polynomial; requires no repeated radicals.
  SymPoly squared() const;
};

ReducedElement rme_S_half(Spin j, Spin jp, PhaseClass phase = {});
ReducedElement rme_S_one(Spin j, Spin jp, PhaseClass phase = {});

// True when every sqrt(sigma*gamma_k), 2k <= j_bound, is real at the sample point.
bool phase_class_real(PhaseClass phase, const Rational& c0, const Rational& d0, int j_bound);

// Symbolic checks for all 2j <= j_bound.
ScanReport identity_suite_A(int j_bound);
// alpha recursion squared and gamma from alpha, 2k <= k_bound.
ScanReport alpha_gamma_suite(int k_bound);
// Realness and product sign in both regimes at exact sample points.
ScanReport phase_class_suite(int j_bound);

struct GeneratorConditions {
  ExactValue su2_c0;   // from [J^1 x J^1]^1 = -(1/sqrt2) J^1
  ExactValue osp_u;    // from [J^1 x J^1]^1 = -(1/2)sqrt(3/2) J^1
  ExactValue osp_closure_111;
  ScanReport report;
};
GeneratorConditions generator_conditions();

}  // namespace sr::redmat
