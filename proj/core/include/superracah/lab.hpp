#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superracah/decimal.hpp"
#include "superracah/exact.hpp"
#include "superracah/poly.hpp"
#include "superracah/provider.hpp"
#include "superracah/report.hpp"
#include "superracah/spin.hpp"

namespace sr::lab {

using SymPoly = BasicHomPoly<ExactValue>;

// P(abc)*P(cde) with the d0 prefactors stripped.
struct RPoly {
  BiHomPoly base;
  int stripped_d0 = 0;
  std::vector<Rational> y;  // convolution of the two x lists
  BiHomPoly with_d0() const;
};

RPoly poly_R(Spin a, Spin b, Spin c, Spin d, Spin e);
// Closures (x1 y1 z1) and (x2 y2 z2), twice-values.
RPoly poly_R_pair(const std::array<int, 3>& t1, const std::array<int, 3>& t2);

enum class DegreeBranch { d0_frontal, both_integral, both_half_integral };
std::string branch_name(DegreeBranch b);

struct Degrees {
  DegreeBranch branch;
  int omega_published;   // [a+b+d+e] + 2c - 2sup - 2sup' - tau_c (1 - tau_{a+b+d+e})
  int omega_structural;  // [omega] + [omega']
  std::optional<int> omega_f_published;
  std::optional<int> omega_f_structural;
};
Degrees degrees(Spin a, Spin b, Spin c, Spin d, Spin e, std::optional<Spin> f = std::nullopt);

int phase_phi(Spin a, Spin b, Spin d, Spin e, Spin c);

// prod_{l=[k<]}^{[k>-1/2]} ((2l+1)^2 u - v)
struct ZPoly {
  BiHomPoly base;
  int degree() const { return base.degree(); }
};

struct GammaProduct {
  bool empty = false;
  Rational prefactor = 1;
  int u_power = 0;
  ZPoly z;
  BiHomPoly expand() const;
};
GammaProduct gamma_product(Spin k_hi, Spin k_lo);
ScanReport gamma_product_scan(int bound, unsigned threads = 1);

std::pair<ExactValue, ExactValue> supertriangles(Spin a, Spin b, Spin c);  // (nablaS, deltaS)

// Both sides of the preliminary rule, per binomial coefficient m of
// d0^tau * sum_m (.) u^{D-m} v^m.
struct CoefficientResidual {
  int m = 0;
  bool exact = false;
  SurdSum exact_residual;  // valid when exact
  Decimal lhs, rhs, residual;
};

struct SumRuleResidual {
  std::array<int, 5> spins{};  // a b c d e
  int basis_degree = 0;
  int d0_power = 0;
  std::vector<CoefficientResidual> coeffs;
  bool all_exact = true;
  Decimal max_abs;
};

SumRuleResidual residual_delta_sum_rule(Spin a, Spin b, Spin c, Spin d, Spin e, const SixJSuperProvider& provider,
                                        unsigned digits = kDefaultDigits);

// Left side, and the per-f products multiplying each 6-j^S, through the closure coefficients.
SymPoly sum_rule_lhs(int a, int b, int c, int d, int e);
SymPoly sum_rule_term(int a, int b, int d, int e, int f);
int sum_rule_weight(int a, int b, int d, int e);

struct IdentificationRow {
  int m = 0;
  std::map<int, ExactValue> unknown_coeffs;  // keyed by twice f
  ExactValue rhs;
};

struct IdentificationSystem {
  std::array<int, 5> fixed_spins{};  // a b d e c
  int basis_degree = 0;
  int d0_power = 0;
  std::vector<int> unknowns;  // twice f ascending
  std::vector<IdentificationRow> rows;
};

IdentificationSystem emit_identification_system(Spin a, Spin b, Spin d, Spin e, Spin c);
// rhs - sum_f coeff_f * value_f for each row.
std::vector<Decimal> plug_into_system(const IdentificationSystem& sys, const SixJSuperProvider& provider,
                                      unsigned digits = kDefaultDigits);

struct OrthogonalityOptions {
  unsigned digits = kDefaultDigits;
  int tolerance_exponent = kDefaultToleranceExponent;
};

ScanReport orthogonality_check(const SixJSuperProvider& table, const std::array<int, 4>& family,
                               OrthogonalityOptions opt = {});
ScanReport orthogonality_check_all(const SixJSuperProvider& table, OrthogonalityOptions opt = {});

// sum_c {a b c; d e f'} r(c) against sum_c {a b c; d e f'} LHS(c) - S_f' T(f') for every f'.
ScanReport contraction_invariance(const SixJSuperProvider& table, const std::array<int, 4>& family,
                                  OrthogonalityOptions opt = {});

// Residuals from residual_delta_sum_rule against those from the emitted system.
ScanReport system_consistency(const SixJSuperProvider& table, const std::array<int, 4>& family,
                              OrthogonalityOptions opt = {});

ScanReport poly_R_scan(int bound, unsigned threads = 1);
ScanReport degree_scan(int bound, unsigned threads = 1);

}  // namespace sr::lab
