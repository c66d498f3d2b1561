#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superracah/exact.hpp"
#include "superracah/poly.hpp"
#include "superracah/report.hpp"
#include "superracah/spin.hpp"

namespace sr::osp {

// (2k+tau_k)/(2k(2k+1)); alpha_k = (-1)^{2k+1} sqrt(2k(2k+1)) * alpha_norm * d0.
Rational alpha_norm(Spin kappa);
BasicHomPoly<ExactValue> alpha_osp(Spin kappa);
// 2k*u - (tau_k/2k)*v, gamma_0 = 0.
BiHomPoly gamma_osp(Spin kappa);
// gamma_hi * ... * gamma_lo in half steps; 1 when lo > hi.
BiHomPoly gamma_chain(Spin hi, Spin lo);

// P^omega(lambda,kappa) for 0 <= omega <= 2 inf(lambda,kappa).
BiHomPoly poly_P(Spin omega, Spin lambda, Spin kappa);
// Same, twice-valued; returns the zero polynomial of the right shape outside the domain.
BiHomPoly poly_P_twice(int w2, int l2, int k2);
Rational x_coeff(int m, Spin omega, Spin lambda, Spin kappa);
Rational x0_closed(int p, Spin lambda, Spin kappa);

// Q^omega(lambda;kappa), set B: kappa = sup, lambda >= 1/2, omega <= lambda - 1/2.
BiHomPoly poly_Q(Spin omega, Spin lambda, Spin kappa);
BiHomPoly poly_Q_twice(int w2, int l2, int k2);

bool in_set_A(Spin omega, Spin lambda, Spin kappa);
bool in_set_B(Spin omega, Spin lambda, Spin kappa);

namespace published {
// Closed forms for omega <= 3; nullopt above.
std::optional<BiHomPoly> closed_P(Spin omega, Spin lambda, Spin kappa);
// x_0^{p+1/2} for p = 0..3 in the four parity cases.
Rational table_x0_half(int p, Spin lambda, Spin kappa);
}  // namespace published

// Supertriangles with integral-part brackets on every factorial argument.
Rational nablaS_squared_twice(int a, int b, int c);
ExactValue nablaS(Spin a, Spin b, Spin c);
ExactValue deltaS(Spin a, Spin b, Spin c);

// [S^a x S^b]^c = sign * gamma-chain * P * deltaS / E  * S^c.
struct ClosureCoefficient {
  int sign = 1;
  Spin gamma_hi, gamma_lo;  // empty when gamma_lo > gamma_hi
  Spin pseudo_degree;
  BiHomPoly poly;           // P^pi(inf(a,b), inf(sup(a,b),c))
  ExactValue e_norm;
  ExactValue triangle;      // deltaS(a,b,c)

  bool gamma_empty() const { return gamma_lo > gamma_hi; }
  ExactValue scalar() const { return ExactValue(sign) * triangle / e_norm; }
  BiHomPoly rational_part() const { return gamma_chain(gamma_hi, gamma_lo) * poly; }
  BasicHomPoly<ExactValue> polynomial() const;
  bool is_zero() const { return poly.is_zero(); }
  std::string str() const;
};

ClosureCoefficient closure_unified(Spin a, Spin b, Spin c);
ClosureCoefficient closure_unified_twice(int a, int b, int c);

// Set-A form: sign * P^pi(a,b) * deltaS / E with c >= a, b.
BasicHomPoly<ExactValue> closure_set_A(Spin a, Spin b, Spin c);
// Set-B form: sign * gamma-chain * Q^pi(inf;sup) * deltaS / E with c <= inf.
BasicHomPoly<ExactValue> closure_set_B(Spin a, Spin b, Spin c);

enum class TheoremFamily { T1, T2 };
bool in_theorem_family(TheoremFamily f, Spin a, Spin b, Spin c);

ScanReport theorem_zero_checks(TheoremFamily family, int bound, unsigned threads = 1);
ScanReport conjecture1_scan(int bound, unsigned threads = 1);
ScanReport conjecture2_scan(int bound, unsigned threads = 1);

// Property scans over twice-values <= bound.
ScanReport closed_form_scan(int bound, unsigned threads = 1);
ScanReport table_scan(int bound, unsigned threads = 1);
ScanReport x0_closed_scan(int bound, unsigned threads = 1);
ScanReport x_top_scan(int bound, unsigned threads = 1);
ScanReport x_recursion_scan(int bound, unsigned threads = 1);
ScanReport symmetry_scan(int bound, unsigned threads = 1);
ScanReport closure_sets_scan(int bound, unsigned threads = 1);

struct PolyCacheEntry {
  char kind;  // 'P' or 'Q'
  std::array<int, 3> key;
  BiHomPoly poly;
};
std::vector<PolyCacheEntry> export_poly_cache();
void import_poly_cache(const std::vector<PolyCacheEntry>& entries);
void clear_poly_cache();

}  // namespace sr::osp
