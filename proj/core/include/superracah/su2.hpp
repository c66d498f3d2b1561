#pragma once

#include <array>
#include <vector>

#include "superracah/exact.hpp"
#include "superracah/spin.hpp"

namespace sr::su2 {

enum class TriangleKind { nabla, delta };

struct TriangleCoefficient {
  ExactValue value;
  TriangleKind kind;
};

// Twice-value entry points are used by the hot loops; Spin overloads wrap them.
Rational delta_squared_twice(int a, int b, int c);  // (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
ExactValue nabla(Spin a, Spin b, Spin c);
ExactValue delta(Spin a, Spin b, Spin c);
TriangleCoefficient triangle(Spin a, Spin b, Spin c, TriangleKind kind);

// Single-sum Racah series without the four triangle factors; 0 when any triad fails.
Rational racah_sum_twice(int a, int b, int c, int d, int e, int f);
ExactValue sixj(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f);
ExactValue sixj_twice(int a, int b, int c, int d, int e, int f);
// Lexicographically smallest of the 24 tetrahedral images of {a b c; d e f}.
std::array<int, 6> sixj_canonical(const std::array<int, 6>& t);

// A value of the form magnitude * c0^exponent.
struct C0Monomial {
  int c0_exponent = 0;
  ExactValue magnitude;
};

C0Monomial gamma_su2(Spin kappa);
BigInt beta_coeff(int p, int two_lambda);
C0Monomial closure_coeff_su2(Spin a, Spin b, Spin c);

// LHS - RHS of the triangle sum rule after multiplying through by
// delta(abc)*delta(cde); exact zero when the identity holds.
Rational check_sum_rule_su2(Spin a, Spin b, Spin c, Spin d, Spin e);
Rational sum_rule_residual_twice(int a, int b, int c, int d, int e);

struct Quintuple {
  int a, b, c, d, e;
};
// All (a,b,c,d,e) with su(2) triangles (abc),(cde) and twice-values <= twice_max.
std::vector<Quintuple> admissible_quintuples(int twice_max);

}  // namespace sr::su2
