#pragma once

#include <array>
#include <memory>

#include "superracah/exact.hpp"
#include "superracah/memo.hpp"
#include "superracah/spin.hpp"

namespace sr::suq2 {

// Exact positive rational q; q == 1 routes every q-number to its classical value.
class QContext {
 public:
  explicit QContext(const Rational& q);
  const Rational& q() const { return q_; }
  bool classical() const { return classical_; }

  // Symmetric q-number (q^n - q^-n)/(q - q^-1).
  Rational qnum(int n) const;
  Rational qfact(int n) const;
  Rational qbinom(int n, int k) const;
  Rational series_F(int n) const;
  Rational series_Phi(int n) const;
  Rational phi_factorial(int n) const;
  Rational gamma_q_squared(Spin kappa) const;

  Rational omega_rec(int p, Spin lambda, Spin kappa) const;
  Rational omega_closed(int p, Spin lambda, Spin kappa) const;
  // omega_{a+b-c}^{a,b}
  Rational omega_abc(int ta, int tb, int tc) const;

  Rational delta_q_squared_twice(int a, int b, int c) const;
  Rational racah_q_sum_twice(int a, int b, int c, int d, int e, int f) const;
  ExactValue q_sixj_twice(int a, int b, int c, int d, int e, int f) const;
  ExactValue q_sixj(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) const {
    return q_sixj_twice(a.twice, b.twice, c.twice, d.twice, e.twice, f.twice);
  }
  ExactValue nabla_q(Spin a, Spin b, Spin c) const;

  // omega*omega' LHS minus the recoupled RHS, all multiplied by
  // delta_q(abc)*delta_q(cde) so every term is rational in q.
  Rational check_q_sum_rule(Spin a, Spin b, Spin c, Spin d, Spin e) const;

 private:
  Rational omega_rec_sorted(int p, int l2, int k2) const;
  Rational qpow(int n) const;

  Rational q_;
  bool classical_;
  mutable Memo<int, Rational> qnum_;
  mutable Memo<int, Rational> qfact_;
  mutable Memo<int, Rational> phi_;
  mutable Memo<std::array<int, 3>, Rational, ArrayHash> omega_;
  mutable Memo<std::array<int, 6>, ExactValue, ArrayHash> sixj_;
};

// Free-function forms keyed on a context.
inline Rational qnum(int n, const QContext& ctx) { return ctx.qnum(n); }
Rational series_F(int n, const QContext& ctx);
Rational series_Phi(int n, const QContext& ctx);
Rational phi_factorial(int n, const QContext& ctx);
Rational gamma_q_squared(Spin kappa, const QContext& ctx);
Rational omega_rec(int p, Spin lambda, Spin kappa, const QContext& ctx);
Rational omega_closed(int p, Spin lambda, Spin kappa, const QContext& ctx);
ExactValue q_sixj(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f, const QContext& ctx);
Rational check_q_sum_rule(Spin a, Spin b, Spin c, Spin d, Spin e, const QContext& ctx);

}  // namespace sr::suq2
