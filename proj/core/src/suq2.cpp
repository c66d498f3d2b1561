#include "superracah/suq2.hpp"

#include <algorithm>
#include <vector>

#include "superracah/su2.hpp"

namespace sr::suq2 {

QContext::QContext(const Rational& q) : q_(q), classical_(q == 1) {
  if (sgn(q_) <= 0) throw DomainError("q must be a positive rational");
  q_.canonicalize();
}

Rational QContext::qpow(int n) const {
  Rational r = 1;
  Rational base = n >= 0 ? q_ : Rational(1 / q_);
  for (int i = 0; i < std::abs(n); ++i) r *= base;
  return r;
}

Rational QContext::qnum(int n) const {
  if (classical_) return n;
  if (n < 0) return -qnum(-n);
  return qnum_.get_or_compute(n, [&] {
    Rational r = (qpow(n) - qpow(-n)) / (q_ - 1 / q_);
    return r;
  });
}

Rational QContext::qfact(int n) const {
  if (n < 0) throw DomainError("q-factorial of negative argument");
  return qfact_.get_or_compute(n, [&] {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= qnum(i);
    return r;
  });
}

Rational QContext::qbinom(int n, int k) const {
  if (k < 0 || k > n) return 0;
  return qfact(n) / (qfact(k) * qfact(n - k));
}

Rational QContext::series_F(int n) const {
  if (n < 1) throw DomainError("series_F needs n >= 1");
  Rational s = 0;
  for (int k = 1; k <= n; ++k) s += qnum(k);
  return s;
}

Rational QContext::series_Phi(int n) const {
  if (n < 1) throw DomainError("series_Phi needs n >= 1");
  if (classical_) return 1;
  return phi_.get_or_compute(n, [&] { return Rational(qnum(2) * series_F(n) / (qnum(n + 1) * qnum(n))); });
}

Rational QContext::phi_factorial(int n) const {
  if (n < 0) throw DomainError("phi_factorial needs n >= 0");
  Rational r = 1;
  for (int k = 1; k <= n; ++k) r *= series_Phi(k);
  return r;
}

Rational QContext::gamma_q_squared(Spin kappa) const {
  if (kappa.twice == 0) throw DomainError("gamma_q_squared needs kappa >= 1/2");
  int n = kappa.twice;
  Rational phi = series_Phi(n);
  return qnum(n + 1) * qnum(n) / qnum(2) * phi * phi;
}

Rational QContext::omega_rec_sorted(int p, int l2, int k2) const {
  if (p == 0) return 1;
  if (p > l2) throw DomainError("omega: p out of range [0, 2*inf(lambda,kappa)]");
  return omega_.get_or_compute({p, l2, k2}, [&] {
    Rational r = series_Phi(k2) * qbinom(l2 - 1, p - 1) * omega_rec(p - 1, Spin(l2 - 1), Spin(k2 - 1));
    if (p <= l2 - 1) r += qbinom(l2 - 1, p) * omega_rec(p, Spin(l2 - 1), Spin(k2 + 1));
    return Rational(r / qbinom(l2, p));
  });
}

Rational QContext::omega_rec(int p, Spin lambda, Spin kappa) const {
  int l2 = std::min(lambda.twice, kappa.twice), k2 = std::max(lambda.twice, kappa.twice);
  if (p < 0 || p > l2) throw DomainError("omega_rec: p out of range [0, 2*inf(lambda,kappa)]");
  return omega_rec_sorted(p, l2, k2);
}

Rational QContext::omega_closed(int p, Spin lambda, Spin kappa) const {
  int l2 = std::min(lambda.twice, kappa.twice), k2 = std::max(lambda.twice, kappa.twice);
  if (p < 1 || p > l2) throw DomainError("omega_closed: p out of range [1, 2*inf(lambda,kappa)]");
  int top = l2 - p;
  // Nested sums over m_1 <= m_2 <= ... <= m_p in [0, top].
  std::vector<Rational> level(top + 1);
  for (int m = 0; m <= top; ++m) level[m] = series_Phi(k2 + m);
  for (int l = 1; l < p; ++l) {
    std::vector<Rational> next(top + 1);
    Rational prefix = 0;
    for (int m = 0; m <= top; ++m) {
      prefix += level[m];
      next[m] = prefix * series_Phi(k2 + m - l);
    }
    level.swap(next);
  }
  Rational total = 0;
  for (auto& x : level) total += x;
  return total / qbinom(l2, p);
}

Rational QContext::omega_abc(int ta, int tb, int tc) const {
  return omega_rec((ta + tb - tc) / 2, Spin(ta), Spin(tb));
}

Rational QContext::delta_q_squared_twice(int a, int b, int c) const {
  if (!is_triangle_twice(a, b, c, Algebra::su2)) throw DomainError("q-triangle violation");
  return qfact((a + b - c) / 2) * qfact((a - b + c) / 2) * qfact((-a + b + c) / 2) / qfact((a + b + c) / 2 + 1);
}

ExactValue QContext::nabla_q(Spin a, Spin b, Spin c) const {
  return ExactValue::sqrt_of(1 / delta_q_squared_twice(a.twice, b.twice, c.twice));
}

Rational QContext::racah_q_sum_twice(int a, int b, int c, int d, int e, int f) const {
  const int tri[4][3] = {{a, b, c}, {a, e, f}, {d, b, f}, {d, e, c}};
  for (auto& t : tri)
    if (!is_triangle_twice(t[0], t[1], t[2], Algebra::su2)) return 0;
  int alpha[4] = {a + b + c, a + e + f, d + b + f, d + e + c};
  int beta[3] = {a + b + d + e, b + c + e + f, c + a + f + d};
  int lo = *std::max_element(alpha, alpha + 4);
  int hi = *std::min_element(beta, beta + 3);
  Rational sum = 0;
  for (int t2 = lo; t2 <= hi; t2 += 2) {
    int t = t2 / 2;
    Rational den = 1;
    for (int x : alpha) den *= qfact((t2 - x) / 2);
    for (int x : beta) den *= qfact((x - t2) / 2);
    Rational term = qfact(t + 1) / den;
    if (t & 1) sum -= term;
    else sum += term;
  }
  return sum;
}

ExactValue QContext::q_sixj_twice(int a, int b, int c, int d, int e, int f) const {
  if (classical_) return su2::sixj_twice(a, b, c, d, e, f);
  auto key = su2::sixj_canonical({a, b, c, d, e, f});
  return sixj_.get_or_compute(key, [&] {
    auto [ka, kb, kc, kd, ke, kf] = key;
    Rational r = racah_q_sum_twice(ka, kb, kc, kd, ke, kf);
    if (sgn(r) == 0) return ExactValue();
    Rational d2 = delta_q_squared_twice(ka, kb, kc) * delta_q_squared_twice(ka, ke, kf) *
                  delta_q_squared_twice(kd, kb, kf) * delta_q_squared_twice(kd, ke, kc);
    return ExactValue::make(r, d2);
  });
}

Rational QContext::check_q_sum_rule(Spin sa, Spin sb, Spin sc, Spin sd, Spin se) const {
  int a = sa.twice, b = sb.twice, c = sc.twice, d = sd.twice, e = se.twice;
  if (!is_triangle_twice(a, b, c, Algebra::su2) || !is_triangle_twice(c, d, e, Algebra::su2))
    throw DomainError("q sum rule: triangles (abc),(cde) must hold");
  Rational lhs = omega_abc(a, b, c) * omega_abc(c, d, e);
  Rational pre = delta_q_squared_twice(a, b, c) * delta_q_squared_twice(c, d, e) * qnum(c + 1);
  Rational acc = 0;
  int lo = std::max(std::abs(b - d), std::abs(a - e));
  int hi = std::min(b + d, a + e);
  for (int f = lo; f <= hi; f += 2) {
    Rational r = racah_q_sum_twice(a, b, c, d, e, f);
    if (sgn(r) == 0) continue;
    acc += omega_abc(b, d, f) * omega_abc(a, f, e) * r;
  }
  int phase = sign_of_exponent((a + b + d + e) / 2);
  return lhs - phase * pre * acc;
}

Rational series_F(int n, const QContext& ctx) { return ctx.series_F(n); }
Rational series_Phi(int n, const QContext& ctx) { return ctx.series_Phi(n); }
Rational phi_factorial(int n, const QContext& ctx) { return ctx.phi_factorial(n); }
Rational gamma_q_squared(Spin kappa, const QContext& ctx) { return ctx.gamma_q_squared(kappa); }
Rational omega_rec(int p, Spin lambda, Spin kappa, const QContext& ctx) { return ctx.omega_rec(p, lambda, kappa); }
Rational omega_closed(int p, Spin lambda, Spin kappa, const QContext& ctx) {
  return ctx.omega_closed(p, lambda, kappa);
}
ExactValue q_sixj(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f, const QContext& ctx) {
  return ctx.q_sixj(a, b, c, d, e, f);
}
Rational check_q_sum_rule(Spin a, Spin b, Spin c, Spin d, Spin e, const QContext& ctx) {
  return ctx.check_q_sum_rule(a, b, c, d, e);
}

}  // namespace sr::suq2
