#include "superracah/su2.hpp"

#include <algorithm>

#include "superracah/memo.hpp"

namespace sr::su2 {

namespace {

void require_triangle(int a, int b, int c, const char* what) {
  if (!is_triangle_twice(a, b, c, Algebra::su2))
    throw DomainError(std::string(what) + ": (" + Spin(a).str() + "," + Spin(b).str() + "," + Spin(c).str() +
                      ") violates the su(2) triangle rule");
}

Memo<std::array<int, 6>, ExactValue, ArrayHash>& sixj_memo() {
  static Memo<std::array<int, 6>, ExactValue, ArrayHash> memo;
  return memo;
}

}  // namespace

Rational delta_squared_twice(int a, int b, int c) {
  require_triangle(a, b, c, "delta");
  Rational r(factorial((a + b - c) / 2) * factorial((a - b + c) / 2) * factorial((-a + b + c) / 2),
             factorial((a + b + c) / 2 + 1));
  r.canonicalize();
  return r;
}

ExactValue delta(Spin a, Spin b, Spin c) { return ExactValue::sqrt_of(delta_squared_twice(a.twice, b.twice, c.twice)); }

ExactValue nabla(Spin a, Spin b, Spin c) {
  Rational d2 = delta_squared_twice(a.twice, b.twice, c.twice);
  return ExactValue::sqrt_of(1 / d2);
}

TriangleCoefficient triangle(Spin a, Spin b, Spin c, TriangleKind kind) {
  return {kind == TriangleKind::nabla ? nabla(a, b, c) : delta(a, b, c), kind};
}

Rational racah_sum_twice(int a, int b, int c, int d, int e, int f) {
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
    BigInt den = 1;
    for (int x : alpha) den *= factorial((t2 - x) / 2);
    for (int x : beta) den *= factorial((x - t2) / 2);
    Rational term(factorial(t + 1), den);
    term.canonicalize();
    if (t & 1) sum -= term;
    else sum += term;
  }
  return sum;
}

std::array<int, 6> sixj_canonical(const std::array<int, 6>& t) {
  // columns (a,d), (b,e), (c,f)
  std::array<std::array<int, 2>, 3> cols{{{t[0], t[3]}, {t[1], t[4]}, {t[2], t[5]}}};
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 6> best = t;
  do {
    for (int flip = 0; flip < 4; ++flip) {
      // flipping an even number of columns
      int f[3] = {0, 0, 0};
      if (flip == 1) f[0] = f[1] = 1;
      if (flip == 2) f[0] = f[2] = 1;
      if (flip == 3) f[1] = f[2] = 1;
      std::array<int, 6> cand;
      for (int i = 0; i < 3; ++i) {
        cand[i] = cols[perm[i]][f[i]];
        cand[i + 3] = cols[perm[i]][1 - f[i]];
      }
      best = std::min(best, cand);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ExactValue sixj_twice(int a, int b, int c, int d, int e, int f) {
  std::array<int, 6> key = sixj_canonical({a, b, c, d, e, f});
  return sixj_memo().get_or_compute(key, [&] {
    auto [ka, kb, kc, kd, ke, kf] = key;
    Rational r = racah_sum_twice(ka, kb, kc, kd, ke, kf);
    if (sgn(r) == 0) return ExactValue();
    Rational d2 = delta_squared_twice(ka, kb, kc) * delta_squared_twice(ka, ke, kf) *
                  delta_squared_twice(kd, kb, kf) * delta_squared_twice(kd, ke, kc);
    return ExactValue::make(r, d2);
  });
}

ExactValue sixj(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) {
  return sixj_twice(a.twice, b.twice, c.twice, d.twice, e.twice, f.twice);
}

C0Monomial gamma_su2(Spin kappa) {
  if (kappa.twice == 0) return {0, ExactValue()};
  int k2 = kappa.twice;
  return {1, ExactValue::sqrt_of(Rational((k2 + 1) * k2, 2))};
}

BigInt beta_coeff(int p, int two_lambda) {
  if (p < 0 || p > two_lambda) throw DomainError("beta_coeff: p out of range [0, 2*lambda]");
  return binomial(two_lambda, p);
}

C0Monomial closure_coeff_su2(Spin a, Spin b, Spin c) {
  require_triangle(a.twice, b.twice, c.twice, "closure_coeff_su2");
  int p = (a.twice + b.twice - c.twice) / 2;
  Rational inner(factorial(a.twice) * factorial(b.twice), factorial(c.twice + 1));
  inner.canonicalize();
  Rational half_pow(1, BigInt(1) << p);  // (1/sqrt2)^p squared
  half_pow.canonicalize();
  ExactValue mag = ExactValue::sqrt_of(inner * half_pow / delta_squared_twice(a.twice, b.twice, c.twice));
  return {p, mag};
}

Rational sum_rule_residual_twice(int a, int b, int c, int d, int e) {
  require_triangle(a, b, c, "sum rule");
  require_triangle(c, d, e, "sum rule");
  Rational pre = delta_squared_twice(a, b, c) * delta_squared_twice(c, d, e) * (c + 1);
  Rational acc = 0;
  int lo = std::max(std::abs(b - d), std::abs(a - e));
  int hi = std::min(b + d, a + e);
  for (int f = lo; f <= hi; f += 2) acc += racah_sum_twice(a, b, c, d, e, f);
  int phase = sign_of_exponent((a + b + d + e) / 2);
  return Rational(1) - phase * pre * acc;
}

Rational check_sum_rule_su2(Spin a, Spin b, Spin c, Spin d, Spin e) {
  return sum_rule_residual_twice(a.twice, b.twice, c.twice, d.twice, e.twice);
}

std::vector<Quintuple> admissible_quintuples(int twice_max) {
  std::vector<Quintuple> out;
  for (int a = 0; a <= twice_max; ++a)
    for (int b = 0; b <= twice_max; ++b)
      for (int c = 0; c <= twice_max; ++c) {
        if (!is_triangle_twice(a, b, c, Algebra::su2)) continue;
        for (int d = 0; d <= twice_max; ++d)
          for (int e = 0; e <= twice_max; ++e)
            if (is_triangle_twice(c, d, e, Algebra::su2)) out.push_back({a, b, c, d, e});
      }
  return out;
}

}  // namespace sr::su2
