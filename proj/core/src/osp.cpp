#include "superracah/osp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "superracah/memo.hpp"

namespace sr::osp {

namespace {

using Key3 = std::array<int, 3>;
using Key4 = std::array<int, 4>;

Memo<Key3, BiHomPoly, ArrayHash>& p_memo() {
  static Memo<Key3, BiHomPoly, ArrayHash> m;
  return m;
}
Memo<Key3, BiHomPoly, ArrayHash>& q_memo() {
  static Memo<Key3, BiHomPoly, ArrayHash> m;
  return m;
}
Memo<Key4, Rational, ArrayHash>& x_memo() {
  static Memo<Key4, Rational, ArrayHash> m;
  return m;
}

Rational ratio(const BigInt& n, const BigInt& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// alpha_norm in twice units
Rational alpha_twice(int t) { return ratio(t + tau_twice(t), BigInt(t) * (t + 1)); }

BiHomPoly gamma_twice(int t) {
  if (t == 0) return BiHomPoly::linear(0, 0);
  return BiHomPoly::linear(t, -ratio(tau_twice(t), t));
}

BiHomPoly zero_shape(int w2) { return BiHomPoly(w2 / 2, w2 & 1); }

std::string spin_args(int w2, int l2, int k2) {
  return "^" + Spin(w2).str() + "(" + Spin(l2).str() + "," + Spin(k2).str() + ")";
}

// One step of the P recursion with lambda = l2 taken as given (no sorting).
BiHomPoly p_step(int w2, int l2, int k2) {
  BiHomPoly acc = zero_shape(w2);
  if (w2 % 2 == 0) {
    int p = w2 / 2;
    for (int n = 0; n <= l2 - p; ++n) {
      int t = k2 + n;
      Rational c = ratio(factorial(t - p), factorial(t));
      BiHomPoly a1 = poly_P_twice(w2 - 1, l2 - n - 1, t);
      if (!a1.is_zero()) acc += a1.times_d0() * Rational(c * alpha_twice(t));
      BiHomPoly a2 = poly_P_twice(w2 - 2, l2 - n - 1, t - 1);
      if (!a2.is_zero()) acc += (gamma_twice(t) * a2) * Rational(c * (l2 + k2 - p));
    }
    return acc * ratio(factorial(k2), factorial(k2 - p));
  }
  int p = (w2 - 1) / 2;
  for (int n = 0; n <= l2 - p - 1; ++n) {
    int t = k2 + n;
    int s = (n & 1) ? -1 : 1;
    Rational c1 = ratio(factorial(t - p), factorial(t));
    Rational c2 = ratio(factorial(t - p - 1), factorial(t));
    BiHomPoly a1 = poly_P_twice(w2 - 1, l2 - n - 1, t);
    if (!a1.is_zero()) acc += a1.times_d0() * Rational(s * c1 * alpha_twice(t) * (l2 + k2 - p));
    BiHomPoly a2 = poly_P_twice(w2 - 2, l2 - n - 1, t - 1);
    if (!a2.is_zero()) acc += (gamma_twice(t) * a2) * Rational(-s * c2 * (l2 + k2 - p));
  }
  return acc * ratio(factorial(k2), factorial(k2 - p - 1));
}

Rational x_rec(int m, int w2, int l2, int k2) {
  if (l2 > k2) std::swap(l2, k2);
  if (w2 < 0 || w2 > 2 * l2 || m < 0 || m > w2 / 2) return 0;
  if (w2 == 0) return 1;
  return x_memo().get_or_compute({m, w2, l2, k2}, [&] {
    Rational acc = 0;
    auto gamma_part = [&](int t, int l, int k) {
      Rational r = t * x_rec(m, w2 - 2, l, k);
      if (tau_twice(t)) r -= ratio(1, t) * x_rec(m - 1, w2 - 2, l, k);
      return r;
    };
    if (w2 % 2 == 0) {
      int p = w2 / 2;
      for (int n = 0; n <= l2 - p; ++n) {
        int t = k2 + n;
        Rational c = ratio(factorial(t - p), factorial(t));
        acc += c * alpha_twice(t) * x_rec(m - 1, w2 - 1, l2 - n - 1, t);
        acc += c * (l2 + k2 - p) * gamma_part(t, l2 - n - 1, t - 1);
      }
      return Rational(acc * ratio(factorial(k2), factorial(k2 - p)));
    }
    int p = (w2 - 1) / 2;
    for (int n = 0; n <= l2 - p - 1; ++n) {
      int t = k2 + n;
      int s = (n & 1) ? -1 : 1;
      Rational c1 = ratio(factorial(t - p), factorial(t));
      Rational c2 = ratio(factorial(t - p - 1), factorial(t));
      acc += s * c1 * alpha_twice(t) * (l2 + k2 - p) * x_rec(m, w2 - 1, l2 - n - 1, t);
      acc -= s * c2 * (l2 + k2 - p) * gamma_part(t, l2 - n - 1, t - 1);
    }
    return Rational(acc * ratio(factorial(k2), factorial(k2 - p - 1)));
  });
}

void require_osp_triangle(int a, int b, int c, const char* what) {
  if (!is_triangle_twice(a, b, c, Algebra::osp))
    throw DomainError(std::string(what) + ": (" + Spin(a).str() + "," + Spin(b).str() + "," + Spin(c).str() +
                      ") violates the osp(1|2) triangle rule");
}

}  // namespace

Rational alpha_norm(Spin kappa) {
  if (kappa.twice == 0) throw DomainError("alpha_norm needs kappa >= 1/2");
  return alpha_twice(kappa.twice);
}

BasicHomPoly<ExactValue> alpha_osp(Spin kappa) {
  int t = kappa.twice;
  ExactValue c = ExactValue::make(alpha_norm(kappa) * sign_of_exponent(t + 1), Rational(BigInt(t) * (t + 1)));
  return BasicHomPoly<ExactValue>::d0() * c;
}

BiHomPoly gamma_osp(Spin kappa) { return gamma_twice(kappa.twice); }

BiHomPoly gamma_chain(Spin hi, Spin lo) {
  BiHomPoly r = BiHomPoly::one();
  for (int t = hi.twice; t >= lo.twice; --t) r *= gamma_twice(t);
  return r;
}

BiHomPoly poly_P_twice(int w2, int l2, int k2) {
  if (w2 < 0) return BiHomPoly();
  if (l2 > k2) std::swap(l2, k2);
  if (w2 > 2 * l2) return zero_shape(w2);
  if (w2 == 0) return BiHomPoly::one();
  return p_memo().get_or_compute({w2, l2, k2}, [&] { return p_step(w2, l2, k2); });
}

BiHomPoly poly_P(Spin omega, Spin lambda, Spin kappa) {
  if (omega.twice > 2 * std::min(lambda.twice, kappa.twice))
    throw DomainError("poly_P: need 0 <= omega <= 2*inf(lambda,kappa), got P" +
                      spin_args(omega.twice, lambda.twice, kappa.twice));
  return poly_P_twice(omega.twice, lambda.twice, kappa.twice);
}

Rational x_coeff(int m, Spin omega, Spin lambda, Spin kappa) {
  if (omega.twice > 2 * std::min(lambda.twice, kappa.twice))
    throw DomainError("x_coeff: inadmissible P" + spin_args(omega.twice, lambda.twice, kappa.twice));
  if (m < 0 || m > omega.floor()) throw DomainError("x_coeff: index m out of range [0, [omega]]");
  return x_rec(m, omega.twice, lambda.twice, kappa.twice);
}

Rational x0_closed(int p, Spin lambda, Spin kappa) {
  int L = lambda.twice, K = kappa.twice;
  if (p < 0 || p > std::min(L, K)) throw DomainError("x0_closed: p out of range [0, inf(2lambda,2kappa)]");
  return ratio(factorial(L) * factorial(K) * factorial(L + K - p),
               factorial(p) * factorial(L - p) * factorial(K - p) * factorial(L + K - 2 * p));
}

BiHomPoly poly_Q_twice(int w2, int l2, int k2) {
  if (w2 < 0) return BiHomPoly();
  if (k2 < l2) throw std::logic_error("poly_Q_twice: kappa must be sup");
  // Boundary rank sup(a,b,c) belongs to both sets.
  if (w2 == l2) return poly_P_twice(w2, l2, k2);
  if (w2 > l2) throw std::logic_error("poly_Q_twice: omega above lambda");
  if (w2 == 0) return BiHomPoly::one();
  return q_memo().get_or_compute({w2, l2, k2}, [&] {
    int sgn = (l2 & 1) ? -1 : 1;
    int tk = tau_twice(k2);
    Rational lead = ratio(k2 + tk, k2 + 1);
    BiHomPoly acc = zero_shape(w2);
    BiHomPoly q1 = poly_Q_twice(w2, l2 - 1, k2 - 1);
    BiHomPoly q2 = poly_Q_twice(w2 - 1, l2 - 1, k2);
    BiHomPoly q3 = poly_Q_twice(w2 - 2, l2 - 1, k2 + 1);
    if (w2 % 2 == 0) {
      int p = w2 / 2;
      if (!q1.is_zero()) acc += q1 * Rational(k2 + p);
      if (!q2.is_zero()) acc += q2.times_d0() * Rational(sgn * lead);
      if (!q3.is_zero()) acc += (gamma_twice(k2 + 1) * q3) * Rational(k2 * (k2 - l2 + p + 1));
    } else {
      Rational a = k2 + (w2 + 1) / 2;
      Rational b = k2 - l2 + (w2 + 1) / 2;
      if (!q1.is_zero()) acc += q1 * a;
      if (!q2.is_zero()) acc += q2.times_d0() * Rational(-sgn * a * b * lead);
      if (!q3.is_zero()) acc += (gamma_twice(k2 + 1) * q3) * Rational(k2 * b);
    }
    return acc * ratio(1, k2);
  });
}

bool in_set_A(Spin omega, Spin lambda, Spin kappa) {
  return omega.twice <= std::min(lambda.twice, kappa.twice);
}

bool in_set_B(Spin omega, Spin lambda, Spin kappa) {
  return lambda.twice >= 1 && kappa >= lambda && omega.twice <= lambda.twice - 1;
}

BiHomPoly poly_Q(Spin omega, Spin lambda, Spin kappa) {
  if (!in_set_B(omega, lambda, kappa))
    throw DomainError("poly_Q: need kappa = sup, lambda >= 1/2 and omega <= lambda - 1/2, got Q" +
                      spin_args(omega.twice, lambda.twice, kappa.twice));
  return poly_Q_twice(omega.twice, lambda.twice, kappa.twice);
}

namespace published {

std::optional<BiHomPoly> closed_P(Spin omega, Spin lambda, Spin kappa) {
  const Rational l = lambda.twice, k = kappa.twice;
  const Rational tl = tau(lambda), tk = tau(kappa);
  auto make = [&](int w2, std::vector<Rational> xs) {
    BiHomPoly p = zero_shape(w2);
    for (std::size_t m = 0; m < xs.size(); ++m) p.set(static_cast<int>(m), xs[m]);
    return p;
  };
  switch (omega.twice) {
    case 0:
      return BiHomPoly::one();
    case 1:
      return make(1, {l * tk + k * tl});
    case 2:
      return make(2, {l * k * (l + k - 1), -tl * tk});
    case 3:
      return make(3, {(l - tl) * (k - tk) * (l + k - 2 + tl + tk) * (l * tk + k * tl - 1 - tl - tk + tl * tk), 0});
    case 4: {
      Rational X = (l - tl) * (k - tk) * (l + k - 2 - tl - tk + 2 * tl * tk) / 2;
      return make(4, {X * (l - 1 + tl) * (k - 1 + tk) * (l + k - 3 + tl + tk - 2 * tl * tk), -X * (1 + 2 * tl * tk), 0});
    }
    case 5: {
      Rational X = (l - tl) * (k - tk) * (l + k - 2 - tl - tk) * (l * tk + k * tl - 2) / 2;
      Rational W = tl + tk - tl * tk;
      Rational Y = (l - 2 - tk + tl * tk) * (k - 2 - tl + tl * tk) * (l + k - 4 + 2 * tl + 2 * tk - tl * tk) + 4 * W;
      return make(5, {X * Y, -X * W, 0});
    }
    case 6: {
      Rational X = (l - tl) * (k - tk) * (l + k - 4 - tl - tk + 2 * tl * tk) / 6;
      Rational A = (l - 1 + tl) * (k - 1 + tk) * (l - 2) * (k - 2) * (l + k - 3) * (l + k - 5 + tl + tk - 2 * tl * tk);
      Rational B = (l - 2) * (k - 2) * (l + k - 3) + 2 * tl * tk;
      return make(6, {X * A, -3 * X * B, 3 * X * tl * tk, 0});
    }
    default:
      return std::nullopt;
  }
}

Rational table_x0_half(int p, Spin lambda, Spin kappa) {
  const Rational L = lambda.twice, K = kappa.twice;
  ParityCase pc = parity_case(lambda, kappa);
  using PC = ParityCase;
  switch (p) {
    case 0:
      switch (pc) {
        case PC::a: return 0;
        case PC::b: return L + K;
        case PC::c: return K;
        case PC::d: return L;
      }
      break;
    case 1:
      switch (pc) {
        case PC::a: return -L * K * (L + K - 2);
        case PC::b: return (L - 1) * (K - 1) * (L + K) * (L + K - 2);
        case PC::c: return (L - 1) * K * (K - 2) * (L + K - 1);
        case PC::d: return L * (L - 2) * (K - 1) * (L + K - 1);
      }
      break;
    case 2:
      switch (pc) {
        case PC::a: return -L * (L - 2) * K * (K - 2) * (L + K - 2) * (L + K - 4);
        case PC::b: return (L - 1) * (K - 1) * (L + K - 2) * (L + K - 4) * ((L - 2) * (K - 2) * (L + K - 1) + 4) / 2;
        case PC::c: return (L - 1) * K * (K - 2) * (L + K - 3) * ((L - 2) * (K - 3) * (L + K - 2) + 4) / 2;
        case PC::d: return L * (L - 2) * (K - 1) * (L + K - 3) * ((L - 3) * (K - 2) * (L + K - 2) + 4) / 2;
      }
      break;
    case 3:
      switch (pc) {
        case PC::a:
          return -L * (L - 2) * K * (K - 2) * (L + K - 4) * (L + K - 6) * ((L - 3) * (K - 3) * (L + K - 3) + 4) / 2;
        case PC::b:
          return (L - 1) * (L - 3) * (K - 1) * (K - 3) * (L + K - 2) * (L + K - 4) * (L + K - 6) *
                 ((L - 2) * (K - 2) * (L + K - 3) + 12) / 6;
        case PC::c:
          return (L - 1) * (L - 3) * K * (K - 2) * (K - 4) * (L + K - 3) * (L + K - 5) *
                 ((L - 2) * (K - 3) * (L + K - 4) + 12) / 6;
        case PC::d:
          return L * (L - 2) * (L - 4) * (K - 1) * (K - 3) * (L + K - 3) * (L + K - 5) *
                 ((L - 3) * (K - 2) * (L + K - 4) + 12) / 6;
      }
      break;
    default:
      break;
  }
  throw DomainError("table_x0_half: p must be in 0..3");
}

}  // namespace published

Rational nablaS_squared_twice(int a, int b, int c) {
  require_osp_triangle(a, b, c, "supertriangle");
  return ratio(factorial((a + b + c + 1) / 2),
               factorial((a + b - c) / 2) * factorial((a - b + c) / 2) * factorial((-a + b + c) / 2));
}

ExactValue nablaS(Spin a, Spin b, Spin c) {
  return ExactValue::sqrt_of(nablaS_squared_twice(a.twice, b.twice, c.twice));
}

ExactValue deltaS(Spin a, Spin b, Spin c) {
  return ExactValue::sqrt_of(1 / nablaS_squared_twice(a.twice, b.twice, c.twice));
}

BasicHomPoly<ExactValue> ClosureCoefficient::polynomial() const {
  return lift<ExactValue>(rational_part()) * scalar();
}

std::string ClosureCoefficient::str() const { return polynomial().str(); }

ClosureCoefficient closure_unified_twice(int a, int b, int c) {
  require_osp_triangle(a, b, c, "closure");
  int s = std::max({a, b, c});
  int per = a + b + c;
  ClosureCoefficient cc;
  cc.sign = ((per & 1) && ((1 + s) & 1)) ? -1 : 1;
  cc.gamma_hi = Spin(s);
  cc.gamma_lo = Spin(c + 1);
  cc.pseudo_degree = Spin(per - 2 * s);
  cc.poly = poly_P_twice(per - 2 * s, std::min(a, b), std::min(std::max(a, b), c));
  cc.e_norm = ExactValue::sqrt_of(Rational(factorial(a) * factorial(b) * factorial(c))) / ExactValue(Rational(factorial(s)));
  cc.triangle = ExactValue::sqrt_of(1 / nablaS_squared_twice(a, b, c));
  return cc;
}

ClosureCoefficient closure_unified(Spin a, Spin b, Spin c) { return closure_unified_twice(a.twice, b.twice, c.twice); }

namespace {

ExactValue closure_scalar(int a, int b, int c, int sup) {
  int per = a + b + c;
  int sign = ((per & 1) && ((1 + sup) & 1)) ? -1 : 1;
  ExactValue e = ExactValue::sqrt_of(Rational(factorial(a) * factorial(b) * factorial(c))) /
                 ExactValue(Rational(factorial(sup)));
  return ExactValue(sign) * ExactValue::sqrt_of(1 / nablaS_squared_twice(a, b, c)) / e;
}

}  // namespace

BasicHomPoly<ExactValue> closure_set_A(Spin sa, Spin sb, Spin sc) {
  int a = sa.twice, b = sb.twice, c = sc.twice;
  require_osp_triangle(a, b, c, "closure_set_A");
  if (c < std::max(a, b)) throw DomainError("closure_set_A: need c >= sup(a,b)");
  BiHomPoly p = poly_P_twice(a + b - c, a, b);
  return lift<ExactValue>(p) * closure_scalar(a, b, c, c);
}

BasicHomPoly<ExactValue> closure_set_B(Spin sa, Spin sb, Spin sc) {
  int a = sa.twice, b = sb.twice, c = sc.twice;
  require_osp_triangle(a, b, c, "closure_set_B");
  int lo = std::min(a, b), hi = std::max(a, b);
  if (c >= hi) throw DomainError("closure_set_B: need c < sup(a,b)");
  BiHomPoly q = poly_Q_twice(a + b + c - 2 * hi, lo, hi);
  BiHomPoly g = gamma_chain(Spin(hi), Spin(c + 1));
  return lift<ExactValue>(g * q) * closure_scalar(a, b, c, hi);
}

bool in_theorem_family(TheoremFamily f, Spin a, Spin b, Spin c) {
  if (f == TheoremFamily::T1) {
    return a.integral() && b.integral() && a.twice >= 2 && b.twice >= 2 && c.twice == a.twice + b.twice - 1;
  }
  auto one_order = [&](Spin k, Spin kap) {
    return k.integral() && k.twice >= 2 && !kap.integral() && kap > k && c.twice == kap.twice - k.twice + 1;
  };
  return one_order(a, b) || one_order(b, a);
}

ScanReport theorem_zero_checks(TheoremFamily family, int bound, unsigned threads) {
  if (bound < 1) throw DomainError("theorem_zero_checks: bound must be >= 1");
  std::vector<Key3> cases;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      int c = family == TheoremFamily::T1 ? a + b - 1 : std::abs(a - b) + 1;
      if (c < 0 || c > bound) continue;
      if (in_theorem_family(family, Spin(a), Spin(b), Spin(c))) cases.push_back({a, b, c});
    }
  std::string name = family == TheoremFamily::T1 ? "theorem1" : "theorem2";
  return run_scan(name, cases.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [a, b, c] = cases[i];
    ClosureCoefficient cc = closure_unified_twice(a, b, c);
    r.check(cc.is_zero(), "[S^" + Spin(a).str() + " x S^" + Spin(b).str() + "]^" + Spin(c).str() +
                              " coefficient " + cc.str() + " != 0");
  });
}

namespace {

std::vector<Key3> p_domain(int bound, int w2_max = 1 << 30) {
  std::vector<Key3> out;
  for (int l2 = 0; l2 <= bound; ++l2)
    for (int k2 = 0; k2 <= bound; ++k2)
      for (int w2 = 0; w2 <= std::min(2 * std::min(l2, k2), w2_max); ++w2) out.push_back({w2, l2, k2});
  return out;
}

}  // namespace

ScanReport conjecture1_scan(int bound, unsigned threads) {
  if (bound < 1) throw DomainError("conjecture1_scan: bound must be >= 1");
  auto dom = p_domain(bound);
  return run_scan("conjecture1", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    BiHomPoly p = poly_P_twice(w2, l2, k2);
    for (int m = 0; m <= p.degree(); ++m) {
      const Rational& x = p[m];
      r.check(x.get_den() == 1, "x_" + std::to_string(m) + spin_args(w2, l2, k2) + " = " + to_string(x));
    }
  });
}

ScanReport conjecture2_scan(int bound, unsigned threads) {
  if (bound < 1) throw DomainError("conjecture2_scan: bound must be >= 1");
  std::vector<Key3> dom;
  for (int l2 = 1; l2 <= bound; ++l2)
    for (int k2 = l2; k2 <= bound; ++k2)
      for (int w2 = 0; w2 <= l2 - 1; ++w2) dom.push_back({w2, l2, k2});
  return run_scan("conjecture2", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    BiHomPoly q = poly_Q_twice(w2, l2, k2);
    BiHomPoly p = poly_P_twice(w2, l2, k2 - l2 + w2);
    r.check(q == p, "Q" + spin_args(w2, l2, k2) + " = " + q.str() + " but P" + spin_args(w2, l2, k2 - l2 + w2) +
                        " = " + p.str());
  });
}

ScanReport closed_form_scan(int bound, unsigned threads) {
  std::vector<Key3> dom;
  for (auto k : p_domain(bound, 6))
    if (k[0] <= std::min(k[1], k[2])) dom.push_back(k);
  return run_scan("closed-forms", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    BiHomPoly got = poly_P_twice(w2, l2, k2);
    BiHomPoly want = *published::closed_P(Spin(w2), Spin(l2), Spin(k2));
    r.check(got == want, "P" + spin_args(w2, l2, k2) + " case (" + parity_tag(parity_case(Spin(l2), Spin(k2))) +
                             "): recursion " + got.str() + ", closed form " + want.str());
  });
}

ScanReport table_scan(int bound, unsigned threads) {
  std::vector<Key3> dom;
  for (auto k : p_domain(bound, 7))
    if (k[0] % 2 == 1) dom.push_back(k);
  return run_scan("x0-tables", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    Rational got = poly_P_twice(w2, l2, k2).coeff(0);
    Rational want = published::table_x0_half((w2 - 1) / 2, Spin(l2), Spin(k2));
    r.check(got == want, "x_0" + spin_args(w2, l2, k2) + ": recursion " + to_string(got) + ", table " + to_string(want));
  });
}

ScanReport x0_closed_scan(int bound, unsigned threads) {
  std::vector<Key3> dom;
  for (auto k : p_domain(bound))
    if (k[0] % 2 == 0) dom.push_back(k);
  return run_scan("x0-closed", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    Rational got = poly_P_twice(w2, l2, k2).coeff(0);
    Rational want = x0_closed(w2 / 2, Spin(l2), Spin(k2));
    r.check(got == want, "x_0" + spin_args(w2, l2, k2) + ": recursion " + to_string(got) + ", closed " + to_string(want));
  });
}

ScanReport x_top_scan(int bound, unsigned threads) {
  std::vector<Key3> dom;
  for (auto k : p_domain(bound))
    if (k[0] > 2) dom.push_back(k);
  return run_scan("x-top", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    BiHomPoly p = poly_P_twice(w2, l2, k2);
    Rational top = p.coeff(w2 / 2);
    r.check(sgn(top) == 0, "x_top" + spin_args(w2, l2, k2) + " = " + to_string(top));
  });
}

ScanReport x_recursion_scan(int bound, unsigned threads) {
  auto dom = p_domain(bound);
  return run_scan("x-recursion", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    BiHomPoly p = poly_P_twice(w2, l2, k2);
    for (int m = 0; m <= w2 / 2; ++m) {
      Rational x = x_coeff(m, Spin(w2), Spin(l2), Spin(k2));
      r.check(x == p.coeff(m), "x_" + std::to_string(m) + spin_args(w2, l2, k2) + ": scalar " + to_string(x) +
                                   ", polynomial " + to_string(p.coeff(m)));
    }
  });
}

ScanReport symmetry_scan(int bound, unsigned threads) {
  // Apply the recursion with the larger spin in the lambda slot and compare.
  std::vector<Key3> dom;
  for (auto k : p_domain(bound)) {
    auto [w2, l2, k2] = k;
    if (l2 <= k2 || w2 == 0) continue;
    int need = w2 % 2 == 0 ? w2 / 2 : (w2 - 1) / 2 + 1;
    if (k2 >= need) dom.push_back(k);
  }
  return run_scan("symmetry", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [w2, l2, k2] = dom[i];
    BiHomPoly swapped = p_step(w2, l2, k2);
    BiHomPoly ref = poly_P_twice(w2, k2, l2);
    r.check(swapped == ref, "P" + spin_args(w2, l2, k2) + " = " + swapped.str() + " but P" + spin_args(w2, k2, l2) +
                                " = " + ref.str());
  });
}

ScanReport closure_sets_scan(int bound, unsigned threads) {
  std::vector<Key3> dom;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        if (is_triangle_twice(a, b, c, Algebra::osp)) dom.push_back({a, b, c});
  return run_scan("closure-sets", dom.size(), threads, [&](std::size_t i, ScanReport& r) {
    auto [a, b, c] = dom[i];
    auto uni = closure_unified_twice(a, b, c).polynomial();
    bool setA = c >= std::max(a, b);
    auto other = setA ? closure_set_A(Spin(a), Spin(b), Spin(c)) : closure_set_B(Spin(a), Spin(b), Spin(c));
    r.check(uni == other, std::string(setA ? "set A" : "set B") + " (" + Spin(a).str() + "," + Spin(b).str() + "," +
                              Spin(c).str() + "): unified " + uni.str() + ", set form " + other.str());
  });
}

std::vector<PolyCacheEntry> export_poly_cache() {
  std::vector<PolyCacheEntry> out;
  for (auto& [k, v] : p_memo().snapshot()) out.push_back({'P', k, v});
  for (auto& [k, v] : q_memo().snapshot()) out.push_back({'Q', k, v});
  std::sort(out.begin(), out.end(), [](const PolyCacheEntry& x, const PolyCacheEntry& y) {
    return std::tie(x.kind, x.key) < std::tie(y.kind, y.key);
  });
  return out;
}

void import_poly_cache(const std::vector<PolyCacheEntry>& entries) {
  for (const auto& e : entries) (e.kind == 'P' ? p_memo() : q_memo()).insert(e.key, e.poly);
}

void clear_poly_cache() {
  p_memo().clear();
  q_memo().clear();
  x_memo().clear();
}

}  // namespace sr::osp
