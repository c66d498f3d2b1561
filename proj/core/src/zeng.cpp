#include "superracah/zeng.hpp"

#include "superracah/osp.hpp"
#include "superracah/su2.hpp"

namespace sr::lab {

namespace {

int fixed_low(int top, int x, int y) { return top - ((top + x + y) & 1); }

bool sublevel_ok(Spin top, Spin sub) { return sub.twice == top.twice || sub.twice == top.twice - 1; }

}  // namespace

ExactValue scalar_factor_nabla(Spin j1, Spin j2, Spin j3, Spin l1, Spin l2, Spin l3) {
  if (!is_triangle(j1, j2, j3, Algebra::osp) || !is_triangle(l1, l2, l3, Algebra::su2)) return ExactValue();
  if ((j1.twice + j2.twice + j3.twice) & 1) return osp::nablaS(j1, j2, j3);
  Rational n2 = 1 / su2::delta_squared_twice(l1.twice, l2.twice, l3.twice);
  return ExactValue(n2) * osp::deltaS(j1, j2, j3);
}

bool zeng_choice_valid(Spin J1, Spin J2, Spin j1, Spin j2, const ZengChoice& c) {
  if (!sublevel_ok(J1, c.L1) || !sublevel_ok(J2, c.L2) || !sublevel_ok(j1, c.l1) || !sublevel_ok(j2, c.l2))
    return false;
  return ((c.L1.twice - c.l1.twice - c.L2.twice + c.l2.twice) & 1) == 0;
}

int zeng_psi(int J1, int J2, int J3, int j1, int j2, int j3, int L1, int L2, int l1, int l2) {
  long e = long(j1) * J1 + long(j2) * J2 + long(j3) * J3 + long(j1 + j2 + J3) * j3 +
           long(J1 + J2 + J3) * (J1 - L1) * (J2 - L2) +
           long(j1 + j2 + J3) * ((j1 - l1) * (j2 - l2) + (l1 + L2) * (l2 + L1));
  return sign_of_exponent(e);
}

int zeng_phi(int J1, int J2, int j1, int j2, int j3, int L1, int L2, int l1, int l2) {
  long e = long(J1 + j2 + j3) * (j1 - l1) + long(j1 + J2 + j3) * (j2 - l2) +
           long(J1 + j2 + j3) * (j2 - l2) * (J1 - L1) + long(j1 + J2 + j3) * (j1 - l1) * (J2 - L2);
  return sign_of_exponent(e);
}

ZengResult zeng_relation_check(Spin J1, Spin J2, Spin j1, Spin j2, Spin j3, const ZengChoice& c,
                               const SixJSuperProvider& provider, unsigned digits) {
  if (!zeng_choice_valid(J1, J2, j1, j2, c))
    throw DomainError("zeng: invalid sublevel choice (L1,L2,l1,l2)=(" + c.L1.str() + "," + c.L2.str() + "," +
                      c.l1.str() + "," + c.l2.str() + ")");
  PrecisionScope scope(digits);
  ZengResult r;
  r.choice = c;
  r.valid = true;
  const int tJ1 = J1.twice, tJ2 = J2.twice, tj1 = j1.twice, tj2 = j2.twice, tj3 = j3.twice;
  const int tL1 = c.L1.twice, tL2 = c.L2.twice, tl1 = c.l1.twice, tl2 = c.l2.twice;
  r.twice_l3 = fixed_low(tj3, tL1, tl2);
  r.lhs = 0;
  int lo = std::max(std::abs(tJ1 - tJ2), std::abs(tj1 - tj2)), hi = std::min(tJ1 + tJ2, tj1 + tj2);
  for (int tJ3 = lo; tJ3 <= hi; ++tJ3) {
    int tL3 = fixed_low(tJ3, tl1, tl2);
    if (tL3 < 0) continue;
    Spin J3(tJ3), L3(tL3);
    ExactValue x1 = scalar_factor_nabla(J1, J2, J3, c.L1, c.L2, L3);
    ExactValue x2 = scalar_factor_nabla(j1, j2, J3, c.l1, c.l2, L3);
    if (x1.is_zero() || x2.is_zero()) continue;
    int sign = zeng_psi(tJ1, tJ2, tJ3, tj1, tj2, tj3, tL1, tL2, tl1, tl2) *
               sign_of_exponent((tj1 + tj2 + tJ3) / 2 + (tJ1 + tJ2 + tJ3) / 2 + tJ3);
    Decimal six = provider.get({tJ1, tj2, tj3, tj1, tJ2, tJ3}).decimal();
    Decimal term = sign * six * to_decimal(x1 * x2) / (tL3 + 1);
    r.terms.push_back({tJ3, tL3, term});
    r.lhs += term;
  }
  r.rhs = 0;
  if (r.twice_l3 >= 0) {
    Spin l3(r.twice_l3);
    ExactValue y1 = scalar_factor_nabla(J1, j2, j3, c.L1, c.l2, l3);
    ExactValue y2 = scalar_factor_nabla(j1, J2, j3, c.l1, c.L2, l3);
    int sign = zeng_phi(tJ1, tJ2, tj1, tj2, tj3, tL1, tL2, tl1, tl2);
    r.rhs = sign * to_decimal(y1 * y2) / (r.twice_l3 + 1);
  }
  r.residual = r.lhs - r.rhs;
  return r;
}

std::vector<ZengResult> zeng_all_choices(Spin J1, Spin J2, Spin j1, Spin j2, Spin j3,
                                         const SixJSuperProvider& provider, unsigned digits) {
  std::vector<ZengResult> out;
  auto sub = [](Spin s, int k) { return Spin(std::max(0, s.twice - k)); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          ZengChoice c{sub(J1, a), sub(J2, b), sub(j1, p), sub(j2, q)};
          bool exists = (!a || J1.twice > 0) && (!b || J2.twice > 0) && (!p || j1.twice > 0) && (!q || j2.twice > 0);
          if (exists && zeng_choice_valid(J1, J2, j1, j2, c)) {
            out.push_back(zeng_relation_check(J1, J2, j1, j2, j3, c, provider, digits));
          } else {
            ZengResult r;
            r.choice = c;
            r.valid = false;
            out.push_back(r);
          }
        }
  return out;
}

}  // namespace sr::lab
