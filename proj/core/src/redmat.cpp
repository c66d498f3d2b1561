#include "superracah/redmat.hpp"

#include <algorithm>

#include "superracah/osp.hpp"
#include "superracah/su2.hpp"

namespace sr::redmat {

namespace {

SymPoly sym(const BiHomPoly& p) { return lift<ExactValue>(p); }
SymPoly gamma_sym(int t) { return sym(osp::gamma_osp(Spin(t))); }
SymPoly c0_sym() { return SymPoly::linear(1, -1); }
SymPoly u_sym() { return SymPoly::linear(1, 0); }

ReducedElement zero_element(Spin bra, Spin ket, Spin rank) {
  ReducedElement e;
  e.bra = bra;
  e.ket = ket;
  e.op_rank = rank;
  e.factor = SymPoly();
  return e;
}

ReducedElement sqrt_gamma_element(Spin bra, Spin ket, int sign, Spin k, int sigma) {
  ReducedElement e;
  e.bra = bra;
  e.ket = ket;
  e.op_rank = Spin(1);
  e.factor = SymPoly::constant(ExactValue(sign));
  e.sqrt_gammas = {k};
  e.sigma = sigma;
  return e;
}

int parity_sign(int eps) { return (eps & 1) ? -1 : 1; }

std::string label(int t) { return "j=" + Spin(t).str(); }

template <class Fn>
void guarded(ScanReport& r, const std::string& what, Fn&& fn) {
  try {
    r.check(fn(), what);
  } catch (const RadicandMismatch& e) {
    r.fail(what + " (unlike surds: " + e.what() + ")");
  }
}

}  // namespace

ReducedElement ReducedElement::operator*(const ReducedElement& o) const {
  ReducedElement r;
  r.bra = bra;
  r.ket = o.ket;
  r.op_rank = Spin(op_rank.twice + o.op_rank.twice);
  r.factor = factor * o.factor;
  r.sigma = sqrt_gammas.empty() ? o.sigma : sigma;
  if (!sqrt_gammas.empty() && !o.sqrt_gammas.empty() && sigma != o.sigma)
    throw DomainError("ReducedElement product mixes phase regimes");
  std::vector<Spin> all = sqrt_gammas;
  all.insert(all.end(), o.sqrt_gammas.begin(), o.sqrt_gammas.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size();) {
    if (i + 1 < all.size() && all[i] == all[i + 1]) {
      r.factor = r.factor * (gamma_sym(all[i].twice) * ExactValue(r.sigma));
      i += 2;
    } else {
      r.sqrt_gammas.push_back(all[i]);
      ++i;
    }
  }
  if (r.factor.is_zero()) r.sqrt_gammas.clear();
  return r;
}

SymPoly ReducedElement::squared() const {
  SymPoly s = factor * factor;
  for (Spin k : sqrt_gammas) s = s * (gamma_sym(k.twice) * ExactValue(sigma));
  return s;
}

std::string ReducedElement::str() const {
  if (is_zero()) return "0";
  std::string out;
  std::string f = factor.str();
  bool unit = factor.degree() == 0 && factor.d0_power() == 0 && (f == "1" || f == "-1");
  if (!unit || sqrt_gammas.empty()) out = f;
  else if (f == "-1") out = "-";
  for (Spin k : sqrt_gammas) {
    if (!out.empty() && out != "-") out += "*";
    out += std::string(sigma > 0 ? "sqrt(gamma_" : "sqrt(-gamma_") + k.str() + ")";
  }
  return out;
}

ReducedElement rme_S_half(Spin j, Spin jp, PhaseClass phase) {
  int d = jp.twice - j.twice;
  if (std::abs(d) > 1)
    throw DomainError("rme_S_half: |j - j'| must be <= 1/2, got (" + j.str() + "," + jp.str() + ")");
  if (d == 0) {
    if (j.twice == 0) return zero_element(j, jp, Spin(1));
    ReducedElement e = zero_element(j, jp, Spin(1));
    e.factor = osp::alpha_osp(j);
    return e;
  }
  if (d < 0) return sqrt_gamma_element(j, jp, parity_sign(phase.eps_r), j, phase.sigma());
  return sqrt_gamma_element(j, jp, parity_sign(phase.eps_l), jp, phase.sigma());
}

ReducedElement rme_S_one(Spin j, Spin jp, PhaseClass phase) {
  int d = jp.twice - j.twice;
  if (std::abs(d) > 2)
    throw DomainError("rme_S_one: |j - j'| must be <= 1, got (" + j.str() + "," + jp.str() + ")");
  auto tag = [&](ReducedElement e) {
    e.bra = j;
    e.ket = jp;
    e.op_rank = Spin(2);
    return e;
  };
  if (d == 0) {
    if (j.twice == 0) return tag(zero_element(j, jp, Spin(2)));
    ReducedElement e = zero_element(j, jp, Spin(2));
    int t = j.twice;
    e.factor = u_sym() * ExactValue::make(-1, Rational(2 * t * (t + 1)));
    return tag(e);
  }
  if (d == -2) return tag(rme_S_half(j, Spin(j.twice - 1), phase) * rme_S_half(Spin(j.twice - 1), jp, phase));
  if (d == 2) return tag(rme_S_half(j, Spin(j.twice + 1), phase) * rme_S_half(Spin(j.twice + 1), jp, phase));
  // (J||S^1||J-1/2) and (J-1/2||S^1||J) with J the larger spin
  int J = std::max(j.twice, jp.twice);
  if (tau_twice(J - 1) == 0) return tag(zero_element(j, jp, Spin(2)));
  ReducedElement half = rme_S_half(j, jp, phase);
  ReducedElement k = zero_element(j, jp, Spin(2));
  k.factor = SymPoly::d0() * ExactValue::make(-1, Rational(2, (J - 1) * (J + 1)));
  return tag(half * k);
}

bool phase_class_real(PhaseClass phase, const Rational& c0, const Rational& d0, int j_bound) {
  Rational v = d0 * d0, u = c0 + v;
  for (int t = 1; t <= j_bound; ++t) {
    Rational g = osp::gamma_osp(Spin(t)).evaluate<Rational>(u, v, d0);
    if (sgn(g) * phase.sigma() < 0) return false;
  }
  return true;
}

ScanReport identity_suite_A(int j_bound) {
  ScanReport r;
  r.name = "redmat-identities";
  for (int t = 1; t <= j_bound; ++t) {
    SymPoly a = osp::alpha_osp(Spin(t));
    SymPoly a2 = a * a;
    guarded(r, "A.10 " + label(t), [&] { return c0_sym() + a2 == gamma_sym(t + 1) - gamma_sym(t); });
    guarded(r, "A.19 " + label(t), [&] {
      SymPoly lhs = gamma_sym(t) * ExactValue(t + 1) + a2 + gamma_sym(t + 1) * ExactValue(t);
      return lhs == u_sym() * ExactValue(2 * t * (t + 1));
    });
    if (t >= 2) {
      guarded(r, "A.16 " + label(t), [&] {
        SymPoly lhs = osp::alpha_osp(Spin(t - 1)) * ExactValue::sqrt_of(Rational(t + 1, t)) +
                      a * ExactValue::sqrt_of(Rational(t - 1, t));
        SymPoly rhs = SymPoly::d0() * ExactValue::make(2 * tau_twice(t - 1), Rational(1, (t - 1) * (t + 1)));
        return lhs == rhs;
      });
    }
  }
  return r;
}

ScanReport alpha_gamma_suite(int k_bound) {
  ScanReport r;
  r.name = "alpha-gamma";
  for (int t = 1; t <= k_bound; ++t) {
    SymPoly a = osp::alpha_osp(Spin(t));
    SymPoly a2 = a * a;
    int s = t + ((t & 1) ? -1 : 1);  // 2k + (-1)^{2k}
    guarded(r, "gamma from alpha " + label(t),
            [&] { return gamma_sym(t) == a2 * ExactValue(s) + c0_sym() * ExactValue(t); });
    if (t >= 2) {
      SymPoly prev = osp::alpha_osp(Spin(t - 1));
      guarded(r, "alpha recursion squared " + label(t), [&] {
        return a2 * ExactValue(s * s) == prev * prev * ExactValue((t + 1) * (t - 1));
      });
    }
  }
  return r;
}

ScanReport phase_class_suite(int j_bound) {
  ScanReport r;
  r.name = "phase-classes";
  const Rational c0_pos(1, 3), d0_pos(1, 2);  // c0 > 0
  const Rational c0_neg(-1), d0_neg(1, 2);    // c0 + d0^2 < 0
  for (int er = 0; er <= 1; ++er)
    for (int el = 0; el <= 1; ++el) {
      PhaseClass pc{er, el};
      bool odd = (er + el) & 1;
      std::string name = "eps=(" + std::to_string(er) + "," + std::to_string(el) + ")";
      r.check(phase_class_real(pc, c0_pos, d0_pos, j_bound) == odd, name + " realness at c0 > 0");
      r.check(phase_class_real(pc, c0_neg, d0_neg, j_bound) == !odd, name + " realness at c0 + d0^2 < 0");
      for (int t = 1; t <= j_bound; ++t) {
        ReducedElement down = rme_S_half(Spin(t), Spin(t - 1), pc);
        ReducedElement up = rme_S_half(Spin(t - 1), Spin(t), pc);
        ReducedElement prod = down * up;
        r.check(prod.sqrt_gammas.empty() && prod.factor == gamma_sym(t) * ExactValue(-1),
                name + " product " + label(t) + " = " + prod.str());
        bool opposite = down.factor == up.factor * ExactValue(-1);
        r.check(opposite == odd, name + " relative sign " + label(t));
      }
    }
  return r;
}

GeneratorConditions generator_conditions() {
  GeneratorConditions g;
  g.report.name = "generator-conditions";
  auto su2c = su2::closure_coeff_su2(Spin(2), Spin(2), Spin(2));
  g.report.check(su2c.c0_exponent == 1, "su(2) [S^1 x S^1]^1 is linear in c0");
  g.su2_c0 = ExactValue::make(-1, Rational(1, 2)) / su2c.magnitude;
  g.report.check(g.su2_c0 == ExactValue(Rational(-1, 4)), "su(2) c0 = " + g.su2_c0.str());

  auto poly = osp::closure_unified(Spin(2), Spin(2), Spin(2)).polynomial();
  g.report.check(poly.degree() == 1 && poly.d0_power() == 0 && poly.coeff(1).is_zero(),
                 "osp [S^1 x S^1]^1 is proportional to u: " + poly.str());
  g.osp_closure_111 = poly.coeff(0);
  g.report.check(g.osp_closure_111 == ExactValue::make(2, 3), "osp closure (1,1,1) = " + poly.str());
  g.osp_u = ExactValue::make(Rational(-1, 2), Rational(3, 2)) / g.osp_closure_111;
  g.report.check(g.osp_u == ExactValue::make(Rational(-1, 4), Rational(1, 2)), "osp u = " + g.osp_u.str());
  return g;
}

}  // namespace sr::redmat
