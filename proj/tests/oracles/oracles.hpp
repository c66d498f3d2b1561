#pragma once

#include <map>

#include "superracah/exact.hpp"

namespace oracle {

using sr::ExactValue;
using sr::Rational;
using sr::SurdSum;

// Sum of q^{k/4} * SurdSum_k for k = 0..3, q a positive rational.
class QSurd {
 public:
  explicit QSurd(Rational q) : q_(std::move(q)) {}
  void add(int quarter_exp, const ExactValue& v);
  QSurd operator*(const QSurd& o) const;
  QSurd& operator+=(const QSurd& o);
  // Throws unless the odd quarter buckets vanish; q^{1/2} is folded into the surd.
  SurdSum collapse() const;

 private:
  Rational q_;
  std::map<int, SurdSum> b_;
};

Rational qnum(const Rational& q, int n);
Rational qfact(const Rational& q, int n);
Rational qpow(const Rational& q, int n);

// <a alpha b beta | c gamma>_q by the Racah-type single sum, twice-valued arguments; q = 1 is the classical case.
QSurd cg(const Rational& q, int a, int al, int b, int be, int c, int ga);

// {j1 j2 j12; j3 j j23} from the contraction of four CG coefficients at m = j.
ExactValue sixj_by_contraction(int j1, int j2, int j12, int j3, int j, int j23);
ExactValue q_sixj_by_contraction(const Rational& q, int j1, int j2, int j12, int j3, int j, int j23);

}  // namespace oracle
