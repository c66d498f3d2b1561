#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superracah/exact.hpp"

namespace sr {

inline std::string render_coeff(const Rational& r) { return to_string(r); }
inline std::string render_coeff(const ExactValue& v) { return v.str(); }
inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool coeff_is_zero(const ExactValue& v) { return v.is_zero(); }

// d0^{d0_power} * sum_m c_m u^{D-m} v^m with u = c0 + d0^2, v = d0^2.
template <class T>
class BasicHomPoly {
 public:
  BasicHomPoly() : BasicHomPoly(0, 0) {}
  BasicHomPoly(int degree, int d0_power) : degree_(degree), d0_(d0_power), c_(degree + 1, T(0)) {
    if (degree < 0 || d0_power < 0 || d0_power > 1) throw std::invalid_argument("bad homogeneous polynomial shape");
  }
  static BasicHomPoly constant(const T& value) {
    BasicHomPoly p(0, 0);
    p.c_[0] = value;
    return p;
  }
  static BasicHomPoly one() { return constant(T(1)); }
  // a*u + b*v
  static BasicHomPoly linear(const T& a, const T& b) {
    BasicHomPoly p(1, 0);
    p.c_[0] = a;
    p.c_[1] = b;
    return p;
  }
  static BasicHomPoly d0() { return BasicHomPoly(0, 1).set(0, T(1)); }

  int degree() const { return degree_; }
  int d0_power() const { return d0_; }
  // Weighted degree with u, v of weight 2 and d0 of weight 1.
  int weight() const { return 2 * degree_ + d0_; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](int m) const { return c_.at(m); }
  T coeff(int m) const { return (m < 0 || m > degree_) ? T(0) : c_[m]; }
  BasicHomPoly& set(int m, const T& value) {
    c_.at(m) = value;
    return *this;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!coeff_is_zero(x)) return false;
    return true;
  }

  BasicHomPoly& operator+=(const BasicHomPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (o.degree_ != degree_ || o.d0_ != d0_) throw std::invalid_argument("adding polynomials of different shape");
    for (int m = 0; m <= degree_; ++m) c_[m] = c_[m] + o.c_[m];
    return *this;
  }
  friend BasicHomPoly operator+(BasicHomPoly a, const BasicHomPoly& b) { return a += b; }
  BasicHomPoly operator-() const {
    BasicHomPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend BasicHomPoly operator-(const BasicHomPoly& a, const BasicHomPoly& b) { return a + (-b); }

  friend BasicHomPoly operator*(BasicHomPoly p, const T& s) {
    for (auto& x : p.c_) x = x * s;
    return p;
  }
  friend BasicHomPoly operator*(const T& s, const BasicHomPoly& p) { return p * s; }

  friend BasicHomPoly operator*(const BasicHomPoly& a, const BasicHomPoly& b) {
    int dd = a.d0_ + b.d0_;
    int extra = dd / 2;  // d0^2 -> v
    BasicHomPoly r(a.degree_ + b.degree_ + extra, dd % 2);
    for (int i = 0; i <= a.degree_; ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (int j = 0; j <= b.degree_; ++j) r.c_[i + j + extra] = r.c_[i + j + extra] + a.c_[i] * b.c_[j];
    }
    return r;
  }
  BasicHomPoly& operator*=(const BasicHomPoly& o) { return *this = *this * o; }

  BasicHomPoly times_d0() const { return *this * d0(); }

  friend bool operator==(const BasicHomPoly& a, const BasicHomPoly& b) {
    bool za = a.is_zero(), zb = b.is_zero();
    if (za || zb) return za && zb;
    return a.degree_ == b.degree_ && a.d0_ == b.d0_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BasicHomPoly& a, const BasicHomPoly& b) { return !(a == b); }

  template <class V>
  V evaluate(const V& u, const V& v, const V& d0val) const {
    V acc = 0;
    for (int m = 0; m <= degree_; ++m) {
      V term = V(c_[m]);
      for (int i = 0; i < degree_ - m; ++i) term *= u;
      for (int i = 0; i < m; ++i) term *= v;
      acc += term;
    }
    if (d0_) acc *= d0val;
    return acc;
  }

  // Coefficients over c0^{D-k} (d0^2)^k using u = c0 + v.
  std::vector<T> c0_basis() const {
    std::vector<T> out(degree_ + 1, T(0));
    for (int m = 0; m <= degree_; ++m) {
      int n = degree_ - m;
      for (int i = 0; i <= n; ++i) {
        // u^n = sum_i C(n,i) c0^{n-i} v^i
        T b = T(Rational(binomial(n, i)));
        out[m + i] = out[m + i] + c_[m] * b;
      }
    }
    return out;
  }

  std::string str(bool c0_display = false) const {
    if (is_zero()) return "0";
    std::vector<T> cs = c0_display ? c0_basis() : c_;
    const char* first = c0_display ? "c0" : "u";
    const char* second = "v";
    std::string body;
    int nterms = 0;
    for (int m = 0; m <= degree_; ++m) {
      if (coeff_is_zero(cs[m])) continue;
      std::string mono;
      auto power = [](const char* s, int e) {
        if (e == 0) return std::string();
        if (e == 1) return std::string(s);
        return std::string(s) + "^" + std::to_string(e);
      };
      std::string a = power(first, degree_ - m);
      std::string b = c0_display ? power("d0", 2 * m) : power(second, m);
      mono = a.empty() ? b : (b.empty() ? a : a + "*" + b);
      std::string c = render_coeff(cs[m]);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c.erase(0, 1);
      std::string term;
      if (mono.empty()) {
        term = c;
      } else if (c == "1") {
        term = mono;
      } else {
        term = c + "*" + mono;
      }
      if (nterms == 0) {
        body = (neg ? "-" : "") + term;
      } else {
        body += neg ? " - " : " + ";
        body += term;
      }
      ++nterms;
    }
    if (!d0_) return body;
    if (nterms == 1 && body.find('*') == std::string::npos && degree_ == 0) {
      if (body == "1") return "d0";
      if (body == "-1") return "-d0";
      return body + "*d0";
    }
    if (nterms == 1) return body + "*d0";
    return "d0*(" + body + ")";
  }

 private:
  int degree_;
  int d0_;
  std::vector<T> c_;
};

using BiHomPoly = BasicHomPoly<Rational>;

// Lift an exact-rational polynomial to another coefficient ring.
template <class T, class F>
BasicHomPoly<T> lift(const BiHomPoly& p, F convert) {
  BasicHomPoly<T> r(p.degree(), p.d0_power());
  for (int m = 0; m <= p.degree(); ++m) r.set(m, convert(p[m]));
  return r;
}
template <class T>
BasicHomPoly<T> lift(const BiHomPoly& p) {
  return lift<T>(p, [](const Rational& x) { return T(x); });
}

}  // namespace sr
