#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "superracah/spin.hpp"

namespace sr {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class FactorialKind { single, dbl };

// n! for n >= 0, n!! for n >= -1 with (-1)!! = 0!! = 1.
BigInt exact_factorial(long n, FactorialKind kind = FactorialKind::single);
inline BigInt factorial(long n) { return exact_factorial(n, FactorialKind::single); }
inline BigInt double_factorial(long n) { return exact_factorial(n, FactorialKind::dbl); }
BigInt binomial(long n, long k);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);
Rational parse_rational(std::string_view text);

// Canonical squarefree part: n = s^2 * r with r squarefree. Trial division by
// primes below 2^16 then a perfect-square test on the cofactor, so a cofactor
// p^2*q with p >= 2^16 and q != 1 would stay unreduced.
void squarefree_split(const BigInt& n, BigInt& square_root_part, BigInt& squarefree_part);

class RadicandMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// coeff * sqrt(radicand), radicand a squarefree positive integer (1 when rational).
class ExactValue {
 public:
  ExactValue() : coeff_(0), rad_(1) {}
  ExactValue(const Rational& r) : coeff_(r), rad_(1) {}  // NOLINT implicit
  ExactValue(long n) : coeff_(n), rad_(1) {}             // NOLINT implicit

  static ExactValue sqrt_of(const Rational& r);
  static ExactValue make(const Rational& coeff, const Rational& radicand);

  const Rational& coeff() const { return coeff_; }
  const BigInt& radicand() const { return rad_; }
  bool is_zero() const { return sgn(coeff_) == 0; }
  bool is_rational() const { return is_zero() || rad_ == 1; }
  int sign() const { return sgn(coeff_); }
  Rational squared() const { return coeff_ * coeff_ * Rational(rad_); }

  ExactValue operator-() const;
  friend ExactValue operator*(const ExactValue& x, const ExactValue& y);
  friend ExactValue operator/(const ExactValue& x, const ExactValue& y);
  ExactValue& operator*=(const ExactValue& y) { return *this = *this * y; }
  ExactValue inverse() const;

  // Sum defined only for matching radicands (or a zero operand).
  static std::optional<ExactValue> try_add(const ExactValue& x, const ExactValue& y);
  friend ExactValue operator+(const ExactValue& x, const ExactValue& y);
  friend ExactValue operator-(const ExactValue& x, const ExactValue& y) { return x + (-y); }
  ExactValue& operator+=(const ExactValue& y) { return *this = *this + y; }

  friend bool operator==(const ExactValue& x, const ExactValue& y);
  friend bool operator!=(const ExactValue& x, const ExactValue& y) { return !(x == y); }

  // "2*sqrt(6)", "-1/6", "3/2*sqrt(5)", "sqrt(2)".
  std::string str() const;

 private:
  ExactValue(Rational c, BigInt r) : coeff_(std::move(c)), rad_(std::move(r)) {}
  void normalize_zero() {
    if (sgn(coeff_) == 0) rad_ = 1;
  }

  Rational coeff_;
  BigInt rad_;
};

ExactValue surd_mul(const ExactValue& x, const ExactValue& y);
std::optional<ExactValue> surd_try_add(const ExactValue& x, const ExactValue& y);

// Parses "r/s", "r/s*sqrt(p/q)", "sqrt(p/q)", "-sqrt(3)".
ExactValue parse_exact(std::string_view text);
bool looks_exact(std::string_view text);

// Finite Q-linear combination of square roots of distinct squarefree integers.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const ExactValue& v) { add(v); }  // NOLINT implicit

  void add(const ExactValue& v);
  void add(const SurdSum& s);
  SurdSum& operator+=(const ExactValue& v) { add(v); return *this; }
  SurdSum& operator+=(const SurdSum& s) { add(s); return *this; }
  SurdSum& operator-=(const SurdSum& s);
  friend SurdSum operator*(const SurdSum& s, const ExactValue& v);
  friend SurdSum operator*(const SurdSum& s, const SurdSum& t);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BigInt, Rational>& terms() const { return terms_; }
  std::optional<ExactValue> as_single() const;
  friend bool operator==(const SurdSum& x, const SurdSum& y) { return x.terms_ == y.terms_; }
  std::string str() const;

 private:
  std::map<BigInt, Rational> terms_;
};

}  // namespace sr
