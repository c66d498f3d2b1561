#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "superracah/exact.hpp"

namespace sr {

using Decimal = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 60;
inline constexpr int kDefaultToleranceExponent = 30;

// Sets the default mpfr precision for the current thread and restores it on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Decimal::default_precision()) {
    Decimal::default_precision(digits);
  }
  ~PrecisionScope() { Decimal::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Decimal to_decimal(const BigInt& z) { return Decimal(z.get_str()); }

inline Decimal to_decimal(const Rational& r) {
  return to_decimal(BigInt(r.get_num())) / to_decimal(BigInt(r.get_den()));
}

inline Decimal to_decimal(const ExactValue& v) {
  Decimal c = to_decimal(v.coeff());
  if (v.radicand() == 1) return c;
  return c * boost::multiprecision::sqrt(to_decimal(v.radicand()));
}

inline Decimal to_decimal(const SurdSum& s) {
  Decimal acc = 0;
  for (const auto& [r, c] : s.terms()) acc += to_decimal(c) * boost::multiprecision::sqrt(to_decimal(r));
  return acc;
}

inline Decimal tolerance_from_exponent(int neg_exponent) {
  return boost::multiprecision::pow(Decimal(10), -neg_exponent);
}

// Scientific rendering with the given number of significant digits.
inline std::string format_decimal(const Decimal& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace sr
