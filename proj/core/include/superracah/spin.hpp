#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sr {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Spin stored as its twice-value 2j.
struct Spin {
  int twice = 0;

  constexpr Spin() = default;
  constexpr explicit Spin(int twice_value) : twice(twice_value) {
    if (twice_value < 0) throw DomainError("spin twice-value must be >= 0");
  }
  static constexpr Spin from_twice(int t) { return Spin(t); }

  constexpr bool integral() const { return (twice & 1) == 0; }
  // [j], the integral part.
  constexpr int floor() const { return twice / 2; }
  double value() const { return twice / 2.0; }
  std::string str() const;

  friend constexpr auto operator<=>(Spin, Spin) = default;
};

// Integral part [t/2] for a possibly negative twice-value.
constexpr int floor_half(int twice) { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
constexpr int tau_twice(int twice) { return twice & 1; }

constexpr int tau(Spin s) { return floor_half(s.twice + 1) - floor_half(s.twice); }
constexpr int phase_two_kappa(Spin s) { return 1 - 2 * tau(s); }
constexpr int sign_of_exponent(long e) { return (e % 2 == 0) ? 1 : -1; }

enum class Algebra { su2, osp };

constexpr bool is_triangle_twice(int a, int b, int c, Algebra alg) {
  if (a < 0 || b < 0 || c < 0) return false;
  int lo = a > b ? a - b : b - a;
  if (c < lo || c > a + b) return false;
  if (alg == Algebra::su2 && ((a + b + c) & 1)) return false;
  return true;
}
constexpr bool is_triangle(Spin a, Spin b, Spin c, Algebra alg) {
  return is_triangle_twice(a.twice, b.twice, c.twice, alg);
}

enum class ParityCase { a, b, c, d };

// (a) both integral, (b) both half-integral, (c) lambda half, kappa integral, (d) lambda integral, kappa half.
constexpr ParityCase parity_case(Spin lambda, Spin kappa) {
  int tl = tau(lambda), tk = tau(kappa);
  if (!tl && !tk) return ParityCase::a;
  if (tl && tk) return ParityCase::b;
  if (tl) return ParityCase::c;
  return ParityCase::d;
}
char parity_tag(ParityCase p);

// Accepts "3/2", "2", "1.5".
Spin parse_spin(std::string_view text);

}  // namespace sr
