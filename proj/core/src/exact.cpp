#include "superracah/exact.hpp"

#include <array>
#include <charconv>
#include <mutex>
#include <vector>

namespace sr {

std::string Spin::str() const {
  if (integral()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

char parity_tag(ParityCase p) {
  switch (p) {
    case ParityCase::a: return 'a';
    case ParityCase::b: return 'b';
    case ParityCase::c: return 'c';
    case ParityCase::d: return 'd';
  }
  return '?';
}

Spin parse_spin(std::string_view text) {
  auto bad = [&] { return DomainError("malformed spin '" + std::string(text) + "'"); };
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw bad();
    return v;
  };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = to_int(text.substr(0, slash));
    int den = to_int(text.substr(slash + 1));
    if (den == 1) return Spin(2 * num);
    if (den == 2) return Spin(num);
    throw bad();
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int whole = dot == 0 ? 0 : to_int(text.substr(0, dot));
    auto frac = text.substr(dot + 1);
    if (frac == "5") return Spin(2 * whole + 1);
    if (frac.empty() || frac.find_first_not_of('0') == std::string_view::npos) return Spin(2 * whole);
    throw bad();
  }
  return Spin(2 * to_int(text));
}

namespace {

std::vector<BigInt> g_fact{1};
std::mutex g_fact_mu;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    constexpr unsigned limit = 1u << 16;
    std::vector<bool> sieve(limit, true);
    std::vector<unsigned> out;
    for (unsigned i = 2; i < limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = 1ul * i * i; j < limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

}  // namespace

BigInt exact_factorial(long n, FactorialKind kind) {
  if (kind == FactorialKind::dbl) {
    if (n < -1) throw DomainError("double factorial argument below -1");
    BigInt r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
  }
  if (n < 0) throw DomainError("factorial of negative argument");
  std::lock_guard lock(g_fact_mu);
  while (static_cast<long>(g_fact.size()) <= n) {
    BigInt next = g_fact.back() * static_cast<unsigned long>(g_fact.size());
    g_fact.push_back(std::move(next));
  }
  return g_fact[n];
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }
std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw DomainError("malformed rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

void squarefree_split(const BigInt& n, BigInt& root, BigInt& rest) {
  if (n <= 0) throw DomainError("squarefree_split needs a positive integer");
  root = 1;
  rest = 1;
  BigInt m = n;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    return;
  }
  for (unsigned p : small_primes()) {
    if (m == 1) break;
    if (BigInt(p) * p > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e & 1) rest *= p;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      BigInt s;
      mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
      root *= s;
    } else {
      rest *= m;
    }
  }
}

ExactValue ExactValue::make(const Rational& coeff, const Rational& radicand) {
  if (sgn(radicand) < 0) throw DomainError("negative radicand");
  if (sgn(coeff) == 0 || sgn(radicand) == 0) return ExactValue();
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt pq = radicand.get_num() * radicand.get_den();
  BigInt root, rest;
  squarefree_split(pq, root, rest);
  Rational scale(root, radicand.get_den());
  scale.canonicalize();
  Rational c = coeff * scale;
  return ExactValue(std::move(c), std::move(rest));
}

ExactValue ExactValue::sqrt_of(const Rational& r) { return make(Rational(1), r); }

ExactValue ExactValue::operator-() const { return ExactValue(Rational(-coeff_), rad_); }

ExactValue operator*(const ExactValue& x, const ExactValue& y) {
  if (x.is_zero() || y.is_zero()) return ExactValue();
  if (x.rad_ == 1) return ExactValue(Rational(x.coeff_ * y.coeff_), y.rad_);
  if (y.rad_ == 1) return ExactValue(Rational(x.coeff_ * y.coeff_), x.rad_);
  // sqrt(r)*sqrt(s) = g*sqrt((r/g)(s/g)) with g = gcd(r,s); stays squarefree.
  BigInt g = gcd(x.rad_, y.rad_);
  BigInt r = (x.rad_ / g) * (y.rad_ / g);
  Rational c = x.coeff_ * y.coeff_ * Rational(g);
  return ExactValue(std::move(c), std::move(r));
}

ExactValue ExactValue::inverse() const {
  if (is_zero()) throw DomainError("division by zero surd");
  // 1/(c sqrt r) = sqrt(r)/(c r)
  Rational c = 1 / (coeff_ * Rational(rad_));
  return ExactValue(std::move(c), rad_);
}

ExactValue operator/(const ExactValue& x, const ExactValue& y) { return x * y.inverse(); }

std::optional<ExactValue> ExactValue::try_add(const ExactValue& x, const ExactValue& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.rad_ != y.rad_) return std::nullopt;
  ExactValue r(Rational(x.coeff_ + y.coeff_), x.rad_);
  r.normalize_zero();
  return r;
}

ExactValue operator+(const ExactValue& x, const ExactValue& y) {
  auto r = ExactValue::try_add(x, y);
  if (!r) throw RadicandMismatch("cannot add " + x.str() + " and " + y.str() + ": unlike radicands");
  return *r;
}

bool operator==(const ExactValue& x, const ExactValue& y) {
  return x.coeff_ == y.coeff_ && (x.is_zero() || x.rad_ == y.rad_);
}

std::string ExactValue::str() const {
  if (is_zero()) return "0";
  if (rad_ == 1) return to_string(coeff_);
  std::string root = "sqrt(" + to_string(rad_) + ")";
  if (coeff_ == 1) return root;
  if (coeff_ == -1) return "-" + root;
  return to_string(coeff_) + "*" + root;
}

ExactValue surd_mul(const ExactValue& x, const ExactValue& y) { return x * y; }
std::optional<ExactValue> surd_try_add(const ExactValue& x, const ExactValue& y) {
  return ExactValue::try_add(x, y);
}

bool looks_exact(std::string_view text) {
  return text.find_first_of(".eE") == std::string_view::npos || text.find("sqrt") != std::string_view::npos;
}

ExactValue parse_exact(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return ExactValue(parse_rational(s));
  if (s.back() != ')') throw DomainError("malformed surd '" + std::string(text) + "'");
  Rational rad = parse_rational(s.substr(pos + 5, s.size() - pos - 6));
  std::string head = s.substr(0, pos);
  Rational coeff(1);
  if (head == "-") {
    coeff = -1;
  } else if (!head.empty() && head != "+") {
    if (head.back() != '*') throw DomainError("malformed surd '" + std::string(text) + "'");
    coeff = parse_rational(head.substr(0, head.size() - 1));
  }
  return ExactValue::make(coeff, rad);
}

void SurdSum::add(const ExactValue& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(v.radicand(), v.coeff());
  if (!inserted) {
    it->second += v.coeff();
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void SurdSum::add(const SurdSum& s) {
  for (const auto& [r, c] : s.terms_) add(ExactValue::make(c, Rational(r)));
}

SurdSum& SurdSum::operator-=(const SurdSum& s) {
  for (const auto& [r, c] : s.terms_) add(ExactValue::make(Rational(-c), Rational(r)));
  return *this;
}

SurdSum operator*(const SurdSum& s, const ExactValue& v) {
  SurdSum out;
  for (const auto& [r, c] : s.terms_) out.add(ExactValue::make(c, Rational(r)) * v);
  return out;
}

SurdSum operator*(const SurdSum& s, const SurdSum& t) {
  SurdSum out;
  for (const auto& [r, c] : t.terms_) out.add(s * ExactValue::make(c, Rational(r)));
  return out;
}

std::optional<ExactValue> SurdSum::as_single() const {
  if (terms_.empty()) return ExactValue();
  if (terms_.size() != 1) return std::nullopt;
  return ExactValue::make(terms_.begin()->second, Rational(terms_.begin()->first));
}

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [r, c] : terms_) {
    std::string t = ExactValue::make(c, Rational(r)).str();
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace sr
