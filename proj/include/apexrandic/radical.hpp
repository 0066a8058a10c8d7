#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "apexrandic/errors.hpp"

namespace apexrandic {

using Rational = mpq_class;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

/// m = s * t^2 with s squarefree. Trial division; radicands here are tiny.
inline std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t m) {
  if (m == 0) throw DomainError("squarefree_split: zero");
  std::uint64_t s = 1;
  std::uint64_t t = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) t *= p;
    if (e % 2) s *= p;
  }
  s *= m;
  return {s, t};
}

/// Rational closed interval [lo, hi].
struct Enclosure {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

/// Exact value sum_i q_i * sqrt(s_i) with rational q_i and distinct squarefree
/// s_i (s = 1 holds the rational part). Zero coefficients are never stored, so
/// representation equality is numerical equality.
class RadicalValue {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  RadicalValue() = default;
  RadicalValue(const Rational& q) { add_term(1, q); }  // NOLINT(google-explicit-constructor)
  RadicalValue(long q) : RadicalValue(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// q * sqrt(m) for any positive integer m.
  static RadicalValue sqrt_term(const Rational& q, std::uint64_t m) {
    auto [s, t] = squarefree_split(m);
    RadicalValue r;
    r.add_term(s, q * Rational(static_cast<unsigned long>(t)));
    return r;
  }

  static RadicalValue sqrt(std::uint64_t m) { return sqrt_term(Rational(1), m); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Coefficient of sqrt(s), s squarefree.
  Rational coefficient(std::uint64_t s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  RadicalValue& operator+=(const RadicalValue& o) {
    for (const auto& [s, q] : o.terms_) add_term(s, q);
    return *this;
  }
  RadicalValue& operator-=(const RadicalValue& o) {
    for (const auto& [s, q] : o.terms_) add_term(s, -q);
    return *this;
  }
  RadicalValue& operator*=(const Rational& q_in) {
    Rational q(q_in);
    q.canonicalize();
    if (q == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [_, c] : terms_) c *= q;
    return *this;
  }

  friend RadicalValue operator+(RadicalValue a, const RadicalValue& b) { return a += b; }
  friend RadicalValue operator-(RadicalValue a, const RadicalValue& b) { return a -= b; }
  friend RadicalValue operator-(RadicalValue a) { return a *= Rational(-1); }
  friend RadicalValue operator*(RadicalValue a, const Rational& q) { return a *= q; }
  friend RadicalValue operator*(const Rational& q, RadicalValue a) { return a *= q; }

  /// General product; sqrt(s1)*sqrt(s2) = g*sqrt((s1/g)(s2/g)) with g = gcd(s1, s2).
  friend RadicalValue operator*(const RadicalValue& a, const RadicalValue& b) {
    RadicalValue out;
    for (const auto& [s1, q1] : a.terms_) {
      for (const auto& [s2, q2] : b.terms_) {
        std::uint64_t g = std::gcd(s1, s2);
        unsigned __int128 s = static_cast<unsigned __int128>(s1 / g) * (s2 / g);
        if (s > UINT64_MAX) throw DomainError("radicand overflow in product");
        out.add_term(static_cast<std::uint64_t>(s), q1 * q2 * Rational(static_cast<unsigned long>(g)));
      }
    }
    return out;
  }

  bool operator==(const RadicalValue& o) const { return terms_ == o.terms_; }

  /// "q0 + q1*sqrt(s1) - q2*sqrt(s2)", rationals as p/q, ascending radicand.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, q] : terms_) {
      Rational mag = abs(q);
      if (first) {
        if (q < 0) out += "-";
      } else {
        out += q < 0 ? " - " : " + ";
      }
      first = false;
      if (s == 1) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += "sqrt(" + std::to_string(s) + ")";
      }
    }
    return out;
  }

 private:
  // Callers may pass p/q built with Rational(p, q), which GMP does not reduce.
  void add_term(std::uint64_t s, const Rational& q_in) {
    Rational q(q_in);
    q.canonicalize();
    if (q == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Exact 1/sqrt(m) = (1/(s t)) sqrt(s) where m = s t^2.
inline RadicalValue inv_sqrt(std::uint64_t m) {
  if (m == 0) throw DomainError("inv_sqrt: zero");
  auto [s, t] = squarefree_split(m);
  return RadicalValue::sqrt_term(Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(s)) * static_cast<unsigned long>(t)), s);
}

/// Exact 1/sqrt(x) for positive rational x = p/q: sqrt(p q) / p.
inline RadicalValue inv_sqrt(const Rational& x) {
  if (x <= 0) throw DomainError("inv_sqrt: non-positive argument");
  mpz_class p = x.get_num();
  mpz_class q = x.get_den();
  mpz_class pq = p * q;
  if (!pq.fits_ulong_p()) throw DomainError("inv_sqrt: radicand too large");
  return RadicalValue::sqrt_term(Rational(mpz_class(1), p), pq.get_ui());
}

/// Rigorous enclosure with each sqrt resolved to `bits` fractional bits.
inline Enclosure enclose(const RadicalValue& a, unsigned bits) {
  Enclosure e{Rational(0), Rational(0)};
  mpz_class scale = mpz_class(1) << bits;
  for (const auto& [s, q] : a.terms()) {
    if (s == 1) {
      e.lo += q;
      e.hi += q;
      continue;
    }
    mpz_class r;
    mpz_class radicand = mpz_class(static_cast<unsigned long>(s)) << (2 * bits);
    mpz_sqrt(r.get_mpz_t(), radicand.get_mpz_t());
    Rational down(r, scale);
    Rational up(r + 1, scale);
    down.canonicalize();
    up.canonicalize();
    if (q > 0) {
      e.lo += q * down;
      e.hi += q * up;
    } else {
      e.lo += q * up;
      e.hi += q * down;
    }
  }
  return e;
}

/// Exact sign: structural zero test, otherwise enclosures from 64 bits,
/// doubling until zero is excluded. Terminates because distinct squarefree
/// square roots are linearly independent over Q.
inline Sign sign(const RadicalValue& a) {
  if (a.is_zero()) return Sign::Zero;
  if (a.terms().size() == 1) return a.terms().begin()->second > 0 ? Sign::Positive : Sign::Negative;
  for (unsigned bits = 64;; bits *= 2) {
    auto e = enclose(a, bits);
    if (e.lo > 0) return Sign::Positive;
    if (e.hi < 0) return Sign::Negative;
  }
}

inline int compare(const RadicalValue& a, const RadicalValue& b) {
  return static_cast<int>(sign(a - b));
}

/// Enclosure of width at most 10^-digits.
inline Enclosure to_float(const RadicalValue& a, int digits) {
  if (digits < 1) throw UsageError("to_float: precision must be at least 1 digit");
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational limit(mpz_class(1), ten_pow);
  for (unsigned bits = 64;; bits *= 2) {
    auto e = enclose(a, bits);
    if (e.width() <= limit) return e;
  }
}

namespace detail {

inline mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

/// x != 0 rounded half away from zero to `sig` significant digits, fixed notation.
inline std::string round_significant(const Rational& x, int sig) {
  bool negative = x < 0;
  Rational ax = abs(x);
  // 10^e <= ax < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(ax.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(ax.get_den_mpz_t(), 10));
  auto ten_to = [](long k) {
    return k >= 0 ? Rational(pow10(k)) : Rational(mpz_class(1), pow10(-k));
  };
  while (ten_to(e) > ax) --e;
  while (ten_to(e + 1) <= ax) ++e;
  Rational scaled = ax * ten_to(sig - 1 - e) + Rational(1, 2);
  mpz_class n = scaled.get_num() / scaled.get_den();
  if (n == pow10(sig)) {
    n /= 10;
    ++e;
  }
  std::string digits = n.get_str();
  std::string out;
  if (e >= sig - 1) {
    out = digits + std::string(static_cast<std::size_t>(e - sig + 1), '0');
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          digits.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }
  return negative ? "-" + out : out;
}

}  // namespace detail

/// Decimal text with `sig` significant digits, correctly rounded: the
/// enclosure is refined until both ends round to the same digits.
inline std::string to_decimal(const RadicalValue& a, int sig = 12) {
  if (a.is_zero()) return "0";
  if (a.is_rational()) return detail::round_significant(a.rational_part(), sig);
  for (unsigned bits = 64;; bits *= 2) {
    auto e = enclose(a, bits);
    if ((e.lo > 0) != (e.hi > 0) || e.lo == 0 || e.hi == 0) continue;
    auto lo = detail::round_significant(e.lo, sig);
    if (lo == detail::round_significant(e.hi, sig)) return lo;
  }
}

/// Nearest double (within one enclosure width of 2^-64).
inline double to_double(const RadicalValue& a) {
  auto e = enclose(a, 64);
  Rational mid = (e.lo + e.hi) / 2;
  return mid.get_d();
}

}  // namespace apexrandic
