#pragma once

// Exact arithmetic carriers. Every mass, cost and curvature in the library is
// a Rational; unbounded integers appear in flow amounts and size bounds.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lly {

using Integer = mpz_class;
using Rational = mpq_class;

class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced fraction num/den. Throws on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw RationalParseError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p/q", an integer, or a finite decimal such as "-0.125".
/// Decimals convert exactly: digits over a power of ten.
inline Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
      throw RationalParseError("malformed fraction '" + original + "'");
    }
    Integer d(std::string(den), 10);
    if (d == 0) throw RationalParseError("zero denominator in '" + original + "'");
    value = make_rational(Integer(std::string(num), 10), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::all_digits(whole)) ||
        (!frac.empty() && !detail::all_digits(frac))) {
      throw RationalParseError("malformed decimal '" + original + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    value = make_rational(Integer(digits, 10), pow(Integer(10), frac.size()));
  } else {
    if (!detail::all_digits(text)) throw RationalParseError("malformed number '" + original + "'");
    value = Rational(Integer(std::string(text), 10));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace lly
