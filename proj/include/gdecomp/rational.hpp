#pragma once

// Exact scalar type. Every entry, weight and step length in the library is a
// Rational; there is no floating point anywhere in the core.

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gdecomp/error.hpp"

namespace gdecomp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "p" for integers, "p/q" otherwise. Always in lowest terms.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Decimal rendering truncated toward zero after `digits` places. Lossy; a
/// trailing "..." marks values that were cut.
inline std::string to_decimal(const Rational& r, int digits = 6) {
  BigInt num = numerator(r);
  const BigInt den = denominator(r);
  std::string out;
  if (num < 0) {
    out.push_back('-');
    num = -num;
  }
  BigInt whole = num / den;
  BigInt rem = num % den;
  out += whole.str();
  if (rem == 0) return out;
  out.push_back('.');
  for (int k = 0; k < digits && rem != 0; ++k) {
    rem *= 10;
    out += BigInt(rem / den).str();
    rem %= den;
  }
  if (rem != 0) out += "...";
  return out;
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

/// Accepts "p", "p/q" and exact decimals "d.ddd", each with an optional sign.
/// Decimals are read as p/10^d, never through a binary float.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::ParseError,
                "malformed rational '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash);
    std::string_view q = body.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) return fail();
    const BigInt den{std::string(q)};
    if (den == 0) {
      throw Error(ErrorCode::ParseError,
                  "zero denominator in '" + std::string(text) + "'");
    }
    value = Rational(BigInt(std::string(p)), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (!detail::all_digits(ip) || !detail::all_digits(fp)) return fail();
    BigInt scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    BigInt num = BigInt(std::string(ip)) * scale + BigInt(std::string(fp));
    value = Rational(num, scale);
  } else {
    if (!detail::all_digits(body)) return fail();
    value = Rational(BigInt(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace gdecomp
