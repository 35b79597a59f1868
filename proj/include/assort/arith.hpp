#pragma once

#include <cstdint>
#include <string>

#include "assort/errors.hpp"

namespace assort {

/// 128-bit signed integer used for every invariant aggregate.  All arithmetic
/// on these values goes through the checked helpers below; overflow is a hard
/// error, never silent wraparound.
using Wide = __int128;

inline Wide checked_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Wide checked_sub(Wide a, Wide b) {
  Wide out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Wide checked_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

inline int wide_sign(Wide v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

/// Exact rational in lowest terms with positive denominator.
struct Rational {
  Wide num = 0;
  Wide den = 1;

  static Rational make(Wide n, Wide d) {
    if (d == 0) throw BadParams("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }

  bool operator==(const Rational&) const = default;

  int sign() const { return wide_sign(num); }

  /// "p/q" in lowest terms.
  std::string str() const { return wide_to_string(num) + "/" + wide_to_string(den); }

  /// Truncated decimal expansion with the requested number of fractional
  /// digits, computed by exact long division.
  std::string decimal(int digits) const {
    Wide n = wide_abs(num);
    Wide whole = n / den;
    Wide rem = n % den;
    std::string out = (num < 0 && (whole != 0 || rem != 0)) ? "-" : "";
    out += wide_to_string(whole);
    if (digits > 0) {
      out.push_back('.');
      for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
        rem %= den;
      }
    }
    return out;
  }
};

}  // namespace assort
