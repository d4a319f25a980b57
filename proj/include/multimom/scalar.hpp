#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>
#include <type_traits>

namespace multimom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every algorithm in the library is generic over the scalar field.  Two
// realizations are supported: Rational (exact arithmetic, results are
// provably correct) and double (fast, compared under a relative tolerance).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;

  static Rational from_int(std::int64_t v) { return Rational(v); }

  // p/q in lowest terms; q must be nonzero.
  static Rational ratio(std::int64_t p, std::int64_t q) { return Rational(p, q); }

  static double to_double(const Rational& v) { return v.convert_to<double>(); }

  static bool is_zero(const Rational& v) { return v.is_zero(); }

  // Canonical wire form: "p/q" with q > 1, plain "p" for integers.
  static std::string str(const Rational& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;

  static double from_int(std::int64_t v) { return static_cast<double>(v); }

  static double ratio(std::int64_t p, std::int64_t q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }

  static double to_double(double v) { return v; }

  static bool is_zero(double v) { return v == 0.0; }

  // Shortest round-trip decimal form.
  static std::string str(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec == std::errc()) return std::string(buf, res.ptr);
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  }
};

template <class S>
concept ScalarType = std::is_same_v<S, Rational> || std::is_same_v<S, double>;

// x^e for non-negative integer e, with the 0^0 = 1 convention used
// throughout (empty products are 1).
template <ScalarType S>
S pow_nonneg(const S& x, std::int64_t e) {
  S r = scalar_traits<S>::from_int(1);
  for (std::int64_t t = 0; t < e; ++t) r *= x;
  return r;
}

}  // namespace multimom
