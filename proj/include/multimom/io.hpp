#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multimom/scalar.hpp"

namespace multimom {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::int64_t parse_int64(const std::string& s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return v;
}

// "a" or "a..b"
inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const std::size_t pos = s.find("..");
  if (pos == std::string::npos) {
    const std::int64_t v = parse_int64(s);
    return {v, v};
  }
  return {parse_int64(s.substr(0, pos)), parse_int64(s.substr(pos + 2))};
}

// "p/q" (q nonzero) or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
  const std::size_t pos = s.find('/');
  const std::string num_part = pos == std::string::npos ? s : s.substr(0, pos);
  const std::string den_part = pos == std::string::npos ? "1" : s.substr(pos + 1);
  // The big-integer constructor treats "" as 0; reject it explicitly.
  if (num_part.empty() || den_part.empty()) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  try {
    const BigInt num(num_part);
    const BigInt den(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

// Accepts both decimal literals and "p/q".
inline double parse_double(const std::string& s) {
  const std::size_t pos = s.find('/');
  if (pos != std::string::npos) {
    return parse_double(s.substr(0, pos)) / parse_double(s.substr(pos + 1));
  }
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

template <ScalarType S>
S parse_scalar(const std::string& s) {
  if constexpr (scalar_traits<S>::exact) {
    return parse_rational(s);
  } else {
    return parse_double(s);
  }
}

template <ScalarType S>
std::vector<S> parse_scalar_list(const std::string& s) {
  std::vector<S> out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_scalar<S>(part));
  return out;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& part : split(s, ',')) {
    out.push_back(static_cast<int>(parse_int64(part)));
  }
  return out;
}

// Minimal csv field quoting: wrap when the field contains a comma, quote,
// or newline, doubling interior quotes.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace multimom
