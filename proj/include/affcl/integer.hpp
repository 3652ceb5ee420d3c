#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "affcl/errors.hpp"

namespace affcl {

using Integer = boost::multiprecision::cpp_int;
using IntegerVector = std::vector<Integer>;

inline Integer abs(const Integer &a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer &a, const Integer &b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer &a, const Integer &b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

// cpp_int division truncates toward zero.
inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Remainder in [0, |b|).
inline Integer floor_mod(const Integer &a, const Integer &b) {
  Integer r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

inline bool fits_int64(const Integer &a) {
  return a >= std::numeric_limits<std::int64_t>::min() &&
         a <= std::numeric_limits<std::int64_t>::max();
}

inline IntegerVector make_vector(std::initializer_list<long long> values) {
  IntegerVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

inline IntegerVector make_vector(std::span<const long long> values) {
  return IntegerVector(values.begin(), values.end());
}

inline IntegerVector zero_vector(std::size_t n) { return IntegerVector(n); }

inline bool is_zero(std::span<const Integer> v) {
  for (const auto &x : v)
    if (x != 0) return false;
  return true;
}

inline void require_same_length(std::span<const Integer> a,
                                std::span<const Integer> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  require_same_length(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntegerVector add(std::span<const Integer> a,
                         std::span<const Integer> b) {
  require_same_length(a, b);
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IntegerVector subtract(std::span<const Integer> a,
                              std::span<const Integer> b) {
  require_same_length(a, b);
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IntegerVector scale(const Integer &k, std::span<const Integer> a) {
  IntegerVector out(a.begin(), a.end());
  for (auto &x : out) x *= k;
  return out;
}

/// gcd of all entries, 0 for the zero vector.
inline Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto &x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content; the zero vector is returned unchanged.
inline IntegerVector primitive(std::span<const Integer> v) {
  IntegerVector out(v.begin(), v.end());
  Integer g = content(v);
  if (g > 1)
    for (auto &x : out) x /= g;
  return out;
}

inline std::string to_string(const Integer &a) { return a.str(); }

inline std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

} // namespace affcl
