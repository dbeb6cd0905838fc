#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sqrtn {

using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Parse "p", "p/q" or "-p/q" into a rational.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s), 1);
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

/// Exact rational square root, if one exists.
inline std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < Rat(0)) return std::nullopt;
  auto isqrt = [](long long v) -> std::optional<long long> {
    if (v < 0) return std::nullopt;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    for (long long c = std::max<long long>(0, s - 2); c <= s + 2; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  auto n = isqrt(r.numerator());
  auto d = isqrt(r.denominator());
  if (!n || !d) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace sqrtn
