#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20
// rewritten comparisons. Exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(const rational<std::int64_t>& a, long b) {
  return a == rational<std::int64_t>(b);
}
}  // namespace boost

namespace addspec {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or a leading-sign variant. Throws Error(MalformedInput).
Rational parse_rational(std::string_view text);

/// Always "p/q", with q > 0 and the fraction in lowest terms.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

// sin(pi x) and cos(pi x). The rational overloads reduce x modulo 2 exactly, so
// integer and half-integer arguments give exact 0 and +-1.
double sin_pi(const Rational& x);
double cos_pi(const Rational& x);
double sin_pi(double x);
double cos_pi(double x);

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept;
};

}  // namespace addspec
