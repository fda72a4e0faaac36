#include "addspec/rational.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "addspec/error.hpp"

namespace addspec {
namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::MalformedInput,
                "not a rational: \"" + std::string(whole) + "\"");
  }
  return v;
}

// x reduced into [0, 2) as num/den with 0 <= num < 2 den.
std::pair<std::int64_t, std::int64_t> reduce_mod2(const Rational& x) {
  const std::int64_t den = x.denominator();
  const std::int64_t period = 2 * den;
  std::int64_t num = x.numerator() % period;
  if (num < 0) num += period;
  return {num, den};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::MalformedInput,
                "zero denominator: \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double sin_pi(const Rational& x) {
  const auto [num, den] = reduce_mod2(x);
  if (num == 0 || num == den) return 0.0;
  if (2 * num == den) return 1.0;
  if (2 * num == 3 * den) return -1.0;
  // Shift into [-1, 1) before scaling by pi.
  const double r = num < den ? static_cast<double>(num) / den
                             : static_cast<double>(num - 2 * den) / den;
  return std::sin(std::numbers::pi * r);
}

double cos_pi(const Rational& x) { return sin_pi(x + Rational(1, 2)); }

double sin_pi(double x) {
  const double r = std::remainder(x, 2.0);
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) {
  const double r = std::remainder(x, 2.0);
  if (r == 0.5 || r == -0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0 || r == -1.0) return -1.0;
  return std::cos(std::numbers::pi * r);
}

std::size_t RationalHash::operator()(const Rational& r) const noexcept {
  const auto h1 = std::hash<std::int64_t>{}(r.numerator());
  const auto h2 = std::hash<std::int64_t>{}(r.denominator());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace addspec
