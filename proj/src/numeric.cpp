#include "cdec/numeric.hpp"

#include "cdec/error.hpp"

#include <charconv>
#include <limits>
#include <string>

namespace cdec {

BigInt binomial_sum(std::uint64_t r, std::uint64_t lo, std::uint64_t hi) {
  if (hi > r) hi = r;
  BigInt term = 1;  // C(r, 0)
  BigInt total = 0;
  for (std::uint64_t i = 0; i <= hi; ++i) {
    if (i > 0) {
      term *= (r - i + 1);
      term /= i;
    }
    if (i >= lo) total += term;
  }
  return total;
}

std::uint64_t floor_mul(const Rational& q, std::uint64_t r) {
  if (q < Rational(0)) throw Error(ErrorKind::kOutOfRange, "negative rational");
  BigInt num = BigInt(q.numerator()) * r;
  return static_cast<std::uint64_t>(num / q.denominator());
}

std::uint64_t ceil_mul(const Rational& q, std::uint64_t r) {
  if (q < Rational(0)) throw Error(ErrorKind::kOutOfRange, "negative rational");
  BigInt num = BigInt(q.numerator()) * r;
  BigInt den = q.denominator();
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

Real to_real(const Rational& q) {
  return Real(q.numerator()) / Real(q.denominator());
}

Real log2_real(const BigInt& x) {
  if (x <= 0) throw Error(ErrorKind::kOutOfRange, "log2 of non-positive");
  // Shift large values down so the conversion to Real is exact enough.
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 300) return boost::multiprecision::log2(Real(x));
  const std::size_t shift = bits - 300;
  BigInt top = x >> shift;
  return boost::multiprecision::log2(Real(top)) + Real(shift);
}

Real log2_real(std::uint64_t x) { return log2_real(BigInt(x)); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    }
    return value;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15 || frac.empty()) {
      throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    const std::int64_t f = parse_int(frac);
    if (f < 0) throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    const std::int64_t mag = (w < 0 ? -w : w) * den + f;
    return Rational(negative ? -mag : mag, den);
  }
  return Rational(parse_int(text), 1);
}

}  // namespace cdec
