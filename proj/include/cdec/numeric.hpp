#pragma once

// Exact and high-precision arithmetic shared by the bound checks.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string_view>

namespace cdec {

using BigInt = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_100;
using Rational = boost::rational<std::int64_t>;

/// sum_{i=lo}^{hi} C(r, i), exact. Empty when hi < lo.
BigInt binomial_sum(std::uint64_t r, std::uint64_t lo, std::uint64_t hi);

/// floor(q * r) for q >= 0.
std::uint64_t floor_mul(const Rational& q, std::uint64_t r);
/// ceil(q * r) for q >= 0.
std::uint64_t ceil_mul(const Rational& q, std::uint64_t r);

Real to_real(const Rational& q);
Real log2_real(const BigInt& x);
Real log2_real(std::uint64_t x);

/// Parses "0.5", "1/2", "3" into an exact rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Margin under which two logarithms are treated as tied.
inline Real certified_margin() { return Real(1) / Real(1ULL << 30); }

}  // namespace cdec
