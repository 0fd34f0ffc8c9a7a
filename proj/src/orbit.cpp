#include "cdec/orbit.hpp"

#include "cdec/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cdec {

namespace {

using Mask = std::uint64_t;

Mask rotate_mask(Mask m, unsigned p) {
  const Mask full = (Mask{1} << p) - 1;
  return ((m << 1) | (m >> (p - 1))) & full;
}

/// Bit i of the result is bit (p - 1 - i) of v.
Mask reverse_bits(Mask v, unsigned p) {
  Mask out = 0;
  for (unsigned i = 0; i < p; ++i) {
    if ((v >> i) & 1U) out |= Mask{1} << (p - 1 - i);
  }
  return out;
}

void require_orbit_prime(unsigned p) {
  if (p > kMaxOrbitPrime) {
    throw Error(ErrorKind::kOutOfRange,
                "p = " + std::to_string(p) + " exceeds the cap of 31");
  }
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::kNotPrime,
                "p = " + std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned multiplicative_order(std::uint64_t a, std::uint64_t modulus) {
  if (modulus < 2 || std::gcd(a, modulus) != 1) {
    throw Error(ErrorKind::kNotCoprime,
                std::to_string(a) + " is not invertible modulo " +
                    std::to_string(modulus));
  }
  const std::uint64_t base = a % modulus;
  std::uint64_t power = base;
  unsigned k = 1;
  while (power != 1 % modulus) {
    power = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(power) * base) % modulus);
    ++k;
  }
  return k;
}

BinaryMatroid build_even_weight_model(unsigned p) {
  require_orbit_prime(p);
  std::vector<Gf2Vector> all;
  all.reserve((std::size_t{1} << (p - 1)) - 1);
  for (Mask m = 1; m < (Mask{1} << p); ++m) {
    if (std::popcount(m) % 2 == 0) all.push_back(Gf2Vector::from_word(p, m));
  }
  return BinaryMatroid(p, std::move(all));
}

Gf2Vector cyclic_shift(const Gf2Vector& x, long long j) {
  const auto p = static_cast<long long>(x.dim());
  const long long shift = ((j % p) + p) % p;
  Gf2Vector out(x.dim());
  for (long long i = 0; i < p; ++i) {
    if (x.test(static_cast<std::size_t>(i))) {
      out.set(static_cast<std::size_t>((i + shift) % p));
    }
  }
  return out;
}

Gf2Vector drop_parity_coordinate(const Gf2Vector& x) {
  if (x.popcount() % 2 != 0 || x.dim() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "vector " + x.to_string() + " is not in the even-weight model");
  }
  Gf2Vector out(x.dim() - 1);
  for (std::size_t i = 0; i + 1 < x.dim(); ++i) {
    if (x.test(i)) out.set(i);
  }
  return out;
}

std::vector<Circuit> OrbitDecomposition::compressed() const {
  std::vector<Circuit> out;
  out.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    std::vector<Gf2Vector> members;
    members.reserve(orbit.size());
    for (const auto& v : orbit) members.push_back(drop_parity_coordinate(v));
    out.emplace_back(p - 1, std::move(members));
  }
  return out;
}

OrbitDecomposition orbit_decompose(unsigned p) {
  require_orbit_prime(p);
  const unsigned order = multiplicative_order(2, p);
  if (order != p - 1) throw OrderConditionFailed(p, order);

  OrbitDecomposition out;
  out.p = p;
  out.model = build_even_weight_model(p);

  // Walking v upwards and reversing bits visits vectors in canonical order
  // (coordinate 0 most significant), so each orbit is met first at its
  // smallest member.
  std::vector<bool> visited(std::size_t{1} << p, false);
  for (Mask v = 1; v < (Mask{1} << p); ++v) {
    const Mask start = reverse_bits(v, p);
    if (std::popcount(start) % 2 != 0 || visited[start]) continue;
    std::vector<Gf2Vector> members;
    Mask m = start;
    do {
      visited[m] = true;
      members.push_back(Gf2Vector::from_word(p, m));
      m = rotate_mask(m, p);
    } while (m != start);
    if (members.size() != p) {
      throw Error(ErrorKind::kInternal,
                  "orbit of size " + std::to_string(members.size()) + " for p = " +
                      std::to_string(p));
    }
    out.orbits.emplace_back(p, std::move(members));  // verifies the circuit
  }
  const std::size_t expected = ((std::size_t{1} << (p - 1)) - 1) / p;
  if (out.orbits.size() != expected) {
    throw Error(ErrorKind::kInternal, "orbit count mismatch");
  }
  return out;
}

OrbitFailureReport demonstrate_p7_failure() {
  constexpr unsigned p = 7;
  OrbitFailureReport report;
  report.order = multiplicative_order(2, p);

  Gf2Vector seed(p);
  for (std::size_t i : {0, 1, 2, 4}) seed.set(i);
  for (unsigned j = 0; j < p; ++j) {
    Gf2Vector shifted = cyclic_shift(seed, j);
    if (std::find(report.orbit.begin(), report.orbit.end(), shifted) ==
        report.orbit.end()) {
      report.orbit.push_back(std::move(shifted));
    }
  }
  std::sort(report.orbit.begin(), report.orbit.end());
  report.orbit_is_circuit = is_circuit(report.orbit);

  BinaryMatroid rest(p, report.orbit);
  while (!rest.empty()) {
    Circuit c = extract_any_circuit(rest);
    rest = rest.without(c.elements());
    report.parts.push_back(std::move(c));
  }
  return report;
}

}  // namespace cdec
