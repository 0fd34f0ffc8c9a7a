#pragma once

// Exact circuit decomposition of the complete binary matroid of dimension
// p - 1 by cyclic-shift orbits of its even-weight model in F_2^p.

#include "cdec/circuits.hpp"
#include "cdec/gf2.hpp"

#include <cstdint>
#include <vector>

namespace cdec {

inline constexpr unsigned kMaxOrbitPrime = 31;

bool is_prime(std::uint64_t n);

/// Least k >= 1 with a^k = 1 (mod modulus). Throws NotCoprime.
unsigned multiplicative_order(std::uint64_t a, std::uint64_t modulus);

/// Nonzero even-weight vectors of F_2^p: 2^{p-1} - 1 of them, rank p - 1.
/// Throws NotPrime for p < 3 or composite p, OutOfRange above 31.
BinaryMatroid build_even_weight_model(unsigned p);

/// Rotates coordinates: coordinate i moves to i + j (mod dim).
Gf2Vector cyclic_shift(const Gf2Vector& x, long long j);

/// Drops the last coordinate of an even-weight vector (the parity bit).
/// Throws InvalidArgument when the weight is odd.
Gf2Vector drop_parity_coordinate(const Gf2Vector& x);

struct OrbitDecomposition {
  unsigned p = 0;
  /// One circuit per orbit, listed by lexicographically smallest member.
  std::vector<Circuit> orbits;
  BinaryMatroid model;

  /// The same circuits in F_2^{p-1} coordinates.
  std::vector<Circuit> compressed() const;
};

/// Splits the even-weight model into shift orbits and checks each one is a
/// circuit of exactly p elements. Throws OrderConditionFailed unless 2 has
/// multiplicative order p - 1 modulo p.
OrbitDecomposition orbit_decompose(unsigned p);

struct OrbitFailureReport {
  unsigned p = 7;
  unsigned order = 0;
  std::vector<Gf2Vector> orbit;
  bool orbit_is_circuit = false;
  /// Circuits partitioning the orbit, found by first-dependency extraction.
  std::vector<Circuit> parts;
};

/// p = 7: the orbit of e0 + e1 + e2 + e4 is zero-sum but not a circuit.
OrbitFailureReport demonstrate_p7_failure();

}  // namespace cdec
