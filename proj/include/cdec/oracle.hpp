#pragma once

// Exhaustive ground truth for tiny instances: every circuit, the minimum
// decomposition size c(M), the minimum odd-cover size c2(M), and checks of
// the two open conjectures on those values.

#include "cdec/gf2.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cdec {

inline constexpr std::size_t kCatalogLimit = 24;
inline constexpr std::size_t kOddCoverSearchMaxDim = 8;

/// All circuits of `universe`, each as a bitmask over element indices
/// (bit i = universe[i]), in discovery order.
struct CircuitCatalog {
  BinaryMatroid universe;
  std::vector<std::uint32_t> circuits;

  std::vector<Gf2Vector> members(std::uint32_t mask) const;
};

/// Depth-first over independent sets in index order; S + {x} is recorded
/// when x closes a zero sum. Throws TooLarge above 24 elements.
CircuitCatalog enumerate_circuits(const BinaryMatroid& m);

/// Minimum number of disjoint circuits with union m. Splits m into
/// circuit-connected components, then runs a memoized exact cover that
/// branches on the lowest uncovered element, largest circuits first, and
/// stops a node early once ceil(remaining / (rank + 1)) is met.
/// Throws NotEulerian or TooLarge.
std::size_t exact_c(const BinaryMatroid& m);

struct C2Options {
  /// Full ambient search when dim(m) <= ambient_cap; otherwise restricted to
  /// span(m) when rank(m) <= ambient_cap.
  std::size_t ambient_cap = 4;
  std::size_t depth_cap = 6;
};

struct C2Result {
  /// Minimum cover size found within depth_cap, if any.
  std::optional<std::size_t> value;
  /// Proven lower bound: value when found, depth_cap + 1 otherwise.
  std::size_t lower_bound = 0;
  /// Only circuits inside span(m) were searched and span(m) is a proper
  /// subspace. Such a value is an upper bound on c2 (the circuits are real)
  /// but not known to be exact.
  bool restricted = false;
  std::size_t search_dim = 0;
};

/// Iterative deepening over XOR states (bitmask of the searched space),
/// branching on circuits through the lowest element of the state, with a
/// memo of depths proven insufficient per state. Throws NotEulerian, or
/// TooLarge when neither search mode applies.
C2Result exact_c2(const BinaryMatroid& m, const C2Options& options = {});

/// Same search over the full ambient space (dim <= 8), capped at `depth`:
/// either the exact value or the certified bound depth + 1.
C2Result c2_lower_bound(const BinaryMatroid& m, std::size_t depth);

enum class ConjectureStatus { kConsistent, kViolation, kUndetermined };
std::string_view to_string(ConjectureStatus status);

struct ConjectureReport {
  std::size_t size = 0;
  std::size_t rank = 0;
  std::size_t c = 0;
  C2Result c2;
  std::size_t arboricity = 0;
  std::size_t density_bound = 0;
  /// ceil((2^rank - 1) / (rank + 1)).
  std::size_t conj1_bound = 0;
  ConjectureStatus conj1 = ConjectureStatus::kUndetermined;
  ConjectureStatus conj2 = ConjectureStatus::kUndetermined;
};

/// c(M) <= ceil((2^r - 1)/(r + 1)) and c2(M) <= a(M) on one instance.
/// A violation is reported, never thrown.
ConjectureReport probe_conjectures(const BinaryMatroid& m, const C2Options& options = {});

}  // namespace cdec
