#pragma once

// Partitioning a binary matroid into the fewest independent sets.

#include "cdec/gf2.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace cdec {

struct IndependentPartition {
  /// Each part independent, parts disjoint, union = source.
  std::vector<std::vector<Gf2Vector>> parts;
};

/// Proof that k parts are not enough: ceil(|subset| / rank(subset)) > k.
struct PartitionInfeasible {
  std::vector<Gf2Vector> certificate;
  std::size_t certificate_rank = 0;
};

using PartitionResult = std::variant<IndependentPartition, PartitionInfeasible>;

/// Matroid-union augmenting paths over k copies of m. Elements are inserted
/// in canonical order; each insertion runs a breadth-first search in the
/// exchange graph (y -> z when z lies on y's fundamental circuit in z's
/// part) until it reaches an element some part can absorb directly. When
/// the search dies out, the elements it reached form the certificate.
PartitionResult can_partition(const BinaryMatroid& m, std::size_t k);

struct ArboricityResult {
  std::size_t value = 0;
  IndependentPartition partition;
};

/// Least k admitting a partition, starting from ceil(|m| / rank(m)) and
/// adding a part whenever an insertion is certified infeasible.
/// Throws Empty for the empty matroid.
ArboricityResult arboricity(const BinaryMatroid& m);

/// max over nonempty N of ceil(|N| / rank(N)) by scanning every subset.
/// Throws TooLarge above 22 elements.
std::size_t edmonds_max_bruteforce(const BinaryMatroid& m);

}  // namespace cdec
