#pragma once

// Independent validity checks for decompositions, odd-covers and
// independent-set partitions. They work on raw vector blocks so a file can be
// checked without trusting any constructor on the way in.

#include "cdec/circuits.hpp"
#include "cdec/gf2.hpp"

#include <span>
#include <string>
#include <vector>

namespace cdec {

struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

using Block = std::vector<Gf2Vector>;

/// Blocks are circuits, pairwise disjoint, union = m, and the count respects
/// ceil(|m| / (rank + 1)).
Verdict verify_decomposition(const BinaryMatroid& m, std::span<const Block> blocks);

/// Blocks are circuits of the ambient space; every vector of m is covered an
/// odd number of times and every other vector an even number of times.
Verdict verify_odd_cover(const BinaryMatroid& m, std::span<const Block> blocks);

/// Blocks are independent, pairwise disjoint, union = m.
Verdict verify_partition(const BinaryMatroid& m, std::span<const Block> blocks);

std::vector<Block> to_blocks(std::span<const Circuit> circuits);

}  // namespace cdec
