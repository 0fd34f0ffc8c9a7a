#include "cdec/verify.hpp"

#include "cdec/decompose.hpp"

#include <unordered_map>
#include <unordered_set>

namespace cdec {

namespace {

Verdict check_dims(const BinaryMatroid& m, std::span<const Block> blocks) {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& v : blocks[b]) {
      if (v.dim() != m.dim()) {
        return Verdict::fail("block " + std::to_string(b) +
                             " has dimension " + std::to_string(v.dim()) +
                             ", matroid has " + std::to_string(m.dim()));
      }
    }
  }
  return {};
}

/// Disjoint blocks whose union is exactly m.
Verdict check_exact_partition(const BinaryMatroid& m, std::span<const Block> blocks) {
  std::unordered_set<Gf2Vector, Gf2VectorHash> used;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& v : blocks[b]) {
      if (!m.contains(v)) {
        return Verdict::fail("block " + std::to_string(b) + " contains " +
                             v.to_string() + " outside the matroid");
      }
      if (!used.insert(v).second) {
        return Verdict::fail("vector " + v.to_string() + " used twice");
      }
    }
  }
  if (used.size() != m.size()) {
    return Verdict::fail("blocks cover " + std::to_string(used.size()) + " of " +
                         std::to_string(m.size()) + " elements");
  }
  return {};
}

}  // namespace

Verdict verify_decomposition(const BinaryMatroid& m, std::span<const Block> blocks) {
  if (auto v = check_dims(m, blocks); !v) return v;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!is_circuit(blocks[b])) {
      return Verdict::fail("block " + std::to_string(b) + " is not a circuit");
    }
  }
  if (auto v = check_exact_partition(m, blocks); !v) return v;
  if (blocks.size() < size_rank_lower_bound(m)) {
    return Verdict::fail("circuit count below ceil(|M|/(rank+1)): verifier bug");
  }
  return {};
}

Verdict verify_odd_cover(const BinaryMatroid& m, std::span<const Block> blocks) {
  if (auto v = check_dims(m, blocks); !v) return v;
  std::unordered_map<Gf2Vector, std::size_t, Gf2VectorHash> count;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!is_circuit(blocks[b])) {
      return Verdict::fail("block " + std::to_string(b) + " is not a circuit");
    }
    for (const auto& v : blocks[b]) ++count[v];
  }
  for (const auto& x : m) {
    auto it = count.find(x);
    if (it == count.end() || it->second % 2 == 0) {
      return Verdict::fail("element " + x.to_string() + " covered an even number of times");
    }
  }
  for (const auto& [v, times] : count) {
    if (times % 2 == 1 && !m.contains(v)) {
      return Verdict::fail("non-element " + v.to_string() + " covered an odd number of times");
    }
  }
  return {};
}

Verdict verify_partition(const BinaryMatroid& m, std::span<const Block> blocks) {
  if (auto v = check_dims(m, blocks); !v) return v;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      return Verdict::fail("block " + std::to_string(b) + " is empty");
    }
    if (!is_independent(blocks[b], m.dim())) {
      return Verdict::fail("block " + std::to_string(b) + " is dependent");
    }
  }
  return check_exact_partition(m, blocks);
}

std::vector<Block> to_blocks(std::span<const Circuit> circuits) {
  std::vector<Block> out;
  out.reserve(circuits.size());
  for (const auto& c : circuits) out.push_back(c.elements());
  return out;
}

}  // namespace cdec
