#pragma once

// Small-instance helpers for the exhaustive oracles: coordinates over a
// basis of the span (so every element fits in a 32-bit word) and a
// depth-first walk over all nonempty subsets that tracks size and rank.

#include "cdec/error.hpp"
#include "cdec/gf2.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace cdec::detail {

using Word32 = std::uint32_t;

/// Coordinates of each element of m over its canonical basis. The map is a
/// linear isomorphism onto F_2^rank, so dependencies are preserved.
inline std::vector<Word32> compress_to_span(const BinaryMatroid& m) {
  if (m.empty()) return {};
  const auto basis = max_independent_subset(m);
  if (basis.size() > 32) {
    throw Error(ErrorKind::kTooLarge, "rank above 32 in exhaustive scan");
  }
  Gf2Eliminator elim(m.dim());
  for (const auto& b : basis) elim.insert(b);
  std::vector<Word32> out;
  out.reserve(m.size());
  for (const auto& x : m) {
    Word32 w = 0;
    const auto combo = elim.express(x);
    for (std::size_t i : *combo) w |= Word32{1} << i;
    out.push_back(w);
  }
  return out;
}

/// XOR basis indexed by leading bit.
struct XorBasis {
  std::array<Word32, 32> rows{};
  unsigned rank = 0;

  bool insert(Word32 x) {
    while (x != 0) {
      const unsigned lead = 31U - static_cast<unsigned>(std::countl_zero(x));
      if (rows[lead] == 0) {
        rows[lead] = x;
        ++rank;
        return true;
      }
      x ^= rows[lead];
    }
    return false;
  }

  bool spans(Word32 x) const {
    while (x != 0) {
      const unsigned lead = 31U - static_cast<unsigned>(std::countl_zero(x));
      if (rows[lead] == 0) return false;
      x ^= rows[lead];
    }
    return true;
  }
};

/// Calls visit(size, rank) once per nonempty subset of `elements`.
template <class Visit>
void for_each_subset_size_rank(const std::vector<Word32>& elements, Visit&& visit) {
  struct Walker {
    const std::vector<Word32>& elems;
    Visit& visit;
    void run(std::size_t from, const XorBasis& basis, std::size_t size) {
      for (std::size_t j = from; j < elems.size(); ++j) {
        XorBasis next = basis;
        next.insert(elems[j]);
        visit(size + 1, static_cast<std::size_t>(next.rank));
        run(j + 1, next, size + 1);
      }
    }
  };
  Walker walker{elements, visit};
  walker.run(0, XorBasis{}, 0);
}

}  // namespace cdec::detail
