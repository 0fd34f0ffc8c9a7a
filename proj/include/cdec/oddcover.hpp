#pragma once

// Circuit odd-covers: circuits of the ambient space whose symmetric
// difference is the matroid.

#include "cdec/circuits.hpp"
#include "cdec/gf2.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cdec {

struct OddCover {
  std::vector<Circuit> circuits;
  /// Size of the arboricity used (oddcover_via_arboricity only).
  std::size_t arboricity = 0;
  /// |M xor C_1 xor ... xor C_t| after the completion step.
  std::size_t remainder = 0;
  std::size_t singleton_parts = 0;
};

/// I together with the sum of I. Throws TooSmall for |I| <= 1 and
/// InvalidArgument when I is dependent.
Circuit complete_to_circuit(std::span<const Gf2Vector> independent);

/// N <- N xor (max independent subset completed to a circuit), until
/// |N| < |m| / ln^2 |m| or rank(N) <= 2; the rest is peeled by
/// first-dependency extraction.
OddCover symdiff_reduce(const BinaryMatroid& m);

/// Completes each part of a minimum independent partition to a circuit, then
/// covers the leftover completion vectors. Parts of size one borrow an
/// element from a part of size >= 3, or failing that get the auxiliary
/// triangle {y, z, y + z}. Identical circuits are cancelled in pairs.
/// Throws NotEulerian or Empty.
OddCover oddcover_via_arboricity(const BinaryMatroid& m);

/// max over nonempty N of ceil(|N| / (rank(N) + 1)): exact when
/// |m| <= exhaustive_limit, otherwise over m and its intersections with the
/// spans of canonical-basis prefixes. Always a valid lower bound on the
/// odd-cover size. Throws Empty.
std::size_t density_lower_bound(const BinaryMatroid& m, std::size_t exhaustive_limit);

}  // namespace cdec
