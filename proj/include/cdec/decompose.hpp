#pragma once

// Circuit decompositions of Eulerian binary matroids.

#include "cdec/circuits.hpp"
#include "cdec/gf2.hpp"
#include "cdec/numeric.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace cdec {

/// Which strategy produced a decomposition. `kTrivial` is the plain
/// largest-circuit peel, `kSparse` the two-phase logarithmic greedy and
/// `kDense` the linear-size-circuit greedy for near-complete matroids.
enum class Branch { kTrivial, kSparse, kDense };

std::string_view to_string(Branch branch);
Branch parse_branch(std::string_view text);

struct Decomposition {
  std::vector<Circuit> circuits;
  Branch branch = Branch::kTrivial;
  std::size_t phase1 = 0;
  std::size_t phase2 = 0;
};

/// alpha = 1 / (2 + eps/2) and delta = (1 - H(alpha)) / 2.
struct DenseParams {
  Rational epsilon;
  Rational alpha;
  Real delta;

  /// Throws InvalidArgument unless eps > 0.
  static DenseParams from_epsilon(const Rational& eps);
};

/// H(a) = -a log2 a - (1-a) log2(1-a), with H(0) = H(1) = 0.
/// Throws OutOfRange outside [0, 1].
double binary_entropy(double a);
Real binary_entropy(const Real& a);

/// Compares sum_{i=0}^{floor(a r)} C(r, i) against 2^{H(a) r}: the left side
/// exactly, the right in 100-digit binary floating point.
bool entropy_bound_check(std::uint64_t r, const Rational& a);

/// |m| >= 2^{(1 - delta) rank(m)}, ties within the certified margin accepted.
bool dense_precondition(const BinaryMatroid& m, const DenseParams& params);

/// Repeatedly removes the largest fundamental circuit until nothing is left.
Decomposition peel_decompose(const BinaryMatroid& m);

/// Largest-circuit peel while |N| >= |m| / ln^2 |m|, then first-dependency
/// extraction for the small remainder.
Decomposition log_greedy_decompose(const BinaryMatroid& m);

/// Peels circuits of size >= alpha r while |N| > 2^{(1 - 2 delta) r} (phase
/// 1), then keeps peeling largest fundamental circuits without the size
/// floor (phase 2). Throws NotDenseEnough when dense_precondition fails.
Decomposition dense_decompose(const BinaryMatroid& m, const DenseParams& params);

/// Single circuit (or nothing) -> trivial; dense enough -> dense; else sparse.
Decomposition auto_decompose(const BinaryMatroid& m, const Rational& eps);

/// ceil(|m| / (rank(m) + 1)); no decomposition or odd-cover can be smaller.
std::size_t size_rank_lower_bound(const BinaryMatroid& m);

}  // namespace cdec
