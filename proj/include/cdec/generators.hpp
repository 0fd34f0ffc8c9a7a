#pragma once

#include "cdec/gf2.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace cdec {

/// SplitMix64 (Steele, Lea, Flood). Tiny, seedable, and split() derives an
/// independent stream, which keeps parallel corpora reproducible.
class SplitMix64 {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64";

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

enum class InstanceKind { kComplete, kCopies, kRandomEulerian };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::kComplete;
  std::size_t n = 0;      // complete, random-eulerian
  std::size_t k = 0;      // copies
  std::size_t s = 0;      // copies
  std::size_t size = 0;   // random-eulerian target
  std::uint64_t seed = 0;

  /// One-line provenance, e.g. "kind=copies k=5 s=2".
  std::string describe() const;
};

/// All 2^n - 1 nonzero vectors. 1 <= n <= 24, else OutOfRange.
BinaryMatroid complete_matroid(std::size_t n);

/// k complete matroids of dimension s on disjoint coordinate blocks.
BinaryMatroid independent_copies(std::size_t k, std::size_t s);

/// Uniform distinct draw of `size` vectors, then XOR repair by toggling the
/// sum's membership, which moves the size by one. Throws Infeasible after
/// 1000 redraws.
BinaryMatroid random_eulerian(std::size_t n, std::size_t size, std::uint64_t seed);

BinaryMatroid generate(const InstanceSpec& spec);

}  // namespace cdec
