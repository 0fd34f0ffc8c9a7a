#include "cdec/generators.hpp"

#include "cdec/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace cdec {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::kInvalidArgument, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::string InstanceSpec::describe() const {
  switch (kind) {
    case InstanceKind::kComplete:
      return "kind=complete n=" + std::to_string(n);
    case InstanceKind::kCopies:
      return "kind=copies k=" + std::to_string(k) + " s=" + std::to_string(s);
    case InstanceKind::kRandomEulerian:
      return "kind=random-eulerian n=" + std::to_string(n) +
             " size=" + std::to_string(size) + " seed=" + std::to_string(seed) +
             " prng=" + std::string(SplitMix64::kAlgorithm);
  }
  return {};
}

BinaryMatroid complete_matroid(std::size_t n) {
  if (n < 1 || n > 24) {
    throw Error(ErrorKind::kOutOfRange, "complete matroid dimension outside [1, 24]");
  }
  std::vector<Gf2Vector> all;
  all.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    all.push_back(Gf2Vector::from_word(n, w));
  }
  return BinaryMatroid(n, std::move(all));
}

BinaryMatroid independent_copies(std::size_t k, std::size_t s) {
  if (k < 1 || s < 1 || s > 24 || k * s > Gf2Vector::kMaxDim) {
    throw Error(ErrorKind::kOutOfRange, "copies need k, s >= 1, s <= 24, k*s <= 4096");
  }
  const std::size_t dim = k * s;
  std::vector<Gf2Vector> all;
  all.reserve(k * ((std::size_t{1} << s) - 1));
  for (std::size_t block = 0; block < k; ++block) {
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << s); ++w) {
      Gf2Vector v(dim);
      for (std::size_t i = 0; i < s; ++i) {
        if ((w >> i) & 1U) v.set(block * s + i);
      }
      all.push_back(std::move(v));
    }
  }
  return BinaryMatroid(dim, std::move(all));
}

namespace {

Gf2Vector random_nonzero(std::size_t n, SplitMix64& rng) {
  Gf2Vector v(n);
  do {
    for (std::size_t i = 0; i < n; i += 64) {
      const std::uint64_t bits = rng.next();
      for (std::size_t b = 0; b < 64 && i + b < n; ++b) {
        v.set(i + b, (bits >> b) & 1U);
      }
    }
  } while (v.is_zero());
  return v;
}

/// `size` distinct nonzero vectors, uniformly. Floyd's sampling over the
/// index range when it fits in a word, rejection otherwise.
std::vector<Gf2Vector> draw_distinct(std::size_t n, std::size_t size,
                                     SplitMix64& rng) {
  std::vector<Gf2Vector> out;
  out.reserve(size);
  if (n <= 62) {
    const std::uint64_t universe = (std::uint64_t{1} << n) - 1;
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = universe - size; j < universe; ++j) {
      const std::uint64_t t = rng.below(j + 1);
      const std::uint64_t pick = chosen.count(t + 1) ? j + 1 : t + 1;
      chosen.insert(pick);
      out.push_back(Gf2Vector::from_word(n, pick));
    }
    return out;
  }
  std::unordered_set<Gf2Vector, Gf2VectorHash> seen;
  while (out.size() < size) {
    Gf2Vector v = random_nonzero(n, rng);
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

BinaryMatroid random_eulerian(std::size_t n, std::size_t size,
                              std::uint64_t seed) {
  if (n < 1 || n > Gf2Vector::kMaxDim) {
    throw Error(ErrorKind::kOutOfRange, "dimension outside [1, 4096]");
  }
  const bool small = n < 63;
  const std::uint64_t capacity = small ? (std::uint64_t{1} << n) - 1 : ~std::uint64_t{0};
  if (size < 3 || size > capacity) {
    throw Error(ErrorKind::kOutOfRange, "size outside [3, 2^n - 1]");
  }
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Gf2Vector> drawn = draw_distinct(n, size, rng);
    std::sort(drawn.begin(), drawn.end());
    const Gf2Vector s = xor_sum(drawn, n);
    if (s.is_zero()) return BinaryMatroid::from_sorted_unchecked(n, std::move(drawn));
    auto it = std::lower_bound(drawn.begin(), drawn.end(), s);
    const bool present = it != drawn.end() && *it == s;
    if (present && drawn.size() > 3) {
      drawn.erase(it);
      return BinaryMatroid::from_sorted_unchecked(n, std::move(drawn));
    }
    if (!present && drawn.size() < capacity) {
      drawn.insert(it, s);
      return BinaryMatroid::from_sorted_unchecked(n, std::move(drawn));
    }
  }
  throw Error(ErrorKind::kInfeasible,
              "no Eulerian repair after 1000 redraws (n=" + std::to_string(n) +
                  ", size=" + std::to_string(size) + ")");
}

BinaryMatroid generate(const InstanceSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::kComplete: return complete_matroid(spec.n);
    case InstanceKind::kCopies: return independent_copies(spec.k, spec.s);
    case InstanceKind::kRandomEulerian:
      return random_eulerian(spec.n, spec.size, spec.seed);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown instance kind");
}

}  // namespace cdec
