#include "cdec/oracle.hpp"

#include "cdec/arboricity.hpp"
#include "cdec/error.hpp"
#include "cdec/oddcover.hpp"
#include "subset_scan.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace cdec {

namespace {

using detail::Word32;
using detail::XorBasis;

void require_eulerian(const BinaryMatroid& m) {
  if (!is_eulerian(m)) {
    throw Error(ErrorKind::kNotEulerian, "matroid is not Eulerian");
  }
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Memoized exact cover of one circuit-connected component.
class ExactCover {
 public:
  ExactCover(const std::vector<std::uint32_t>& circuits, std::size_t elements,
             std::size_t rank)
      : by_element_(elements), rank_(rank) {
    for (std::uint32_t c : circuits) {
      for (std::size_t e = 0; e < elements; ++e) {
        if ((c >> e) & 1U) by_element_[e].push_back(c);
      }
    }
    for (auto& list : by_element_) {
      std::stable_sort(list.begin(), list.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
      });
    }
  }

  std::size_t solve(std::uint32_t remaining) {
    if (remaining == 0) return 0;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    const auto count = static_cast<std::size_t>(std::popcount(remaining));
    const std::size_t floor = (count + rank_) / (rank_ + 1);
    const auto lowest = static_cast<std::size_t>(std::countr_zero(remaining));
    std::size_t best = kUnreachable;
    for (std::uint32_t c : by_element_[lowest]) {
      if ((c & ~remaining) != 0) continue;
      const std::size_t rest = solve(remaining & ~c);
      if (rest != kUnreachable) best = std::min(best, rest + 1);
      if (best == floor) break;
    }
    memo_.emplace(remaining, best);
    return best;
  }

  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

 private:
  std::vector<std::vector<std::uint32_t>> by_element_;
  std::size_t rank_;
  std::unordered_map<std::uint32_t, std::size_t> memo_;
};

/// Odd-cover search over F_2^d \ {0}, d <= 8; element v is bit v of a state.
class OddCoverSearch {
 public:
  using State = std::bitset<256>;

  explicit OddCoverSearch(std::size_t dim) : dim_(dim) {}

  C2Result run(const std::vector<Word32>& target, std::size_t depth_cap) {
    State start;
    for (Word32 v : target) start.set(v);
    C2Result result;
    result.search_dim = dim_;
    const std::size_t floor = (start.count() + dim_) / (dim_ + 1);
    for (std::size_t t = floor; t <= depth_cap; ++t) {
      if (solve(start, t)) {
        result.value = t;
        result.lower_bound = t;
        return result;
      }
    }
    result.lower_bound = std::max(depth_cap + 1, floor);
    return result;
  }

 private:
  bool is_circuit_state(const State& s) const {
    XorBasis basis;
    Word32 sum = 0;
    std::size_t count = 0;
    for (std::size_t v = s._Find_first(); v < s.size(); v = s._Find_next(v)) {
      sum ^= static_cast<Word32>(v);
      basis.insert(static_cast<Word32>(v));
      ++count;
    }
    return count > 0 && sum == 0 && basis.rank + 1 == count;
  }

  /// Every circuit through e: {e} + S + {e ^ sum(S)} with S + {e} independent
  /// and the closing vector above max(S), so each circuit appears once.
  const std::vector<State>& circuits_through(Word32 e) {
    auto [it, fresh] = cache_.try_emplace(e);
    if (!fresh) return it->second;
    auto& out = it->second;
    const Word32 top = (Word32{1} << dim_) - 1;
    struct Walker {
      OddCoverSearch::State chosen;
      Word32 e;
      Word32 top;
      std::vector<State>& out;
      void run(Word32 from, const XorBasis& basis, Word32 sum) {
        for (Word32 v = from; v <= top; ++v) {
          if (v == e || basis.spans(v)) continue;
          XorBasis next = basis;
          next.insert(v);
          const Word32 new_sum = sum ^ v;
          const Word32 closing = e ^ new_sum;
          chosen.set(v);
          if (closing > v && closing != e) {
            State c = chosen;
            c.set(e);
            c.set(closing);
            out.push_back(c);
          }
          run(v + 1, next, new_sum);
          chosen.reset(v);
        }
      }
    };
    XorBasis base;
    base.insert(e);
    Walker walker{State{}, e, top, out};
    walker.run(1, base, 0);
    return out;
  }

  bool solve(const State& remaining, std::size_t t) {
    if (remaining.none()) return true;
    if (t == 0) return false;
    if (remaining.count() > t * (dim_ + 1)) return false;
    if (t == 1) return is_circuit_state(remaining);
    if (auto it = failed_.find(remaining); it != failed_.end() && it->second >= t) {
      return false;
    }
    const auto e = static_cast<Word32>(remaining._Find_first());
    for (const State& c : circuits_through(e)) {
      if (solve(remaining ^ c, t - 1)) return true;
    }
    auto& known = failed_[remaining];
    known = std::max(known, t);
    return false;
  }

  std::size_t dim_;
  std::unordered_map<Word32, std::vector<State>> cache_;
  std::unordered_map<State, std::size_t> failed_;
};

std::vector<Word32> ambient_words(const BinaryMatroid& m) {
  std::vector<Word32> out;
  out.reserve(m.size());
  for (const auto& x : m) out.push_back(static_cast<Word32>(x.low_word()));
  return out;
}

}  // namespace

std::vector<Gf2Vector> CircuitCatalog::members(std::uint32_t mask) const {
  std::vector<Gf2Vector> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(universe[i]);
  }
  return out;
}

CircuitCatalog enumerate_circuits(const BinaryMatroid& m) {
  if (m.size() > kCatalogLimit) {
    throw Error(ErrorKind::kTooLarge, "circuit enumeration limited to 24 elements");
  }
  CircuitCatalog catalog{m, {}};
  const auto coords = detail::compress_to_span(m);
  struct Walker {
    const std::vector<Word32>& coords;
    std::vector<std::uint32_t>& out;
    void run(std::size_t from, const XorBasis& basis, Word32 sum, std::uint32_t chosen) {
      for (std::size_t j = from; j < coords.size(); ++j) {
        const Word32 x = coords[j];
        if (basis.spans(x)) {
          // S independent and x in span(S): S + x is a circuit iff x = sum(S).
          if (x == sum) out.push_back(chosen | (std::uint32_t{1} << j));
          continue;
        }
        XorBasis next = basis;
        next.insert(x);
        run(j + 1, next, sum ^ x, chosen | (std::uint32_t{1} << j));
      }
    }
  };
  Walker walker{coords, catalog.circuits};
  walker.run(0, XorBasis{}, 0, 0);
  return catalog;
}

std::size_t exact_c(const BinaryMatroid& m) {
  require_eulerian(m);
  if (m.size() > kCatalogLimit) {
    throw Error(ErrorKind::kTooLarge, "exact c limited to 24 elements");
  }
  if (m.empty()) return 0;
  const CircuitCatalog catalog = enumerate_circuits(m);
  const auto coords = detail::compress_to_span(m);

  DisjointSets components(m.size());
  for (std::uint32_t c : catalog.circuits) {
    const auto first = static_cast<std::size_t>(std::countr_zero(c));
    for (std::size_t e = first + 1; e < m.size(); ++e) {
      if ((c >> e) & 1U) components.unite(first, e);
    }
  }
  std::unordered_map<std::size_t, std::uint32_t> component_masks;
  for (std::size_t e = 0; e < m.size(); ++e) {
    component_masks[components.find(e)] |= std::uint32_t{1} << e;
  }

  std::size_t total = 0;
  for (const auto& [root, mask] : component_masks) {
    std::vector<std::uint32_t> local;
    XorBasis basis;
    for (std::size_t e = 0; e < m.size(); ++e) {
      if ((mask >> e) & 1U) basis.insert(coords[e]);
    }
    for (std::uint32_t c : catalog.circuits) {
      if ((c & mask) == c) local.push_back(c);
    }
    ExactCover cover(local, m.size(), basis.rank);
    const std::size_t part = cover.solve(mask);
    if (part == ExactCover::kUnreachable) {
      throw Error(ErrorKind::kInternal, "Eulerian component without a decomposition");
    }
    total += part;
  }
  return total;
}

C2Result exact_c2(const BinaryMatroid& m, const C2Options& options) {
  require_eulerian(m);
  if (options.ambient_cap > kOddCoverSearchMaxDim) {
    throw Error(ErrorKind::kTooLarge, "odd-cover search limited to dimension 8");
  }
  if (m.empty()) return C2Result{0, 0, false, m.dim()};
  if (m.dim() <= options.ambient_cap) {
    OddCoverSearch search(m.dim());
    return search.run(ambient_words(m), options.depth_cap);
  }
  const std::size_t r = rank(m);
  if (r <= options.ambient_cap) {
    OddCoverSearch search(r);
    C2Result result = search.run(detail::compress_to_span(m), options.depth_cap);
    result.restricted = r < m.dim();
    return result;
  }
  throw Error(ErrorKind::kTooLarge,
              "odd-cover search needs dimension or rank <= " +
                  std::to_string(options.ambient_cap));
}

C2Result c2_lower_bound(const BinaryMatroid& m, std::size_t depth) {
  require_eulerian(m);
  if (m.dim() > kOddCoverSearchMaxDim) {
    throw Error(ErrorKind::kTooLarge, "odd-cover search limited to dimension 8");
  }
  if (m.empty()) return C2Result{0, 0, false, m.dim()};
  OddCoverSearch search(m.dim());
  return search.run(ambient_words(m), depth);
}

std::string_view to_string(ConjectureStatus status) {
  switch (status) {
    case ConjectureStatus::kConsistent: return "CONSISTENT";
    case ConjectureStatus::kViolation: return "VIOLATION";
    case ConjectureStatus::kUndetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

ConjectureReport probe_conjectures(const BinaryMatroid& m, const C2Options& options) {
  require_eulerian(m);
  if (m.empty()) throw Error(ErrorKind::kEmpty, "matroid is empty");
  ConjectureReport report;
  report.size = m.size();
  report.rank = rank(m);
  report.c = exact_c(m);
  report.c2 = exact_c2(m, options);
  report.arboricity = arboricity(m).value;
  report.density_bound = density_lower_bound(m, kCatalogLimit);

  const std::size_t r = report.rank;
  const std::size_t full = (std::size_t{1} << r) - 1;
  report.conj1_bound = (full + r) / (r + 1);
  report.conj1 = report.c <= report.conj1_bound ? ConjectureStatus::kConsistent
                                                : ConjectureStatus::kViolation;

  const C2Result& c2 = report.c2;
  const std::size_t a = report.arboricity;
  if (c2.value && !c2.restricted) {
    report.conj2 = *c2.value <= a ? ConjectureStatus::kConsistent
                                  : ConjectureStatus::kViolation;
  } else if (c2.value) {
    // A restricted value still bounds c2 from above.
    report.conj2 = *c2.value <= a ? ConjectureStatus::kConsistent
                                  : ConjectureStatus::kUndetermined;
  } else if (!c2.restricted && c2.lower_bound > a) {
    report.conj2 = ConjectureStatus::kViolation;
  } else {
    report.conj2 = ConjectureStatus::kUndetermined;
  }
  return report;
}

}  // namespace cdec
