#include "cdec/arboricity.hpp"

#include "cdec/error.hpp"
#include "subset_scan.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>

namespace cdec {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Working state of the matroid-union search. Elements are referred to by
/// their canonical index in the source matroid.
class Partitioner {
 public:
  Partitioner(const BinaryMatroid& m, std::size_t k)
      : m_(m), owner_(m.size(), kNone) {
    for (std::size_t j = 0; j < k; ++j) add_part();
  }

  void add_part() {
    parts_.emplace_back();
    elims_.emplace_back(m_.dim());
  }

  std::size_t part_count() const { return parts_.size(); }

  /// Places element e, rearranging along a shortest augmenting path.
  /// On failure returns the elements reached by the search.
  std::optional<std::vector<std::size_t>> insert(std::size_t e) {
    std::vector<std::size_t> parent(m_.size(), kNone);
    std::vector<bool> seen(m_.size(), false);
    std::deque<std::size_t> queue{e};
    std::vector<std::size_t> reached{e};
    seen[e] = true;

    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      // Within one search each (element, part) pair is expressed once.
      for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (owner_[y] == j) continue;
        const auto combo = elims_[j].express(m_[y]);
        if (!combo) {
          augment(y, j, parent);
          return std::nullopt;
        }
        for (std::size_t member : *combo) {
          const std::size_t z = parts_[j][member];
          if (seen[z]) continue;
          seen[z] = true;
          parent[z] = y;
          queue.push_back(z);
          reached.push_back(z);
        }
      }
    }
    return reached;
  }

  IndependentPartition partition() const {
    IndependentPartition out;
    for (const auto& part : parts_) {
      std::vector<Gf2Vector> vectors;
      vectors.reserve(part.size());
      for (std::size_t e : part) vectors.push_back(m_[e]);
      std::sort(vectors.begin(), vectors.end());
      out.parts.push_back(std::move(vectors));
    }
    return out;
  }

 private:
  /// Moves `last` into part `free_part`, then shifts every earlier element on
  /// the path into the part vacated by its successor.
  void augment(std::size_t last, std::size_t free_part,
               const std::vector<std::size_t>& parent) {
    std::vector<std::size_t> touched{free_part};
    std::size_t target = free_part;
    std::size_t node = last;
    while (node != kNone) {
      const std::size_t vacated = owner_[node];
      if (vacated != kNone) {
        auto& from = parts_[vacated];
        from.erase(std::find(from.begin(), from.end(), node));
        touched.push_back(vacated);
      }
      parts_[target].push_back(node);
      owner_[node] = target;
      target = vacated;
      node = parent[node];
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t j : touched) rebuild(j);
  }

  void rebuild(std::size_t j) {
    Gf2Eliminator fresh(m_.dim());
    for (std::size_t e : parts_[j]) {
      if (!fresh.insert(m_[e])) {
        throw Error(ErrorKind::kInternal,
                    "augmenting path left part " + std::to_string(j) + " dependent");
      }
    }
    elims_[j] = std::move(fresh);
  }

  const BinaryMatroid& m_;
  std::vector<std::size_t> owner_;
  std::vector<std::vector<std::size_t>> parts_;
  std::vector<Gf2Eliminator> elims_;
};

PartitionInfeasible make_certificate(const BinaryMatroid& m,
                                     const std::vector<std::size_t>& reached,
                                     std::size_t k) {
  PartitionInfeasible out;
  for (std::size_t e : reached) out.certificate.push_back(m[e]);
  std::sort(out.certificate.begin(), out.certificate.end());
  out.certificate_rank = rank(out.certificate, m.dim());
  const std::size_t r = out.certificate_rank;
  if (r == 0 || (out.certificate.size() + r - 1) / r <= k) {
    throw Error(ErrorKind::kInternal, "infeasibility certificate does not verify");
  }
  return out;
}

}  // namespace

PartitionResult can_partition(const BinaryMatroid& m, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  Partitioner state(m, k);
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (auto reached = state.insert(e)) return make_certificate(m, *reached, k);
  }
  return state.partition();
}

ArboricityResult arboricity(const BinaryMatroid& m) {
  if (m.empty()) throw Error(ErrorKind::kEmpty, "arboricity of the empty matroid");
  const std::size_t r = rank(m);
  Partitioner state(m, (m.size() + r - 1) / r);
  for (std::size_t e = 0; e < m.size(); ++e) {
    while (auto reached = state.insert(e)) {
      make_certificate(m, *reached, state.part_count());
      state.add_part();
    }
  }
  return {state.part_count(), state.partition()};
}

std::size_t edmonds_max_bruteforce(const BinaryMatroid& m) {
  if (m.size() > 22) {
    throw Error(ErrorKind::kTooLarge, "exhaustive scan limited to 22 elements");
  }
  if (m.empty()) throw Error(ErrorKind::kEmpty, "empty matroid");
  const auto coords = detail::compress_to_span(m);
  std::size_t best = 0;
  detail::for_each_subset_size_rank(coords, [&](std::size_t size, std::size_t r) {
    best = std::max(best, (size + r - 1) / r);
  });
  return best;
}

}  // namespace cdec
