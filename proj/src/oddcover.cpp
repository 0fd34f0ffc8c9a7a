#include "cdec/oddcover.hpp"

#include "cdec/arboricity.hpp"
#include "cdec/decompose.hpp"
#include "cdec/error.hpp"
#include "subset_scan.hpp"

#include <algorithm>
#include <cmath>

namespace cdec {

namespace {

void require_eulerian(const BinaryMatroid& m) {
  if (!is_eulerian(m)) {
    throw Error(ErrorKind::kNotEulerian, "matroid is not Eulerian");
  }
}

/// Canonical-order smallest nonzero vector different from y.
Gf2Vector smallest_partner(const Gf2Vector& y) {
  const std::size_t n = y.dim();
  Gf2Vector z = Gf2Vector::unit(n, n - 1);
  if (z == y) z = Gf2Vector::unit(n, n - 2);
  return z;
}

/// Drops circuits that occur an even number of times.
std::vector<Circuit> cancel_pairs(std::vector<Circuit> circuits) {
  std::vector<std::size_t> order(circuits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return circuits[a] < circuits[b];
  });
  std::vector<bool> keep(circuits.size(), true);
  for (std::size_t i = 0; i + 1 < order.size();) {
    if (circuits[order[i]] == circuits[order[i + 1]]) {
      keep[order[i]] = keep[order[i + 1]] = false;
      i += 2;
    } else {
      ++i;
    }
  }
  std::vector<Circuit> out;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (keep[i]) out.push_back(std::move(circuits[i]));
  }
  return out;
}

}  // namespace

Circuit complete_to_circuit(std::span<const Gf2Vector> independent) {
  if (independent.size() <= 1) {
    throw Error(ErrorKind::kTooSmall, "cannot complete fewer than two vectors");
  }
  const std::size_t dim = independent.front().dim();
  if (!is_independent(independent, dim)) {
    throw Error(ErrorKind::kInvalidArgument, "set to complete is dependent");
  }
  std::vector<Gf2Vector> members(independent.begin(), independent.end());
  members.push_back(xor_sum(independent, dim));
  return Circuit(dim, std::move(members));
}

OddCover symdiff_reduce(const BinaryMatroid& m) {
  require_eulerian(m);
  OddCover out;
  if (m.empty()) return out;
  const double ln = std::log(static_cast<double>(m.size()));
  const double threshold = static_cast<double>(m.size()) / (ln * ln);

  BinaryMatroid n = m;
  while (!n.empty() && static_cast<double>(n.size()) >= threshold) {
    const auto basis = max_independent_subset(n);
    // Rank >= 3 removes at least rank - 1 >= 2 elements per step.
    if (basis.size() <= 2) break;
    Circuit c = complete_to_circuit(basis);
    n = n.symmetric_difference(c.elements());
    out.circuits.push_back(std::move(c));
  }
  while (!n.empty()) {
    Circuit c = extract_any_circuit(n);
    n = n.without(c.elements());
    out.circuits.push_back(std::move(c));
  }
  return out;
}

OddCover oddcover_via_arboricity(const BinaryMatroid& m) {
  if (m.empty()) throw Error(ErrorKind::kEmpty, "matroid is empty");
  require_eulerian(m);

  auto [t, partition] = arboricity(m);
  auto& parts = partition.parts;
  OddCover out;
  out.arboricity = t;

  std::vector<Circuit> circuits;
  std::vector<Gf2Vector> completions;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].size() != 1) continue;
    ++out.singleton_parts;
    auto donor = std::max_element(parts.begin(), parts.end(),
                                  [](const auto& a, const auto& b) {
                                    return a.size() < b.size();
                                  });
    if (donor->size() >= 3) {
      // Any two distinct nonzero vectors are independent.
      parts[j].push_back(donor->front());
      donor->erase(donor->begin());
      std::sort(parts[j].begin(), parts[j].end());
      continue;
    }
    const Gf2Vector& y = parts[j].front();
    const Gf2Vector z = smallest_partner(y);
    completions.push_back(z);
    completions.push_back(y ^ z);
    circuits.push_back(Circuit(m.dim(), {y, z, y ^ z}));
    parts[j].clear();
  }
  for (const auto& part : parts) {
    if (part.empty()) continue;
    circuits.push_back(complete_to_circuit(part));
    completions.push_back(xor_sum(part, m.dim()));
  }

  BinaryMatroid rest = m;
  for (const auto& c : circuits) rest = rest.symmetric_difference(c.elements());
  std::sort(completions.begin(), completions.end());
  for (const auto& x : rest) {
    if (!std::binary_search(completions.begin(), completions.end(), x)) {
      throw Error(ErrorKind::kInternal,
                  "remainder element " + x.to_string() + " is not a completion vector");
    }
  }
  out.remainder = rest.size();

  if (!rest.empty()) {
    // Disjoint peeling guarantees |rest| / 3; keep the reduction when it wins.
    OddCover reduced = symdiff_reduce(rest);
    Decomposition peeled = peel_decompose(rest);
    auto& extra = reduced.circuits.size() <= peeled.circuits.size()
                      ? reduced.circuits
                      : peeled.circuits;
    for (auto& c : extra) circuits.push_back(std::move(c));
  }
  out.circuits = cancel_pairs(std::move(circuits));
  return out;
}

std::size_t density_lower_bound(const BinaryMatroid& m, std::size_t exhaustive_limit) {
  if (m.empty()) throw Error(ErrorKind::kEmpty, "matroid is empty");
  std::size_t best = 0;
  if (m.size() <= exhaustive_limit) {
    const auto coords = detail::compress_to_span(m);
    detail::for_each_subset_size_rank(coords, [&](std::size_t size, std::size_t r) {
      best = std::max(best, (size + r) / (r + 1));
    });
    return best;
  }
  // Element x lies in span(b_1..b_j) for j = (highest basis index used) + 1.
  const auto basis = max_independent_subset(m);
  Gf2Eliminator elim(m.dim());
  for (const auto& b : basis) elim.insert(b);
  std::vector<std::size_t> first_prefix(basis.size() + 1, 0);
  for (const auto& x : m) {
    const auto combo = elim.express(x);
    ++first_prefix[combo->back() + 1];
  }
  std::size_t inside = 0;
  for (std::size_t j = 1; j <= basis.size(); ++j) {
    inside += first_prefix[j];
    best = std::max(best, (inside + j) / (j + 1));
  }
  return best;
}

}  // namespace cdec
