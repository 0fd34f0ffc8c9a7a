#include "cdec/circuits.hpp"

#include "cdec/error.hpp"
#include "cdec/numeric.hpp"

#include <algorithm>

namespace cdec {

namespace {

void require_eulerian(const BinaryMatroid& n) {
  if (!is_eulerian(n)) {
    throw Error(ErrorKind::kNotEulerian, "matroid is not Eulerian");
  }
}

}  // namespace

Circuit::Circuit(std::size_t dim, std::vector<Gf2Vector> elements)
    : dim_(dim), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (const auto& v : elements_) {
    if (v.dim() != dim) {
      throw Error(ErrorKind::kNotACircuit, "circuit element dimension mismatch");
    }
  }
  if (!is_circuit(elements_)) {
    throw Error(ErrorKind::kNotACircuit,
                "set of " + std::to_string(elements_.size()) +
                    " vectors is not a circuit");
  }
}

bool Circuit::contains(const Gf2Vector& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool is_circuit(std::span<const Gf2Vector> elements) {
  if (elements.empty()) return false;
  const std::size_t dim = elements.front().dim();
  if (!xor_sum(elements, dim).is_zero()) return false;
  // Zero sum and rank = size - 1 means every proper subset is independent;
  // a zero or repeated vector would drop the rank further.
  return rank(elements, dim) + 1 == elements.size();
}

Circuit fundamental_circuit(const Gf2Vector& m,
                            std::span<const Gf2Vector> basis) {
  if (std::find(basis.begin(), basis.end(), m) != basis.end()) {
    throw Error(ErrorKind::kDegenerateMember,
                "vector " + m.to_string() + " is a basis member");
  }
  const auto indices = express_in_basis(m, basis);
  std::vector<Gf2Vector> members{m};
  for (std::size_t i : indices) members.push_back(basis[i]);
  return Circuit(m.dim(), std::move(members));
}

Circuit largest_fundamental_circuit(const BinaryMatroid& n) {
  if (n.size() < 3) {
    throw Error(ErrorKind::kTooSmall, "need at least 3 elements");
  }
  require_eulerian(n);

  // Inserting in canonical order yields the canonical basis; a dependent
  // element's expansion over the prefix basis is its expansion over the
  // final basis, so one pass finds every fundamental circuit.
  Gf2Eliminator elim(n.dim());
  std::size_t best_size = 0;
  const Gf2Vector* best = nullptr;
  std::vector<std::size_t> best_indices;
  for (const auto& x : n) {
    if (elim.insert(x)) continue;
    auto indices = elim.express(x);
    if (indices->size() + 1 > best_size) {
      best_size = indices->size() + 1;
      best = &x;
      best_indices = std::move(*indices);
    }
  }
  if (best == nullptr) {
    throw Error(ErrorKind::kInternal, "Eulerian set without a dependency");
  }
  std::vector<Gf2Vector> members{*best};
  for (std::size_t i : best_indices) members.push_back(elim.members()[i]);
  return Circuit(n.dim(), std::move(members));
}

Circuit extract_any_circuit(const BinaryMatroid& n) {
  if (n.empty()) throw Error(ErrorKind::kEmpty, "matroid is empty");
  require_eulerian(n);
  Gf2Eliminator elim(n.dim());
  for (const auto& x : n) {
    if (elim.insert(x)) continue;
    // The witness uses only already-inserted elements, and a fundamental
    // circuit over an independent prefix is minimal as it stands.
    const auto indices = elim.express(x);
    std::vector<Gf2Vector> members{x};
    for (std::size_t i : *indices) members.push_back(elim.members()[i]);
    return Circuit(n.dim(), std::move(members));
  }
  throw Error(ErrorKind::kInternal, "Eulerian set without a dependency");
}

std::uint64_t guaranteed_circuit_size(std::uint64_t size, std::uint64_t r) {
  if (size < 3 || r < 2) {
    throw Error(ErrorKind::kInvalidArgument, "need size >= 3 and r >= 2");
  }
  if (r < 64 && size > (std::uint64_t{1} << r) - 1) {
    throw Error(ErrorKind::kOutOfRange,
                "size exceeds 2^r - 1 for r = " + std::to_string(r));
  }
  const BigInt target = size;
  std::uint64_t c = 3;
  BigInt sum = binomial_sum(r, 1, c - 1);
  BigInt term = BigInt(r) * (r - 1) / 2;  // C(r, c - 1)
  while (sum < target) {
    // C(r, c) from C(r, c - 1).
    term = term * (r - c + 1) / c;
    sum += term;
    ++c;
  }
  return c;
}

}  // namespace cdec
