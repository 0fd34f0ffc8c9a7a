#pragma once

#include "cdec/gf2.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cdec {

/// A minimal nonempty zero-sum set of distinct nonzero vectors, kept in
/// canonical order. The constructor verifies the circuit property.
class Circuit {
 public:
  /// Throws NotACircuit when `elements` is not a circuit.
  Circuit(std::size_t dim, std::vector<Gf2Vector> elements);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Gf2Vector>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  bool contains(const Gf2Vector& x) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend auto operator<=>(const Circuit& a, const Circuit& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::size_t dim_;
  std::vector<Gf2Vector> elements_;
};

/// Nonempty, zero sum, and rank = size - 1. Duplicates make it false.
bool is_circuit(std::span<const Gf2Vector> elements);

/// {m} together with the basis vectors in m's expansion.
/// Throws NotInSpan, or DegenerateMember when m is itself a basis vector.
Circuit fundamental_circuit(const Gf2Vector& m,
                            std::span<const Gf2Vector> basis);

/// Largest fundamental circuit over the canonical basis of n; ties go to the
/// smallest non-basis element. Requires n Eulerian with at least 3 elements.
Circuit largest_fundamental_circuit(const BinaryMatroid& n);

/// The fundamental circuit closing the first dependency met while inserting
/// n in canonical order. Requires n nonempty and Eulerian.
Circuit extract_any_circuit(const BinaryMatroid& n);

/// Least c >= 3 with sum_{i=1}^{c-1} C(r, i) >= size. A rank-r matroid with
/// `size` elements that has any circuit has one with at least c elements, and
/// a fundamental circuit over any basis reaches that size.
/// Throws OutOfRange when size > 2^r - 1 (no rank-r matroid is that large).
std::uint64_t guaranteed_circuit_size(std::uint64_t size, std::uint64_t r);

}  // namespace cdec
