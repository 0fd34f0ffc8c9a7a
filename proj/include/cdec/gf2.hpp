#pragma once

// Bit-packed GF(2) vectors, binary matroids and incremental elimination.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdec {

/// A vector of F_2^n. Coordinate i lives at bit (i % 64) of word (i / 64).
///
/// Ordering is the canonical one used everywhere in the library: the bit
/// string read as a big-endian integer, coordinate 0 most significant. The
/// zero vector is representable (elimination needs it); matroids reject it.
class Gf2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxDim = 4096;

  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t dim);

  static Gf2Vector unit(std::size_t dim, std::size_t coord);
  /// Low `dim` bits of `bits`; bit i becomes coordinate i. dim <= 64.
  static Gf2Vector from_word(std::size_t dim, Word bits);
  /// Leftmost character is coordinate 0. Throws ParseError on bad characters.
  static Gf2Vector parse(std::string_view text);

  std::size_t dim() const noexcept { return dim_; }
  bool test(std::size_t coord) const noexcept {
    return (words_[coord / kWordBits] >> (coord % kWordBits)) & 1U;
  }
  void set(std::size_t coord, bool value = true) noexcept;
  void flip(std::size_t coord) noexcept {
    words_[coord / kWordBits] ^= Word{1} << (coord % kWordBits);
  }

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  /// Smallest set coordinate, or dim() if zero.
  std::size_t lowest_set() const noexcept;
  /// First word; convenient when dim <= 64.
  Word low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::span<const Word> words() const noexcept {
    return {words_.data(), words_.size()};
  }

  Gf2Vector& operator^=(const Gf2Vector& other) noexcept;
  friend Gf2Vector operator^(Gf2Vector lhs, const Gf2Vector& rhs) noexcept {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) noexcept {
    return a.dim_ == b.dim_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Gf2Vector& a,
                                          const Gf2Vector& b) noexcept;

  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  std::size_t dim_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

struct Gf2VectorHash {
  std::size_t operator()(const Gf2Vector& v) const noexcept { return v.hash(); }
};

/// XOR of all vectors; zero vector of `dim` when empty.
Gf2Vector xor_sum(std::span<const Gf2Vector> vectors, std::size_t dim);

/// A simple binary matroid: distinct nonzero vectors of F_2^dim, stored in
/// canonical order. Immutable after construction.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  explicit BinaryMatroid(std::size_t dim) : dim_(dim) {}
  /// Validates dimension, nonzero-ness and distinctness, then sorts.
  BinaryMatroid(std::size_t dim, std::vector<Gf2Vector> elements);

  /// Skips validation; `sorted` must already be canonical, distinct, nonzero.
  static BinaryMatroid from_sorted_unchecked(std::size_t dim,
                                             std::vector<Gf2Vector> sorted);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<Gf2Vector>& elements() const noexcept { return elements_; }
  const Gf2Vector& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Gf2Vector& x) const;
  /// Index of x in canonical order, if present.
  std::optional<std::size_t> index_of(const Gf2Vector& x) const;

  /// Set difference; `removed` must be canonical-sorted.
  BinaryMatroid without(std::span<const Gf2Vector> removed) const;
  /// Symmetric difference with a canonical-sorted vector list.
  BinaryMatroid symmetric_difference(std::span<const Gf2Vector> other) const;

  friend bool operator==(const BinaryMatroid&, const BinaryMatroid&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Gf2Vector> elements_;
};

/// Incremental Gaussian elimination over F_2.
///
/// Every independent vector handed to insert() becomes a member; members are
/// numbered in insertion order. Each pivot row remembers which members it is
/// the sum of, so a dependent vector can be expressed over the members.
class Gf2Eliminator {
 public:
  explicit Gf2Eliminator(std::size_t dim);

  /// True if x was independent of the members (and is now one).
  bool insert(const Gf2Vector& x);

  /// Member indices (ascending) whose sum is x, or nullopt if x is outside
  /// the span. The zero vector yields an empty list.
  std::optional<std::vector<std::size_t>> express(const Gf2Vector& x) const;
  bool in_span(const Gf2Vector& x) const;

  std::size_t rank() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Gf2Vector>& members() const noexcept { return members_; }

 private:
  struct Row {
    std::size_t pivot;
    Gf2Vector value;
    Gf2Vector combo;  // bit k set when member k takes part in this row
  };

  /// Reduces x in place, accumulating the combination used into combo.
  void reduce(Gf2Vector& x, Gf2Vector& combo) const;

  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<Gf2Vector> members_;
};

std::size_t rank(std::span<const Gf2Vector> vectors, std::size_t dim);
std::size_t rank(const BinaryMatroid& m);

bool is_eulerian(const BinaryMatroid& m);
bool is_independent(std::span<const Gf2Vector> vectors, std::size_t dim);

/// Basis picked greedily in canonical order (first-seen pivots).
std::vector<Gf2Vector> max_independent_subset(const BinaryMatroid& m);

/// The unique index set I (ascending, 0-based) with x = sum of basis[i].
/// Throws NotInSpan, or InvalidArgument if the basis is dependent.
std::vector<std::size_t> express_in_basis(const Gf2Vector& x,
                                          std::span<const Gf2Vector> basis);

}  // namespace cdec
