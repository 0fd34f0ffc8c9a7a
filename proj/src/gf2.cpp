#include "cdec/gf2.hpp"

#include "cdec/error.hpp"

#include <algorithm>
#include <bit>

namespace cdec {

namespace {

std::size_t words_for(std::size_t dim) {
  return (dim + Gf2Vector::kWordBits - 1) / Gf2Vector::kWordBits;
}

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > Gf2Vector::kMaxDim) {
    throw Error(ErrorKind::kOutOfRange,
                "dimension " + std::to_string(dim) + " outside [1, " +
                    std::to_string(Gf2Vector::kMaxDim) + "]");
  }
}

}  // namespace

Gf2Vector::Gf2Vector(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {
  check_dim(dim);
}

Gf2Vector Gf2Vector::unit(std::size_t dim, std::size_t coord) {
  Gf2Vector v(dim);
  if (coord >= dim) {
    throw Error(ErrorKind::kOutOfRange, "unit vector coordinate out of range");
  }
  v.set(coord);
  return v;
}

Gf2Vector Gf2Vector::from_word(std::size_t dim, Word bits) {
  if (dim > kWordBits) {
    throw Error(ErrorKind::kOutOfRange, "from_word needs dim <= 64");
  }
  Gf2Vector v(dim);
  v.words_[0] = dim == kWordBits ? bits : bits & ((Word{1} << dim) - 1);
  return v;
}

Gf2Vector Gf2Vector::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxDim) {
    throw ParseError(0, "vector length " + std::to_string(text.size()) +
                            " outside [1, " + std::to_string(kMaxDim) + "]");
  }
  Gf2Vector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i);
    } else if (text[i] != '0') {
      throw ParseError(0, std::string("unexpected character '") + text[i] +
                              "' in vector");
    }
  }
  return v;
}

void Gf2Vector::set(std::size_t coord, bool value) noexcept {
  const Word mask = Word{1} << (coord % kWordBits);
  if (value) {
    words_[coord / kWordBits] |= mask;
  } else {
    words_[coord / kWordBits] &= ~mask;
  }
}

bool Gf2Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](Word w) { return w == 0; });
}

std::size_t Gf2Vector::popcount() const noexcept {
  std::size_t count = 0;
  for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::size_t Gf2Vector::lowest_set() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) {
      return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
  }
  return dim_;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::strong_ordering operator<=>(const Gf2Vector& a,
                                 const Gf2Vector& b) noexcept {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    const Gf2Vector::Word diff = a.words_[k] ^ b.words_[k];
    if (diff != 0) {
      // Lower coordinate = more significant.
      const Gf2Vector::Word low = diff & (~diff + 1);
      return (a.words_[k] & low) ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::string Gf2Vector::to_string() const {
  std::string out(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::size_t Gf2Vector::hash() const noexcept {
  std::size_t h = dim_ * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Gf2Vector xor_sum(std::span<const Gf2Vector> vectors, std::size_t dim) {
  Gf2Vector acc(dim);
  for (const auto& v : vectors) acc ^= v;
  return acc;
}

BinaryMatroid::BinaryMatroid(std::size_t dim, std::vector<Gf2Vector> elements)
    : dim_(dim), elements_(std::move(elements)) {
  check_dim(dim);
  for (const auto& v : elements_) {
    if (v.dim() != dim) {
      throw Error(ErrorKind::kInvalidArgument,
                  "element dimension " + std::to_string(v.dim()) +
                      " does not match matroid dimension " +
                      std::to_string(dim));
    }
    if (v.is_zero()) {
      throw Error(ErrorKind::kInvalidArgument, "zero vector in matroid");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "duplicate element " + dup->to_string());
  }
}

BinaryMatroid BinaryMatroid::from_sorted_unchecked(
    std::size_t dim, std::vector<Gf2Vector> sorted) {
  BinaryMatroid m(dim);
  m.elements_ = std::move(sorted);
  return m;
}

bool BinaryMatroid::contains(const Gf2Vector& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::optional<std::size_t> BinaryMatroid::index_of(const Gf2Vector& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

BinaryMatroid BinaryMatroid::without(std::span<const Gf2Vector> removed) const {
  std::vector<Gf2Vector> rest;
  rest.reserve(elements_.size());
  std::set_difference(elements_.begin(), elements_.end(), removed.begin(),
                      removed.end(), std::back_inserter(rest));
  return from_sorted_unchecked(dim_, std::move(rest));
}

BinaryMatroid BinaryMatroid::symmetric_difference(
    std::span<const Gf2Vector> other) const {
  std::vector<Gf2Vector> out;
  out.reserve(elements_.size() + other.size());
  std::set_symmetric_difference(elements_.begin(), elements_.end(),
                                other.begin(), other.end(),
                                std::back_inserter(out));
  return from_sorted_unchecked(dim_, std::move(out));
}

Gf2Eliminator::Gf2Eliminator(std::size_t dim) : dim_(dim) { check_dim(dim); }

void Gf2Eliminator::reduce(Gf2Vector& x, Gf2Vector& combo) const {
  // Row j is zero on the pivots of rows 0..j-1, so one forward pass suffices.
  for (const auto& row : rows_) {
    if (x.test(row.pivot)) {
      x ^= row.value;
      combo ^= row.combo;
    }
  }
}

bool Gf2Eliminator::insert(const Gf2Vector& x) {
  if (x.dim() != dim_) {
    throw Error(ErrorKind::kInvalidArgument, "eliminator dimension mismatch");
  }
  Gf2Vector reduced = x;
  Gf2Vector combo(dim_);
  reduce(reduced, combo);
  if (reduced.is_zero()) return false;
  combo.set(members_.size());
  rows_.push_back(Row{reduced.lowest_set(), std::move(reduced), std::move(combo)});
  members_.push_back(x);
  return true;
}

std::optional<std::vector<std::size_t>> Gf2Eliminator::express(
    const Gf2Vector& x) const {
  if (x.dim() != dim_) {
    throw Error(ErrorKind::kInvalidArgument, "eliminator dimension mismatch");
  }
  Gf2Vector reduced = x;
  Gf2Vector combo(dim_);
  reduce(reduced, combo);
  if (!reduced.is_zero()) return std::nullopt;
  std::vector<std::size_t> indices;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (combo.test(k)) indices.push_back(k);
  }
  return indices;
}

bool Gf2Eliminator::in_span(const Gf2Vector& x) const {
  Gf2Vector reduced = x;
  for (const auto& row : rows_) {
    if (reduced.test(row.pivot)) reduced ^= row.value;
  }
  return reduced.is_zero();
}

std::size_t rank(std::span<const Gf2Vector> vectors, std::size_t dim) {
  Gf2Eliminator elim(dim);
  for (const auto& v : vectors) {
    elim.insert(v);
    if (elim.rank() == dim) break;
  }
  return elim.rank();
}

std::size_t rank(const BinaryMatroid& m) {
  if (m.empty()) return 0;
  return rank(m.elements(), m.dim());
}

bool is_eulerian(const BinaryMatroid& m) {
  if (m.empty()) return true;
  return xor_sum(m.elements(), m.dim()).is_zero();
}

bool is_independent(std::span<const Gf2Vector> vectors, std::size_t dim) {
  Gf2Eliminator elim(dim);
  for (const auto& v : vectors) {
    if (!elim.insert(v)) return false;
  }
  return true;
}

std::vector<Gf2Vector> max_independent_subset(const BinaryMatroid& m) {
  if (m.empty()) return {};
  Gf2Eliminator elim(m.dim());
  for (const auto& v : m) {
    elim.insert(v);
    if (elim.rank() == m.dim()) break;
  }
  return elim.members();
}

std::vector<std::size_t> express_in_basis(const Gf2Vector& x,
                                          std::span<const Gf2Vector> basis) {
  Gf2Eliminator elim(x.dim());
  for (const auto& b : basis) {
    if (!elim.insert(b)) {
      throw Error(ErrorKind::kInvalidArgument, "basis is not independent");
    }
  }
  auto indices = elim.express(x);
  if (!indices) {
    throw Error(ErrorKind::kNotInSpan,
                "vector " + x.to_string() + " is not in the span of the basis");
  }
  return *indices;
}

}  // namespace cdec
