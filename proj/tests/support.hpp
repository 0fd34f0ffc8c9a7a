#pragma once

#include "cdec/error.hpp"
#include "cdec/generators.hpp"
#include "cdec/gf2.hpp"

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace cdec::testing {

inline Gf2Vector v(const char* bits) { return Gf2Vector::parse(bits); }

inline std::vector<Gf2Vector> vs(std::initializer_list<const char*> bits) {
  std::vector<Gf2Vector> out;
  for (const char* b : bits) out.push_back(v(b));
  return out;
}

inline BinaryMatroid mat(std::initializer_list<const char*> bits) {
  auto elements = vs(bits);
  const std::size_t dim = elements.empty() ? 1 : elements.front().dim();
  return BinaryMatroid(dim, std::move(elements));
}

inline BinaryMatroid triangle() { return mat({"10", "01", "11"}); }

/// Kind of the cdec::Error thrown by f, or nothing when f returns normally.
template <class F>
std::string thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(to_string(e.kind()));
  }
  return "none";
}

/// Random Eulerian instance with dim in [3, max_dim] and size in
/// [3, min(2^dim - 1, max_size)], drawn from `rng`.
inline BinaryMatroid random_instance(SplitMix64& rng, std::size_t max_dim,
                                     std::size_t max_size) {
  const std::size_t dim = 3 + rng.below(max_dim - 2);
  const std::size_t full = dim >= 32 ? max_size : (std::size_t{1} << dim) - 1;
  const std::size_t cap = std::min(full, max_size);
  const std::size_t size = 3 + rng.below(cap - 2);
  return random_eulerian(dim, size, rng.next());
}

}  // namespace cdec::testing

#define CHECK_KIND(expr, kind_name) \
  CHECK(::cdec::testing::thrown_kind([&] { (void)(expr); }) == std::string(kind_name))
