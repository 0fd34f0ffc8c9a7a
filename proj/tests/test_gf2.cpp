#include "cdec/gf2.hpp"

#include "support.hpp"

#include <algorithm>

using namespace cdec;
using namespace cdec::testing;

TEST_CASE("vector parse and print round-trip, leftmost char is coordinate 0") {
  const auto x = v("1000");
  CHECK(x.dim() == 4);
  CHECK(x.test(0));
  CHECK_FALSE(x.test(3));
  CHECK(x.to_string() == "1000");
  CHECK(x.popcount() == 1);
  CHECK_KIND(Gf2Vector::parse("10x1"), "Parse");
  CHECK_KIND(Gf2Vector(0), "OutOfRange");
  CHECK_KIND(Gf2Vector(4097), "OutOfRange");
}

TEST_CASE("canonical order reads the bit string as a big-endian integer") {
  CHECK(v("0001") < v("0010"));
  CHECK(v("0111") < v("1000"));
  CHECK(v("1000") < v("1001"));
  // Across a word boundary the high coordinates are least significant.
  Gf2Vector a(130), b(130);
  a.set(129);
  b.set(64);
  CHECK(a < b);
}

TEST_CASE("vectors wider than one word xor and compare correctly") {
  Gf2Vector a(200), b(200);
  a.set(3);
  a.set(150);
  b.set(150);
  const auto c = a ^ b;
  CHECK(c.popcount() == 1);
  CHECK(c.test(3));
  CHECK(c.lowest_set() == 3);
  CHECK((c ^ c).is_zero());
}

TEST_CASE("matroid construction rejects zero, duplicates and mixed dimension") {
  CHECK_KIND(mat({"10", "00"}), "InvalidArgument");
  CHECK_KIND(mat({"10", "10"}), "InvalidArgument");
  CHECK_KIND(BinaryMatroid(2, vs({"10", "011"})), "InvalidArgument");
  const auto m = mat({"11", "01", "10"});
  CHECK(m[0] == v("01"));
  CHECK(m[2] == v("11"));
  CHECK(m.contains(v("10")));
  CHECK(m.index_of(v("10")) == 1U);
}

TEST_CASE("rank examples") {
  CHECK(rank(triangle()) == 2);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(rank(complete_matroid(n)) == n);
  CHECK(rank(BinaryMatroid(5)) == 0);
}

TEST_CASE("is_eulerian examples") {
  CHECK(is_eulerian(triangle()));
  CHECK_FALSE(is_eulerian(mat({"10", "01"})));
  CHECK(is_eulerian(complete_matroid(3)));
  CHECK(is_eulerian(BinaryMatroid(3)));
}

TEST_CASE("max_independent_subset examples") {
  CHECK(max_independent_subset(triangle()) == vs({"01", "10"}));
  CHECK(max_independent_subset(BinaryMatroid(3)).empty());
  const auto basis = max_independent_subset(complete_matroid(4));
  auto sorted = basis;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == vs({"0001", "0010", "0100", "1000"}));
}

TEST_CASE("express_in_basis examples") {
  CHECK(express_in_basis(v("11"), vs({"10", "01"})) == std::vector<std::size_t>{0, 1});
  CHECK(express_in_basis(v("001"), vs({"100", "010", "001"})) ==
        std::vector<std::size_t>{2});
  const auto basis = vs({"1000", "1100", "0110", "0011"});
  const auto target = v("1111");
  // Independent oracle: scan all 16 subsets.
  std::vector<std::size_t> oracle;
  for (unsigned mask = 1; mask < 16; ++mask) {
    Gf2Vector sum(4);
    for (unsigned i = 0; i < 4; ++i) {
      if ((mask >> i) & 1U) sum ^= basis[i];
    }
    if (sum == target) {
      for (unsigned i = 0; i < 4; ++i) {
        if ((mask >> i) & 1U) oracle.push_back(i);
      }
    }
  }
  CHECK(express_in_basis(target, basis) == oracle);
  CHECK_KIND(express_in_basis(v("001"), vs({"100", "010"})), "NotInSpan");
  CHECK_KIND(express_in_basis(v("110"), vs({"100", "010", "110"})), "InvalidArgument");
}

TEST_CASE("eliminator keeps pivot count on reinsertion") {
  Gf2Eliminator elim(3);
  CHECK(elim.insert(v("110")));
  CHECK(elim.insert(v("011")));
  CHECK_FALSE(elim.insert(v("101")));
  CHECK(elim.rank() == 2);
  CHECK(elim.in_span(v("101")));
  CHECK_FALSE(elim.in_span(v("001")));
}

TEST_CASE("symmetric difference and removal keep canonical order") {
  const auto m = complete_matroid(3);
  const auto t = vs({"001", "010", "011"});
  const auto rest = m.without(t);
  CHECK(rest.size() == 4);
  CHECK(is_eulerian(rest));
  const auto sd = triangle().symmetric_difference(vs({"01", "10"}));
  CHECK(sd.size() == 1);
  CHECK(sd[0] == v("11"));
}

TEST_CASE("property: rank bounds size, expansions reproduce, bases re-verify") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = random_instance(rng, 10, 200);
    const std::size_t r = rank(m);
    CHECK(m.size() <= (std::size_t{1} << r) - 1);
    const auto basis = max_independent_subset(m);
    CHECK(basis.size() == r);
    CHECK(is_independent(basis, m.dim()));
    for (const auto& x : m) {
      const auto idx = express_in_basis(x, basis);
      Gf2Vector sum(m.dim());
      for (std::size_t i : idx) sum ^= basis[i];
      CHECK(sum == x);
    }
    // Eulerian is preserved by xor with a zero-sum set such as a triangle.
    const auto& a = basis[0];
    const auto& b = basis[1];
    std::vector<Gf2Vector> tri = {a, b, a ^ b};
    std::sort(tri.begin(), tri.end());
    CHECK(is_eulerian(m.symmetric_difference(tri)) == is_eulerian(m));
  }
}
