#include "cdec/circuits.hpp"
#include "cdec/numeric.hpp"
#include "cdec/oracle.hpp"

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace cdec;
using namespace cdec::testing;

TEST_CASE("is_circuit examples") {
  CHECK(is_circuit(vs({"10", "01", "11"})));
  // Two disjoint triangles: zero sum, rank 4 instead of 5.
  CHECK_FALSE(is_circuit(vs({"1000", "0100", "1100", "0010", "0001", "0011"})));
  CHECK_FALSE(is_circuit(vs({"10", "01"})));
  CHECK_FALSE(is_circuit(std::vector<Gf2Vector>{}));
}

TEST_CASE("Circuit constructor validates") {
  CHECK_KIND(Circuit(2, vs({"10", "01"})), "NotACircuit");
  const Circuit c(2, vs({"11", "10", "01"}));
  CHECK(c.elements().front() == v("01"));
  CHECK(c.contains(v("11")));
}

TEST_CASE("fundamental_circuit examples") {
  const auto c = fundamental_circuit(v("11"), vs({"10", "01"}));
  CHECK(c.size() == 3);
  CHECK(fundamental_circuit(v("111"), vs({"100", "010", "001"})).size() == 4);
  const auto basis = vs({"1000", "0100", "0010", "0001"});
  const auto five = fundamental_circuit(v("1111"), basis);
  CHECK(five.size() == 5);
  CHECK(is_circuit(five.elements()));
  CHECK_KIND(fundamental_circuit(v("100"), vs({"100", "010"})), "DegenerateMember");
  CHECK_KIND(fundamental_circuit(v("001"), vs({"100", "010"})), "NotInSpan");
}

TEST_CASE("largest_fundamental_circuit examples") {
  CHECK(largest_fundamental_circuit(triangle()).size() == 3);
  const auto c = largest_fundamental_circuit(complete_matroid(4));
  CHECK(c.size() == 5);
  CHECK(c.contains(v("1111")));
  CHECK_KIND(largest_fundamental_circuit(mat({"10", "01"})), "TooSmall");
  CHECK_KIND(largest_fundamental_circuit(mat({"100", "010", "001"})), "NotEulerian");
}

TEST_CASE("largest fundamental circuit of a large complete matroid reaches alpha * r") {
  // alpha = 1/(2 + 1/4) = 4/9 at eps = 1/2.
  for (std::size_t r : {9U, 12U, 14U}) {
    const auto c = largest_fundamental_circuit(complete_matroid(r));
    CHECK(c.size() >= ceil_mul(Rational(4, 9), r));
  }
}

TEST_CASE("extract_any_circuit examples") {
  CHECK(extract_any_circuit(triangle()).size() == 3);
  const auto two = mat({"1000", "0100", "1100", "0010", "0001", "0011"});
  const auto c = extract_any_circuit(two);
  CHECK(c.size() == 3);
  for (const auto& x : c) CHECK(two.contains(x));
  const auto c3 = extract_any_circuit(complete_matroid(3));
  CHECK(c3.size() >= 3);
  CHECK(c3.size() <= 4);
  CHECK_KIND(extract_any_circuit(BinaryMatroid(3)), "Empty");
  CHECK_KIND(extract_any_circuit(mat({"10", "01"})), "NotEulerian");
}

TEST_CASE("guaranteed_circuit_size examples") {
  CHECK(guaranteed_circuit_size(15, 4) == 5);
  CHECK(guaranteed_circuit_size(3, 2) == 3);
  CHECK_KIND(guaranteed_circuit_size(2, 4), "InvalidArgument");
  CHECK_KIND(guaranteed_circuit_size(3, 1), "InvalidArgument");
  CHECK_KIND(guaranteed_circuit_size(16, 4), "OutOfRange");
  // At least floor(log size / log r).
  for (std::uint64_t r = 2; r <= 20; ++r) {
    for (std::uint64_t size = 3; size < (std::uint64_t{1} << r); size = size * 3 + 1) {
      const auto floor_log = static_cast<std::uint64_t>(
          std::floor(std::log(static_cast<double>(size)) / std::log(static_cast<double>(r))));
      CHECK(guaranteed_circuit_size(size, r) >= floor_log);
    }
  }
}

TEST_CASE("guaranteed_circuit_size agrees with a direct binomial scan") {
  for (std::uint64_t r = 2; r <= 12; ++r) {
    for (std::uint64_t size = 3; size < (std::uint64_t{1} << r); ++size) {
      std::uint64_t c = 3;
      while (binomial_sum(r, 1, c - 1) < size) ++c;
      CHECK(guaranteed_circuit_size(size, r) == c);
    }
  }
}

TEST_CASE("property: returned circuits are minimal subsets meeting the size bound") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const auto m = random_instance(rng, 9, 120);
    const auto big = largest_fundamental_circuit(m);
    CHECK(big.size() >= guaranteed_circuit_size(m.size(), rank(m)));
    for (const auto& c : {big, extract_any_circuit(m)}) {
      CHECK(is_circuit(c.elements()));
      for (const auto& x : c) CHECK(m.contains(x));
      for (std::size_t drop = 0; drop < c.size(); ++drop) {
        auto rest = c.elements();
        rest.erase(rest.begin() + static_cast<long>(drop));
        CHECK(rank(rest, m.dim()) == c.size() - 1);
      }
      CHECK(is_eulerian(m.without(c.elements())));
    }
  }
}

TEST_CASE("fundamental circuits appear in the exhaustive catalog") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_instance(rng, 6, 18);
    const auto catalog = enumerate_circuits(m);
    std::set<std::vector<Gf2Vector>> known;
    for (auto mask : catalog.circuits) known.insert(catalog.members(mask));
    const auto basis = max_independent_subset(m);
    for (const auto& x : m) {
      if (std::find(basis.begin(), basis.end(), x) != basis.end()) continue;
      CHECK(known.count(fundamental_circuit(x, basis).elements()) == 1);
    }
  }
}
