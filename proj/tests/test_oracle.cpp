#include "cdec/arboricity.hpp"
#include "cdec/decompose.hpp"
#include "cdec/oddcover.hpp"
#include "cdec/oracle.hpp"
#include "cdec/orbit.hpp"

#include "support.hpp"

#include <set>

using namespace cdec;
using namespace cdec::testing;

namespace {

/// Independent oracle: plain scan of all 2^|m| subsets.
std::size_t brute_circuit_count(const BinaryMatroid& m) {
  std::size_t count = 0;
  const std::size_t n = m.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<Gf2Vector> s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.push_back(m[i]);
    }
    if (is_circuit(s)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumerate_circuits examples") {
  CHECK(enumerate_circuits(triangle()).circuits.size() == 1);
  const auto c3 = enumerate_circuits(complete_matroid(3));
  CHECK(c3.circuits.size() == 14);
  std::size_t triangles = 0;
  for (auto mask : c3.circuits) {
    CHECK(is_circuit(c3.members(mask)));
    if (std::popcount(mask) == 3) ++triangles;
  }
  CHECK(triangles == 7);
  CHECK(enumerate_circuits(independent_copies(5, 2)).circuits.size() == 5);
  CHECK_KIND(enumerate_circuits(complete_matroid(5)), "TooLarge");
}

TEST_CASE("enumerate_circuits matches a plain subset scan") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_instance(rng, 6, 14);
    const auto catalog = enumerate_circuits(m);
    std::set<std::uint32_t> unique(catalog.circuits.begin(), catalog.circuits.end());
    CHECK(unique.size() == catalog.circuits.size());
    CHECK(catalog.circuits.size() == brute_circuit_count(m));
  }
}

TEST_CASE("exact_c examples") {
  CHECK(exact_c(independent_copies(3, 2)) == 3);
  CHECK(exact_c(complete_matroid(2)) == 1);
  CHECK(exact_c(complete_matroid(4)) == 3);
  CHECK(exact_c(BinaryMatroid(3)) == 0);
  for (std::size_t k = 1; k <= 8; ++k) CHECK(exact_c(independent_copies(k, 2)) == k);
  CHECK_KIND(exact_c(mat({"10", "01"})), "NotEulerian");
  CHECK_KIND(exact_c(complete_matroid(5)), "TooLarge");
}

TEST_CASE("exact_c2 examples") {
  CHECK(exact_c2(triangle()).value == 1U);
  const auto two = exact_c2(independent_copies(2, 2));
  CHECK(two.value == 2U);
  CHECK_FALSE(two.restricted);
  const auto c3 = exact_c2(complete_matroid(3));
  REQUIRE(c3.value);
  CHECK(*c3.value >= 2);
  CHECK(*c3.value <= exact_c(complete_matroid(3)));
  CHECK_KIND(exact_c2(mat({"10", "01"})), "NotEulerian");
  CHECK_KIND(exact_c2(complete_matroid(5)), "TooLarge");
  CHECK_KIND(exact_c2(triangle(), C2Options{9, 6}), "TooLarge");
}

TEST_CASE("restricted c2 search is flagged") {
  // A triangle embedded in dimension 6 has rank 2.
  const auto m = mat({"100000", "010000", "110000"});
  const auto r = exact_c2(m);
  CHECK(r.restricted);
  CHECK(r.value == 1U);
  CHECK(r.search_dim == 2);
}

TEST_CASE("c2_lower_bound stops at the depth cap") {
  const auto m = independent_copies(2, 2);
  const auto shallow = c2_lower_bound(m, 1);
  CHECK_FALSE(shallow.value);
  CHECK(shallow.lower_bound == 2);
  CHECK(c2_lower_bound(m, 3).value == 2U);
}

TEST_CASE("probe_conjectures examples") {
  const auto tri = probe_conjectures(triangle());
  CHECK(tri.c == 1);
  CHECK(tri.conj1_bound == 1);
  CHECK(tri.c2.value == 1U);
  CHECK(tri.arboricity == 2);
  CHECK(tri.conj1 == ConjectureStatus::kConsistent);
  CHECK(tri.conj2 == ConjectureStatus::kConsistent);

  const auto c4 = probe_conjectures(complete_matroid(4));
  CHECK(c4.c == 3);
  CHECK(c4.conj1_bound == 3);
  CHECK(c4.conj1 == ConjectureStatus::kConsistent);

  const auto two = probe_conjectures(independent_copies(2, 2));
  CHECK(two.c2.value == 2U);
  CHECK(two.arboricity == 2);
  CHECK(two.conj2 == ConjectureStatus::kConsistent);
  CHECK(to_string(ConjectureStatus::kViolation) == "VIOLATION");
}

TEST_CASE("orbit counts are optimal for p = 3 and p = 5") {
  for (unsigned p : {3U, 5U}) {
    CHECK(exact_c(build_even_weight_model(p)) == orbit_decompose(p).orbits.size());
  }
}

TEST_CASE("property: oracle values dominate and are dominated consistently") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_instance(rng, 4, 15);
    const auto c = exact_c(m);
    const auto c2 = exact_c2(m);
    REQUIRE(c2.value);
    CHECK(*c2.value <= c);
    CHECK(c >= density_lower_bound(m, 20));
    CHECK(*c2.value >= density_lower_bound(m, 20));
    CHECK(peel_decompose(m).circuits.size() >= c);
    CHECK(log_greedy_decompose(m).circuits.size() >= c);
    CHECK(oddcover_via_arboricity(m).circuits.size() >= *c2.value);
    CHECK(symdiff_reduce(m).circuits.size() >= *c2.value);
  }
}
