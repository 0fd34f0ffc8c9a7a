#include "cdec/arboricity.hpp"
#include "cdec/oddcover.hpp"
#include "cdec/verify.hpp"

#include "support.hpp"

using namespace cdec;
using namespace cdec::testing;

namespace {

void check_cover(const BinaryMatroid& m, const OddCover& cover) {
  const auto verdict = verify_odd_cover(m, to_blocks(cover.circuits));
  CHECK_MESSAGE(verdict.ok, verdict.reason);
}

std::size_t four_thirds(std::size_t a) { return (4 * a + 2) / 3; }

}  // namespace

TEST_CASE("complete_to_circuit examples") {
  CHECK(complete_to_circuit(vs({"10", "01"})).elements() == vs({"01", "10", "11"}));
  const auto c = complete_to_circuit(vs({"100", "010", "001"}));
  CHECK(c.size() == 4);
  CHECK(c.contains(v("111")));
  CHECK_KIND(complete_to_circuit(vs({"10"})), "TooSmall");
  CHECK_KIND(complete_to_circuit(vs({"10", "01", "11"})), "InvalidArgument");
}

TEST_CASE("symdiff_reduce examples") {
  const auto tri = symdiff_reduce(triangle());
  CHECK(tri.circuits.size() == 1);
  check_cover(triangle(), tri);
  CHECK(symdiff_reduce(BinaryMatroid(3)).circuits.empty());
  const auto m5 = complete_matroid(5);
  const auto cover = symdiff_reduce(m5);
  check_cover(m5, cover);
  REQUIRE_FALSE(cover.circuits.empty());
  CHECK(cover.circuits.front().size() == 6);
  CHECK(m5.symmetric_difference(cover.circuits.front().elements()).size() <= 26);
  CHECK_KIND(symdiff_reduce(mat({"10", "01"})), "NotEulerian");
}

TEST_CASE("oddcover_via_arboricity examples") {
  const auto tri = oddcover_via_arboricity(triangle());
  CHECK(tri.arboricity == 2);
  CHECK(tri.singleton_parts == 1);
  CHECK(tri.circuits.size() >= 1);
  CHECK(tri.circuits.size() <= 2);
  check_cover(triangle(), tri);

  for (std::size_t s = 2; s <= 4; ++s) {
    const auto m = independent_copies(2, s);
    const auto cover = oddcover_via_arboricity(m);
    check_cover(m, cover);
    CHECK(cover.circuits.size() >= arboricity(m).value);
  }

  const auto c4 = complete_matroid(4);
  const auto cover = oddcover_via_arboricity(c4);
  CHECK(cover.arboricity == 4);
  CHECK(cover.circuits.size() <= 5);
  check_cover(c4, cover);
  CHECK_KIND(oddcover_via_arboricity(BinaryMatroid(3)), "Empty");
  CHECK_KIND(oddcover_via_arboricity(mat({"10", "01"})), "NotEulerian");
}

TEST_CASE("density_lower_bound examples") {
  CHECK(density_lower_bound(triangle(), 20) == 1);
  const auto copies = independent_copies(2, 3);
  CHECK(density_lower_bound(copies, 20) == 2);
  CHECK(density_lower_bound(complete_matroid(4), 20) == 3);
  CHECK(density_lower_bound(complete_matroid(4), 0) == 3);
  CHECK_KIND(density_lower_bound(BinaryMatroid(2), 20), "Empty");
}

TEST_CASE("heuristic density bound never exceeds the exact one") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_instance(rng, 6, 18);
    const auto exact = density_lower_bound(m, 20);
    const auto heuristic = density_lower_bound(m, 0);
    CHECK(heuristic <= exact);
    CHECK(heuristic >= (m.size() + rank(m)) / (rank(m) + 1));
  }
}

TEST_CASE("property: covers verify and respect both bounds") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const auto m = random_instance(rng, 9, 150);
    const auto bound = density_lower_bound(m, 16);
    const auto reduced = symdiff_reduce(m);
    check_cover(m, reduced);
    CHECK(reduced.circuits.size() >= bound);
    const auto cover = oddcover_via_arboricity(m);
    check_cover(m, cover);
    CHECK(cover.circuits.size() >= bound);
    CHECK(cover.circuits.size() <= four_thirds(cover.arboricity));
    CHECK(cover.remainder <= cover.arboricity + 2 * cover.singleton_parts);
  }
}
