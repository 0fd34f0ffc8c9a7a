#include "cdec/arboricity.hpp"
#include "cdec/verify.hpp"

#include "support.hpp"

#include <variant>

using namespace cdec;
using namespace cdec::testing;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void check_partition(const BinaryMatroid& m, const IndependentPartition& p, std::size_t k) {
  CHECK(p.parts.size() <= k);
  const auto verdict = verify_partition(m, p.parts);
  CHECK_MESSAGE(verdict.ok, verdict.reason);
}

void check_certificate(const BinaryMatroid& m, const PartitionInfeasible& cert, std::size_t k) {
  CHECK(cert.certificate_rank == rank(cert.certificate, m.dim()));
  CHECK(ceil_div(cert.certificate.size(), cert.certificate_rank) > k);
  for (const auto& x : cert.certificate) CHECK(m.contains(x));
}

}  // namespace

TEST_CASE("can_partition examples") {
  const auto tri = triangle();
  const auto two = can_partition(tri, 2);
  REQUIRE(std::holds_alternative<IndependentPartition>(two));
  check_partition(tri, std::get<IndependentPartition>(two), 2);

  const auto one = can_partition(tri, 1);
  REQUIRE(std::holds_alternative<PartitionInfeasible>(one));
  const auto& cert = std::get<PartitionInfeasible>(one);
  check_certificate(tri, cert, 1);
  CHECK(cert.certificate.size() == 3);

  const auto c3 = complete_matroid(3);
  const auto r = can_partition(c3, 2);
  REQUIRE(std::holds_alternative<PartitionInfeasible>(r));
  check_certificate(c3, std::get<PartitionInfeasible>(r), 2);
  CHECK_KIND(can_partition(tri, 0), "InvalidArgument");
}

TEST_CASE("arboricity examples") {
  CHECK(arboricity(triangle()).value == 2);
  CHECK(arboricity(complete_matroid(3)).value == 3);
  for (std::size_t s = 2; s <= 4; ++s) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto m = independent_copies(k, s);
      const auto result = arboricity(m);
      CHECK(result.value == ceil_div((std::size_t{1} << s) - 1, s));
      check_partition(m, result.partition, result.value);
    }
  }
  CHECK_KIND(arboricity(BinaryMatroid(3)), "Empty");
}

TEST_CASE("edmonds_max_bruteforce examples") {
  CHECK(edmonds_max_bruteforce(triangle()) == 2);
  CHECK(edmonds_max_bruteforce(complete_matroid(4)) == 4);
  CHECK(edmonds_max_bruteforce(independent_copies(2, 2)) == 2);
  CHECK_KIND(edmonds_max_bruteforce(complete_matroid(5)), "TooLarge");
  CHECK_KIND(edmonds_max_bruteforce(BinaryMatroid(2)), "Empty");
}

TEST_CASE("arboricity handles non-Eulerian input") {
  const auto m = mat({"100", "010", "001", "110"});
  CHECK(arboricity(m).value == 2);
  CHECK(edmonds_max_bruteforce(m) == 2);
}

TEST_CASE("property: min-max equality and witness validity") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const auto m = random_instance(rng, 7, 21);
    const auto result = arboricity(m);
    CHECK(result.value == edmonds_max_bruteforce(m));
    CHECK(result.partition.parts.size() == result.value);
    check_partition(m, result.partition, result.value);
    if (result.value > 1) {
      const auto below = can_partition(m, result.value - 1);
      REQUIRE(std::holds_alternative<PartitionInfeasible>(below));
      check_certificate(m, std::get<PartitionInfeasible>(below), result.value - 1);
    }
  }
}

TEST_CASE("property: arboricity is monotone along subset chains") {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_instance(rng, 8, 60);
    std::size_t previous = arboricity(m).value;
    while (m.size() > 1) {
      const auto drop = m[rng.below(m.size())];
      m = m.without(std::vector<Gf2Vector>{drop});
      const std::size_t now = arboricity(m).value;
      CHECK(now <= previous);
      previous = now;
    }
  }
}

TEST_CASE("arboricity scales to larger instances") {
  const auto m = complete_matroid(9);
  const auto result = arboricity(m);
  CHECK(result.value == ceil_div(511, 9));
  check_partition(m, result.partition, result.value);
}
