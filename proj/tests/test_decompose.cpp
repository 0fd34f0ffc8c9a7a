#include "cdec/decompose.hpp"
#include "cdec/verify.hpp"

#include "support.hpp"

#include <cmath>

using namespace cdec;
using namespace cdec::testing;

namespace {

void check_valid(const BinaryMatroid& m, const Decomposition& d) {
  const auto blocks = to_blocks(d.circuits);
  const auto verdict = verify_decomposition(m, blocks);
  CHECK_MESSAGE(verdict.ok, verdict.reason);
  std::size_t total = 0;
  for (const auto& c : d.circuits) total += c.size();
  CHECK(total == m.size());
  CHECK(d.circuits.size() >= size_rank_lower_bound(m));
  CHECK(d.phase1 + d.phase2 == d.circuits.size());
}

const Rational kHalf(1, 2);

}  // namespace

TEST_CASE("binary_entropy examples") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781245).epsilon(1e-9));
  CHECK_KIND(binary_entropy(1.5), "OutOfRange");
  CHECK_KIND(binary_entropy(-0.1), "OutOfRange");
  double prev = -1;
  for (int i = 0; i <= 50; ++i) {
    const double h = binary_entropy(i / 100.0);
    CHECK(h > prev);
    prev = h;
  }
}

TEST_CASE("entropy_bound_check examples") {
  CHECK(binomial_sum(10, 0, 5) == 638);
  CHECK(entropy_bound_check(10, Rational(1, 2)));
  CHECK(entropy_bound_check(1, Rational(0)));
  for (std::uint64_t k = 0; 2 * k <= 30; ++k) CHECK(entropy_bound_check(30, Rational(k, 30)));
  CHECK_KIND(entropy_bound_check(10, Rational(3, 5)), "OutOfRange");
}

TEST_CASE("dense parameters at eps = 1/2") {
  const auto p = DenseParams::from_epsilon(kHalf);
  CHECK(p.alpha == Rational(4, 9));
  const double delta = (1.0 - binary_entropy(4.0 / 9.0)) / 2.0;
  CHECK(static_cast<double>(p.delta) == doctest::Approx(delta).epsilon(1e-12));
  CHECK(p.delta > 0);
  CHECK_KIND(DenseParams::from_epsilon(Rational(0)), "InvalidArgument");
}

TEST_CASE("peel_decompose examples") {
  CHECK(peel_decompose(BinaryMatroid(4)).circuits.empty());
  CHECK(peel_decompose(triangle()).circuits.size() == 1);
  const auto m = complete_matroid(6);
  const auto d = peel_decompose(m);
  check_valid(m, d);
  CHECK(d.circuits.size() <= 21);
  CHECK_KIND(peel_decompose(mat({"10", "01"})), "NotEulerian");
}

TEST_CASE("log_greedy_decompose examples") {
  const auto copies = independent_copies(5, 2);
  const auto d = log_greedy_decompose(copies);
  check_valid(copies, d);
  CHECK(d.circuits.size() == 5);
  CHECK(log_greedy_decompose(triangle()).circuits.size() == 1);
  const auto m = complete_matroid(8);
  const auto d8 = log_greedy_decompose(m);
  check_valid(m, d8);
  CHECK(d8.circuits.size() <= 191);
  CHECK(d8.branch == Branch::kSparse);
}

TEST_CASE("dense_decompose examples") {
  const auto params = DenseParams::from_epsilon(kHalf);
  const auto m10 = complete_matroid(10);
  const auto d10 = dense_decompose(m10, params);
  check_valid(m10, d10);
  CHECK(d10.phase1 > 0);
  for (std::size_t i = 0; i < d10.phase1; ++i) CHECK(d10.circuits[i].size() >= 5);
  CHECK_KIND(dense_decompose(triangle(), params), "NotDenseEnough");
  const auto m12 = complete_matroid(12);
  const auto d12 = dense_decompose(m12, params);
  check_valid(m12, d12);
  CHECK(d12.circuits.size() <= 945);
}

TEST_CASE("auto_decompose dispatch") {
  CHECK(auto_decompose(complete_matroid(10), kHalf).branch == Branch::kDense);
  CHECK(auto_decompose(independent_copies(5, 2), kHalf).branch == Branch::kSparse);
  const auto empty = auto_decompose(BinaryMatroid(3), kHalf);
  CHECK(empty.branch == Branch::kTrivial);
  CHECK(empty.circuits.empty());
  CHECK(auto_decompose(triangle(), kHalf).branch == Branch::kTrivial);
  CHECK(parse_branch(to_string(Branch::kDense)) == Branch::kDense);
  CHECK_KIND(parse_branch("dens"), "InvalidArgument");
}

TEST_CASE("property: every method yields a valid decomposition") {
  SplitMix64 rng(101);
  const auto params = DenseParams::from_epsilon(kHalf);
  for (int trial = 0; trial < 80; ++trial) {
    const auto m = random_instance(rng, 10, 400);
    check_valid(m, peel_decompose(m));
    check_valid(m, log_greedy_decompose(m));
    check_valid(m, auto_decompose(m, kHalf));
    if (dense_precondition(m, params)) {
      const auto d = dense_decompose(m, params);
      check_valid(m, d);
      for (std::size_t i = 0; i < d.phase1; ++i) {
        CHECK(d.circuits[i].size() >= ceil_mul(params.alpha, rank(m)));
      }
    }
  }
}
