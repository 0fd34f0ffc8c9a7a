#include "cdec/decompose.hpp"

#include "cdec/error.hpp"

#include <cmath>

namespace cdec {

namespace {

void require_eulerian(const BinaryMatroid& m) {
  if (!is_eulerian(m)) {
    throw Error(ErrorKind::kNotEulerian, "matroid is not Eulerian");
  }
}

/// Removes circuits until n is empty: first-dependency circuits, or the
/// largest fundamental circuit when `largest` is set.
void finish_remainder(BinaryMatroid n, Decomposition& out, bool largest) {
  while (!n.empty()) {
    Circuit c = largest ? largest_fundamental_circuit(n) : extract_any_circuit(n);
    n = n.without(c.elements());
    out.circuits.push_back(std::move(c));
    ++out.phase2;
  }
}

double small_remainder_threshold(std::size_t size) {
  const double ln = std::log(static_cast<double>(size));
  return static_cast<double>(size) / (ln * ln);
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::kTrivial: return "trivial";
    case Branch::kSparse: return "sparse";
    case Branch::kDense: return "dense";
  }
  return "trivial";
}

Branch parse_branch(std::string_view text) {
  if (text == "trivial") return Branch::kTrivial;
  if (text == "sparse") return Branch::kSparse;
  if (text == "dense") return Branch::kDense;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown branch '" + std::string(text) + "'");
}

DenseParams DenseParams::from_epsilon(const Rational& eps) {
  if (eps <= Rational(0)) {
    throw Error(ErrorKind::kInvalidArgument, "epsilon must be positive");
  }
  DenseParams p;
  p.epsilon = eps;
  p.alpha = Rational(1) / (Rational(2) + eps / 2);
  p.delta = (Real(1) - binary_entropy(to_real(p.alpha))) / 2;
  return p;
}

double binary_entropy(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange, "entropy argument outside [0, 1]");
  }
  if (a == 0.0 || a == 1.0) return 0.0;
  return -a * std::log2(a) - (1.0 - a) * std::log2(1.0 - a);
}

Real binary_entropy(const Real& a) {
  if (a < 0 || a > 1) {
    throw Error(ErrorKind::kOutOfRange, "entropy argument outside [0, 1]");
  }
  if (a == 0 || a == 1) return Real(0);
  using boost::multiprecision::log2;
  return -a * log2(a) - (1 - a) * log2(1 - a);
}

bool entropy_bound_check(std::uint64_t r, const Rational& a) {
  if (r == 0) throw Error(ErrorKind::kInvalidArgument, "r must be positive");
  if (a < Rational(0) || a > Rational(1, 2)) {
    throw Error(ErrorKind::kOutOfRange, "alpha outside [0, 1/2]");
  }
  const BigInt lhs = binomial_sum(r, 0, floor_mul(a, r));
  if (a == Rational(0)) return lhs <= 1;  // 2^0 exactly
  const Real exponent = binary_entropy(to_real(a)) * Real(r);
  return log2_real(lhs) <= exponent;
}

bool dense_precondition(const BinaryMatroid& m, const DenseParams& params) {
  if (m.empty()) return false;
  const std::size_t r = rank(m);
  const Real needed = (Real(1) - params.delta) * Real(r);
  return log2_real(static_cast<std::uint64_t>(m.size())) >=
         needed - certified_margin();
}

std::size_t size_rank_lower_bound(const BinaryMatroid& m) {
  if (m.empty()) return 0;
  const std::size_t r = rank(m);
  return (m.size() + r) / (r + 1);
}

Decomposition peel_decompose(const BinaryMatroid& m) {
  require_eulerian(m);
  Decomposition out;
  out.branch = Branch::kTrivial;
  BinaryMatroid n = m;
  while (!n.empty()) {
    Circuit c = largest_fundamental_circuit(n);
    n = n.without(c.elements());
    out.circuits.push_back(std::move(c));
    ++out.phase1;
  }
  return out;
}

Decomposition log_greedy_decompose(const BinaryMatroid& m) {
  require_eulerian(m);
  Decomposition out;
  out.branch = Branch::kSparse;
  if (m.empty()) return out;
  const double threshold = small_remainder_threshold(m.size());
  BinaryMatroid n = m;
  while (!n.empty() && static_cast<double>(n.size()) >= threshold) {
    Circuit c = largest_fundamental_circuit(n);
    n = n.without(c.elements());
    out.circuits.push_back(std::move(c));
    ++out.phase1;
  }
  finish_remainder(std::move(n), out, false);
  return out;
}

Decomposition dense_decompose(const BinaryMatroid& m, const DenseParams& params) {
  require_eulerian(m);
  const std::size_t r = rank(m);
  if (r < 2 || !dense_precondition(m, params)) {
    throw Error(ErrorKind::kNotDenseEnough,
                "|M| = " + std::to_string(m.size()) +
                    " is below 2^((1 - delta) rank) for rank " +
                    std::to_string(r));
  }
  Decomposition out;
  out.branch = Branch::kDense;

  const std::uint64_t min_size = ceil_mul(params.alpha, r);
  // Exact pigeonhole guard: with more than this many elements left, a
  // fundamental circuit of size > floor(alpha r) exists.
  const BigInt small_circuit_room = binomial_sum(r, 1, floor_mul(params.alpha, r));
  const Real stop_exponent = (Real(1) - 2 * params.delta) * Real(r);

  BinaryMatroid n = m;
  while (!n.empty()) {
    const bool above = log2_real(static_cast<std::uint64_t>(n.size())) >
                       stop_exponent - certified_margin();
    if (!above || BigInt(n.size()) <= small_circuit_room) break;
    Circuit c = largest_fundamental_circuit(n);
    if (c.size() < min_size) {
      throw Error(ErrorKind::kInternal,
                  "phase-1 circuit of size " + std::to_string(c.size()) +
                      " below alpha * rank");
    }
    n = n.without(c.elements());
    out.circuits.push_back(std::move(c));
    ++out.phase1;
  }
  // 2^{(1 - 2 delta) r} is most of M at these ranks; peel the rest largest-first.
  finish_remainder(std::move(n), out, true);
  return out;
}

Decomposition auto_decompose(const BinaryMatroid& m, const Rational& eps) {
  require_eulerian(m);
  if (m.empty() || is_circuit(m.elements())) {
    return peel_decompose(m);
  }
  const DenseParams params = DenseParams::from_epsilon(eps);
  if (rank(m) >= 2 && dense_precondition(m, params)) {
    return dense_decompose(m, params);
  }
  return log_greedy_decompose(m);
}

}  // namespace cdec
