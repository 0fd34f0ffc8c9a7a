#include "cli.hpp"

#include "cdec/arboricity.hpp"
#include "cdec/decompose.hpp"
#include "cdec/error.hpp"
#include "cdec/generators.hpp"
#include "cdec/io.hpp"
#include "cdec/oddcover.hpp"
#include "cdec/oracle.hpp"
#include "cdec/orbit.hpp"
#include "cdec/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

namespace cdec::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const std::vector<std::string> kKeys = {
    "command", "instance", "prng",      "seed",          "n",        "size",
    "rank",    "algorithm", "branch",   "circuits",      "phase1",   "phase2",
    "cover",   "prop4",     "lower_bound", "a",          "edmonds",  "c",
    "c2",      "c2_restricted", "c2_lower_bound", "conj1", "conj2", "remainder",
    "output",  "wall_ms",   "verification"};

Json blank_record(const std::string& command) {
  Json j;
  for (const auto& key : kKeys) j[key] = nullptr;
  j["command"] = command;
  return j;
}

void describe(Json& j, const BinaryMatroid& m) {
  j["n"] = m.dim();
  j["size"] = m.size();
  j["rank"] = rank(m);
  j["lower_bound"] = size_rank_lower_bound(m);
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Raised when an artifact fails verification; maps to exit code 2.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using BlockVerifier = std::function<Verdict(std::span<const Block>)>;

void require(const Verdict& verdict, const std::string& what) {
  if (!verdict) throw VerificationFailure(what + ": " + verdict.reason);
}

/// Writes `file`, reads it back, and checks both structural identity and the
/// verifier on the parsed blocks.
void write_and_reverify(const std::string& path, const BmdecFile& file,
                        const BlockVerifier& verifier) {
  write_text_file(path, format_bmdec(file));
  const BmdecFile back = read_bmdec_file(path);
  if (!(back == file)) throw VerificationFailure(path + " does not re-read identically");
  require(verifier(back.blocks), path + " after re-reading");
}

BmdecFile make_blocks_file(std::string kind, std::size_t dim, std::vector<Block> blocks,
                           const std::string& label,
                           std::map<std::string, std::string> meta = {}) {
  BmdecFile file;
  file.kind = std::move(kind);
  file.dim = blocks.empty() ? 0 : dim;
  file.labels.assign(blocks.size(), label);
  file.blocks = std::move(blocks);
  file.meta = std::move(meta);
  return file;
}

std::size_t prop4_value(const BinaryMatroid& m, std::size_t limit) {
  return m.empty() ? 0 : density_lower_bound(m, limit);
}

// ---------------------------------------------------------------- options

struct GenOptions {
  std::string kind = "random";
  std::size_t n = 0, k = 0, s = 0, size = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct DecomposeOptions {
  std::string in, out, method = "auto", eps = "1/2";
  std::size_t exhaustive_limit = 20;
};

struct OddCoverOptions {
  std::string in, out, method = "arboricity";
  std::size_t exhaustive_limit = 20;
};

struct ArboricityOptions {
  std::string in, out;
  bool edmonds = false;
};

struct OrbitOptions {
  unsigned p = 0;
  bool compressed = false;
  bool demo_p7 = false;
  std::string out;
};

struct OracleOptions {
  std::string in, what = "conjectures";
  std::size_t ambient_cap = 4, depth_cap = 6, exhaustive_limit = 20;
};

struct VerifyOptions {
  std::string in, against, mode = "decomposition";
};

struct BenchOptions {
  std::string kind = "random", method = "auto", eps = "1/2";
  std::size_t count = 20, n = 10, size = 200, k = 2, s = 3, jobs = 0;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------- commands

BinaryMatroid load(const std::string& path) {
  try {
    return read_bm_file(path).matroid;
  } catch (const ParseError& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

InstanceSpec gen_spec(const GenOptions& o) {
  InstanceSpec spec;
  spec.seed = o.seed;
  if (o.kind == "complete") {
    spec.kind = InstanceKind::kComplete;
    spec.n = o.n;
  } else if (o.kind == "copies") {
    spec.kind = InstanceKind::kCopies;
    spec.k = o.k;
    spec.s = o.s;
  } else {
    spec.kind = InstanceKind::kRandomEulerian;
    spec.n = o.n;
    spec.size = o.size;
  }
  return spec;
}

Json cmd_gen(const GenOptions& o) {
  const auto start = Clock::now();
  const InstanceSpec spec = gen_spec(o);
  const BinaryMatroid m = generate(spec);
  const std::vector<std::string> comments = {"spec: " + spec.describe()};
  write_text_file(o.out, format_bm(m, comments));
  const BmFile back = read_bm_file(o.out);
  if (!(back.matroid == m) || back.comments != comments) {
    throw VerificationFailure(o.out + " does not re-read identically");
  }
  Json j = blank_record("gen");
  j["instance"] = spec.describe();
  j["seed"] = o.seed;
  if (spec.kind == InstanceKind::kRandomEulerian) j["prng"] = SplitMix64::kAlgorithm;
  describe(j, m);
  j["output"] = o.out;
  j["wall_ms"] = elapsed_ms(start);
  j["verification"] = "PASS";
  return j;
}

Decomposition run_method(const BinaryMatroid& m, const std::string& method,
                         const Rational& eps) {
  if (method == "auto") return auto_decompose(m, eps);
  if (method == "dense") return dense_decompose(m, DenseParams::from_epsilon(eps));
  if (method == "log") return log_greedy_decompose(m);
  return peel_decompose(m);
}

Json cmd_decompose(const DecomposeOptions& o) {
  const BinaryMatroid m = load(o.in);
  const Rational eps = parse_rational(o.eps);
  const auto start = Clock::now();
  const Decomposition d = run_method(m, o.method, eps);
  const double ms = elapsed_ms(start);

  auto blocks = to_blocks(d.circuits);
  const BlockVerifier verifier = [&](std::span<const Block> b) {
    return verify_decomposition(m, b);
  };
  require(verifier(blocks), "decomposition");
  Json j = blank_record("decompose");
  j["instance"] = o.in;
  describe(j, m);
  j["algorithm"] = o.method;
  j["branch"] = to_string(d.branch);
  j["circuits"] = d.circuits.size();
  j["phase1"] = d.phase1;
  j["phase2"] = d.phase2;
  j["prop4"] = prop4_value(m, o.exhaustive_limit);
  if (!o.out.empty()) {
    std::map<std::string, std::string> meta = {
        {"branch", std::string(to_string(d.branch))},
        {"phase1", std::to_string(d.phase1)},
        {"phase2", std::to_string(d.phase2)}};
    write_and_reverify(o.out,
                       make_blocks_file("circuits", m.dim(), std::move(blocks), "circuit",
                                        std::move(meta)),
                       verifier);
    j["output"] = o.out;
  }
  j["wall_ms"] = ms;
  j["verification"] = "PASS";
  return j;
}

Json cmd_oddcover(const OddCoverOptions& o) {
  const BinaryMatroid m = load(o.in);
  const auto start = Clock::now();
  const OddCover cover =
      o.method == "reduce" ? symdiff_reduce(m) : oddcover_via_arboricity(m);
  const double ms = elapsed_ms(start);

  auto blocks = to_blocks(cover.circuits);
  const BlockVerifier verifier = [&](std::span<const Block> b) {
    return verify_odd_cover(m, b);
  };
  require(verifier(blocks), "odd-cover");
  Json j = blank_record("oddcover");
  j["instance"] = o.in;
  describe(j, m);
  j["algorithm"] = o.method;
  j["cover"] = cover.circuits.size();
  j["prop4"] = prop4_value(m, o.exhaustive_limit);
  if (o.method != "reduce") {
    j["a"] = cover.arboricity;
    j["remainder"] = cover.remainder;
  }
  if (!o.out.empty()) {
    write_and_reverify(o.out,
                       make_blocks_file("oddcover", m.dim(), std::move(blocks), "circuit"),
                       verifier);
    j["output"] = o.out;
  }
  j["wall_ms"] = ms;
  j["verification"] = "PASS";
  return j;
}

Json cmd_arboricity(const ArboricityOptions& o) {
  const BinaryMatroid m = load(o.in);
  const auto start = Clock::now();
  const ArboricityResult result = arboricity(m);
  const double ms = elapsed_ms(start);

  const BlockVerifier verifier = [&](std::span<const Block> b) {
    return verify_partition(m, b);
  };
  require(verifier(result.partition.parts), "partition");
  if (result.partition.parts.size() != result.value) {
    throw VerificationFailure("partition has the wrong number of parts");
  }
  Json j = blank_record("arboricity");
  j["instance"] = o.in;
  describe(j, m);
  j["algorithm"] = "matroid-union";
  j["a"] = result.value;
  if (o.edmonds) {
    const std::size_t brute = edmonds_max_bruteforce(m);
    j["edmonds"] = brute;
    if (brute != result.value) {
      throw VerificationFailure("arboricity " + std::to_string(result.value) +
                                " differs from the subset maximum " +
                                std::to_string(brute));
    }
  }
  if (!o.out.empty()) {
    write_and_reverify(o.out,
                       make_blocks_file("parts", m.dim(), result.partition.parts,
                                        "independent-set"),
                       verifier);
    j["output"] = o.out;
  }
  j["wall_ms"] = ms;
  j["verification"] = "PASS";
  return j;
}

Json cmd_orbit_demo(const OrbitOptions& o, std::ostream& err) {
  const auto start = Clock::now();
  const OrbitFailureReport report = demonstrate_p7_failure();
  err << "p = 7: multiplicative order of 2 is " << report.order << ", not 6\n";
  err << "orbit of " << report.orbit.front().to_string() << " has " << report.orbit.size()
      << " elements; circuit: " << (report.orbit_is_circuit ? "yes" : "no") << '\n';
  for (const auto& part : report.parts) {
    err << "  sub-circuit of size " << part.size() << ":";
    for (const auto& x : part) err << ' ' << x.to_string();
    err << '\n';
  }
  Json j = blank_record("orbit");
  j["instance"] = "p7-demo";
  j["n"] = 7;
  j["size"] = report.orbit.size();
  j["algorithm"] = "orbit";
  j["circuits"] = report.parts.size();
  const BinaryMatroid orbit(7, report.orbit);
  j["rank"] = rank(orbit);
  j["lower_bound"] = size_rank_lower_bound(orbit);
  const BlockVerifier verifier = [&](std::span<const Block> b) {
    return verify_decomposition(orbit, b);
  };
  require(verifier(to_blocks(report.parts)), "p = 7 split");
  if (report.orbit_is_circuit) throw VerificationFailure("p = 7 orbit is a circuit");
  if (!o.out.empty()) {
    write_and_reverify(o.out,
                       make_blocks_file("circuits", 7, to_blocks(report.parts), "circuit"),
                       verifier);
    j["output"] = o.out;
  }
  j["wall_ms"] = elapsed_ms(start);
  j["verification"] = "PASS";
  return j;
}

Json cmd_orbit(const OrbitOptions& o, std::ostream& err) {
  if (o.demo_p7) return cmd_orbit_demo(o, err);
  const auto start = Clock::now();
  const OrbitDecomposition d = orbit_decompose(o.p);
  const double ms = elapsed_ms(start);

  const auto circuits = o.compressed ? d.compressed() : d.orbits;
  std::vector<Gf2Vector> ground;
  for (const auto& c : circuits) ground.insert(ground.end(), c.begin(), c.end());
  const BinaryMatroid m(o.compressed ? o.p - 1 : o.p, std::move(ground));
  const BlockVerifier verifier = [&](std::span<const Block> b) {
    return verify_decomposition(m, b);
  };
  auto blocks = to_blocks(circuits);
  require(verifier(blocks), "orbit decomposition");
  if (!o.compressed && !(m == d.model)) {
    throw VerificationFailure("orbits do not cover the even-weight model");
  }
  Json j = blank_record("orbit");
  j["instance"] = "p=" + std::to_string(o.p) + (o.compressed ? " compressed" : "");
  describe(j, m);
  j["algorithm"] = "orbit";
  j["circuits"] = circuits.size();
  if (!o.out.empty()) {
    write_and_reverify(o.out,
                       make_blocks_file("circuits", m.dim(), std::move(blocks), "circuit",
                                        {{"p", std::to_string(o.p)}}),
                       verifier);
    j["output"] = o.out;
  }
  j["wall_ms"] = ms;
  j["verification"] = "PASS";
  return j;
}

struct OracleOutcome {
  Json record;
  bool violation = false;
};

OracleOutcome cmd_oracle(const OracleOptions& o) {
  const BinaryMatroid m = load(o.in);
  const C2Options c2opts{o.ambient_cap, o.depth_cap};
  const auto start = Clock::now();
  Json j = blank_record("oracle");
  j["instance"] = o.in;
  describe(j, m);
  j["algorithm"] = o.what;
  if (!m.empty() && m.size() <= o.exhaustive_limit) j["prop4"] = prop4_value(m, o.exhaustive_limit);
  auto put_c2 = [&](const C2Result& r) {
    j["c2"] = r.value ? Json(*r.value) : Json(nullptr);
    j["c2_restricted"] = r.restricted;
    j["c2_lower_bound"] = r.lower_bound;
  };
  bool violation = false;
  if (o.what == "circuits") {
    j["circuits"] = enumerate_circuits(m).circuits.size();
  } else if (o.what == "c") {
    j["c"] = exact_c(m);
  } else if (o.what == "c2") {
    put_c2(exact_c2(m, c2opts));
  } else {
    const ConjectureReport report = probe_conjectures(m, c2opts);
    j["c"] = report.c;
    put_c2(report.c2);
    j["a"] = report.arboricity;
    j["prop4"] = report.density_bound;
    j["conj1"] = to_string(report.conj1);
    j["conj2"] = to_string(report.conj2);
    violation = report.conj1 == ConjectureStatus::kViolation ||
                report.conj2 == ConjectureStatus::kViolation;
  }
  j["wall_ms"] = elapsed_ms(start);
  j["verification"] = violation ? "FAIL" : "PASS";
  return {j, violation};
}

Json cmd_verify(const VerifyOptions& o) {
  const BinaryMatroid m = load(o.in);
  BmdecFile file;
  try {
    file = read_bmdec_file(o.against);
  } catch (const ParseError& e) {
    throw Error(ErrorKind::kParse, o.against + ": " + e.what());
  }
  Verdict verdict;
  if (o.mode == "oddcover") {
    verdict = verify_odd_cover(m, file.blocks);
  } else if (o.mode == "partition") {
    verdict = verify_partition(m, file.blocks);
  } else {
    verdict = verify_decomposition(m, file.blocks);
  }
  Json j = blank_record("verify");
  j["instance"] = o.in;
  describe(j, m);
  j["algorithm"] = o.mode;
  if (o.mode == "oddcover") {
    j["cover"] = file.blocks.size();
  } else if (o.mode == "partition") {
    j["a"] = file.blocks.size();
  } else {
    j["circuits"] = file.blocks.size();
  }
  if (auto it = file.meta.find("branch"); it != file.meta.end()) j["branch"] = it->second;
  j["verification"] = verdict.ok ? "PASS" : "FAIL";
  if (!verdict.ok) j["output"] = verdict.reason;
  return j;
}

Json bench_one(const BenchOptions& o, std::size_t index, std::uint64_t seed,
               const Rational& eps) {
  InstanceSpec spec;
  spec.seed = seed;
  if (o.kind == "complete") {
    spec.kind = InstanceKind::kComplete;
    spec.n = o.n;
  } else if (o.kind == "copies") {
    spec.kind = InstanceKind::kCopies;
    spec.k = o.k;
    spec.s = o.s;
  } else {
    spec.kind = InstanceKind::kRandomEulerian;
    spec.n = o.n;
    spec.size = o.size;
  }
  Json j = blank_record("bench");
  j["instance"] = "#" + std::to_string(index) + " " + spec.describe();
  j["seed"] = seed;
  j["prng"] = SplitMix64::kAlgorithm;
  j["algorithm"] = o.method;
  const auto start = Clock::now();
  try {
    const BinaryMatroid m = generate(spec);
    describe(j, m);
    const Decomposition d = run_method(m, o.method, eps);
    j["branch"] = to_string(d.branch);
    j["circuits"] = d.circuits.size();
    j["phase1"] = d.phase1;
    j["phase2"] = d.phase2;
    bool ok = verify_decomposition(m, to_blocks(d.circuits)).ok;
    if (!m.empty()) {
      const OddCover cover = oddcover_via_arboricity(m);
      j["cover"] = cover.circuits.size();
      j["a"] = cover.arboricity;
      j["remainder"] = cover.remainder;
      ok = ok && verify_odd_cover(m, to_blocks(cover.circuits)).ok;
    }
    j["verification"] = ok ? "PASS" : "FAIL";
  } catch (const Error& e) {
    j["verification"] = "FAIL";
    j["output"] = e.what();
  }
  j["wall_ms"] = elapsed_ms(start);
  return j;
}

std::vector<Json> cmd_bench(const BenchOptions& o) {
  const Rational eps = parse_rational(o.eps);
  SplitMix64 seeds(o.seed);
  std::vector<std::uint64_t> instance_seeds(o.count);
  for (auto& s : instance_seeds) s = seeds.next();

  std::vector<Json> records(o.count);
  std::atomic<std::size_t> next{0};
  const std::size_t jobs = std::max<std::size_t>(
      1, std::min<std::size_t>(o.count, o.jobs ? o.jobs : std::thread::hardware_concurrency()));
  auto worker = [&] {
    for (std::size_t i = next++; i < o.count; i = next++) {
      records[i] = bench_one(o, i, instance_seeds[i], eps);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return records;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

const std::vector<std::string>& record_keys() { return kKeys; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuit decompositions and odd-covers of Eulerian binary matroids", "cdec"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance as a .bm file");
  gen_cmd->add_option("--kind", gen.kind)->check(CLI::IsMember({"complete", "copies", "random"}));
  gen_cmd->add_option("--n", gen.n, "Ambient dimension (complete, random)");
  gen_cmd->add_option("--k", gen.k, "Number of copies");
  gen_cmd->add_option("--s", gen.s, "Dimension of each copy");
  gen_cmd->add_option("--size", gen.size, "Approximate size (random)");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed (default 0)");
  gen_cmd->add_option("--out", gen.out)->required();

  DecomposeOptions dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Decompose into disjoint circuits");
  dec_cmd->add_option("--in", dec.in)->required()->check(CLI::ExistingFile);
  dec_cmd->add_option("--out", dec.out);
  dec_cmd->add_option("--method", dec.method)
      ->check(CLI::IsMember({"auto", "dense", "log", "peel"}));
  dec_cmd->add_option("--eps", dec.eps, "Positive rational, e.g. 1/2 or 0.5");
  dec_cmd->add_option("--exhaustive-limit", dec.exhaustive_limit);

  OddCoverOptions oc;
  auto* oc_cmd = app.add_subcommand("oddcover", "Build a circuit odd-cover");
  oc_cmd->add_option("--in", oc.in)->required()->check(CLI::ExistingFile);
  oc_cmd->add_option("--out", oc.out);
  oc_cmd->add_option("--method", oc.method)->check(CLI::IsMember({"arboricity", "reduce"}));
  oc_cmd->add_option("--exhaustive-limit", oc.exhaustive_limit);

  ArboricityOptions ab;
  auto* ab_cmd = app.add_subcommand("arboricity", "Minimum independent partition");
  ab_cmd->add_option("--in", ab.in)->required()->check(CLI::ExistingFile);
  ab_cmd->add_option("--out", ab.out);
  ab_cmd->add_flag("--edmonds", ab.edmonds, "Cross-check by subset scan (<= 22 elements)");

  OrbitOptions orb;
  auto* orb_cmd = app.add_subcommand("orbit", "Cyclic-shift orbit decomposition");
  auto* p_opt = orb_cmd->add_option("--p", orb.p, "Odd prime");
  auto* demo_opt = orb_cmd->add_flag("--demo-p7", orb.demo_p7, "Show the p = 7 split");
  p_opt->excludes(demo_opt);
  orb_cmd->add_flag("--compressed", orb.compressed, "Emit coordinates in dimension p - 1");
  orb_cmd->add_option("--out", orb.out);

  OracleOptions ora;
  auto* ora_cmd = app.add_subcommand("oracle", "Exhaustive values on tiny instances");
  ora_cmd->add_option("--in", ora.in)->required()->check(CLI::ExistingFile);
  ora_cmd->add_option("--what", ora.what)
      ->check(CLI::IsMember({"c", "c2", "circuits", "conjectures"}));
  ora_cmd->add_option("--ambient-cap", ora.ambient_cap);
  ora_cmd->add_option("--depth-cap", ora.depth_cap);
  ora_cmd->add_option("--exhaustive-limit", ora.exhaustive_limit);

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a block file against a matroid");
  ver_cmd->add_option("--in", ver.in)->required()->check(CLI::ExistingFile);
  ver_cmd->add_option("--against", ver.against)->required()->check(CLI::ExistingFile);
  ver_cmd->add_option("--mode", ver.mode)
      ->check(CLI::IsMember({"decomposition", "oddcover", "partition"}));

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run many generated instances in parallel");
  bench_cmd->add_option("--kind", bench.kind)
      ->check(CLI::IsMember({"complete", "copies", "random"}));
  bench_cmd->add_option("--count", bench.count);
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--size", bench.size);
  bench_cmd->add_option("--k", bench.k);
  bench_cmd->add_option("--s", bench.s);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads (0 = hardware)");
  bench_cmd->add_option("--method", bench.method)
      ->check(CLI::IsMember({"auto", "dense", "log", "peel"}));
  bench_cmd->add_option("--eps", bench.eps);

  std::vector<std::string> argv_storage{"cdec"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      emit(out, cmd_gen(gen));
    } else if (*dec_cmd) {
      emit(out, cmd_decompose(dec));
    } else if (*oc_cmd) {
      emit(out, cmd_oddcover(oc));
    } else if (*ab_cmd) {
      emit(out, cmd_arboricity(ab));
    } else if (*orb_cmd) {
      if (!orb.demo_p7 && orb.p == 0) {
        err << "error: orbit needs --p <prime> or --demo-p7\n";
        return kExitUsage;
      }
      emit(out, cmd_orbit(orb, err));
    } else if (*ora_cmd) {
      const auto outcome = cmd_oracle(ora);
      emit(out, outcome.record);
      if (outcome.violation) {
        err << "CONJECTURE VIOLATION on " << ora.in << ": inspect this instance\n";
        return kExitVerification;
      }
    } else if (*ver_cmd) {
      const Json j = cmd_verify(ver);
      emit(out, j);
      if (j["verification"] != "PASS") {
        err << "verification failed: " << j["output"].get<std::string>() << '\n';
        return kExitVerification;
      }
    } else if (*bench_cmd) {
      bool ok = true;
      for (const auto& j : cmd_bench(bench)) {
        emit(out, j);
        ok = ok && j["verification"] == "PASS";
      }
      if (!ok) return kExitVerification;
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace cdec::cli
