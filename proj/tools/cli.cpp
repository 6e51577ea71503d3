#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "apery9/base3.hpp"
#include "apery9/classifier.hpp"
#include "apery9/mod9eval.hpp"
#include "apery9/oracle.hpp"

namespace apery9::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-')
    throw UsageError("expected a non-negative integer, got '" + text + "'");
  return v;
}

void emit(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

// ---- eval ------------------------------------------------------------------

struct EvalOptions {
  std::string n;
  std::uint64_t r = 2;
  std::uint64_t s = 1;
  std::string method = "theorem";
  std::uint64_t oracle_bound = oracle::Config::kDefaultBound;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const auto e = Base3Expansion::parse(o.n);
  const AperyParams p(o.r, o.s);
  unsigned residue = 0;
  unsigned modulus = 9;
  if (o.method == "theorem") {
    residue = apery_mod9(e, p).value();
  } else if (o.method == "classify") {
    residue = classifier::residue_by_pattern(e, p).value();
  } else if (o.method == "mod3") {
    residue = apery_mod3(e, p).value();
    modulus = 3;
  } else {
    const mpz_class n = e.to_integer();
    if (!n.fits_ulong_p() || n.get_ui() > o.oracle_bound)
      throw oracle::BoundExceeded(n.fits_ulong_p() ? n.get_ui() : UINT64_MAX, o.oracle_bound);
    residue = oracle::apery_mod(n.get_ui(), p, 9, {o.oracle_bound});
  }
  emit(out, {{"n", o.n},
             {"digits_msd", e.to_msd_string()},
             {"r", o.r},
             {"s", o.s},
             {"method", o.method},
             {"residue", residue},
             {"modulus", modulus}});
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::uint64_t max_n = 729;
  std::string r_set;
  std::string s_set;
  std::vector<std::string> modes{"theorem-vs-oracle"};
  std::uint64_t oracle_bound = oracle::Config::kDefaultBound;
};

struct Tally {
  explicit Tally(std::string m) : mode(std::move(m)) {}

  std::string mode;
  std::uint64_t comparisons = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t pairs = 0;
  std::vector<std::string> skipped;
  json first_mismatch = nullptr;

  void record(std::uint64_t n, const AperyParams& p, unsigned expected, unsigned got, const char* expected_name,
              const char* got_name) {
    ++comparisons;
    if (expected == got) return;
    ++mismatches;
    // Least (n, r, s) wins, whatever the sweep order.
    json m = {{"n", n}, {"r", p.r()}, {"s", p.s()}, {expected_name, expected}, {got_name, got}};
    if (first_mismatch.is_null() ||
        std::tuple(n, p.r(), p.s()) < std::tuple(first_mismatch["n"].get<std::uint64_t>(),
                                                 first_mismatch["r"].get<std::uint64_t>(),
                                                 first_mismatch["s"].get<std::uint64_t>()))
      first_mismatch = m;
  }

  json to_json() const {
    json j = {{"mode", mode},
              {"pairs", pairs},
              {"comparisons", comparisons},
              {"mismatches", mismatches},
              {"first_mismatch", first_mismatch}};
    if (!skipped.empty()) j["skipped"] = skipped;
    return j;
  }
};

std::vector<AperyParams> param_grid(const std::string& r_set, const std::string& s_set) {
  std::vector<AperyParams> out;
  for (auto r : parse_range(r_set))
    for (auto s : parse_range(s_set)) out.emplace_back(r, s);
  return out;
}

Tally verify_theorem_vs_oracle(const VerifyOptions& o) {
  Tally t{"theorem-vs-oracle"};
  const auto rs = parse_range(o.r_set.empty() ? "1..6" : o.r_set);
  const auto ss = parse_range(o.s_set.empty() ? "0..6" : o.s_set);
  if (o.max_n > o.oracle_bound + 1) throw oracle::BoundExceeded(o.max_n - 1, o.oracle_bound);
  t.pairs = rs.size() * ss.size();
  const mpz_class nine(9);
  for (std::uint64_t n = 0; n < o.max_n; ++n) {
    const auto e = to_base3(n);
    const auto exact = oracle::apery_exact_grid(n, rs, ss, {o.oracle_bound});
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < ss.size(); ++j) {
        const AperyParams p(rs[i], ss[j]);
        const mpz_class rem = exact[i * ss.size() + j] % nine;
        t.record(n, p, static_cast<unsigned>(rem.get_ui()), apery_mod9(e, p).value(), "oracle", "theorem");
      }
  }
  return t;
}

Tally verify_classify_vs_theorem(const VerifyOptions& o) {
  Tally t{"classify-vs-theorem"};
  std::vector<AperyParams> params;
  if (o.r_set.empty() && o.s_set.empty()) {
    for (const auto& rule : classifier::rules())
      for (const auto& p : classifier::representatives(rule)) params.push_back(p);
  } else {
    params = param_grid(o.r_set.empty() ? "1..12" : o.r_set, o.s_set.empty() ? "0..12" : o.s_set);
  }
  for (const auto& p : params) {
    const classifier::ClassRule* rule = nullptr;
    try {
      rule = &classifier::classify_params(p);
    } catch (const std::domain_error&) {
      t.skipped.push_back(p.to_string());
      continue;
    }
    ++t.pairs;
    for (std::uint64_t n = 0; n < o.max_n; ++n) {
      const auto e = to_base3(n);
      t.record(n, p, apery_mod9(e, p).value(), rule->evaluate(e, digit_stats(e)).value(), "theorem", "classify");
    }
  }
  return t;
}

Tally verify_gessel(const VerifyOptions& o) {
  Tally t{"gessel"};
  for (const auto& p : param_grid(o.r_set.empty() ? "1..12" : o.r_set, o.s_set.empty() ? "0..12" : o.s_set)) {
    if (!is_gessel_class(p)) {
      t.skipped.push_back(p.to_string());
      continue;
    }
    ++t.pairs;
    for (std::uint64_t n = 0; n < o.max_n; ++n) {
      const auto e = to_base3(n);
      t.record(n, p, digit_product_mod9(e, p).value(), apery_mod9(e, p).value(), "product", "theorem");
    }
  }
  return t;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  std::vector<Tally> tallies;
  for (const auto& mode : o.modes) {
    if (mode == "theorem-vs-oracle") {
      tallies.push_back(verify_theorem_vs_oracle(o));
    } else if (mode == "classify-vs-theorem") {
      tallies.push_back(verify_classify_vs_theorem(o));
    } else if (mode == "gessel") {
      tallies.push_back(verify_gessel(o));
    } else {
      throw UsageError("unknown verify mode '" + mode + "'");
    }
  }
  std::uint64_t mismatches = 0;
  for (const auto& t : tallies) {
    emit(out, t.to_json());
    mismatches += t.mismatches;
  }
  return mismatches == 0 ? kOk : kMismatch;
}

// ---- table -----------------------------------------------------------------

struct TableOptions {
  std::uint64_t max_n = 26;
  std::uint64_t r = 2;
  std::uint64_t s = 1;
  std::string format = "csv";
};

int cmd_table(const TableOptions& o, std::ostream& out) {
  const AperyParams p(o.r, o.s);
  if (o.format == "csv") out << "n,residue\n";
  for (std::uint64_t n = 0; n <= o.max_n; ++n) {
    const unsigned residue = apery_mod9(to_base3(n), p).value();
    if (o.format == "csv") {
      out << n << ',' << residue << '\n';
    } else {
      emit(out, {{"n", n}, {"r", o.r}, {"s", o.s}, {"residue", residue}});
    }
  }
  return kOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchOptions {
  std::uint64_t digits = 1'000'000;
  std::uint64_t trials = 3;
  std::uint64_t r = 2;
  std::uint64_t s = 1;
  std::uint64_t seed = 1;
  std::uint64_t oracle_n = 0;
};

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  if (o.digits == 0) throw UsageError("--digits must be at least 1");
  if (o.trials == 0) throw UsageError("--trials must be at least 1");
  const AperyParams p(o.r, o.s);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> digit(0, 2);
  std::vector<std::uint8_t> digits(o.digits);

  using clock = std::chrono::steady_clock;
  double total = 0;
  double best = 0;
  unsigned checksum = 0;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    for (auto& d : digits) d = static_cast<std::uint8_t>(digit(rng));
    const auto start = clock::now();
    checksum += apery_mod9(std::span<const std::uint8_t>(digits), p).value();
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    total += secs;
    best = t == 0 ? secs : std::min(best, secs);
  }
  json record = {{"digit_count", o.digits},
                 {"trials", o.trials},
                 {"r", o.r},
                 {"s", o.s},
                 {"mean_seconds", total / static_cast<double>(o.trials)},
                 {"min_seconds", best},
                 {"checksum", checksum}};
  if (o.oracle_n != 0) {
    const auto start = clock::now();
    const auto exact = oracle::apery_mod(o.oracle_n, p, 9, {std::max(o.oracle_n, oracle::Config::kDefaultBound)});
    record["oracle_n"] = o.oracle_n;
    record["oracle_seconds"] = std::chrono::duration<double>(clock::now() - start).count();
    record["oracle_residue"] = exact;
    record["theorem_residue"] = apery_mod9(to_base3(o.oracle_n), p).value();
  }
  emit(out, record);
  return kOk;
}

// ---- classes ---------------------------------------------------------------

int cmd_classes(bool full, std::ostream& out) {
  if (full) {
    for (const auto& rule : classifier::rules()) out << classifier::rule_to_json(rule) << '\n';
    return kOk;
  }
  for (const auto& c : classifier::supported_classes()) emit(out, {{"rule_id", c.id}, {"hypothesis", c.hypothesis}});
  return kOk;
}

}  // namespace

std::vector<std::uint64_t> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (const auto dots = part.find(".."); dots != std::string::npos) {
      const auto lo = parse_u64(part.substr(0, dots));
      const auto hi = parse_u64(part.substr(dots + 2));
      if (hi < lo) throw UsageError("empty range '" + part + "'");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_u64(part));
    }
  }
  if (out.empty()) throw UsageError("empty value list '" + text + "'");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised Apery numbers a_n(r,s) modulo 9", "apery9"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a_n(r,s) mod 9 (or mod 3) for one n");
  eval_cmd->add_option("--n", eval.n, "n in decimal, or 3:<msd-first base-3 digits>")->required();
  eval_cmd->add_option("--r", eval.r, "exponent r >= 1")->required();
  eval_cmd->add_option("--s", eval.s, "exponent s >= 0")->required();
  eval_cmd->add_option("--method", eval.method)
      ->check(CLI::IsMember({"theorem", "oracle", "classify", "mod3"}))
      ->capture_default_str();
  eval_cmd->add_option("--oracle-bound", eval.oracle_bound, "largest n the oracle accepts")->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep n < max-n comparing two evaluation paths");
  verify_cmd->add_option("--max-n", verify.max_n, "exclusive upper bound on n")->capture_default_str();
  verify_cmd->add_option("--r", verify.r_set, "r values, e.g. 1..6 or 1,2,5");
  verify_cmd->add_option("--s", verify.s_set, "s values, e.g. 0..6");
  verify_cmd->add_option("--modes", verify.modes, "theorem-vs-oracle, classify-vs-theorem, gessel")
      ->delimiter(',')
      ->check(CLI::IsMember({"theorem-vs-oracle", "classify-vs-theorem", "gessel"}))
      ->capture_default_str();
  verify_cmd->add_option("--oracle-bound", verify.oracle_bound)->capture_default_str();

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Emit (n, a_n mod 9) for 0 <= n <= max-n");
  table_cmd->add_option("--max-n", table.max_n)->capture_default_str();
  table_cmd->add_option("--r", table.r)->required();
  table_cmd->add_option("--s", table.s)->required();
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the digit-linear evaluator on random inputs");
  bench_cmd->add_option("--digits", bench.digits)->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials)->capture_default_str();
  bench_cmd->add_option("--r", bench.r)->capture_default_str();
  bench_cmd->add_option("--s", bench.s)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--oracle-n", bench.oracle_n, "also time the exact oracle at this n");

  bool full = false;
  auto* classes_cmd = app.add_subcommand("classes", "List the residue rules");
  classes_cmd->add_flag("--full", full, "print each rule's predicate and items as JSON");

  std::vector<std::string> argv_store{"apery9"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*table_cmd) return cmd_table(table, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*classes_cmd) return cmd_classes(full, out);
  } catch (const std::exception& e) {
    // Bad n or (r,s), oracle bound, or a class without a rule.
    err << "apery9: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace apery9::cli
