// Acceptance harness: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes, except that criterion 8 may
// fail on exactly the two s = 1 lines of the a_2 table, which contradict the
// closed form 1 + 2^r 3^s + 6^s (see README, "Known discrepancies").

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "apery9/base3.hpp"
#include "apery9/classifier.hpp"
#include "apery9/lucas.hpp"
#include "apery9/mod9eval.hpp"
#include "apery9/oracle.hpp"

using namespace apery9;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
  bool expected_failure = false;
};

unsigned mod9(const mpz_class& v) {
  const mpz_class m = v % 9;
  return static_cast<unsigned>(m.get_ui());
}

std::string pair_text(const AperyParams& p) { return p.to_string(); }

// 1 ------------------------------------------------------------------------
Outcome lucas_exhaustive() {
  const auto start = Clock::now();
  std::uint64_t pairs = 0, bad = 0;
  std::vector<Base3Expansion> expansions;
  for (std::uint64_t n = 0; n < 729; ++n) expansions.push_back(to_base3(n));
  for (std::uint64_t n = 0; n < 729; ++n) {
    const auto row = oracle::binom_row(n);
    for (std::uint64_t k = 0; k <= n; ++k, ++pairs)
      if (lucas::binom_mod9(expansions[n], expansions[k]).value() != mod9(row[k])) ++bad;
  }
  const double t = seconds_since(start);
  return {bad == 0 && pairs == 266'085 && t < 5.0,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches, " + std::to_string(t) +
              " s (limit 5 s)"};
}

// 2 ------------------------------------------------------------------------
Outcome theorem_vs_oracle() {
  auto start = Clock::now();
  std::vector<std::uint64_t> rs(12), ss(13);
  std::iota(rs.begin(), rs.end(), 1);
  std::iota(ss.begin(), ss.end(), 0);
  std::uint64_t checks = 0, bad = 0;
  for (std::uint64_t n = 0; n < 729; ++n) {
    const auto e = to_base3(n);
    const auto grid = oracle::apery_exact_grid(n, rs, ss);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < ss.size(); ++j, ++checks)
        if (apery_mod9(e, {rs[i], ss[j]}).value() != mod9(grid[i * ss.size() + j])) ++bad;
  }
  const double t_grid = seconds_since(start);

  start = Clock::now();
  std::vector<std::uint64_t> pool(6561 - 729);
  std::iota(pool.begin(), pool.end(), 729);
  std::mt19937_64 rng(2024);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(500);
  std::sort(pool.begin(), pool.end());
  std::uint64_t spot_checks = 0, spot_bad = 0;
  for (auto n : pool)
    for (std::uint64_t r : {1, 2, 3, 4, 5, 7})
      for (std::uint64_t s : {0, 1, 2, 3, 4, 5, 7}) {
        ++spot_checks;
        const AperyParams p(r, s);
        if (apery_mod9(to_base3(n), p).value() != oracle::apery_mod_termwise(n, p, 9)) ++spot_bad;
      }
  const double t_spot = seconds_since(start);
  return {bad == 0 && spot_bad == 0 && checks == 729 * 156 && t_grid < 600.0,
          "grid " + std::to_string(checks) + " checks, " + std::to_string(bad) + " mismatches, " +
              std::to_string(t_grid) + " s (limit 600 s); spot " + std::to_string(spot_checks) + " checks on " +
              std::to_string(pool.size()) + " n in [729, 6560], " + std::to_string(spot_bad) + " mismatches, " +
              std::to_string(t_spot) + " s"};
}

// 3 ------------------------------------------------------------------------
Outcome f_consistency() {
  const auto start = Clock::now();
  std::uint64_t checks = 0, bad = 0, skipped_classes = 0;
  for (std::uint64_t r = 1; r <= 13; ++r)
    for (std::uint64_t s = 0; s <= 13; ++s) {
      const AperyParams p(r, s);
      try {
        (void)f_term_reduced_case(p);
        for (std::uint8_t a = 0; a < 3; ++a)
          for (std::uint8_t b = 0; b < 3; ++b, ++checks) {
            if (f_term(a, b, p) != f_term_reduced(a, b, p)) ++bad;
            if (s >= 1 && f_term(a, b, p) != f_term_indicator_form(a, b, p)) ++bad;
          }
      } catch (const UnverifiableCase&) {
        ++skipped_classes;
      }
    }
  const double t = seconds_since(start);
  return {bad == 0 && t < 1.0, std::to_string(checks) + " digit-pair checks, " + std::to_string(bad) +
                                   " mismatches, " + std::to_string(skipped_classes) +
                                   " (r,s) pairs in the two malformed cases skipped, " + std::to_string(t) +
                                   " s (limit 1 s)"};
}

// 4 ------------------------------------------------------------------------
Outcome classical_sequences() {
  const auto start = Clock::now();
  const std::vector<std::uint64_t> rs{2};
  const std::vector<std::uint64_t> ss{1, 2};
  const auto& ap27 = classifier::classify_params({2, 1});
  const auto& ap22 = classifier::classify_params({2, 2});
  std::uint64_t bad = 0;
  for (std::uint64_t n = 0; n <= 2000; ++n) {
    const auto e = to_base3(n);
    const auto st = digit_stats(e);
    const auto exact = oracle::apery_exact_grid(n, rs, ss);
    if (ap27.evaluate(e, st).value() != mod9(exact[0])) ++bad;
    if (ap22.evaluate(e, st).value() != mod9(exact[1])) ++bad;
  }
  const double t = seconds_since(start);
  return {bad == 0 && ap27.id == "Ap27" && ap22.id == "Ap22" && t < 60.0,
          "rules " + ap27.id + "@(2,1), " + ap22.id + "@(2,2), n <= 2000, " + std::to_string(bad) +
              " mismatches, " + std::to_string(t) + " s (limit 60 s)"};
}

// 5 ------------------------------------------------------------------------
Outcome gessel() {
  std::uint64_t bad = 0;
  for (const AperyParams p : {AperyParams{2, 2}, AperyParams{4, 4}, AperyParams{3, 3}, AperyParams{5, 2}}) {
    for (std::uint8_t a = 0; a < 3; ++a)
      for (std::uint8_t b = 0; b < 3; ++b)
        if (!f_term(a, b, p).is_zero()) ++bad;
    for (std::uint64_t n = 0; n < 2187; ++n) {
      const auto e = to_base3(n);
      if (apery_mod9(e, p) != digit_product_mod9(e, p)) ++bad;
    }
  }
  int nonzero = 0;
  for (std::uint8_t a = 0; a < 3; ++a)
    for (std::uint8_t b = 0; b < 3; ++b) nonzero += f_term(a, b, {2, 1}).is_zero() ? 0 : 1;
  return {bad == 0 && nonzero > 0, "(2,2),(4,4),(3,3),(5,2): " + std::to_string(bad) +
                                       " failures over f and n < 3^7; (2,1) has " + std::to_string(nonzero) +
                                       " nonzero digit pairs"};
}

// 6 ------------------------------------------------------------------------
Outcome classifier_vs_theorem() {
  const auto start = Clock::now();
  std::uint64_t checks = 0, bad = 0, forbidden_hits = 0, overlaps = 0, misrouted = 0;
  std::set<std::string> ids;
  std::size_t pairs = 0;
  std::string first;
  for (const auto& rule : classifier::rules()) {
    ids.insert(rule.id);
    for (const auto& p : classifier::representatives(rule)) {
      ++pairs;
      if (classifier::classify_params(p).id != rule.id) ++misrouted;
      for (std::uint64_t n = 0; n < 19683; ++n, ++checks) {
        const auto e = to_base3(n);
        const auto st = digit_stats(e);
        const auto expected = apery_mod9(e, p).value();
        if (classifier::residue_by_pattern(e, p).value() != expected) {
          if (bad++ == 0) first = rule.id + " " + pair_text(p) + " n=" + std::to_string(n);
        }
        if (rule.matching_items(e, st).size() > 1) ++overlaps;
        for (auto f : rule.forbidden)
          if (f == expected) ++forbidden_hits;
      }
    }
  }
  const double t = seconds_since(start);
  return {bad == 0 && forbidden_hits == 0 && overlaps == 0 && misrouted == 0 && ids.size() == 32 && t < 120.0,
          std::to_string(ids.size()) + " rules, " + std::to_string(pairs) + " (r,s) pairs, " +
              std::to_string(checks) + " checks, " + std::to_string(bad) + " mismatches" +
              (first.empty() ? "" : " (first " + first + ")") + ", " + std::to_string(forbidden_hits) +
              " forbidden residues, " + std::to_string(overlaps) + " overlapping items, " + std::to_string(misrouted) + " misrouted pairs, " + std::to_string(t) +
              " s (limit 120 s)"};
}

// 7 ------------------------------------------------------------------------
double best_time(std::size_t digits, std::mt19937_64& rng, int trials) {
  double best = 1e9;
  for (int i = 0; i < trials; ++i) {
    std::string text = "3:";
    text.reserve(digits + 2);
    for (std::size_t k = 0; k < digits; ++k) text.push_back(static_cast<char>('0' + rng() % 3));
    text[2] = '1';
    const auto start = Clock::now();
    const auto e = Base3Expansion::parse(text);
    volatile unsigned v = apery_mod9(e, {2, 1}).value();
    (void)v;
    best = std::min(best, seconds_since(start));
  }
  return best;
}

Outcome performance() {
  std::mt19937_64 rng(99);
  const double t5 = best_time(100'000, rng, 9);
  const double t6 = best_time(1'000'000, rng, 5);
  const double ratio = t6 / t5;
  return {t6 <= 1.0 && ratio <= 20.0, "10^6 digits " + std::to_string(t6) + " s (limit 1 s); 10^5 digits " +
                                          std::to_string(t5) + " s; ratio " + std::to_string(ratio) +
                                          " (limit 20)"};
}

// 8 ------------------------------------------------------------------------
struct Fixture {
  std::string label;
  std::uint8_t digit;
  std::function<bool(std::uint64_t r, std::uint64_t s)> holds_for;
  unsigned residue;
};

Outcome fixtures() {
  std::vector<Fixture> cases;
  for (std::uint64_t c = 0; c < 6; ++c) {
    const unsigned a1[6] = {2, 3, 5, 0, 8, 6};
    cases.push_back({"a_1, s=" + std::to_string(c) + " (mod 6)", 1,
                     [c](std::uint64_t, std::uint64_t s) { return s % 6 == c; }, a1[c]});
  }
  for (std::uint64_t c = 0; c < 6; ++c) {
    const unsigned a2[6] = {3, 4, 6, 1, 0, 7};
    cases.push_back({"a_2, r=" + std::to_string(c) + " (mod 6), s=0", 2,
                     [c](std::uint64_t r, std::uint64_t s) { return r % 6 == c && s == 0; }, a2[c]});
  }
  cases.push_back({"a_2, r=0,2 (mod 3), s=1", 2,
                   [](std::uint64_t r, std::uint64_t s) { return r % 3 != 1 && s == 1; }, 1});
  cases.push_back({"a_2, r=1 (mod 3), s=1", 2, [](std::uint64_t r, std::uint64_t s) { return r % 3 == 1 && s == 1; },
                   4});
  cases.push_back({"a_2, s>=2", 2, [](std::uint64_t, std::uint64_t s) { return s >= 2; }, 1});

  std::vector<std::string> failing;
  for (const auto& c : cases) {
    std::string counterexample;
    for (std::uint64_t r = 1; r <= 24 && counterexample.empty(); ++r)
      for (std::uint64_t s = 0; s <= 24; ++s) {
        if (!c.holds_for(r, s)) continue;
        const auto got = base_value_mod9(c.digit, {r, s}).value();
        if (got != c.residue) {
          counterexample = c.label + " at " + pair_text({r, s}) + ": " + std::to_string(got) + " vs tabulated " +
                           std::to_string(c.residue);
          break;
        }
      }
    if (!counterexample.empty()) failing.push_back(counterexample);
  }
  const std::set<std::string> known{"a_2, r=0,2 (mod 3), s=1", "a_2, r=1 (mod 3), s=1"};
  bool only_known = true;
  for (const auto& f : failing)
    only_known = only_known && std::any_of(known.begin(), known.end(), [&](const std::string& k) {
                   return f.rfind(k, 0) == 0;
                 });
  std::string detail = std::to_string(cases.size() - failing.size()) + "/" + std::to_string(cases.size()) +
                       " tabulated cases reproduced";
  for (const auto& f : failing) detail += "; " + f;
  if (!failing.empty() && only_known)
    detail += " (tabulated s=1 lines contradict 1 + 3*2^r + 6, which depends on the parity of r)";
  return {failing.empty(), detail, !failing.empty() && only_known && failing.size() == known.size()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "Lucas-9 exhaustive", lucas_exhaustive},
      {2, "theorem vs oracle grid", theorem_vs_oracle},
      {3, "f consistency", f_consistency},
      {4, "Ap27@(2,1) and Ap22@(2,2) vs oracle", classical_sequences},
      {5, "Gessel classes", gessel},
      {6, "classifier vs theorem", classifier_vs_theorem},
      {7, "performance", performance},
      {8, "base value fixtures", fixtures},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass && !o.expected_failure) ++unexpected;
  }
  std::printf("%s\n", unexpected == 0 ? "acceptance: no unexpected failures" : "acceptance: unexpected failures");
  return unexpected == 0 ? 0 : 1;
}
