#include <random>

#include "doctest.h"

#include "apery9/mod9eval.hpp"
#include "apery9/oracle.hpp"

using namespace apery9;

namespace {

unsigned theorem(std::uint64_t n, std::uint64_t r, std::uint64_t s) {
  return apery_mod9(to_base3(n), AperyParams(r, s)).value();
}

int chi(bool c) { return c ? 1 : 0; }

// The s = 0 correction exactly as first written, without the factor r on
// its second product.
int unscaled_franel_f(int a, int b, std::uint64_t r) {
  const int sign = r % 2 == 0 ? 1 : -1;
  return chi(r == 1) * (b - chi(b == 2)) * (chi(a == 2) - 1) -
         (b + chi(b == 2) * sign) * (chi(a == 1) - sign * chi(a == 2));
}

unsigned theorem_with(std::uint64_t n, const AperyParams& p, int (*f)(int, int, std::uint64_t)) {
  const auto e = to_base3(n);
  const auto d = e.digits();
  std::int64_t total = 0;
  std::int64_t prod = 1;
  for (auto x : d) prod = prod * base_value_mod9(x, p).value() % 9;
  for (std::size_t v = 1; v < d.size(); ++v) {
    std::int64_t rest = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (i != v && i + 1 != v) rest *= base_value_mod9(d[i], p).value() % 3;
    total += f(d[v - 1], d[v], p.r()) * rest;
  }
  return static_cast<unsigned>(((prod + 3 * total) % 9 + 9) % 9);
}

}  // namespace

TEST_SUITE("mod9eval") {
  TEST_CASE("pow_mod") {
    CHECK(pow_mod(2, 6, 9) == 1);
    CHECK(pow_mod(3, 2, 9) == 0);
    CHECK(pow_mod(7, 0, 9) == 1);
    CHECK(pow_mod(2, 1'000'000'000'000'000'000ULL, 9) == pow_mod(2, 1'000'000'000'000'000'000ULL % 6, 9));
  }

  TEST_CASE("base values: a_0 and a_1") {
    const unsigned a1[6] = {2, 3, 5, 0, 8, 6};
    for (std::uint64_t s = 0; s < 30; ++s)
      for (std::uint64_t r : {1, 2, 5, 12}) {
        CHECK(base_value_mod9(0, {r, s}).value() == 1);
        CHECK(base_value_mod9(1, {r, s}).value() == a1[s % 6]);
      }
  }

  TEST_CASE("base values: a_2") {
    const unsigned s0[6] = {3, 4, 6, 1, 0, 7};
    for (std::uint64_t r = 1; r <= 30; ++r) {
      CHECK(base_value_mod9(2, {r, 0}).value() == s0[r % 6]);
      // 1 + 3 * 2^r + 6 depends on the parity of r.
      CHECK(base_value_mod9(2, {r, 1}).value() == (r % 2 == 0 ? 1U : 4U));
      for (std::uint64_t s = 2; s < 14; ++s) CHECK(base_value_mod9(2, {r, s}).value() == 1);
    }
    CHECK(base_value_mod9(2, {3, 1}).value() == oracle::apery_mod(2, {3, 1}, 9));
    CHECK(base_value_mod9(2, {4, 1}).value() == oracle::apery_mod(2, {4, 1}, 9));
    for (std::uint64_t r = 1; r <= 12; ++r)
      for (std::uint64_t s = 0; s <= 12; ++s)
        for (std::uint8_t d = 0; d < 3; ++d)
          CHECK(base_value_mod9(d, {r, s}).value() == oracle::apery_mod(d, {r, s}, 9));
    CHECK_THROWS_AS(base_value_mod9(3, {1, 1}), std::invalid_argument);
  }

  TEST_CASE("f examples") {
    CHECK(f_term(0, 0, {5, 3}).value() == 0);
    CHECK(f_term(0, 0, {5, 0}).value() == 0);
    CHECK(f_term(1, 2, {2, 1}).value() == 1);
    CHECK(f_term(2, 1, {1, 1}).value() == 2);
    CHECK_THROWS_AS(f_term(3, 0, {1, 1}), std::invalid_argument);
  }

  TEST_CASE("f vanishes on an upper zero digit") {
    for (std::uint64_t r = 1; r <= 13; ++r)
      for (std::uint64_t s = 0; s <= 13; ++s)
        for (std::uint8_t a = 0; a < 3; ++a) CHECK(f_term(a, 0, {r, s}).is_zero());
  }

  TEST_CASE("reduced f examples") {
    for (std::uint8_t a = 0; a < 3; ++a)
      for (std::uint8_t b = 0; b < 3; ++b) {
        CHECK(f_term_reduced(a, b, {3, 6}).is_zero());
        CHECK(f_term_reduced(a, b, {6, 3}).is_zero());
      }
    CHECK(f_term_reduced(1, 1, {2, 5}).value() == 1);
    CHECK(f_term_reduced(1, 2, {4, 5}).value() == 2);
  }

  TEST_CASE("reduced f refuses the two malformed cases") {
    CHECK_THROWS_AS(f_term_reduced(1, 1, {1, 2}), UnverifiableCase);
    CHECK_THROWS_AS(f_term_reduced(1, 1, {1, 8}), UnverifiableCase);
    CHECK_THROWS_AS(f_term_reduced(1, 1, {7, 1}), UnverifiableCase);
    CHECK_THROWS_AS(f_term_reduced(1, 1, {13, 1}), UnverifiableCase);
    CHECK_NOTHROW(f_term_reduced(1, 1, {7, 7}));
    CHECK_NOTHROW(f_term_reduced(1, 1, {1, 1}));
    CHECK(f_term_reduced_case({2, 5}) == "r≡2 (mod 3), s≡5 (mod 6)");
  }

  TEST_CASE("closed, indicator and reduced forms of f agree") {
    int checked = 0;
    for (std::uint64_t r = 1; r <= 13; ++r)
      for (std::uint64_t s = 0; s <= 13; ++s) {
        const AperyParams p(r, s);
        const bool ambiguous = (r == 1 && s % 6 == 2) || (r % 6 == 1 && r >= 7 && s == 1);
        for (std::uint8_t a = 0; a < 3; ++a)
          for (std::uint8_t b = 0; b < 3; ++b) {
            if (s >= 1) CHECK(f_term(a, b, p) == f_term_indicator_form(a, b, p));
            if (ambiguous) continue;
            CHECK(f_term(a, b, p) == f_term_reduced(a, b, p));
            ++checked;
          }
      }
    CHECK(checked > 1500);
    CHECK_THROWS_AS(f_term_indicator_form(1, 1, {2, 0}), std::domain_error);
  }

  TEST_CASE("s=0 correction without the factor r disagrees with the oracle") {
    // n = 4 = "11": C(8,4) = 70 = 7 (mod 9).
    CHECK(oracle::apery_mod(4, {2, 0}, 9) == 7);
    CHECK(theorem(4, 2, 0) == 7);
    CHECK(theorem_with(4, {2, 0}, unscaled_franel_f) == 1);
    // The unscaled form is fine exactly when r = 1 (mod 3).
    for (std::uint64_t n = 0; n < 243; ++n) {
      CHECK(theorem_with(n, {4, 0}, unscaled_franel_f) == theorem(n, 4, 0));
      CHECK(theorem_with(n, {7, 0}, unscaled_franel_f) == theorem(n, 7, 0));
    }
  }

  TEST_CASE("evaluator examples") {
    CHECK(theorem(0, 3, 4) == 1);
    CHECK(theorem(5, 2, 1) == 3);
    CHECK(theorem(4, 2, 2) == 7);
    CHECK(theorem(8, 2, 2) == 1);
    CHECK(theorem(4, 1, 1) == 6);
    CHECK(theorem(21, 1, 3) == 0);
    CHECK(theorem(4, 6, 0) == 4);
    CHECK(theorem(5, 6, 0) == 6);
    CHECK(apery_mod3(to_base3(std::uint64_t{0}), {2, 1}).value() == 1);
    CHECK(apery_mod3(to_base3(std::uint64_t{5}), {2, 1}).value() == 0);
    CHECK(apery_mod3(to_base3(std::uint64_t{8}), {2, 2}).value() == 1);
  }

  TEST_CASE("evaluator agrees with the oracle for n < 243") {
    std::vector<std::uint64_t> rs, ss;
    for (std::uint64_t v = 1; v <= 7; ++v) rs.push_back(v);
    for (std::uint64_t v = 0; v <= 7; ++v) ss.push_back(v);
    for (std::uint64_t n = 0; n < 243; ++n) {
      const auto grid = oracle::apery_exact_grid(n, rs, ss);
      for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < ss.size(); ++j) {
          const mpz_class m = grid[i * ss.size() + j] % 9;
          REQUIRE(theorem(n, rs[i], ss[j]) == m.get_ui());
        }
    }
  }

  TEST_CASE("reduction to mod 3 and leading zeros") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      const AperyParams p(1 + rng() % 20, rng() % 20);
      std::vector<std::uint8_t> digits(1 + rng() % 40);
      for (auto& d : digits) d = static_cast<std::uint8_t>(rng() % 3);
      const auto e = Base3Expansion::from_lsd_digits(digits);
      const auto v = apery_mod9(e, p);
      CHECK(to_mod3(v) == apery_mod3(e, p));
      auto padded = digits;
      padded.insert(padded.end(), 1 + rng() % 4, 0);
      CHECK(apery_mod9(std::span<const std::uint8_t>(padded), p) == v);
    }
    const std::vector<std::uint8_t> bad{1, 3};
    CHECK_THROWS_AS(apery_mod9(std::span<const std::uint8_t>(bad), {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apery_mod9(std::span<const std::uint8_t>(), {2, 1}), std::invalid_argument);
  }

  TEST_CASE("period 6 in r and s away from the small exponents") {
    for (std::uint64_t r = 2; r <= 13; ++r)
      for (std::uint64_t s = 2; s <= 13; ++s)
        for (std::uint64_t n = 0; n < 729; ++n) REQUIRE(theorem(n, r, s) == theorem(n, r + 6, s + 6));
    for (std::uint64_t r = 2; r <= 8; ++r)
      for (std::uint64_t s : {0, 1})
        for (std::uint64_t n = 0; n < 729; ++n) REQUIRE(theorem(n, r, s) == theorem(n, r + 6, s));
  }

  TEST_CASE("huge exponents") {
    const std::uint64_t big = AperyParams::kMaxExponent;
    for (std::uint64_t n = 0; n < 100; ++n)
      CHECK(theorem(n, big - big % 6 + 2, big - big % 6 + 1) == theorem(n, 8, 7));
  }

  TEST_CASE("Gessel classes") {
    CHECK(is_gessel_class({2, 2}));
    CHECK(is_gessel_class({4, 4}));
    CHECK(is_gessel_class({3, 3}));
    CHECK(is_gessel_class({6, 0}));
    CHECK_FALSE(is_gessel_class({2, 1}));
    CHECK_FALSE(is_gessel_class({1, 4}));
    for (std::uint64_t r = 1; r <= 13; ++r)
      for (std::uint64_t s = 0; s <= 13; ++s) {
        const AperyParams p(r, s);
        bool vanishes = true;
        for (std::uint8_t a = 0; a < 3; ++a)
          for (std::uint8_t b = 0; b < 3; ++b) vanishes = vanishes && f_term(a, b, p).is_zero();
        if (is_gessel_class(p)) CHECK(vanishes);
        if (!is_gessel_class(p) || !vanishes) continue;
        for (std::uint64_t n = 0; n < 729; ++n) {
          const auto e = to_base3(n);
          REQUIRE(apery_mod9(e, p) == digit_product_mod9(e, p));
        }
      }
  }

  TEST_CASE("million-digit input") {
    std::mt19937_64 rng(5);
    std::string digits(1'000'000, '0');
    for (auto& c : digits) c = static_cast<char>('0' + rng() % 3);
    digits[0] = '1';
    const auto e = Base3Expansion::parse("3:" + digits);
    CHECK(e.size() == 1'000'000);
    CHECK(apery_mod9(e, {2, 1}).value() < 9);
  }
}
