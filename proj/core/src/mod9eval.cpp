#include "apery9/mod9eval.hpp"

#include <array>
#include <vector>

namespace apery9 {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint32_t modulus) {
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base % modulus;
    base = base * base % modulus;
    exponent >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

Residue9 base_value_mod9(std::uint8_t d, const AperyParams& p) {
  switch (d) {
    case 0:
      return Residue9(1);
    case 1:
      // 2 has order 6 modulo 9.
      return Residue9(1 + pow_mod(2, p.s() % 6, 9));
    case 2:
      return Residue9(1 + pow_mod(2, p.r() % 6, 9) * pow_mod(3, p.s(), 9) + pow_mod(6, p.s(), 9));
    default:
      throw std::invalid_argument("base-3 digit out of range");
  }
}

namespace {

constexpr int chi(bool c) { return c ? 1 : 0; }

// r and s enter the correction polynomials linearly or through (-1)^r,
// (-1)^s and the tests r = 1, s = 1, so they are replaced by small
// representatives with the same residue mod 6 and the same flags.
struct Reduced {
  std::int64_t r;
  std::int64_t s;
  int sign_r;
  int sign_s;
  bool r_is_1;
  bool s_is_1;
};

Reduced reduce(const AperyParams& p) {
  return {static_cast<std::int64_t>(p.r() % 6), static_cast<std::int64_t>(p.s() % 6),
          p.r() % 2 == 0 ? 1 : -1,           p.s() % 2 == 0 ? 1 : -1,
          p.r() == 1,                         p.s() == 1};
}

void check_digits(std::uint8_t lower, std::uint8_t higher) {
  if (lower > 2 || higher > 2) throw std::invalid_argument("base-3 digit out of range");
}

}  // namespace

Residue3 f_term(std::uint8_t lower, std::uint8_t higher, const AperyParams& p) {
  check_digits(lower, higher);
  const auto q = reduce(p);
  const std::int64_t a = lower;
  const std::int64_t b = higher;

  if (p.s() == 0) {
    const std::int64_t v = chi(q.r_is_1) * (b - chi(b == 2)) * (chi(a == 2) - 1) -
                           q.r * (b + chi(b == 2) * q.sign_r) * (chi(a == 1) - q.sign_r * chi(a == 2));
    return Residue3(v);
  }

  const std::int64_t v = a * (a + 1) * b * (q.s * (b + 1) + q.sign_s * (q.s * (b - 1) + q.r * b)) +
                         chi(q.r_is_1) * (a + 2) * (a + 1) * b +
                         chi(q.s_is_1) * (q.sign_r - 1) * (a - 1) * a * b * b;
  return Residue3(v);
}

Residue3 f_term_indicator_form(std::uint8_t lower, std::uint8_t higher, const AperyParams& p) {
  check_digits(lower, higher);
  if (p.s() == 0) throw std::domain_error("indicator form of f is stated for s ≥ 1 only");
  const auto q = reduce(p);
  const int a = lower;
  const int b = higher;
  const std::int64_t v =
      chi(a == 1) * (q.s * chi(b == 1) + q.sign_s * q.s * chi(b == 2) + q.sign_s * q.r * (chi(b == 0) - 1)) -
      chi(q.r_is_1) * chi(a == 0) * b +
      chi(q.s_is_1) * (q.sign_r - 1) * chi(a == 2) * (chi(b == 0) - 1);
  return Residue3(v);
}

namespace {

struct ClassFacts {
  std::uint64_t r;
  std::uint64_t s;
  unsigned r6;
  unsigned s6;
};

using Expr = std::int64_t (*)(int a, int b, const ClassFacts&);

struct ReducedCase {
  std::string_view hypothesis;
  bool (*applies)(const ClassFacts&);
  Expr expr;  // nullptr: printed form is not well-formed
};

// Scale applied to the r >= 2 Franel lines (identity when r = 1 mod 3).
std::int64_t franel_scale(const ClassFacts& c) { return static_cast<std::int64_t>(c.r % 3); }

// a = n_{v-1} (lower digit), b = n_v (higher digit).
constexpr std::array<ReducedCase, 32> kReducedCases{{
    // s >= 1, r = 0 (mod 3)
    {"r≡0 (mod 3), s≡0 (mod 3), s≥3",
     [](const ClassFacts& c) { return c.r % 3 == 0 && c.s % 3 == 0 && c.s > 0; },
     [](int, int, const ClassFacts&) -> std::int64_t { return 0; }},
    {"r≡0 (mod 6), s≡1 (mod 6)", [](const ClassFacts& c) { return c.r6 == 0 && c.s6 == 1; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * b; }},
    {"r≡0 (mod 3), s≡2 (mod 6)", [](const ClassFacts& c) { return c.r % 3 == 0 && c.s6 == 2; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * (chi(b == 0) - 1); }},
    {"r≡0 (mod 3), s≡4 (mod 6)", [](const ClassFacts& c) { return c.r % 3 == 0 && c.s6 == 4; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * (1 - chi(b == 0)); }},
    {"r≡0 (mod 3), s≡5 (mod 6)", [](const ClassFacts& c) { return c.r % 3 == 0 && c.s6 == 5; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return -chi(a == 1) * b; }},
    // r = 1
    {"r=1, s≡0 (mod 6), s≥6", [](const ClassFacts& c) { return c.r == 1 && c.s6 == 0 && c.s > 0; },
     [](int a, int b, const ClassFacts&) -> std::int64_t {
       return chi(a == 1) * (chi(b == 0) - 1) - chi(a == 0) * b;
     }},
    {"r=s=1", [](const ClassFacts& c) { return c.r == 1 && c.s == 1; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return -a * chi(b == 2) - b; }},
    {"r=1, s≡1 (mod 6), s≥7", [](const ClassFacts& c) { return c.r == 1 && c.s6 == 1 && c.s >= 7; },
     [](int a, int b, const ClassFacts&) -> std::int64_t {
       return chi(b == 1) * a - b - (1 - chi(a == 0)) * (1 - chi(b == 0));
     }},
    {"r=1, s≡2 (mod 6)", [](const ClassFacts& c) { return c.r == 1 && c.s6 == 2; }, nullptr},
    {"r=1, s≡3 (mod 6)", [](const ClassFacts& c) { return c.r == 1 && c.s6 == 3; },
     [](int a, int b, const ClassFacts&) -> std::int64_t {
       return chi(a == 1) * (1 - chi(b == 0)) - chi(a == 0) * b;
     }},
    {"r=1, s≡4 (mod 6)", [](const ClassFacts& c) { return c.r == 1 && c.s6 == 4; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return -chi(a == 0) * b; }},
    {"r=1, s≡5 (mod 6)", [](const ClassFacts& c) { return c.r == 1 && c.s6 == 5; },
     [](int a, int b, const ClassFacts&) -> std::int64_t {
       return (chi(a == 2) - 1) * b + chi(a == 1) * (1 - chi(b == 0));
     }},
    // r = 1 (mod 3), r >= 4
    {"r≡1 (mod 3), r≥4, s≡0 (mod 6), s≥6",
     [](const ClassFacts& c) { return c.r % 3 == 1 && c.r >= 4 && c.s6 == 0 && c.s > 0; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * (chi(b == 0) - 1); }},
    {"r≡1 (mod 6), r≥7, s=1", [](const ClassFacts& c) { return c.r6 == 1 && c.r >= 7 && c.s == 1; },
     nullptr},
    {"r,s≡1 (mod 6), r,s≥7; or r≡4 (mod 6), s≡1 (mod 6)",
     [](const ClassFacts& c) {
       return (c.r6 == 1 && c.s6 == 1 && c.r >= 7 && c.s >= 7) || (c.r6 == 4 && c.s6 == 1);
     },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return -chi(a == 1) * chi(b == 1); }},
    {"r≡1 (mod 3), r≥4, s≡2,3 (mod 6)",
     [](const ClassFacts& c) { return c.r % 3 == 1 && c.r >= 4 && (c.s6 == 2 || c.s6 == 3); },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * (1 - chi(b == 0)); }},
    {"r≡1 (mod 3), r≥4, s≡4 (mod 6)",
     [](const ClassFacts& c) { return c.r % 3 == 1 && c.r >= 4 && c.s6 == 4; },
     [](int, int, const ClassFacts&) -> std::int64_t { return 0; }},
    {"r≡1 (mod 3), r≥4, s≡5 (mod 6)",
     [](const ClassFacts& c) { return c.r % 3 == 1 && c.r >= 4 && c.s6 == 5; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return -chi(a == 1) * chi(b == 2); }},
    // r = 2 (mod 3)
    {"r≡2 (mod 3), s≡0 (mod 6), s≥6", [](const ClassFacts& c) { return c.r % 3 == 2 && c.s6 == 0 && c.s > 0; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * (1 - chi(b == 0)); }},
    {"r≡2 (mod 6), s≡1 (mod 6)", [](const ClassFacts& c) { return c.r6 == 2 && c.s6 == 1; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * chi(b == 2); }},
    {"r≡2 (mod 3), s≡2 (mod 6)", [](const ClassFacts& c) { return c.r % 3 == 2 && c.s6 == 2; },
     [](int, int, const ClassFacts&) -> std::int64_t { return 0; }},
    {"r≡2 (mod 3), s≡3 (mod 6)", [](const ClassFacts& c) { return c.r % 3 == 2 && c.s6 == 3; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * (chi(b == 0) - 1); }},
    {"r≡2 (mod 3), s≡4 (mod 6)", [](const ClassFacts& c) { return c.r % 3 == 2 && c.s6 == 4; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * (chi(b == 0) - 1); }},
    {"r≡2 (mod 3), s≡5 (mod 6)", [](const ClassFacts& c) { return c.r % 3 == 2 && c.s6 == 5; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * chi(b == 1); }},
    // r = 3, 5 (mod 6), s = 1 (mod 6)
    {"r≡3 (mod 6), s=1", [](const ClassFacts& c) { return c.r6 == 3 && c.s == 1; },
     [](int a, int b, const ClassFacts&) -> std::int64_t {
       return chi(a == 2) * (chi(b == 0) - 1) + chi(a == 1) * b;
     }},
    {"r≡3 (mod 6), s≡1 (mod 6), s≥7", [](const ClassFacts& c) { return c.r6 == 3 && c.s6 == 1 && c.s >= 7; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * b; }},
    {"r≡5 (mod 6), s=1", [](const ClassFacts& c) { return c.r6 == 5 && c.s == 1; },
     [](int a, int b, const ClassFacts&) -> std::int64_t {
       return chi(a == 1) * b - (1 - chi(a == 0)) * (1 - chi(b == 0));
     }},
    {"r≡5 (mod 6), s≡1 (mod 6), s≥7", [](const ClassFacts& c) { return c.r6 == 5 && c.s6 == 1 && c.s >= 7; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return chi(a == 1) * chi(b == 2); }},
    // s = 0
    {"r≡0 (mod 6), r≥6, s=0", [](const ClassFacts& c) { return c.r6 == 0 && c.s == 0; },
     [](int a, int b, const ClassFacts& c) -> std::int64_t {
       return franel_scale(c) * (chi(a == 2) - chi(a == 1)) * (chi(b == 2) + b);
     }},
    {"r=1, s=0", [](const ClassFacts& c) { return c.r == 1 && c.s == 0; },
     [](int a, int b, const ClassFacts&) -> std::int64_t { return (1 + chi(a == 1)) * (chi(b == 2) - b); }},
    {"r≡1,3,5 (mod 6), r≥3, s=0", [](const ClassFacts& c) { return c.r % 2 == 1 && c.r >= 3 && c.s == 0; },
     [](int a, int b, const ClassFacts& c) -> std::int64_t {
       return franel_scale(c) * (chi(a == 1) + chi(a == 2)) * (chi(b == 2) - b);
     }},
    {"r≡2,4 (mod 6), s=0", [](const ClassFacts& c) { return (c.r6 == 2 || c.r6 == 4) && c.s == 0; },
     [](int a, int b, const ClassFacts& c) -> std::int64_t {
       return franel_scale(c) * (chi(a == 2) - chi(a == 1)) * (chi(b == 2) + b);
     }},
}};

const ReducedCase& find_case(const AperyParams& p) {
  const ClassFacts facts{p.r(), p.s(), p.r_mod6(), p.s_mod6()};
  for (const auto& c : kReducedCases)
    if (c.applies(facts)) return c;
  throw UnverifiableCase("no reduced case covers " + p.to_string());
}

}  // namespace

std::string_view f_term_reduced_case(const AperyParams& p) { return find_case(p).hypothesis; }

Residue3 f_term_reduced(std::uint8_t lower, std::uint8_t higher, const AperyParams& p) {
  check_digits(lower, higher);
  const auto& c = find_case(p);
  if (c.expr == nullptr)
    throw UnverifiableCase("reduced expression for " + std::string(c.hypothesis) +
                           " is ill-parenthesized; use f_term");
  return Residue3(c.expr(lower, higher, ClassFacts{p.r(), p.s(), p.r_mod6(), p.s_mod6()}));
}

Residue9 apery_mod9(std::span<const std::uint8_t> lsd_digits, const AperyParams& p) {
  if (lsd_digits.empty()) throw std::invalid_argument("empty digit sequence");

  std::array<std::uint32_t, 3> value9{};
  std::array<std::uint8_t, 3> value3{};
  for (std::uint8_t d = 0; d < 3; ++d) {
    value9[d] = base_value_mod9(d, p).value();
    value3[d] = static_cast<std::uint8_t>(value9[d] % 3);
  }
  std::array<std::array<std::uint8_t, 3>, 3> f{};
  for (std::uint8_t a = 0; a < 3; ++a)
    for (std::uint8_t b = 0; b < 3; ++b) f[a][b] = static_cast<std::uint8_t>(f_term(a, b, p).value());

  const std::size_t len = lsd_digits.size();
  for (auto d : lsd_digits)
    if (d > 2) throw std::invalid_argument("base-3 digit out of range");

  // suffix[i] = prod_{j >= i} a_{n_j} mod 3
  std::vector<std::uint8_t> suffix(len + 1);
  suffix[len] = 1;
  for (std::size_t i = len; i-- > 0;)
    suffix[i] = static_cast<std::uint8_t>(suffix[i + 1] * value3[lsd_digits[i]] % 3);

  std::uint32_t product = 1;
  std::uint32_t prefix = 1;  // prod_{j < v-1} a_{n_j} mod 3
  std::uint32_t correction = 0;
  for (std::size_t v = 1; v < len; ++v) {
    const auto lo = lsd_digits[v - 1];
    const auto hi = lsd_digits[v];
    correction = (correction + f[lo][hi] * prefix * suffix[v + 1]) % 3;
    prefix = prefix * value3[lo] % 3;
  }
  for (auto d : lsd_digits) product = product * value9[d] % 9;

  return Residue9(static_cast<std::int64_t>(product + 3 * correction));
}

Residue9 apery_mod9(const Base3Expansion& e, const AperyParams& p) { return apery_mod9(e.digits(), p); }

Residue3 apery_mod3(const Base3Expansion& e, const AperyParams& p) {
  Residue3 prod(1);
  for (auto d : e.digits()) prod *= to_mod3(base_value_mod9(d, p));
  return prod;
}

Residue9 digit_product_mod9(const Base3Expansion& e, const AperyParams& p) {
  Residue9 prod(1);
  for (auto d : e.digits()) prod *= base_value_mod9(d, p);
  return prod;
}

bool is_gessel_class(const AperyParams& p) {
  const auto r = p.r();
  const auto s = p.s();
  return (r % 3 == 2 && s % 6 == 2) || (r % 3 == 0 && s % 3 == 0) ||
         (r % 3 == 1 && r >= 4 && s % 6 == 4);
}

}  // namespace apery9
