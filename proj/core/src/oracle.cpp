#include "apery9/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace apery9::oracle {

BoundExceeded::BoundExceeded(std::uint64_t n, std::uint64_t bound)
    : std::range_error("n = " + std::to_string(n) + " exceeds the exact-computation bound " +
                       std::to_string(bound) + "; use the theorem (mod 9) evaluator instead"),
      n_(n),
      bound_(bound) {}

namespace {

void check_bound(std::uint64_t n, const Config& cfg) {
  if (n > cfg.max_n) throw BoundExceeded(n, cfg.max_n);
}

// C(n+k, k) for k = 0..n, by the same running product.
std::vector<mpz_class> shifted_diagonal(std::uint64_t n) {
  std::vector<mpz_class> out(n + 1);
  out[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    out[k] = out[k - 1] * (n + k);
    mpz_divexact_ui(out[k].get_mpz_t(), out[k].get_mpz_t(), k);
  }
  return out;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t modulus) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), modulus));
}

}  // namespace

mpz_class binom_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
  }
  return c;
}

std::vector<mpz_class> binom_row(std::uint64_t n) {
  std::vector<mpz_class> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (k > n - k) {
      row[k] = row[n - k];
      continue;
    }
    row[k] = row[k - 1] * (n - k + 1);
    mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(), k);
  }
  return row;
}

mpz_class apery_exact(std::uint64_t n, const AperyParams& p, const Config& cfg) {
  const std::uint64_t r = p.r();
  const std::uint64_t s = p.s();
  auto grid = apery_exact_grid(n, std::span<const std::uint64_t>(&r, 1),
                               std::span<const std::uint64_t>(&s, 1), cfg);
  return grid.front();
}

std::uint32_t apery_mod(std::uint64_t n, const AperyParams& p, std::uint32_t modulus,
                        const Config& cfg) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  return reduce(apery_exact(n, p, cfg), modulus);
}

std::vector<mpz_class> apery_exact_grid(std::uint64_t n, std::span<const std::uint64_t> r_values,
                                        std::span<const std::uint64_t> s_values,
                                        const Config& cfg) {
  check_bound(n, cfg);
  for (auto r : r_values)
    if (r == 0) throw std::invalid_argument("r must be a positive integer");

  const auto row = binom_row(n);
  const auto diag = shifted_diagonal(n);
  const std::size_t ns = s_values.size();
  std::vector<mpz_class> acc(r_values.size() * ns);

  auto ascending = [](std::span<const std::uint64_t> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    return idx;
  };
  const auto r_order = ascending(r_values);
  const auto s_order = ascending(s_values);

  // Powers are built incrementally along the sorted exponents, so each step
  // multiplies a large partial product by one small binomial power.
  mpz_class diag_pow, term, step;
  std::vector<mpz_class> r_steps(r_order.size());
  for (std::uint64_t k = 0; k <= n; ++k) {
    const mpz_class& c1 = row[k];
    const mpz_class& c2 = diag[k];
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < r_order.size(); ++i) {
      const std::uint64_t e = r_values[r_order[i]];
      mpz_pow_ui(r_steps[i].get_mpz_t(), c1.get_mpz_t(), e - prev);
      prev = e;
    }
    diag_pow = 1;
    prev = 0;
    for (std::size_t j : s_order) {
      mpz_pow_ui(step.get_mpz_t(), c2.get_mpz_t(), s_values[j] - prev);
      diag_pow *= step;
      prev = s_values[j];
      term = diag_pow;
      for (std::size_t i = 0; i < r_order.size(); ++i) {
        term *= r_steps[i];
        acc[r_order[i] * ns + j] += term;
      }
    }
  }
  return acc;
}

std::uint32_t apery_mod_termwise(std::uint64_t n, const AperyParams& p, std::uint32_t modulus,
                                 const Config& cfg) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  check_bound(n, cfg);
  const auto row = binom_row(n);
  const auto diag = shifted_diagonal(n);
  auto pow_mod = [modulus](std::uint64_t b, std::uint64_t e) {
    std::uint64_t result = 1 % modulus;
    b %= modulus;
    while (e) {
      if (e & 1) result = result * b % modulus;
      b = b * b % modulus;
      e >>= 1;
    }
    return result;
  };
  std::uint64_t sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const auto x = pow_mod(reduce(row[k], modulus), p.r());
    const auto y = pow_mod(reduce(diag[k], modulus), p.s());
    sum = (sum + x * y) % modulus;
  }
  return static_cast<std::uint32_t>(sum);
}

}  // namespace apery9::oracle
