#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "apery9/params.hpp"

namespace apery9::oracle {

/// Exact ground truth from the defining binomial sum.
///
/// Everything here is plain arbitrary-precision arithmetic; nothing depends
/// on base-3 digits, so it can serve as an independent check of the
/// digit-based evaluators.

/// Raised when n is above the configured exact-computation bound.
class BoundExceeded : public std::range_error {
public:
  BoundExceeded(std::uint64_t n, std::uint64_t bound);
  std::uint64_t n() const { return n_; }
  std::uint64_t bound() const { return bound_; }

private:
  std::uint64_t n_;
  std::uint64_t bound_;
};

struct Config {
  static constexpr std::uint64_t kDefaultBound = 10'000;
  std::uint64_t max_n = kDefaultBound;
};

/// C(n, k); zero when k > n.
mpz_class binom_exact(std::uint64_t n, std::uint64_t k);

/// The full row C(n, 0..n) by a running product with exact division.
std::vector<mpz_class> binom_row(std::uint64_t n);

/// a_n(r,s) exactly. Throws BoundExceeded if n > cfg.max_n.
mpz_class apery_exact(std::uint64_t n, const AperyParams& p, const Config& cfg = {});

/// a_n(r,s) mod `modulus` (>= 2), reducing the exact value.
std::uint32_t apery_mod(std::uint64_t n, const AperyParams& p, std::uint32_t modulus,
                        const Config& cfg = {});

/// Exact a_n(r,s) for every r in r_values and s in s_values, sharing the
/// binomial rows and the running powers. Result is row-major:
/// out[i * s_values.size() + j] = a_n(r_values[i], s_values[j]).
std::vector<mpz_class> apery_exact_grid(std::uint64_t n, std::span<const std::uint64_t> r_values,
                                        std::span<const std::uint64_t> s_values,
                                        const Config& cfg = {});

/// a_n(r,s) mod `modulus` from the exact binomials, each reduced before
/// raising to r and s. Same value as apery_mod, far cheaper for n in the thousands.
std::uint32_t apery_mod_termwise(std::uint64_t n, const AperyParams& p, std::uint32_t modulus,
                                 const Config& cfg = {});

}  // namespace apery9::oracle
