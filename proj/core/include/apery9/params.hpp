#pragma once

#include <cstdint>
#include <string>

namespace apery9 {

/// Exponent pair (r, s) of a_n(r,s) = sum_k C(n,k)^r C(n+k,k)^s.
///
/// r >= 1 and s >= 0. Both are capped at kMaxExponent so that every derived
/// quantity fits comfortably in a signed 64-bit integer.
class AperyParams {
public:
  static constexpr std::uint64_t kMaxExponent = 1'000'000'000'000'000'000ULL;

  /// Throws std::invalid_argument if r == 0 or either exponent exceeds kMaxExponent.
  AperyParams(std::uint64_t r, std::uint64_t s);

  std::uint64_t r() const { return r_; }
  std::uint64_t s() const { return s_; }

  unsigned r_mod6() const { return static_cast<unsigned>(r_ % 6); }
  unsigned s_mod6() const { return static_cast<unsigned>(s_ % 6); }

  /// Shifted copy (r + dr, s + ds); class periodicity tests use dr = ds = 6.
  AperyParams shifted(std::uint64_t dr, std::uint64_t ds) const { return {r_ + dr, s_ + ds}; }

  std::string to_string() const;

  friend bool operator==(const AperyParams&, const AperyParams&) = default;

private:
  std::uint64_t r_;
  std::uint64_t s_;
};

}  // namespace apery9
