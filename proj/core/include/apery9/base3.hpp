#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace apery9 {

/// Where a virtual 0 digit may be added before matching a digit pattern.
///
/// Patterns are read most-significant digit first. PadLeft puts one 0 above
/// the leading digit ("at the beginning"), PadRight puts one 0 below n_0
/// ("at the end").
enum class Boundary : std::uint8_t { None = 0, PadLeft = 1, PadRight = 2 };

std::string_view to_string(Boundary b);

/// Canonical base-3 expansion of a non-negative integer.
///
/// Digits are stored little-endian: digit(i) is n_i in n = sum n_i 3^i. The
/// highest stored digit is nonzero, except that 0 is stored as the single
/// digit [0]. Display and pattern matching use most-significant-first order.
class Base3Expansion {
public:
  /// The expansion of 0.
  Base3Expansion() : digits_{0} {}

  /// From little-endian digits. Trailing (most significant) zeros are
  /// stripped; throws std::invalid_argument on a digit outside {0,1,2}.
  static Base3Expansion from_lsd_digits(std::vector<std::uint8_t> digits);

  /// From a most-significant-first string such as "120012".
  static Base3Expansion from_msd_string(std::string_view text);

  /// Accepts either a decimal string or "3:" followed by msd-first base-3 digits.
  static Base3Expansion parse(std::string_view text);

  std::size_t size() const { return digits_.size(); }
  /// Highest digit index m.
  std::size_t top_index() const { return digits_.size() - 1; }
  std::uint8_t digit(std::size_t i) const { return digits_[i]; }
  std::span<const std::uint8_t> digits() const { return digits_; }
  bool is_zero() const { return digits_.size() == 1 && digits_[0] == 0; }

  std::string to_msd_string() const;
  mpz_class to_integer() const;

  friend bool operator==(const Base3Expansion&, const Base3Expansion&) = default;

private:
  explicit Base3Expansion(std::vector<std::uint8_t> canonical) : digits_(std::move(canonical)) {}

  std::vector<std::uint8_t> digits_;
};

/// Throws std::invalid_argument for negative n.
Base3Expansion to_base3(const mpz_class& n);
Base3Expansion to_base3(std::uint64_t n);

/// Overlapping occurrences of an msd-first pattern over raw little-endian digits.
/// The digits need not be canonical; leading zeros take part in matching.
/// Throws std::invalid_argument for an empty pattern or a character outside '0'..'2'.
std::size_t count_pattern(std::span<const std::uint8_t> lsd_digits, std::string_view pattern,
                          Boundary boundary = Boundary::None);

inline std::size_t count_pattern(const Base3Expansion& e, std::string_view pattern,
                                 Boundary boundary = Boundary::None) {
  return count_pattern(e.digits(), pattern, boundary);
}

/// Aggregate digit statistics used by the residue classifier.
struct DigitStats {
  std::array<std::size_t, 3> count_of_digit{};
  /// pair_count[x][y][boundary]: msd-first occurrences of the two-digit string "xy".
  std::array<std::array<std::array<std::size_t, 3>, 3>, 3> pair_count{};
  /// Number of maximal blocks of each digit in the msd-first string.
  std::array<std::size_t, 3> maximal_runs{};
  std::uint64_t digit_sum = 0;
  /// (#digits 1) - 2 (#digits 2).
  std::int64_t weighted_sum = 0;

  std::size_t pairs(std::uint8_t hi, std::uint8_t lo, Boundary b = Boundary::None) const {
    return pair_count[hi][lo][static_cast<std::size_t>(b)];
  }
};

DigitStats digit_stats(const Base3Expansion& e);

}  // namespace apery9
