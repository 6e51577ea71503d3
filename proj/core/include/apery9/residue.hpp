#pragma once

#include <cstdint>
#include <ostream>

namespace apery9 {

/// Element of Z/mZ for a small compile-time modulus.
template <std::uint32_t M>
class Residue {
  static_assert(M >= 2 && M <= 255, "small moduli only");

public:
  static constexpr std::uint32_t modulus = M;

  constexpr Residue() = default;

  /// Reduces any signed integer into [0, M).
  constexpr explicit Residue(std::int64_t v)
      : value_(static_cast<std::uint8_t>(((v % static_cast<std::int64_t>(M)) + M) % M)) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Residue operator+(Residue a, Residue b) {
    return Residue(static_cast<std::int64_t>(a.value_) + b.value_);
  }
  friend constexpr Residue operator-(Residue a, Residue b) {
    return Residue(static_cast<std::int64_t>(a.value_) - b.value_);
  }
  friend constexpr Residue operator*(Residue a, Residue b) {
    return Residue(static_cast<std::int64_t>(a.value_) * b.value_);
  }
  constexpr Residue& operator+=(Residue o) { return *this = *this + o; }
  constexpr Residue& operator*=(Residue o) { return *this = *this * o; }

  friend constexpr bool operator==(Residue, Residue) = default;

  friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value(); }

private:
  std::uint8_t value_ = 0;
};

using Residue9 = Residue<9>;
using Residue3 = Residue<3>;

/// Canonical projection Z/9Z -> Z/3Z.
constexpr Residue3 to_mod3(Residue9 r) { return Residue3(static_cast<std::int64_t>(r.value())); }

}  // namespace apery9
