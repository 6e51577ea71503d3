#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apery9/base3.hpp"
#include "apery9/params.hpp"
#include "apery9/residue.hpp"

namespace apery9 {

/// b^e mod m by square-and-multiply.
std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint32_t modulus);

/// a_d(r,s) mod 9 for a single digit d, from the closed forms
/// a_0 = 1, a_1 = 1 + 2^s, a_2 = 1 + 2^r 3^s + 6^s.
Residue9 base_value_mod9(std::uint8_t d, const AperyParams& p);

/// Correction term f(n_{v-1}, n_v; r, s) mod 3 for the digit pair with lower
/// digit `lower` = n_{v-1} and higher digit `higher` = n_v.
///
/// For s >= 1 the closed polynomial in the digits, r and s is evaluated over
/// the integers. For s = 0 the Franel-case expression is used with its
/// second product scaled by r (see README, "Franel correction term").
Residue3 f_term(std::uint8_t lower, std::uint8_t higher, const AperyParams& p);

/// The same quantity written with digit indicators (valid for s >= 1).
Residue3 f_term_indicator_form(std::uint8_t lower, std::uint8_t higher, const AperyParams& p);

/// Raised for parameter classes whose reduced expression is not usable.
class UnverifiableCase : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Reduced case-by-case expression of f mod 3, selected by the class of
/// (r, s). Throws UnverifiableCase for the two classes whose printed form
/// is ill-parenthesized: r = 1 with s = 2 (mod 6), and r = 1 (mod 6),
/// r >= 7, s = 1.
Residue3 f_term_reduced(std::uint8_t lower, std::uint8_t higher, const AperyParams& p);

/// Human-readable hypothesis of the reduced case covering p, or throws
/// UnverifiableCase. Mostly for diagnostics.
std::string_view f_term_reduced_case(const AperyParams& p);

/// a_n(r,s) mod 9 in one pass over the digits: the digit product plus three
/// times the sum of f over adjacent pairs, each weighted by the product of
/// the remaining digit values mod 3.
///
/// The span overload accepts non-canonical little-endian digits (most
/// significant zeros are allowed and do not change the result).
Residue9 apery_mod9(const Base3Expansion& e, const AperyParams& p);
Residue9 apery_mod9(std::span<const std::uint8_t> lsd_digits, const AperyParams& p);

/// a_n(r,s) mod 3 as the digit product.
Residue3 apery_mod3(const Base3Expansion& e, const AperyParams& p);

/// Product of a_{n_i}(r,s) mod 9 with no correction.
Residue9 digit_product_mod9(const Base3Expansion& e, const AperyParams& p);

/// Classes where the correction vanishes and a_n is the bare digit product mod 9:
/// r = 2 (mod 3), s = 2 (mod 6); r = s = 0 (mod 3); r = 1 (mod 3), r >= 4, s = 4 (mod 6).
bool is_gessel_class(const AperyParams& p);

}  // namespace apery9
