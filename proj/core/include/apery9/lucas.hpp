#pragma once

#include "apery9/base3.hpp"
#include "apery9/residue.hpp"

namespace apery9::lucas {

/// Binomial coefficient with small arguments; 0 when k < 0 or k > n.
int small_binom(int n, int k);

/// C(n,k) mod 3 by Lucas' theorem: the product of digitwise binomials.
/// The shorter expansion is zero-padded; k > n yields 0.
Residue3 binom_mod3(const Base3Expansion& n, const Base3Expansion& k);

/// C(n,k) mod 9 from the base-3 digits of n and k.
///
/// The value is the digitwise Lucas product plus, for every adjacent digit
/// pair (n_{v-1}, n_v), a correction 3 n_v X where X is one of four
/// products of small binomials selected by n_{v-1} and k_{v-1}. The
/// corrections are summed as signed integers and reduced once.
Residue9 binom_mod9(const Base3Expansion& n, const Base3Expansion& k);

}  // namespace apery9::lucas
