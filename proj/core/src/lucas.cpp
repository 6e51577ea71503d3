#include "apery9/lucas.hpp"

#include <algorithm>
#include <vector>

namespace apery9::lucas {

int small_binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  static constexpr int table[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  if (n <= 2) return table[n][k];
  int c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

namespace {

struct Aligned {
  std::vector<int> n;
  std::vector<int> k;
};

Aligned align(const Base3Expansion& n, const Base3Expansion& k) {
  const std::size_t len = std::max(n.size(), k.size());
  Aligned a{std::vector<int>(len, 0), std::vector<int>(len, 0)};
  for (std::size_t i = 0; i < n.size(); ++i) a.n[i] = n.digit(i);
  for (std::size_t i = 0; i < k.size(); ++i) a.k[i] = k.digit(i);
  return a;
}

}  // namespace

Residue3 binom_mod3(const Base3Expansion& n, const Base3Expansion& k) {
  const auto a = align(n, k);
  std::int64_t prod = 1;
  for (std::size_t i = 0; i < a.n.size(); ++i) {
    prod = prod * small_binom(a.n[i], a.k[i]) % 3;
    if (prod == 0) break;
  }
  return Residue3(prod);
}

Residue9 binom_mod9(const Base3Expansion& n, const Base3Expansion& k) {
  const auto a = align(n, k);
  const std::size_t len = a.n.size();

  // prefix[i] = prod_{j<i} C(n_j,k_j), suffix[i] = prod_{j>=i} C(n_j,k_j), both mod 9.
  std::vector<std::int64_t> prefix(len + 1, 1), suffix(len + 1, 1);
  for (std::size_t i = 0; i < len; ++i)
    prefix[i + 1] = prefix[i] * small_binom(a.n[i], a.k[i]) % 9;
  for (std::size_t i = len; i-- > 0;)
    suffix[i] = suffix[i + 1] * small_binom(a.n[i], a.k[i]) % 9;

  std::int64_t correction = 0;
  for (std::size_t v = 1; v < len; ++v) {
    const int nv = a.n[v], kv = a.k[v];
    const int nl = a.n[v - 1], kl = a.k[v - 1];
    if (nv == 0) continue;
    const std::int64_t outer = prefix[v - 1] * suffix[v + 1] % 9;

    std::int64_t inner = 0;
    if (nl == 0) inner += small_binom(1, kl - 1) * small_binom(nv - 1, kv);
    if (nl == 1 && kl == 0) inner += small_binom(nv, kv);
    if (nl == 1) inner -= small_binom(2, kl) * small_binom(nv - 1, kv);
    if (nl == 2 && kl == 1) inner += small_binom(nv, kv);

    correction += 3 * nv * inner * outer;
  }
  return Residue9(prefix[len] + correction);
}

}  // namespace apery9::lucas
