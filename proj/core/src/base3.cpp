#include "apery9/base3.hpp"

#include <algorithm>
#include <stdexcept>

namespace apery9 {

std::string_view to_string(Boundary b) {
  switch (b) {
    case Boundary::None: return "none";
    case Boundary::PadLeft: return "pad_left";
    case Boundary::PadRight: return "pad_right";
  }
  return "?";
}

Base3Expansion Base3Expansion::from_lsd_digits(std::vector<std::uint8_t> digits) {
  for (auto d : digits)
    if (d > 2) throw std::invalid_argument("base-3 digit out of range");
  while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
  if (digits.empty()) digits.push_back(0);
  return Base3Expansion(std::move(digits));
}

Base3Expansion Base3Expansion::from_msd_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty base-3 digit string");
  std::vector<std::uint8_t> digits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[text.size() - 1 - i];
    if (c < '0' || c > '2')
      throw std::invalid_argument("invalid base-3 digit '" + std::string(1, c) + "'");
    digits[i] = static_cast<std::uint8_t>(c - '0');
  }
  return from_lsd_digits(std::move(digits));
}

Base3Expansion Base3Expansion::parse(std::string_view text) {
  if (text.starts_with("3:")) return from_msd_string(text.substr(2));
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("expected a decimal integer or 3:<base-3 digits>, got '" +
                                std::string(text.substr(0, 40)) + "'");
  return to_base3(mpz_class(std::string(text), 10));
}

std::string Base3Expansion::to_msd_string() const {
  std::string out(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i)
    out[digits_.size() - 1 - i] = static_cast<char>('0' + digits_[i]);
  return out;
}

mpz_class Base3Expansion::to_integer() const {
  return mpz_class(to_msd_string(), 3);
}

Base3Expansion to_base3(const mpz_class& n) {
  if (sgn(n) < 0) throw std::invalid_argument("negative integer has no base-3 expansion");
  // GMP's radix conversion is subquadratic, unlike schoolbook repeated division.
  return Base3Expansion::from_msd_string(n.get_str(3));
}

Base3Expansion to_base3(std::uint64_t n) {
  std::vector<std::uint8_t> digits;
  do {
    digits.push_back(static_cast<std::uint8_t>(n % 3));
    n /= 3;
  } while (n != 0);
  return Base3Expansion::from_lsd_digits(std::move(digits));
}

std::size_t count_pattern(std::span<const std::uint8_t> lsd_digits, std::string_view pattern,
                          Boundary boundary) {
  if (pattern.empty()) throw std::invalid_argument("empty digit pattern");
  std::vector<std::uint8_t> pat(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c < '0' || c > '2')
      throw std::invalid_argument("invalid pattern digit '" + std::string(1, c) + "'");
    pat[i] = static_cast<std::uint8_t>(c - '0');
  }

  // Position j in the msd-first text; the pad, if any, is a single 0.
  const std::size_t len = lsd_digits.size();
  const std::size_t pad = boundary == Boundary::None ? 0 : 1;
  const std::size_t text_len = len + pad;
  auto at = [&](std::size_t j) -> std::uint8_t {
    if (boundary == Boundary::PadLeft) {
      if (j == 0) return 0;
      return lsd_digits[len - j];
    }
    if (j == len) return 0;  // PadRight tail or unreachable for None
    return lsd_digits[len - 1 - j];
  };

  if (pat.size() > text_len) return 0;
  std::size_t count = 0;
  for (std::size_t start = 0; start + pat.size() <= text_len; ++start) {
    bool hit = true;
    for (std::size_t q = 0; q < pat.size(); ++q) {
      if (at(start + q) != pat[q]) {
        hit = false;
        break;
      }
    }
    if (hit) ++count;
  }
  return count;
}

DigitStats digit_stats(const Base3Expansion& e) {
  DigitStats st;
  // The placeholder digit of n = 0 forms no runs or pairs.
  if (e.is_zero()) {
    st.count_of_digit[0] = 1;
    return st;
  }
  const auto d = e.digits();
  const std::size_t len = d.size();

  for (auto x : d) {
    ++st.count_of_digit[x];
    st.digit_sum += x;
  }
  st.weighted_sum = static_cast<std::int64_t>(st.count_of_digit[1]) -
                    2 * static_cast<std::int64_t>(st.count_of_digit[2]);

  // Walk msd-first; hi is the more significant digit of each pair.
  for (std::size_t i = len; i-- > 0;) {
    const std::uint8_t cur = d[i];
    if (i + 1 == len || d[i + 1] != cur) ++st.maximal_runs[cur];
    if (i + 1 < len) {
      const std::uint8_t hi = d[i + 1];
      for (std::size_t b = 0; b < 3; ++b) ++st.pair_count[hi][cur][b];
    }
  }
  // Virtual zero above the leading digit, and below n_0.
  ++st.pair_count[0][d[len - 1]][static_cast<std::size_t>(Boundary::PadLeft)];
  ++st.pair_count[d[0]][0][static_cast<std::size_t>(Boundary::PadRight)];
  return st;
}

}  // namespace apery9
