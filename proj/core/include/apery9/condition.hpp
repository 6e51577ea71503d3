#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apery9/base3.hpp"

namespace apery9 {

/// A small boolean language over integer quantities, used to state the
/// parameter hypotheses and digit-pattern items of the residue rules.
///
///   expr    := clause ('|' clause)*
///   clause  := atom ('&' atom)*
///   atom    := linear ('==' | '>=') integer ['mod' integer]
///   linear  := ['-'] term (('+' | '-') term)*
///   term    := [integer ['*']] quantity
///   quantity:= identifier | '#' ['^'] digits ['$']
///
/// `#01` counts the msd-first string "01"; `#^01` also admits a virtual 0
/// above the leading digit and `#01$` a virtual 0 below the last digit.
/// `x == c mod k` tests x = c (mod k) with a nonnegative remainder.
class Condition {
public:
  struct Quantity {
    std::string name;        // identifier, empty for patterns
    std::string pattern;     // msd-first digits, empty for identifiers
    Boundary boundary = Boundary::None;

    bool is_pattern() const { return !pattern.empty(); }
    std::string to_string() const;
  };

  struct Term {
    std::int64_t coefficient;
    Quantity quantity;
  };

  enum class Relation : std::uint8_t { Equal, AtLeast };

  struct Atom {
    std::vector<Term> terms;
    Relation relation = Relation::Equal;
    std::int64_t rhs = 0;
    std::int64_t modulus = 0;  // 0 means exact comparison
  };

  using Clause = std::vector<Atom>;
  using Resolver = std::function<std::int64_t(const Quantity&)>;

  /// Throws std::invalid_argument with the offending position on a syntax error.
  static Condition parse(std::string_view text);

  bool evaluate(const Resolver& resolve) const;

  const std::string& text() const { return text_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Every distinct quantity mentioned, in first-use order.
  std::vector<Quantity> quantities() const;

private:
  std::string text_;
  std::vector<Clause> clauses_;
};

/// Resolves digit quantities of an expansion. Identifiers: zeros, ones, twos,
/// runs0, runs1, runs2, digitsum, wsum (ones - 2 twos), half_ones
/// (floor(ones / 2)), n0 (lowest digit), len. Patterns of any length are
/// counted on the expansion with the requested boundary.
Condition::Resolver digit_resolver(const Base3Expansion& e, const DigitStats& stats);

/// Resolves `r` and `s`.
Condition::Resolver param_resolver(std::int64_t r, std::int64_t s);

}  // namespace apery9
