#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apery9/base3.hpp"
#include "apery9/condition.hpp"
#include "apery9/params.hpp"
#include "apery9/residue.hpp"

namespace apery9::classifier {

/// One "a_n = residue (mod 9) iff condition" item of a rule.
struct RuleItem {
  unsigned residue;
  Condition condition;
};

/// Explicit digit-pattern description of a_n(r,s) mod 9 for one family of
/// parameter classes. Evaluation returns the residue of the first matching
/// item, or 0 when none matches.
struct ClassRule {
  std::string id;                 // "Ap00" ... "Ap50"
  std::string hypothesis;         // human-readable (r, s) hypothesis
  Condition applies;              // over quantities r and s
  std::vector<RuleItem> items;
  std::vector<unsigned> forbidden;  // residues never attained

  bool matches(const AperyParams& p) const;
  Residue9 evaluate(const Base3Expansion& e, const DigitStats& stats) const;
  /// Indices of every item whose condition holds (for partition checks).
  std::vector<std::size_t> matching_items(const Base3Expansion& e, const DigitStats& stats) const;
};

/// (r, s) = (1, 0): a_n(1,0) = 2^n is deliberately not classified.
class TrivialSequence : public std::domain_error {
public:
  TrivialSequence();
};

/// (r, s) outside every rule's hypothesis.
class UnsupportedClass : public std::domain_error {
public:
  explicit UnsupportedClass(const AperyParams& p);
};

/// The immutable rule table: 32 rule ids, one of which (Ap02) has two branches.
std::span<const ClassRule> rules();

/// The unique rule whose hypothesis holds for p.
const ClassRule& classify_params(const AperyParams& p);

/// a_n(r,s) mod 9 predicted from digit statistics alone.
Residue9 residue_by_pattern(const Base3Expansion& e, const AperyParams& p);

/// Test representatives of one rule: its smallest (r, s) with r, s <= 12, then
/// the first of the shifts (r+6, s+6), (r+6, s), (r, s+6) still covered by it.
std::vector<AperyParams> representatives(const ClassRule& rule);

struct ClassSummary {
  std::string id;
  std::string hypothesis;
};
std::vector<ClassSummary> supported_classes();

/// JSON object for one rule: {"rule_id", "hypothesis", "predicate", "items", "forbidden"}.
std::string rule_to_json(const ClassRule& rule);
/// JSON array of every rule.
std::string rules_to_json(int indent = -1);

}  // namespace apery9::classifier
