#include "apery9/classifier.hpp"

#include <algorithm>
#include <initializer_list>

#include "json.hpp"

namespace apery9::classifier {

namespace {

struct ItemSpec {
  unsigned residue;
  const char* condition;
};

ClassRule make(const char* id, const char* hypothesis, const char* applies, std::initializer_list<ItemSpec> items,
               std::initializer_list<unsigned> forbidden) {
  ClassRule rule{id, hypothesis, Condition::parse(applies), {}, forbidden};
  for (const auto& it : items) rule.items.push_back({it.residue, Condition::parse(it.condition)});
  return rule;
}

// Residue tables indexed by a linear statistic. Each expands to six items
// split by the parity of the number of digits 1.
#define PARITY_TABLE(stat, e0, e1, e2, o0, o1, o2)                                  \
  {e0, "ones==0 mod 2 & " stat "==0 mod 3"}, {e1, "ones==0 mod 2 & " stat "==1 mod 3"}, \
      {e2, "ones==0 mod 2 & " stat "==2 mod 3"}, {o0, "ones==1 mod 2 & " stat "==0 mod 3"}, \
      {o1, "ones==1 mod 2 & " stat "==1 mod 3"}, {o2, "ones==1 mod 2 & " stat "==2 mod 3"}

#define MOD6_TABLE(prefix, stat) \
  {1, prefix stat "==0 mod 6"}, {2, prefix stat "==1 mod 6"}, {4, prefix stat "==2 mod 6"}, \
      {5, prefix stat "==5 mod 6"}, {7, prefix stat "==4 mod 6"}, {8, prefix stat "==3 mod 6"}

#define NO_ONES_TABLE(stat) \
  {1, "ones==0 & " stat "==0 mod 3"}, {4, "ones==0 & " stat "==1 mod 3"}, {7, "ones==0 & " stat "==2 mod 3"}

std::vector<ClassRule> build_rules() {
  std::vector<ClassRule> out;
  out.push_back(make("Ap00", "r≡0 (mod 3), s≡0 (mod 6), s≥6", "r==0 mod 3 & s==0 mod 6 & s>=6",
                     {MOD6_TABLE("", "ones")}, {3, 6}));
  out.push_back(make("Ap01", "r≡0 (mod 6), s≡1 (mod 6); or r≡3 (mod 6), s≡1 (mod 6), s≥7",
                     "r==0 mod 6 & s==1 mod 6 | r==3 mod 6 & s==1 mod 6 & s>=7",
                     {{1, "ones==0"}, {3, "ones==1 & #^01==1 | ones==2 & #11==1"}}, {2, 4, 5, 6, 7, 8}));
  out.push_back(make("Ap02", "r≡0 (mod 3), s≡2 (mod 6)", "r==0 mod 3 & s==2 mod 6",
                     {PARITY_TABLE("half_ones + #11 - #21", 1, 7, 4, 5, 8, 2)}, {3, 6}));
  // Second branch of the same rule: the pair counts enter with the opposite sign.
  out.push_back(make("Ap02", "r≡1 (mod 3), r≥4, s≡2 (mod 6)", "r==1 mod 3 & r>=4 & s==2 mod 6",
                     {PARITY_TABLE("half_ones - #11 + #21", 1, 7, 4, 5, 8, 2)}, {3, 6}));
  out.push_back(make("Ap03", "r≡0 (mod 3), s≡3 (mod 6)", "r==0 mod 3 & s==3 mod 6", {{1, "ones==0"}},
                     {2, 3, 4, 5, 6, 7, 8}));
  out.push_back(make("Ap04", "r≡0 (mod 3), s≡4 (mod 6)", "r==0 mod 3 & s==4 mod 6",
                     {PARITY_TABLE("#11 - #21", 1, 4, 7, 8, 5, 2)}, {3, 6}));
  out.push_back(make("Ap05", "r≡0 (mod 6), s≡5 (mod 6)", "r==0 mod 6 & s==5 mod 6",
                     {{1, "ones==0"}, {6, "ones==1 & #^01==1 | ones==2 & #11==1"}}, {2, 3, 4, 5, 7, 8}));
  out.push_back(make("Ap16", "r=1, s≡0 (mod 6), s≥6", "r==1 & s==0 mod 6 & s>=6",
                     {PARITY_TABLE("half_ones - #11 + #21 + #10 + #20", 1, 4, 7, 2, 8, 5)}, {3, 6}));
  out.push_back(make("Ap11", "r=s=1", "r==1 & s==1",
                     {{1, "ones==0 & runs2 - n0==0 mod 3"},
                      {3, "n0==1 & ones==1"},
                      {4, "ones==0 & runs2 - n0==2 mod 3"},
                      {6, "ones==2 & #11==1"},
                      {7, "ones==0 & runs2 - n0==1 mod 3"}},
                     {2, 5, 8}));
  out.push_back(make("Ap17", "r=1, s≡1 (mod 6), s≥7", "r==1 & s==1 mod 6 & s>=7",
                     {NO_ONES_TABLE("#20"), {3, "ones==1 & #10==0"}, {6, "ones==2 & #11==1"}}, {2, 5, 8}));
  out.push_back(make("Ap12", "r=1, s≡2 (mod 6)", "r==1 & s==2 mod 6",
                     {PARITY_TABLE("half_ones - #11 + #21 - #10 - #20", 1, 7, 4, 5, 8, 2)}, {3, 6}));
  out.push_back(make("Ap13", "r=1, s≡3 (mod 6)", "r==1 & s==3 mod 6",
                     {NO_ONES_TABLE("#20"),
                      {3, "ones==2 & #11==1 | ones==1 & #21==1 & #10==0"},
                      {6, "ones==1 & #10==1 & #21==0"}},
                     {2, 5, 8}));
  out.push_back(make("Ap14", "r=1, s≡4 (mod 6)", "r==1 & s==4 mod 6",
                     {PARITY_TABLE("#10 + #20", 1, 4, 7, 8, 5, 2)}, {3, 6}));
  out.push_back(make("Ap15", "r=1, s≡5 (mod 6)", "r==1 & s==5 mod 6",
                     {NO_ONES_TABLE("#20"), {3, "ones==1 & #10 + #21==1"}, {6, "ones==1 & #10==0 & #21==0"}},
                     {2, 5, 8}));
  out.push_back(make("Ap76", "r≡1 (mod 3), r≥4, s≡0 (mod 6), s≥6", "r==1 mod 3 & r>=4 & s==0 mod 6 & s>=6",
                     {PARITY_TABLE("half_ones - #11 + #21", 1, 4, 7, 2, 8, 5)}, {3, 6}));
  out.push_back(make("Ap71", "r≡1 (mod 6), r≥7, s=1", "r==1 mod 6 & r>=7 & s==1",
                     {NO_ONES_TABLE("runs2"), {3, "ones==1 & #12==0"}, {6, "ones==2 & #11==1"}}, {2, 5, 8}));
  out.push_back(make("Ap77", "r,s≡1 (mod 6), r,s≥7; or r≡4 (mod 6), s≡1 (mod 6)",
                     "r==1 mod 6 & s==1 mod 6 & r>=7 & s>=7 | r==4 mod 6 & s==1 mod 6",
                     {{1, "ones==0"}, {3, "ones==1"}, {6, "ones==2 & #11==1"}}, {2, 4, 5, 7, 8}));
  out.push_back(make("Ap73", "r≡1 (mod 3), r≥4, s≡3 (mod 6)", "r==1 mod 3 & r>=4 & s==3 mod 6",
                     {{1, "ones==0"}, {3, "ones==2 & #11==1 | ones==1 & #21==1"}}, {2, 4, 5, 6, 7, 8}));
  out.push_back(make("Ap74", "r≡1 (mod 3), r≥4, s≡4 (mod 6)", "r==1 mod 3 & r>=4 & s==4 mod 6",
                     {{1, "ones==0 mod 2"}, {8, "ones==1 mod 2"}}, {2, 3, 4, 5, 6, 7}));
  out.push_back(make("Ap75", "r≡1 (mod 3), r≥4, s≡5 (mod 6)", "r==1 mod 3 & r>=4 & s==5 mod 6",
                     {{1, "ones==0"}, {3, "ones==1 & #21==1"}, {6, "ones==1 & #^01==1"}}, {2, 4, 5, 7, 8}));
  out.push_back(make("Ap26", "r≡2 (mod 3), s≡0 (mod 6), s≥6", "r==2 mod 3 & s==0 mod 6 & s>=6",
                     {PARITY_TABLE("half_ones + #11 - #21", 1, 4, 7, 2, 8, 5)}, {3, 6}));
  out.push_back(make("Ap27", "r≡2 (mod 6), s≡1 (mod 6); or r≡5 (mod 6), s≡1 (mod 6), s≥7",
                     "r==2 mod 6 & s==1 mod 6 | r==5 mod 6 & s==1 mod 6 & s>=7",
                     {{1, "ones==0"}, {3, "ones==1 & #^01==1"}, {6, "ones==1 & #21==1"}}, {2, 4, 5, 7, 8}));
  out.push_back(make("Ap22", "r≡2 (mod 3), s≡2 (mod 6)", "r==2 mod 3 & s==2 mod 6",
                     {{1, "ones==0 mod 6"},
                      {2, "ones==5 mod 6"},
                      {4, "ones==4 mod 6"},
                      {5, "ones==1 mod 6"},
                      {7, "ones==2 mod 6"},
                      {8, "ones==3 mod 6"}},
                     {3, 6}));
  out.push_back(make("Ap23", "r≡2 (mod 3), s≡3 (mod 6)", "r==2 mod 3 & s==3 mod 6",
                     {{1, "ones==0"}, {6, "ones==2 & #11==1 | ones==1 & #21==1"}}, {2, 3, 4, 5, 7, 8}));
  out.push_back(make("Ap24", "r≡2 (mod 6), s≡4 (mod 6)", "r==2 mod 6 & s==4 mod 6",
                     {PARITY_TABLE("#11 - #21", 1, 7, 4, 8, 2, 5)}, {3, 6}));
  out.push_back(make("Ap25", "r≡2 (mod 3), s≡5 (mod 6), r,s>1", "r==2 mod 3 & s==5 mod 6 & r>=2 & s>=2",
                     {{1, "ones==0"}, {3, "ones==2 & #11==1"}, {6, "ones==1"}}, {2, 4, 5, 7, 8}));
  out.push_back(make("Ap31", "r≡3 (mod 6), s=1", "r==3 mod 6 & s==1",
                     {NO_ONES_TABLE("runs2"),
                      {3, "ones==1 & #12==0 & #21==0 | ones==2 & #11==1"},
                      {6, "ones==1 & #212==1"}},
                     {2, 5, 8}));
  out.push_back(make("Ap51", "r≡5 (mod 6), s=1", "r==5 mod 6 & s==1",
                     {NO_ONES_TABLE("runs2"),
                      {3, "ones==1 & #^012==0 & #210$==0"},
                      {6, "ones==1 & #210$==1"}},
                     {2, 5, 8}));
  out.push_back(make("Ap70", "r≡1 (mod 6), r≥7, s=0", "r==1 mod 6 & r>=7 & s==0",
                     {MOD6_TABLE("", "digitsum - 2*#11 + 2*#21 + 2*#12 - 2*#22")}, {3, 6}));
  out.push_back(make("Ap20", "r≡2 (mod 6), s=0", "r==2 mod 6 & s==0",
                     {{1, "twos==0 & ones==0 mod 2 & runs1==0 mod 3"},
                      {2, "twos==0 & ones==1 mod 2 & runs1==1 mod 3"},
                      {3, "twos==1 & #^02==1 & ones==1 mod 2"},
                      {4, "twos==0 & ones==0 mod 2 & runs1==2 mod 3"},
                      {5, "twos==0 & ones==1 mod 2 & runs1==2 mod 3"},
                      {6, "twos==1 & #^02==1 & ones==0 mod 2"},
                      {7, "twos==0 & ones==0 mod 2 & runs1==1 mod 3"},
                      {8, "twos==0 & ones==1 mod 2 & runs1==0 mod 3"}},
                     {}));
  out.push_back(make("Ap30", "r≡3 (mod 6), s=0", "r==3 mod 6 & s==0", {MOD6_TABLE("", "ones")}, {3, 6}));
  out.push_back(make("Ap40", "r≡4 (mod 6), s=0", "r==4 mod 6 & s==0",
                     {MOD6_TABLE("twos==0 & ", "2*runs1 - ones"),
                      {3, "twos==1 & #12==1 & ones==1 mod 2"},
                      {6, "twos==1 & #12==1 & ones==0 mod 2"}},
                     {}));
  out.push_back(make("Ap50", "r≡5 (mod 6), s=0", "r==5 mod 6 & s==0",
                     {MOD6_TABLE("", "wsum + 2*#11 - 2*#21 - 2*#12 + 2*#22")}, {3, 6}));
  return out;
}

#undef PARITY_TABLE
#undef MOD6_TABLE
#undef NO_ONES_TABLE

const std::vector<ClassRule>& table() {
  static const std::vector<ClassRule> kRules = build_rules();
  return kRules;
}

std::int64_t clamp_exponent(std::uint64_t v) {
  // Conditions only test residues mod 6 and small thresholds.
  return static_cast<std::int64_t>(v < 1'000'000 ? v : 999'996 + v % 6);
}

}  // namespace

TrivialSequence::TrivialSequence()
    : std::domain_error("a_n(1,0) = 2^n is not covered by the residue classification") {}

UnsupportedClass::UnsupportedClass(const AperyParams& p)
    : std::domain_error("no residue rule covers (r,s) = " + p.to_string()) {}

bool ClassRule::matches(const AperyParams& p) const {
  return applies.evaluate(param_resolver(clamp_exponent(p.r()), clamp_exponent(p.s())));
}

Residue9 ClassRule::evaluate(const Base3Expansion& e, const DigitStats& stats) const {
  const auto resolve = digit_resolver(e, stats);
  for (const auto& item : items)
    if (item.condition.evaluate(resolve)) return Residue9(item.residue);
  return Residue9(0);
}

std::vector<std::size_t> ClassRule::matching_items(const Base3Expansion& e, const DigitStats& stats) const {
  const auto resolve = digit_resolver(e, stats);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].condition.evaluate(resolve)) out.push_back(i);
  return out;
}

std::span<const ClassRule> rules() { return table(); }

const ClassRule& classify_params(const AperyParams& p) {
  if (p.r() == 1 && p.s() == 0) throw TrivialSequence();
  const auto& t = table();
  auto it = std::find_if(t.begin(), t.end(), [&](const ClassRule& rule) { return rule.matches(p); });
  if (it == t.end()) throw UnsupportedClass(p);
  return *it;
}

Residue9 residue_by_pattern(const Base3Expansion& e, const AperyParams& p) {
  return classify_params(p).evaluate(e, digit_stats(e));
}

std::vector<AperyParams> representatives(const ClassRule& rule) {
  std::vector<AperyParams> out;
  for (std::uint64_t r = 1; r <= 12 && out.empty(); ++r)
    for (std::uint64_t s = 0; s <= 12; ++s)
      if (AperyParams p(r, s); rule.matches(p)) {
        out.push_back(p);
        break;
      }
  if (out.empty()) return out;
  for (auto [dr, ds] : {std::pair{6, 6}, std::pair{6, 0}, std::pair{0, 6}})
    if (auto q = out.front().shifted(dr, ds); rule.matches(q)) {
      out.push_back(q);
      break;
    }
  return out;
}

std::vector<ClassSummary> supported_classes() {
  std::vector<ClassSummary> out;
  for (const auto& rule : table()) {
    if (!out.empty() && out.back().id == rule.id) {
      out.back().hypothesis += "; or " + rule.hypothesis;
    } else {
      out.push_back({rule.id, rule.hypothesis});
    }
  }
  return out;
}

namespace {

nlohmann::json to_json(const ClassRule& rule) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : rule.items)
    items.push_back({{"residue", item.residue}, {"condition", item.condition.text()}});
  return {{"rule_id", rule.id},
          {"hypothesis", rule.hypothesis},
          {"predicate", rule.applies.text()},
          {"items", items},
          {"forbidden", rule.forbidden}};
}

}  // namespace

std::string rule_to_json(const ClassRule& rule) { return to_json(rule).dump(); }

std::string rules_to_json(int indent) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rule : table()) out.push_back(to_json(rule));
  return out.dump(indent);
}

}  // namespace apery9::classifier
