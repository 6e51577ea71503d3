#include "apery9/condition.hpp"

#include <algorithm>
#include <cctype>

namespace apery9 {

std::string Condition::Quantity::to_string() const {
  if (!is_pattern()) return name;
  std::string out = "#";
  if (boundary == Boundary::PadLeft) out += '^';
  out += pattern;
  if (boundary == Boundary::PadRight) out += '$';
  return out;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Condition::Clause> expr() {
    std::vector<Condition::Clause> out;
    out.push_back(clause());
    while (accept('|')) out.push_back(clause());
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("condition parse error at position " + std::to_string(pos_) + ": " + what +
                                " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_).starts_with(word)) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t integer() {
    if (!at_digit()) fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000'000LL) fail("integer too large");
    }
    return v;
  }

  Condition::Clause clause() {
    Condition::Clause out;
    out.push_back(atom());
    while (accept('&')) out.push_back(atom());
    return out;
  }

  Condition::Atom atom() {
    Condition::Atom a;
    a.terms = linear();
    if (accept("==")) {
      a.relation = Condition::Relation::Equal;
    } else if (accept(">=")) {
      a.relation = Condition::Relation::AtLeast;
    } else {
      fail("expected '==' or '>='");
    }
    const bool negative = accept('-');
    a.rhs = negative ? -integer() : integer();
    if (accept("mod")) {
      a.modulus = integer();
      if (a.modulus < 1) fail("modulus must be positive");
      if (a.relation != Condition::Relation::Equal) fail("'mod' only applies to '=='");
    }
    return a;
  }

  std::vector<Condition::Term> linear() {
    std::vector<Condition::Term> out;
    std::int64_t sign = accept('-') ? -1 : 1;
    out.push_back(term(sign));
    for (;;) {
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
      out.push_back(term(sign));
    }
    return out;
  }

  Condition::Term term(std::int64_t sign) {
    std::int64_t coefficient = 1;
    if (at_digit()) {
      coefficient = integer();
      accept('*');
    }
    return {sign * coefficient, quantity()};
  }

  Condition::Quantity quantity() {
    skip_space();
    Condition::Quantity q;
    if (accept('#')) {
      if (accept('^')) q.boundary = Boundary::PadLeft;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '2') q.pattern += text_[pos_++];
      if (q.pattern.empty()) fail("expected base-3 digits after '#'");
      if (pos_ < text_.size() && text_[pos_] == '$') {
        if (q.boundary != Boundary::None) fail("a pattern takes at most one boundary");
        q.boundary = Boundary::PadRight;
        ++pos_;
      }
      return q;
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      q.name += text_[pos_++];
    if (q.name.empty() || std::isdigit(static_cast<unsigned char>(q.name[0]))) fail("expected a quantity");
    return q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t floor_mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

}  // namespace

Condition Condition::parse(std::string_view text) {
  Condition c;
  c.text_ = std::string(text);
  c.clauses_ = Parser(text).expr();
  return c;
}

bool Condition::evaluate(const Resolver& resolve) const {
  return std::any_of(clauses_.begin(), clauses_.end(), [&](const Clause& clause) {
    return std::all_of(clause.begin(), clause.end(), [&](const Atom& atom) {
      std::int64_t lhs = 0;
      for (const auto& t : atom.terms) lhs += t.coefficient * resolve(t.quantity);
      if (atom.relation == Relation::AtLeast) return lhs >= atom.rhs;
      if (atom.modulus == 0) return lhs == atom.rhs;
      return floor_mod(lhs, atom.modulus) == floor_mod(atom.rhs, atom.modulus);
    });
  });
}

std::vector<Condition::Quantity> Condition::quantities() const {
  std::vector<Quantity> out;
  for (const auto& clause : clauses_)
    for (const auto& atom : clause)
      for (const auto& t : atom.terms) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Quantity& q) {
          return q.name == t.quantity.name && q.pattern == t.quantity.pattern &&
                 q.boundary == t.quantity.boundary;
        });
        if (!seen) out.push_back(t.quantity);
      }
  return out;
}

Condition::Resolver digit_resolver(const Base3Expansion& e, const DigitStats& stats) {
  return [&e, &stats](const Condition::Quantity& q) -> std::int64_t {
    if (q.is_pattern()) {
      if (q.pattern.size() == 2)
        return static_cast<std::int64_t>(
            stats.pairs(static_cast<std::uint8_t>(q.pattern[0] - '0'),
                        static_cast<std::uint8_t>(q.pattern[1] - '0'), q.boundary));
      return static_cast<std::int64_t>(count_pattern(e, q.pattern, q.boundary));
    }
    const auto& n = q.name;
    const auto& c = stats.count_of_digit;
    if (n == "zeros") return static_cast<std::int64_t>(c[0]);
    if (n == "ones") return static_cast<std::int64_t>(c[1]);
    if (n == "twos") return static_cast<std::int64_t>(c[2]);
    if (n == "runs0") return static_cast<std::int64_t>(stats.maximal_runs[0]);
    if (n == "runs1") return static_cast<std::int64_t>(stats.maximal_runs[1]);
    if (n == "runs2") return static_cast<std::int64_t>(stats.maximal_runs[2]);
    if (n == "digitsum") return static_cast<std::int64_t>(stats.digit_sum);
    if (n == "wsum") return stats.weighted_sum;
    if (n == "half_ones") return static_cast<std::int64_t>(c[1] / 2);
    if (n == "n0") return e.digit(0);
    if (n == "len") return static_cast<std::int64_t>(e.size());
    throw std::invalid_argument("unknown digit quantity '" + n + "'");
  };
}

Condition::Resolver param_resolver(std::int64_t r, std::int64_t s) {
  return [r, s](const Condition::Quantity& q) -> std::int64_t {
    if (q.name == "r") return r;
    if (q.name == "s") return s;
    throw std::invalid_argument("unknown parameter quantity '" + q.to_string() + "'");
  };
}

}  // namespace apery9
