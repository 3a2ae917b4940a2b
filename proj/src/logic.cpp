#include "etr/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "etr/error.hpp"

namespace etr {

Atom::Atom(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw Error("atom id must be non-empty");
}

Literal Pos(std::string id) { return {Atom(std::move(id)), true}; }
Literal Neg(std::string id) { return {Atom(std::move(id)), false}; }

namespace {

void Normalize(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

// Sorted by atom first, so a clash is two adjacent entries on one atom.
bool HasClash(const std::vector<Literal>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].atom == sorted[i - 1].atom) return true;
  return false;
}

}  // namespace

State::State(std::vector<Literal> literals) : literals_(std::move(literals)) {
  Normalize(literals_);
  if (HasClash(literals_)) throw Error("inconsistent state " + ToString(*this));
}

std::optional<State> State::TryMake(std::vector<Literal> literals) {
  Normalize(literals);
  if (HasClash(literals)) return std::nullopt;
  State s;
  s.literals_ = std::move(literals);
  return s;
}

bool State::Contains(const Literal& l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool State::ContainsAll(const State& other) const {
  return std::includes(literals_.begin(), literals_.end(), other.literals_.begin(),
                       other.literals_.end());
}

bool State::Mentions(const Atom& a) const {
  return Contains({a, true}) || Contains({a, false});
}

std::size_t State::Overlap(const State& other) const {
  return Intersection(other).size();
}

std::optional<State> State::Union(const State& other) const {
  std::vector<Literal> out;
  out.reserve(literals_.size() + other.literals_.size());
  std::set_union(literals_.begin(), literals_.end(), other.literals_.begin(), other.literals_.end(),
                 std::back_inserter(out));
  if (HasClash(out)) return std::nullopt;
  State s;
  s.literals_ = std::move(out);
  return s;
}

State State::Intersection(const State& other) const {
  State s;
  std::set_intersection(literals_.begin(), literals_.end(), other.literals_.begin(),
                        other.literals_.end(), std::back_inserter(s.literals_));
  return s;
}

State State::Minus(const State& other) const {
  State s;
  std::set_difference(literals_.begin(), literals_.end(), other.literals_.begin(),
                      other.literals_.end(), std::back_inserter(s.literals_));
  return s;
}

Question::Question(std::vector<State> alternatives) : alternatives_(std::move(alternatives)) {
  std::sort(alternatives_.begin(), alternatives_.end());
  alternatives_.erase(std::unique(alternatives_.begin(), alternatives_.end()),
                      alternatives_.end());
  if (alternatives_.empty()) throw AbsurdityError("question has no consistent alternative");
}

std::vector<Atom> Question::Atoms() const {
  std::set<Atom> atoms;
  for (const State& s : alternatives_)
    for (const Literal& l : s.literals()) atoms.insert(l.atom);
  return {atoms.begin(), atoms.end()};
}

std::vector<Atom> AtomsOf(const Expr& e) {
  std::vector<Atom> out;
  auto add = [&](const Conj& c) {
    for (const Literal& l : c.literals)
      if (std::find(out.begin(), out.end(), l.atom) == out.end()) out.push_back(l.atom);
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Conj>) {
          add(x);
        } else if constexpr (std::is_same_v<T, Disj>) {
          for (const Conj& c : x.disjuncts) add(c);
        } else {
          add(x.antecedent);
          add(x.consequent);
        }
      },
      e);
  return out;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || c == '-' || c == '@' || u >= 0x80))
      return false;
  }
  return true;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr ParseTop() {
    SkipSpace();
    if (PeekKeyword("if")) {
      pos_ += 2;
      Conj ante = ParseConjunction(false);
      SkipSpace();
      if (!PeekKeyword("then")) Fail("expected 'then'");
      pos_ += 4;
      Conj cons = ParseConjunction(false);
      ExpectEnd();
      return Cond{std::move(ante), std::move(cons)};
    }
    std::vector<Conj> parts;
    parts.push_back(ParseConjunction(true));
    SkipSpace();
    while (Peek() == '|') {
      ++pos_;
      parts.push_back(ParseConjunction(true));
      SkipSpace();
    }
    ExpectEnd();
    if (parts.size() == 1) return std::move(parts.front());
    return Disj{std::move(parts)};
  }

  Conj ParseOnlyConj() {
    Conj c = ParseConjunction(false);
    ExpectEnd();
    return c;
  }

 private:
  Conj ParseConjunction(bool allow_parens) {
    SkipSpace();
    bool parens = false;
    if (Peek() == '(') {
      if (!allow_parens) Fail("unexpected '('");
      parens = true;
      ++pos_;
    }
    Conj c;
    c.literals.push_back(ParseLiteral());
    SkipSpace();
    while (Peek() == '&') {
      ++pos_;
      c.literals.push_back(ParseLiteral());
      SkipSpace();
    }
    if (parens) {
      if (Peek() != ')') Fail("expected ')'");
      ++pos_;
    }
    for (std::size_t i = 0; i < c.literals.size(); ++i)
      for (std::size_t j = i + 1; j < c.literals.size(); ++j)
        if (c.literals[i].atom == c.literals[j].atom &&
            c.literals[i].positive != c.literals[j].positive)
          Fail("inconsistent conjunction: " + c.literals[i].atom.id() + " and ~" +
               c.literals[i].atom.id());
    return c;
  }

  Literal ParseLiteral() {
    SkipSpace();
    bool positive = true;
    if (Peek() == '~') {
      positive = false;
      ++pos_;
      SkipSpace();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    if (start == pos_) Fail(pos_ < text_.size() ? std::string("unexpected '") + text_[pos_] + "'"
                                                : "unexpected end of expression");
    std::string id(text_.substr(start, pos_ - start));
    if (id == "if" || id == "then") {
      pos_ = start;
      Fail("keyword '" + id + "' used as atom");
    }
    return {Atom(std::move(id)), positive};
  }

  static bool IsIdentChar(char c) {
    return IsIdentifier(std::string_view(&c, 1));
  }

  bool PeekKeyword(std::string_view kw) const {
    if (text_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t end = pos_ + kw.size();
    return end >= text_.size() || !IsIdentChar(text_[end]);
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void ExpectEnd() {
    SkipSpace();
    if (pos_ != text_.size()) Fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  [[noreturn]] void Fail(const std::string& msg) const { throw SyntaxError(msg, 0, pos_ + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr ParseExpr(std::string_view text) { return ExprParser(text).ParseTop(); }
Conj ParseConj(std::string_view text) { return ExprParser(text).ParseOnlyConj(); }

std::string ToDsl(const Literal& l) { return (l.positive ? "" : "~") + l.atom.id(); }

std::string ToDsl(const Conj& c) {
  std::string out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += " & ";
    out += ToDsl(c.literals[i]);
  }
  return out;
}

std::string ToDsl(const State& s) { return ToDsl(Conj{s.literals()}); }

std::string ToDsl(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Conj>) {
          return ToDsl(x);
        } else if constexpr (std::is_same_v<T, Disj>) {
          std::string out;
          for (std::size_t i = 0; i < x.disjuncts.size(); ++i) {
            if (i) out += " | ";
            const bool wrap = x.disjuncts[i].literals.size() > 1;
            out += wrap ? "(" + ToDsl(x.disjuncts[i]) + ")" : ToDsl(x.disjuncts[i]);
          }
          return out;
        } else {
          return "if " + ToDsl(x.antecedent) + " then " + ToDsl(x.consequent);
        }
      },
      e);
}

std::string ToString(const Literal& l) { return ToDsl(l); }

std::string ToString(const State& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.literals().size(); ++i) {
    if (i) out += ", ";
    out += ToString(s.literals()[i]);
  }
  return out + "}";
}

std::string ToString(const Question& q) {
  std::string out = "{";
  for (std::size_t i = 0; i < q.alternatives().size(); ++i) {
    if (i) out += ", ";
    out += ToString(q.alternatives()[i]);
  }
  return out + "}";
}

}  // namespace etr
