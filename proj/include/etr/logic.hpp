// Propositional vocabulary: atoms, literals, states, questions and the
// parsed premise shapes the engine understands.

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace etr {

class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string id);

  const std::string& id() const { return id_; }

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  std::string id_;
};

struct Literal {
  Atom atom;
  bool positive = true;

  Literal Negated() const { return {atom, !positive}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

Literal Pos(std::string id);
Literal Neg(std::string id);

// A consistent set of literals. Stored sorted and deduplicated so that
// structural equality is set equality.
class State {
 public:
  State() = default;
  // Throws etr::Error if some atom occurs with both polarities.
  explicit State(std::vector<Literal> literals);
  State(std::initializer_list<Literal> literals) : State(std::vector<Literal>(literals)) {}

  static std::optional<State> TryMake(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  bool Contains(const Literal& l) const;
  bool ContainsAll(const State& other) const;
  // Whether the atom occurs with either polarity.
  bool Mentions(const Atom& a) const;
  std::size_t Overlap(const State& other) const;

  // Consistent union, or nullopt when the two states clash on some atom.
  std::optional<State> Union(const State& other) const;
  State Intersection(const State& other) const;
  State Minus(const State& other) const;

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<Literal> literals_;
};

// The erotetic state: a non-empty set of pairwise distinct alternatives.
class Question {
 public:
  // Throws AbsurdityError when no alternatives are given.
  explicit Question(std::vector<State> alternatives);
  Question(std::initializer_list<State> alternatives)
      : Question(std::vector<State>(alternatives)) {}

  const std::vector<State>& alternatives() const { return alternatives_; }
  std::size_t size() const { return alternatives_.size(); }

  // Atoms mentioned anywhere, sorted.
  std::vector<Atom> Atoms() const;

  friend bool operator==(const Question&, const Question&) = default;

 private:
  std::vector<State> alternatives_;
};

// Parsed premise shapes.
struct Conj {
  std::vector<Literal> literals;
  friend bool operator==(const Conj&, const Conj&) = default;
};
struct Disj {
  std::vector<Conj> disjuncts;
  friend bool operator==(const Disj&, const Disj&) = default;
};
struct Cond {
  Conj antecedent;
  Conj consequent;
  friend bool operator==(const Cond&, const Cond&) = default;
};
using Expr = std::variant<Conj, Disj, Cond>;

// Atoms of an expression in first-occurrence order.
std::vector<Atom> AtomsOf(const Expr& e);

// Parses the premise expression grammar:
//   expr := disj | cond | conj
//   disj := conj ('|' conj)+       (conjuncts may be parenthesised)
//   cond := 'if' conj 'then' conj
//   conj := literal ('&' literal)*
//   literal := '~'? ident
// Throws SyntaxError with a column relative to `text` (line left 0).
Expr ParseExpr(std::string_view text);
Conj ParseConj(std::string_view text);

// Canonical DSL rendering; ParseExpr(ToDsl(e)) == e.
std::string ToDsl(const Expr& e);
std::string ToDsl(const Conj& c);
std::string ToDsl(const Literal& l);
std::string ToDsl(const State& s);

std::string ToString(const Literal& l);
std::string ToString(const State& s);
std::string ToString(const Question& q);

bool IsIdentifier(std::string_view s);

}  // namespace etr
