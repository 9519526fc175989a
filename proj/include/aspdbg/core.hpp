#pragma once

// Object language of non-ground disjunctive programs: constants, terms,
// literals over extended predicate symbols, builtin comparisons, rules,
// programs, interpretations and substitutions.
//
// All values are immutable once built and can be shared freely.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "aspdbg/error.hpp"

namespace aspdbg {

/// A ground constant: a natural number or a symbolic constant.
///
/// Constants are totally ordered: numbers by value, all numbers before all
/// symbols, symbols by byte-wise lexicographic order.
class Constant {
 public:
  Constant() : value_(std::int64_t{0}) {}

  static Constant number(std::int64_t n) { return Constant(n); }
  static Constant symbol(std::string name) { return Constant(std::move(name)); }

  bool is_number() const noexcept { return std::holds_alternative<std::int64_t>(value_); }
  bool is_symbol() const noexcept { return !is_number(); }
  std::int64_t as_number() const { return std::get<std::int64_t>(value_); }
  const std::string& as_symbol() const { return std::get<std::string>(value_); }

  std::string str() const;

  friend bool operator==(const Constant&, const Constant&) = default;
  friend std::strong_ordering operator<=>(const Constant& a, const Constant& b);

 private:
  explicit Constant(std::int64_t n) : value_(n) {}
  explicit Constant(std::string s) : value_(std::move(s)) {}

  std::variant<std::int64_t, std::string> value_;
};

/// The linear order on constants (see Constant).
std::strong_ordering compare(const Constant& a, const Constant& b);

struct Variable {
  std::string name;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

enum class ArithOp { Plus, Times };
enum class CompareOp { Eq, Neq, Leq, Lt, Geq, Gt };

std::string_view symbol(ArithOp op);
std::string_view symbol(CompareOp op);

class Term;

struct ArithExpr {
  ArithOp op;
  std::shared_ptr<const Term> lhs;
  std::shared_ptr<const Term> rhs;
};

/// A constant, a variable, or (inside builtins only) an arithmetic
/// expression over terms.
class Term {
 public:
  Term(Constant c) : value_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Term(Variable v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Term(ArithOp op, Term lhs, Term rhs);

  bool is_constant() const noexcept { return std::holds_alternative<Constant>(value_); }
  bool is_variable() const noexcept { return std::holds_alternative<Variable>(value_); }
  bool is_arith() const noexcept { return std::holds_alternative<ArithExpr>(value_); }

  const Constant& constant() const { return std::get<Constant>(value_); }
  const Variable& variable() const { return std::get<Variable>(value_); }
  const ArithExpr& arith() const { return std::get<ArithExpr>(value_); }

  bool is_ground() const;
  /// Nesting depth of arithmetic; 0 for constants and variables.
  std::size_t arith_depth() const;
  void collect_variables(std::vector<std::string>& out) const;
  void collect_constants(std::set<Constant>& out) const;

  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  std::variant<Constant, Variable, ArithExpr> value_;
};

/// Extended predicate symbol: (name, strong negation, arity).
struct Eps {
  std::string name;
  bool strong_neg = false;
  std::size_t arity = 0;

  std::string str() const;  // "-name/2"

  friend bool operator==(const Eps&, const Eps&) = default;
  friend auto operator<=>(const Eps&, const Eps&) = default;
};

/// A classical literal. Arguments are constants or variables.
class Literal {
 public:
  Literal() = default;
  /// Throws Error(InvalidRule) on arity mismatch or arithmetic arguments.
  Literal(std::string name, bool strong_neg, std::vector<Term> args);

  const Eps& eps() const noexcept { return eps_; }
  const std::vector<Term>& args() const noexcept { return args_; }
  bool is_ground() const;

  std::string str() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);

 private:
  Eps eps_;
  std::vector<Term> args_;
};

using LiteralSet = std::set<Literal>;

struct Builtin {
  Term lhs;
  CompareOp op;
  Term rhs;

  bool is_ground() const { return lhs.is_ground() && rhs.is_ground(); }
  std::string str() const;

  friend bool operator==(const Builtin&, const Builtin&) = default;
};

using BodyAtom = std::variant<Literal, Builtin>;

std::string to_string(const BodyAtom& atom);

/// Byte range [begin, end) in the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// h1 | ... | hl :- b1, ..., bm, not c1, ..., not cn.
class Rule {
 public:
  Rule() = default;
  /// Throws Error(InvalidRule) for an empty rule (no head and no body).
  Rule(std::vector<Literal> head, std::vector<BodyAtom> pos, std::vector<Literal> neg,
       SourceSpan span = {});

  const std::vector<Literal>& head() const noexcept { return head_; }
  const std::vector<BodyAtom>& pos() const noexcept { return pos_; }
  const std::vector<Literal>& neg() const noexcept { return neg_; }
  const SourceSpan& span() const noexcept { return span_; }

  bool is_fact() const noexcept { return head_.size() == 1 && pos_.empty() && neg_.empty(); }
  bool is_constraint() const noexcept { return head_.empty(); }
  bool is_normal() const noexcept { return head_.size() <= 1; }
  bool has_builtins() const;
  bool is_ground() const;

  /// Variables in order of first occurrence (head, positive body, negative body).
  std::vector<std::string> variables() const;
  std::set<Constant> constants() const;

  std::string str() const;

  /// Structural equality; source spans are ignored.
  friend bool operator==(const Rule& a, const Rule& b);

 private:
  std::vector<Literal> head_;
  std::vector<BodyAtom> pos_;
  std::vector<Literal> neg_;
  SourceSpan span_;
};

/// An ordered list of rules. Rule i is referred to as r(i+1) in reports.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  const Rule& operator[](std::size_t i) const { return rules_.at(i); }

  /// Constants occurring anywhere in the program, ordered.
  const std::set<Constant>& constants() const noexcept { return constants_; }
  /// Extended predicate symbols of all classical literals.
  std::set<Eps> predicates() const;
  std::size_t max_arity() const;

  std::string str() const;

  friend bool operator==(const Program& a, const Program& b) { return a.rules_ == b.rules_; }

 private:
  std::vector<Rule> rules_;
  std::set<Constant> constants_;
};

/// A finite consistent set of ground literals.
class Interpretation {
 public:
  Interpretation() = default;
  /// Throws Error(NonGround) or Error(InconsistentInterpretation).
  explicit Interpretation(LiteralSet literals);

  const LiteralSet& literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  bool contains(const Literal& l) const { return literals_.count(l) != 0; }
  std::set<Constant> constants() const;

  std::string str() const;  // "{ a, b(1) }"

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  LiteralSet literals_;
};

/// The same atom with the opposite strong-negation sign.
Literal complement(const Literal& l);
/// True iff the set contains some a together with -a.
bool is_consistent(const LiteralSet& literals);

/// Map from variable names to constants.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Constant> map) : map_(std::move(map)) {}

  void bind(const std::string& var, Constant value) { map_[var] = std::move(value); }
  std::optional<Constant> lookup(const std::string& var) const;
  const std::map<std::string, Constant>& bindings() const noexcept { return map_; }
  bool empty() const noexcept { return map_.empty(); }

  std::string str() const;  // "{M->m2, P->p1}"

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend auto operator<=>(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Constant> map_;
};

/// Apply a substitution. Throws Error(UnboundVariable) if a variable is
/// missing from the substitution.
Term apply(const Term& t, const Substitution& theta);
Literal apply(const Literal& l, const Substitution& theta);
Builtin apply(const Builtin& b, const Substitution& theta);
Rule apply(const Rule& r, const Substitution& theta);

}  // namespace aspdbg
