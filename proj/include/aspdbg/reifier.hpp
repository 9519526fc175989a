#pragma once

// Reification of a program and an interpretation as ground facts.
//
// Labels: rules r1.. in file order; literals l1.. interned by printed form
// (program literals first, in rule order, then interpretation literals);
// EPSs p_<name> and n_<name> (strongly negated), with a __<arity> suffix
// when one name is used with several arities; variables v_<Name>;
// arithmetic expressions e1..; comparison symbols b_eq, b_neq, b_leq,
// b_lt, b_geq, b_gt. Constants label themselves.
//
// Builtin body atoms are reified like literals over the comparison
// symbols. An argument that is an arithmetic expression is written
// struct(l,i,expr,e) with arith(e,plus|times) and the operands as
// struct(e,1,..) and struct(e,2,..). Support relations are added for the
// comparison and arithmetic symbols actually used:
//   plus(a,b,c), times(a,b,c)  for numeric dom constants a, b
//   cmp(op,x,y)                for x, y in dom plus the arithmetic results
// Nested arithmetic is rejected with Error(Unsupported).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aspdbg/core.hpp"

namespace aspdbg {

struct Fact {
  std::string predicate;
  std::vector<Constant> args;

  std::string str() const;  // "struct(l1,1,const,m1)."

  friend bool operator==(const Fact&, const Fact&) = default;
  friend std::strong_ordering operator<=>(const Fact& a, const Fact& b);
};

/// Facts in canonical order: by predicate, then arguments.
using FactSet = std::vector<Fact>;

enum class LabelKind { Rule, Literal, Eps, Variable, Expression, Comparison };

class LabelTable {
 public:
  /// Builds labels for P and I. Throws Error(LabelCollision) if a constant
  /// of P or I equals a generated label.
  LabelTable(const Program& program, const Interpretation& interpretation);

  const std::string& rule(std::size_t index) const { return rules_.at(index); }
  const std::string& literal(const std::string& printed) const { return literals_.at(printed); }
  const std::string& literal(const Literal& l) const { return literal(l.str()); }
  const std::string& eps(const Eps& e) const { return eps_.at(e); }
  static std::string variable(const std::string& name) { return "v_" + name; }
  static std::string comparison(CompareOp op);

  const std::string& expression(const Term& t) const { return expressions_.at(t.str()); }

  /// Label string -> (kind, printed object). Used for mapping solver output back.
  const std::map<std::string, std::pair<LabelKind, std::string>>& reverse() const noexcept {
    return reverse_;
  }
  /// Label of a literal interned from P or I, or "" if none.
  std::string find_literal(const std::string& printed) const;

 private:
  void add(const std::string& label, LabelKind kind, const std::string& object);

  std::vector<std::string> rules_;
  std::map<std::string, std::string> literals_;
  std::map<Eps, std::string> eps_;
  std::map<std::string, std::string> expressions_;
  std::map<std::string, std::pair<LabelKind, std::string>> reverse_;
};

/// rho(r): the facts of one rule.
FactSet reify_rule(const Program& program, std::size_t index, const LabelTable& labels);
/// pi(P): rule facts, dom and arity.
FactSet reify_program(const Program& program, const LabelTable& labels);
/// lambda(I).
FactSet reify_interpretation(const Interpretation& interpretation, const LabelTable& labels);
/// Delta(P,I) = pi(P) + lambda(I) + natNumber(0..N) + builtin support facts.
FactSet reify_input(const Program& program, const Interpretation& interpretation);

/// N = max(|I|, arities of the EPSs of P).
std::size_t nat_bound(const Program& program, const Interpretation& interpretation);

/// One fact per line.
std::string to_text(const FactSet& facts);

}  // namespace aspdbg
