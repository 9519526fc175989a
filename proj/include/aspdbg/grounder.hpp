#pragma once

// Herbrand instantiation of non-ground programs.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "aspdbg/core.hpp"

namespace aspdbg {

/// A ground, builtin-free rule instance with its provenance.
struct GroundRule {
  std::size_t rule_index = 0;  // position of the source rule (0-based)
  Substitution theta;
  std::vector<Literal> head;
  std::vector<Literal> pos;
  std::vector<Literal> neg;

  /// The instance as an object-language rule (without source span).
  Rule to_rule() const;
  std::string str() const { return to_rule().str(); }

  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

struct GroundProgram {
  std::vector<GroundRule> rules;

  std::size_t size() const noexcept { return rules.size(); }
  /// Every literal occurring in some rule, ordered.
  LiteralSet literals() const;
  /// The rules as a variable-free object-language program.
  Program to_program() const;
};

struct GroundingOptions {
  /// Upper bound on the number of candidate substitutions per program.
  std::size_t max_candidates = 20'000'000;
};

/// Constants occurring in P, ordered.
std::vector<Constant> herbrand_universe(const Program& program);

/// Value of a ground term: nullopt if an arithmetic operand is not a number
/// (or the result overflows). Throws Error(NonGround) for variables.
std::optional<Constant> evaluate(const Term& term);

/// Truth of a ground comparison. Arithmetic over non-numbers evaluates false.
bool eval_builtin(const Builtin& builtin);

/// Calls visit(theta) for every substitution of `vars` over `universe`, in
/// lexicographic order (first variable slowest).
void for_each_substitution(const std::vector<std::string>& vars,
                           const std::vector<Constant>& universe,
                           const std::function<void(const Substitution&)>& visit);

/// Instantiate rule `index` of P with theta; nullopt if a builtin is false.
std::optional<GroundRule> instantiate(const Program& program, std::size_t index,
                                      const Substitution& theta);

/// ground(P): one instance per (rule, theta) over the Herbrand universe whose
/// builtins all hold, with builtins removed. Ordered by rule index, then by
/// the value tuple in first-occurrence variable order. Throws BudgetExceeded
/// past options.max_candidates.
GroundProgram ground(const Program& program, const GroundingOptions& options = {});

}  // namespace aspdbg
