#pragma once

// Classical satisfaction, the Gelfond-Lifschitz reduct, and a brute-force
// answer-set check and enumerator for desk-scale programs.

#include <cstddef>
#include <vector>

#include "aspdbg/grounder.hpp"

namespace aspdbg {

/// Negation-free ground rules.
struct Reduct {
  std::vector<GroundRule> rules;
};

/// I |= r: if B+(r) is in I and B-(r) misses I, then H(r) meets I.
bool satisfies_rule(const Interpretation& interpretation, const GroundRule& rule);
/// Same for an object-language rule; throws Error(NonGround) unless the rule
/// is ground and builtin-free.
bool satisfies_rule(const Interpretation& interpretation, const Rule& rule);
bool satisfies(const Interpretation& interpretation, const GroundProgram& program);

/// P^I: head <- positive body, for each rule whose negative body misses I.
Reduct reduct(const GroundProgram& program, const Interpretation& interpretation);

struct SolveOptions {
  /// At most 2^max_free_literals candidate subsets are examined per check.
  std::size_t max_free_literals = 20;
  GroundingOptions grounding;
};

/// I is a minimal model of ground(P)^I. Throws BudgetExceeded when the
/// subset search would exceed the cap.
bool is_answer_set(const Program& program, const Interpretation& interpretation,
                   const SolveOptions& options = {});
bool is_answer_set(const GroundProgram& program, const Interpretation& interpretation,
                   const SolveOptions& options = {});

/// Ground literals of ground(P), including the strongly negated ones.
LiteralSet candidate_base(const GroundProgram& program);

/// All answer sets whose literals come from `base` (limit 0 = no limit),
/// sorted. Candidates are narrowed to sets between the consequences of the
/// definite rules and the literals derivable when negation is ignored.
std::vector<Interpretation> enumerate_answer_sets(const GroundProgram& program,
                                                  const LiteralSet& base, std::size_t limit = 0,
                                                  const SolveOptions& options = {});
std::vector<Interpretation> enumerate_answer_sets(const Program& program, std::size_t limit = 0,
                                                  const SolveOptions& options = {});

}  // namespace aspdbg
