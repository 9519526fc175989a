#pragma once

// Why is I not an answer set of P? I is an answer set iff I satisfies
// ground(P) and no loop of P inside I is unfounded, so the explanation is
// the list of unsatisfied rule instances plus the list of unfounded loops.

#include <cstddef>
#include <vector>

#include "aspdbg/loops.hpp"
#include "aspdbg/unfoundedness.hpp"

namespace aspdbg {

struct UnsatisfiedFinding {
  std::size_t rule_index = 0;  // 0-based
  Substitution theta;
  GroundRule instance;
  SourceSpan span;
};

/// A ground rule with a loop literal in its head that fails to support the loop.
struct BlockedRule {
  std::size_t rule_index = 0;
  Substitution theta;
  GroundRule instance;
  std::vector<SupportCondition> violated;
};

struct LiteralDiagnostics {
  Literal literal;
  std::vector<BlockedRule> blocked;
};

struct UnfoundedLoopFinding {
  Loop loop;
  /// Derived diagnostics, one entry per loop literal.
  std::vector<LiteralDiagnostics> diagnostics;
};

enum class Verdict { IsAnswerSet, NotAnswerSet };

std::string_view verdict_name(Verdict v);  // "is-answer-set" / "not-answer-set"

struct Explanation {
  Verdict verdict = Verdict::IsAnswerSet;
  std::vector<UnsatisfiedFinding> unsatisfied;
  std::vector<UnfoundedLoopFinding> unfounded_loops;
};

struct ExplainOptions {
  /// Report only subset-minimal unfounded loops.
  bool minimal_loops = false;
  /// Stop after the first finding of each kind.
  bool first = false;
  std::size_t loop_cap = 10'000;
  std::size_t max_component = 20;
  GroundingOptions grounding;
};

std::vector<UnsatisfiedFinding> find_unsatisfied(const Program& program,
                                                 const GroundProgram& grounded,
                                                 const Interpretation& interpretation,
                                                 bool first = false);
std::vector<UnsatisfiedFinding> find_unsatisfied(const Program& program,
                                                 const Interpretation& interpretation);

std::vector<UnfoundedLoopFinding> find_unfounded_loops(const GroundProgram& grounded,
                                                       const Interpretation& interpretation,
                                                       const ExplainOptions& options = {});
std::vector<UnfoundedLoopFinding> find_unfounded_loops(const Program& program,
                                                       const Interpretation& interpretation,
                                                       bool minimal_only = false);

Explanation explain(const Program& program, const Interpretation& interpretation,
                    const ExplainOptions& options = {});

}  // namespace aspdbg
