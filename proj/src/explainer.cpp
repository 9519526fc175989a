#include "aspdbg/explainer.hpp"

#include <algorithm>

#include "aspdbg/semantics.hpp"

namespace aspdbg {

std::string_view verdict_name(Verdict v) {
  return v == Verdict::IsAnswerSet ? "is-answer-set" : "not-answer-set";
}

std::vector<UnsatisfiedFinding> find_unsatisfied(const Program& program,
                                                 const GroundProgram& grounded,
                                                 const Interpretation& interpretation,
                                                 bool first) {
  std::vector<UnsatisfiedFinding> out;
  for (const auto& r : grounded.rules) {
    if (satisfies_rule(interpretation, r)) continue;
    out.push_back(UnsatisfiedFinding{r.rule_index, r.theta, r, program[r.rule_index].span()});
    if (first) break;
  }
  return out;
}

std::vector<UnsatisfiedFinding> find_unsatisfied(const Program& program,
                                                 const Interpretation& interpretation) {
  return find_unsatisfied(program, ground(program), interpretation);
}

namespace {

std::vector<LiteralDiagnostics> diagnose(const LiteralSet& loop, const GroundProgram& grounded,
                                         const Interpretation& interpretation) {
  std::vector<LiteralDiagnostics> out;
  for (const auto& l : loop) {
    LiteralDiagnostics d{l, {}};
    for (const auto& r : grounded.rules) {
      if (std::find(r.head.begin(), r.head.end(), l) == r.head.end()) continue;
      d.blocked.push_back(BlockedRule{r.rule_index, r.theta, r,
                                      violated_conditions(r, loop, interpretation)});
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool contains_all(const LiteralSet& outer, const LiteralSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

std::vector<UnfoundedLoopFinding> find_unfounded_loops(const GroundProgram& grounded,
                                                       const Interpretation& interpretation,
                                                       const ExplainOptions& options) {
  DepGraph graph = dep_graph(grounded, interpretation);
  std::vector<UnfoundedLoopFinding> out;
  // Loops come ordered by size, so a minimal loop is seen before its supersets.
  for (auto& loop : loops_within(interpretation, graph, options.loop_cap, options.max_component)) {
    if (options.minimal_loops &&
        std::any_of(out.begin(), out.end(), [&](const UnfoundedLoopFinding& f) {
          return contains_all(loop.literals, f.loop.literals);
        })) {
      continue;
    }
    if (!unfounded(loop.literals, grounded, interpretation)) continue;
    auto diagnostics = diagnose(loop.literals, grounded, interpretation);
    out.push_back(UnfoundedLoopFinding{std::move(loop), std::move(diagnostics)});
    if (options.first) break;
  }
  return out;
}

std::vector<UnfoundedLoopFinding> find_unfounded_loops(const Program& program,
                                                       const Interpretation& interpretation,
                                                       bool minimal_only) {
  ExplainOptions options;
  options.minimal_loops = minimal_only;
  return find_unfounded_loops(ground(program), interpretation, options);
}

Explanation explain(const Program& program, const Interpretation& interpretation,
                    const ExplainOptions& options) {
  GroundProgram grounded = ground(program, options.grounding);
  Explanation e;
  e.unsatisfied = find_unsatisfied(program, grounded, interpretation, options.first);
  e.unfounded_loops = find_unfounded_loops(grounded, interpretation, options);
  e.verdict = e.unsatisfied.empty() && e.unfounded_loops.empty() ? Verdict::IsAnswerSet
                                                                  : Verdict::NotAnswerSet;
  return e;
}

}  // namespace aspdbg
