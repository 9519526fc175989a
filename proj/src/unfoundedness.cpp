#include "aspdbg/unfoundedness.hpp"

#include <algorithm>

namespace aspdbg {

std::string_view roman(SupportCondition c) {
  switch (c) {
    case SupportCondition::BodyTrue: return "i";
    case SupportCondition::HeadMeetsSet: return "ii";
    case SupportCondition::OtherHeadsFalse: return "iii";
    case SupportCondition::External: return "iv";
  }
  return "?";
}

std::vector<SupportCondition> violated_conditions(const GroundRule& rule, const LiteralSet& set,
                                                  const Interpretation& interpretation) {
  auto in_i = [&](const Literal& l) { return interpretation.contains(l); };
  auto in_j = [&](const Literal& l) { return set.count(l) != 0; };
  std::vector<SupportCondition> out;
  if (!std::all_of(rule.pos.begin(), rule.pos.end(), in_i) ||
      std::any_of(rule.neg.begin(), rule.neg.end(), in_i)) {
    out.push_back(SupportCondition::BodyTrue);
  }
  if (!std::any_of(rule.head.begin(), rule.head.end(), in_j)) {
    out.push_back(SupportCondition::HeadMeetsSet);
  }
  if (std::any_of(rule.head.begin(), rule.head.end(),
                  [&](const Literal& h) { return !in_j(h) && in_i(h); })) {
    out.push_back(SupportCondition::OtherHeadsFalse);
  }
  if (std::any_of(rule.pos.begin(), rule.pos.end(), in_j)) {
    out.push_back(SupportCondition::External);
  }
  return out;
}

std::vector<SupportWitness> all_external_supports(const LiteralSet& set,
                                                  const GroundProgram& program,
                                                  const Interpretation& interpretation) {
  std::vector<SupportWitness> out;
  for (const auto& r : program.rules) {
    if (violated_conditions(r, set, interpretation).empty()) {
      out.push_back(SupportWitness{r.rule_index, r.theta, r});
    }
  }
  return out;
}

std::optional<SupportWitness> externally_supported(const LiteralSet& set,
                                                   const GroundProgram& program,
                                                   const Interpretation& interpretation) {
  for (const auto& r : program.rules) {
    if (violated_conditions(r, set, interpretation).empty()) {
      return SupportWitness{r.rule_index, r.theta, r};
    }
  }
  return std::nullopt;
}

bool unfounded(const LiteralSet& set, const GroundProgram& program,
               const Interpretation& interpretation) {
  return !externally_supported(set, program, interpretation).has_value();
}

}  // namespace aspdbg
