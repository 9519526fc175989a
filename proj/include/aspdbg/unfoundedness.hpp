#pragma once

// External support and unfoundedness of literal sets.
//
// A ground rule r externally supports J with respect to I iff
//   (i)   I satisfies B+(r) and I misses B-(r),
//   (ii)  H(r) meets J,
//   (iii) no literal of H(r) outside J is in I,
//   (iv)  B+(r) misses J.
// J is unfounded iff no rule of ground(P) externally supports it.

#include <optional>
#include <vector>

#include "aspdbg/grounder.hpp"

namespace aspdbg {

enum class SupportCondition {
  BodyTrue = 1,         // (i)
  HeadMeetsSet = 2,     // (ii)
  OtherHeadsFalse = 3,  // (iii)
  External = 4,         // (iv)
};

/// "i", "ii", "iii", "iv".
std::string_view roman(SupportCondition c);

struct SupportWitness {
  std::size_t rule_index = 0;
  Substitution theta;
  GroundRule instance;
};

/// Conditions (i)-(iv) that `rule` violates for J and I; empty iff it
/// externally supports J.
std::vector<SupportCondition> violated_conditions(const GroundRule& rule, const LiteralSet& set,
                                                  const Interpretation& interpretation);

/// The first supporting rule in ground-program order, if any.
std::optional<SupportWitness> externally_supported(const LiteralSet& set,
                                                   const GroundProgram& program,
                                                   const Interpretation& interpretation);
std::vector<SupportWitness> all_external_supports(const LiteralSet& set,
                                                  const GroundProgram& program,
                                                  const Interpretation& interpretation);

bool unfounded(const LiteralSet& set, const GroundProgram& program,
               const Interpretation& interpretation);

}  // namespace aspdbg
