#pragma once

// Integer-indexed view of a ground program plus an interpretation, shared by
// the semantic checks. Literal ids follow the literal order.

#include <cstdint>
#include <map>
#include <vector>

#include "aspdbg/grounder.hpp"

namespace aspdbg::detail {

struct IndexedRule {
  std::vector<int> head;
  std::vector<int> pos;
  std::vector<int> neg;
};

class IndexedProgram {
 public:
  IndexedProgram(const GroundProgram& program, const LiteralSet& extra);

  int id(const Literal& l) const;  // -1 if unknown
  const Literal& literal(int id) const { return literals_[static_cast<std::size_t>(id)]; }
  std::size_t literal_count() const noexcept { return literals_.size(); }
  const std::vector<IndexedRule>& rules() const noexcept { return rules_; }

  /// Membership vector for a literal set (literals unknown to the index are ignored).
  std::vector<char> mask(const LiteralSet& set) const;
  LiteralSet to_set(const std::vector<char>& mask) const;

 private:
  std::vector<Literal> literals_;
  std::map<Literal, int> ids_;
  std::vector<IndexedRule> rules_;
};

/// I |= r for an indexed rule, with I given as a membership vector.
bool satisfies(const IndexedRule& r, const std::vector<char>& in);

}  // namespace aspdbg::detail
