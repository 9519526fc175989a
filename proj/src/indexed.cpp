#include "aspdbg/detail/indexed.hpp"

#include <algorithm>

namespace aspdbg::detail {

IndexedProgram::IndexedProgram(const GroundProgram& program, const LiteralSet& extra) {
  LiteralSet all = program.literals();
  all.insert(extra.begin(), extra.end());
  literals_.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < literals_.size(); ++i) ids_.emplace(literals_[i], static_cast<int>(i));
  rules_.reserve(program.rules.size());
  for (const auto& r : program.rules) {
    IndexedRule ir;
    for (const auto& l : r.head) ir.head.push_back(id(l));
    for (const auto& l : r.pos) ir.pos.push_back(id(l));
    for (const auto& l : r.neg) ir.neg.push_back(id(l));
    rules_.push_back(std::move(ir));
  }
}

int IndexedProgram::id(const Literal& l) const {
  auto it = ids_.find(l);
  return it == ids_.end() ? -1 : it->second;
}

std::vector<char> IndexedProgram::mask(const LiteralSet& set) const {
  std::vector<char> out(literals_.size(), 0);
  for (const auto& l : set) {
    int k = id(l);
    if (k >= 0) out[static_cast<std::size_t>(k)] = 1;
  }
  return out;
}

LiteralSet IndexedProgram::to_set(const std::vector<char>& mask) const {
  LiteralSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.insert(literals_[i]);
  }
  return out;
}

bool satisfies(const IndexedRule& r, const std::vector<char>& in) {
  auto holds = [&](int k) { return in[static_cast<std::size_t>(k)] != 0; };
  if (!std::all_of(r.pos.begin(), r.pos.end(), holds)) return true;
  if (std::any_of(r.neg.begin(), r.neg.end(), holds)) return true;
  return std::any_of(r.head.begin(), r.head.end(), holds);
}

}  // namespace aspdbg::detail
