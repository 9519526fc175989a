#pragma once

// Positive dependency graph and loop enumeration.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "aspdbg/grounder.hpp"

namespace aspdbg {

/// Edge a -> b iff a in H(r) and b in B+(r) for some ground rule r.
class DepGraph {
 public:
  DepGraph() = default;
  DepGraph(std::vector<Literal> vertices, std::set<std::pair<std::size_t, std::size_t>> edges);

  const std::vector<Literal>& vertices() const noexcept { return vertices_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return adjacency_.at(v); }

  /// Index of a vertex, or npos.
  std::size_t find(const Literal& l) const;
  bool has_edge(const Literal& from, const Literal& to) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Literal> vertices_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// A non-empty set of ground literals whose members reach each other
/// through paths inside the set.
struct Loop {
  LiteralSet literals;

  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

/// Vertices: literals of G and I. Deterministic vertex order.
DepGraph dep_graph(const GroundProgram& program, const Interpretation& interpretation);

/// True iff L is non-empty and the subgraph induced by L is strongly
/// connected (singletons qualify through length-0 paths).
bool is_loop(const LiteralSet& literals, const DepGraph& graph);

/// Strongly connected components of the subgraph induced by `within`.
std::vector<LiteralSet> components_within(const LiteralSet& within, const DepGraph& graph);

/// Every loop contained in I, found per strongly connected component of the
/// subgraph induced by I. Ordered by size, then members. Throws
/// BudgetExceeded if more than `cap` loops exist or a component has more
/// than `max_component` literals.
std::vector<Loop> loops_within(const Interpretation& interpretation, const DepGraph& graph,
                               std::size_t cap = 10'000, std::size_t max_component = 20);

}  // namespace aspdbg
