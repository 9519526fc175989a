#include "aspdbg/loops.hpp"

#include <algorithm>
#include <functional>

namespace aspdbg {

DepGraph::DepGraph(std::vector<Literal> vertices,
                   std::set<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), adjacency_(vertices_.size()) {
  for (const auto& [a, b] : edges_) adjacency_.at(a).push_back(b);
}

std::size_t DepGraph::find(const Literal& l) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), l);
  if (it == vertices_.end() || *it != l) return npos;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool DepGraph::has_edge(const Literal& from, const Literal& to) const {
  std::size_t a = find(from);
  std::size_t b = find(to);
  return a != npos && b != npos && edges_.count({a, b}) != 0;
}

DepGraph dep_graph(const GroundProgram& program, const Interpretation& interpretation) {
  LiteralSet all = program.literals();
  all.insert(interpretation.literals().begin(), interpretation.literals().end());
  std::vector<Literal> vertices(all.begin(), all.end());
  auto index = [&](const Literal& l) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), l) -
                                    vertices.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& r : program.rules) {
    for (const auto& h : r.head) {
      for (const auto& b : r.pos) edges.emplace(index(h), index(b));
    }
  }
  return DepGraph(std::move(vertices), std::move(edges));
}

namespace {

// Tarjan's algorithm restricted to the vertices flagged in `keep`.
std::vector<std::vector<std::size_t>> tarjan(const DepGraph& graph, const std::vector<char>& keep) {
  const std::size_t n = graph.vertices().size();
  std::vector<std::size_t> index(n, DepGraph::npos), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w : graph.successors(v)) {
      if (!keep[w]) continue;
      if (index[w] == DepGraph::npos) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      out.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (keep[v] && index[v] == DepGraph::npos) visit(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> flags(const LiteralSet& literals, const DepGraph& graph, bool& all_known) {
  std::vector<char> keep(graph.vertices().size(), 0);
  all_known = true;
  for (const auto& l : literals) {
    std::size_t k = graph.find(l);
    if (k == DepGraph::npos) {
      all_known = false;
    } else {
      keep[k] = 1;
    }
  }
  return keep;
}

}  // namespace

bool is_loop(const LiteralSet& literals, const DepGraph& graph) {
  if (literals.empty()) return false;
  if (literals.size() == 1) return true;
  bool all_known = true;
  auto keep = flags(literals, graph, all_known);
  if (!all_known) return false;  // an isolated literal cannot reach the others
  return tarjan(graph, keep).size() == 1;
}

std::vector<LiteralSet> components_within(const LiteralSet& within, const DepGraph& graph) {
  bool all_known = true;
  auto keep = flags(within, graph, all_known);
  std::vector<LiteralSet> out;
  for (const auto& component : tarjan(graph, keep)) {
    LiteralSet s;
    for (std::size_t v : component) s.insert(graph.vertices()[v]);
    out.push_back(std::move(s));
  }
  for (const auto& l : within) {
    if (graph.find(l) == DepGraph::npos) out.push_back(LiteralSet{l});
  }
  return out;
}

std::vector<Loop> loops_within(const Interpretation& interpretation, const DepGraph& graph,
                               std::size_t cap, std::size_t max_component) {
  std::vector<Loop> out;
  auto push = [&](LiteralSet s) {
    if (out.size() >= cap) {
      throw BudgetExceeded("more than " + std::to_string(cap) + " loops inside the interpretation");
    }
    out.push_back(Loop{std::move(s)});
  };
  for (const auto& component : components_within(interpretation.literals(), graph)) {
    std::vector<Literal> members(component.begin(), component.end());
    if (members.size() == 1) {
      push(component);
      continue;
    }
    if (members.size() > max_component) {
      throw BudgetExceeded("strongly connected component of " + std::to_string(members.size()) +
                           " literals exceeds the loop enumeration cap of " +
                           std::to_string(max_component));
    }
    const std::uint64_t count = std::uint64_t{1} << members.size();
    for (std::uint64_t m = 1; m < count; ++m) {
      LiteralSet subset;
      for (std::size_t b = 0; b < members.size(); ++b) {
        if ((m >> b) & 1U) subset.insert(members[b]);
      }
      if (is_loop(subset, graph)) push(std::move(subset));
    }
  }
  std::sort(out.begin(), out.end(), [](const Loop& a, const Loop& b) {
    if (a.literals.size() != b.literals.size()) return a.literals.size() < b.literals.size();
    return a.literals < b.literals;
  });
  return out;
}

}  // namespace aspdbg
