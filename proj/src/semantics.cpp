#include "aspdbg/semantics.hpp"

#include <algorithm>

#include "aspdbg/detail/indexed.hpp"

namespace aspdbg {

using detail::IndexedProgram;
using detail::IndexedRule;

bool satisfies_rule(const Interpretation& interpretation, const GroundRule& rule) {
  auto in = [&](const Literal& l) { return interpretation.contains(l); };
  if (!std::all_of(rule.pos.begin(), rule.pos.end(), in)) return true;
  if (std::any_of(rule.neg.begin(), rule.neg.end(), in)) return true;
  return std::any_of(rule.head.begin(), rule.head.end(), in);
}

bool satisfies_rule(const Interpretation& interpretation, const Rule& rule) {
  if (!rule.is_ground() || rule.has_builtins()) {
    throw Error(ErrorKind::NonGround, "rule '" + rule.str() + "' is not ground and builtin-free");
  }
  GroundRule g;
  g.head = rule.head();
  for (const auto& b : rule.pos()) g.pos.push_back(std::get<Literal>(b));
  g.neg = rule.neg();
  return satisfies_rule(interpretation, g);
}

bool satisfies(const Interpretation& interpretation, const GroundProgram& program) {
  return std::all_of(program.rules.begin(), program.rules.end(),
                     [&](const GroundRule& r) { return satisfies_rule(interpretation, r); });
}

Reduct reduct(const GroundProgram& program, const Interpretation& interpretation) {
  Reduct out;
  for (const auto& r : program.rules) {
    bool blocked = std::any_of(r.neg.begin(), r.neg.end(),
                               [&](const Literal& l) { return interpretation.contains(l); });
    if (blocked) continue;
    GroundRule kept = r;
    kept.neg.clear();
    out.rules.push_back(std::move(kept));
  }
  return out;
}

namespace {

// J |= P^I, where `in` is I and `sub` is J.
bool models_reduct(const IndexedProgram& ip, const std::vector<char>& in,
                   const std::vector<char>& sub) {
  for (const auto& r : ip.rules()) {
    bool blocked = std::any_of(r.neg.begin(), r.neg.end(),
                               [&](int k) { return in[static_cast<std::size_t>(k)] != 0; });
    if (blocked) continue;
    bool body = std::all_of(r.pos.begin(), r.pos.end(),
                            [&](int k) { return sub[static_cast<std::size_t>(k)] != 0; });
    if (!body) continue;
    bool head = std::any_of(r.head.begin(), r.head.end(),
                            [&](int k) { return sub[static_cast<std::size_t>(k)] != 0; });
    if (!head) return false;
  }
  return true;
}

// Assumes I |= P^I. Every model J of P^I with J a subset of I contains the
// literals forced by rules with exactly one head literal in I; only the
// remaining literals are searched.
bool is_minimal(const IndexedProgram& ip, const std::vector<char>& in, std::size_t max_free) {
  std::vector<char> forced(in.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : ip.rules()) {
      bool blocked = std::any_of(r.neg.begin(), r.neg.end(),
                                 [&](int k) { return in[static_cast<std::size_t>(k)] != 0; });
      if (blocked) continue;
      bool body = std::all_of(r.pos.begin(), r.pos.end(),
                              [&](int k) { return forced[static_cast<std::size_t>(k)] != 0; });
      if (!body) continue;
      int only = -1;
      int count = 0;
      for (int h : r.head) {
        if (in[static_cast<std::size_t>(h)]) {
          only = h;
          ++count;
        }
      }
      if (count == 1 && !forced[static_cast<std::size_t>(only)]) {
        forced[static_cast<std::size_t>(only)] = 1;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (in[k] && !forced[k]) free.push_back(k);
  }
  if (free.empty()) return true;
  if (models_reduct(ip, in, forced)) return false;
  if (free.size() > max_free) {
    throw BudgetExceeded("minimality check needs 2^" + std::to_string(free.size()) +
                         " subsets (cap 2^" + std::to_string(max_free) + ")");
  }
  const std::uint64_t full = (std::uint64_t{1} << free.size()) - 1;
  std::vector<char> sub = forced;
  for (std::uint64_t m = 1; m < full; ++m) {
    for (std::size_t b = 0; b < free.size(); ++b) sub[free[b]] = static_cast<char>((m >> b) & 1U);
    if (models_reduct(ip, in, sub)) return false;
  }
  return true;
}

bool check(const IndexedProgram& ip, const std::vector<char>& in, const SolveOptions& options) {
  for (const auto& r : ip.rules()) {
    if (!detail::satisfies(r, in)) return false;
  }
  return is_minimal(ip, in, options.max_free_literals);
}

}  // namespace

bool is_answer_set(const GroundProgram& program, const Interpretation& interpretation,
                   const SolveOptions& options) {
  IndexedProgram ip(program, interpretation.literals());
  return check(ip, ip.mask(interpretation.literals()), options);
}

bool is_answer_set(const Program& program, const Interpretation& interpretation,
                   const SolveOptions& options) {
  return is_answer_set(ground(program, options.grounding), interpretation, options);
}

LiteralSet candidate_base(const GroundProgram& program) { return program.literals(); }

std::vector<Interpretation> enumerate_answer_sets(const GroundProgram& program,
                                                  const LiteralSet& base, std::size_t limit,
                                                  const SolveOptions& options) {
  IndexedProgram ip(program, {});
  const std::size_t n = ip.literal_count();
  std::vector<char> allowed = ip.mask(base);

  // Consequences of the definite rules: contained in every model.
  std::vector<char> certain(n, 0);
  // Derivable when negation is ignored and every head literal may be chosen:
  // a superset of every answer set.
  std::vector<char> possible(n, 0);
  auto saturate = [&](std::vector<char>& set, bool definite_only) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& r : ip.rules()) {
        if (definite_only && (r.head.size() != 1 || !r.neg.empty())) continue;
        bool body = std::all_of(r.pos.begin(), r.pos.end(),
                                [&](int k) { return set[static_cast<std::size_t>(k)] != 0; });
        if (!body) continue;
        for (int h : r.head) {
          if (!set[static_cast<std::size_t>(h)]) {
            set[static_cast<std::size_t>(h)] = 1;
            changed = true;
          }
        }
      }
    }
  };
  saturate(certain, true);
  saturate(possible, false);

  for (std::size_t k = 0; k < n; ++k) {
    if (certain[k] && !allowed[k]) return {};
  }
  if (!is_consistent(ip.to_set(certain))) return {};

  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < n; ++k) {
    if (possible[k] && allowed[k] && !certain[k]) free.push_back(k);
  }
  if (free.size() > options.max_free_literals) {
    throw BudgetExceeded("answer-set enumeration needs 2^" + std::to_string(free.size()) +
                         " candidates (cap 2^" + std::to_string(options.max_free_literals) + ")");
  }

  std::vector<Interpretation> found;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  std::vector<char> in = certain;
  for (std::uint64_t m = 0; m < count; ++m) {
    for (std::size_t b = 0; b < free.size(); ++b) in[free[b]] = static_cast<char>((m >> b) & 1U);
    LiteralSet candidate = ip.to_set(in);
    if (!is_consistent(candidate)) continue;
    if (check(ip, in, options)) found.emplace_back(std::move(candidate));
  }
  std::sort(found.begin(), found.end(), [](const Interpretation& a, const Interpretation& b) {
    return std::lexicographical_compare(a.literals().begin(), a.literals().end(),
                                        b.literals().begin(), b.literals().end());
  });
  if (limit != 0 && found.size() > limit) found.resize(limit);
  return found;
}

std::vector<Interpretation> enumerate_answer_sets(const Program& program, std::size_t limit,
                                                  const SolveOptions& options) {
  GroundProgram g = ground(program, options.grounding);
  return enumerate_answer_sets(g, candidate_base(g), limit, options);
}

}  // namespace aspdbg
