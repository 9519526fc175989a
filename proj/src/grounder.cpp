#include "aspdbg/grounder.hpp"

#include <limits>

namespace aspdbg {

Rule GroundRule::to_rule() const {
  std::vector<BodyAtom> body(pos.begin(), pos.end());
  return Rule(head, std::move(body), neg);
}

LiteralSet GroundProgram::literals() const {
  LiteralSet out;
  for (const auto& r : rules) {
    out.insert(r.head.begin(), r.head.end());
    out.insert(r.pos.begin(), r.pos.end());
    out.insert(r.neg.begin(), r.neg.end());
  }
  return out;
}

Program GroundProgram::to_program() const {
  std::vector<Rule> out;
  out.reserve(rules.size());
  for (const auto& r : rules) out.push_back(r.to_rule());
  return Program(std::move(out));
}

std::vector<Constant> herbrand_universe(const Program& program) {
  const auto& cs = program.constants();
  return {cs.begin(), cs.end()};
}

std::optional<Constant> evaluate(const Term& term) {
  if (term.is_variable()) {
    throw Error(ErrorKind::NonGround, "cannot evaluate variable " + term.variable().name);
  }
  if (term.is_constant()) return term.constant();
  auto lhs = evaluate(*term.arith().lhs);
  auto rhs = evaluate(*term.arith().rhs);
  if (!lhs || !rhs || !lhs->is_number() || !rhs->is_number()) return std::nullopt;
  std::int64_t a = lhs->as_number();
  std::int64_t b = rhs->as_number();
  constexpr auto max = std::numeric_limits<std::int64_t>::max();
  if (term.arith().op == ArithOp::Plus) {
    if (a > max - b) return std::nullopt;
    return Constant::number(a + b);
  }
  if (a != 0 && b > max / a) return std::nullopt;
  return Constant::number(a * b);
}

bool eval_builtin(const Builtin& builtin) {
  auto lhs = evaluate(builtin.lhs);
  auto rhs = evaluate(builtin.rhs);
  if (!lhs || !rhs) return false;
  auto c = compare(*lhs, *rhs);
  switch (builtin.op) {
    case CompareOp::Eq: return c == 0;
    case CompareOp::Neq: return c != 0;
    case CompareOp::Leq: return c <= 0;
    case CompareOp::Lt: return c < 0;
    case CompareOp::Geq: return c >= 0;
    case CompareOp::Gt: return c > 0;
  }
  return false;
}

void for_each_substitution(const std::vector<std::string>& vars,
                           const std::vector<Constant>& universe,
                           const std::function<void(const Substitution&)>& visit) {
  if (vars.empty()) {
    visit(Substitution{});
    return;
  }
  if (universe.empty()) return;
  std::vector<std::size_t> digits(vars.size(), 0);
  for (;;) {
    Substitution theta;
    for (std::size_t i = 0; i < vars.size(); ++i) theta.bind(vars[i], universe[digits[i]]);
    visit(theta);
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++digits[k] < universe.size()) break;
      digits[k] = 0;
      if (k == 0) return;
    }
  }
}

std::optional<GroundRule> instantiate(const Program& program, std::size_t index,
                                      const Substitution& theta) {
  const Rule& rule = program[index];
  GroundRule out;
  out.rule_index = index;
  out.theta = theta;
  for (const auto& h : rule.head()) out.head.push_back(apply(h, theta));
  for (const auto& b : rule.pos()) {
    if (const auto* l = std::get_if<Literal>(&b)) {
      out.pos.push_back(apply(*l, theta));
    } else if (!eval_builtin(apply(std::get<Builtin>(b), theta))) {
      return std::nullopt;
    }
  }
  for (const auto& n : rule.neg()) out.neg.push_back(apply(n, theta));
  return out;
}

GroundProgram ground(const Program& program, const GroundingOptions& options) {
  const auto universe = herbrand_universe(program);
  std::size_t candidates = 0;
  for (const auto& rule : program.rules()) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < rule.variables().size(); ++i) {
      if (universe.empty()) {
        n = 0;
        break;
      }
      if (n > options.max_candidates / universe.size()) {
        throw BudgetExceeded("grounding exceeds " + std::to_string(options.max_candidates) +
                             " candidate instances");
      }
      n *= universe.size();
    }
    candidates += n;
    if (candidates > options.max_candidates) {
      throw BudgetExceeded("grounding exceeds " + std::to_string(options.max_candidates) +
                           " candidate instances");
    }
  }

  GroundProgram out;
  for (std::size_t i = 0; i < program.size(); ++i) {
    for_each_substitution(program[i].variables(), universe, [&](const Substitution& theta) {
      if (auto g = instantiate(program, i, theta)) out.rules.push_back(std::move(*g));
    });
  }
  return out;
}

}  // namespace aspdbg
