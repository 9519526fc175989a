#include "aspdbg/reifier.hpp"

#include <algorithm>
#include <sstream>

#include "aspdbg/grounder.hpp"

namespace aspdbg {

namespace {

Constant sym(std::string s) { return Constant::symbol(std::move(s)); }
Constant num(std::int64_t n) { return Constant::number(n); }

std::vector<const Literal*> literals_of(const Rule& r) {
  std::vector<const Literal*> out;
  for (const auto& h : r.head()) out.push_back(&h);
  for (const auto& b : r.pos()) {
    if (const auto* l = std::get_if<Literal>(&b)) out.push_back(l);
  }
  for (const auto& n : r.neg()) out.push_back(&n);
  return out;
}

void sort_unique(FactSet& facts) {
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
}

}  // namespace

std::strong_ordering operator<=>(const Fact& a, const Fact& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(),
                                                b.args.end());
}

std::string Fact::str() const {
  std::string out = predicate;
  if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ',';
      out += args[i].str();
    }
    out += ')';
  }
  out += '.';
  return out;
}

std::string LabelTable::comparison(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "b_eq";
    case CompareOp::Neq: return "b_neq";
    case CompareOp::Leq: return "b_leq";
    case CompareOp::Lt: return "b_lt";
    case CompareOp::Geq: return "b_geq";
    case CompareOp::Gt: return "b_gt";
  }
  return "b_unknown";
}

void LabelTable::add(const std::string& label, LabelKind kind, const std::string& object) {
  auto [it, inserted] = reverse_.emplace(label, std::make_pair(kind, object));
  if (!inserted && it->second != std::make_pair(kind, object)) {
    throw Error(ErrorKind::LabelCollision, "label '" + label + "' would denote both '" +
                                               it->second.second + "' and '" + object + "'");
  }
}

LabelTable::LabelTable(const Program& program, const Interpretation& interpretation) {
  for (std::size_t i = 0; i < program.size(); ++i) {
    rules_.push_back("r" + std::to_string(i + 1));
    add(rules_.back(), LabelKind::Rule, "rule " + std::to_string(i + 1));
  }

  // EPS labels; a name used with several arities gets an arity suffix.
  std::set<Eps> all_eps = program.predicates();
  for (const auto& l : interpretation.literals()) all_eps.insert(l.eps());
  std::map<std::pair<std::string, bool>, std::size_t> arities;
  for (const auto& e : all_eps) ++arities[{e.name, e.strong_neg}];
  for (const auto& e : all_eps) {
    std::string label = (e.strong_neg ? "n_" : "p_") + e.name;
    if (arities[{e.name, e.strong_neg}] > 1) label += "__" + std::to_string(e.arity);
    eps_[e] = label;
    add(label, LabelKind::Eps, e.str());
  }

  auto intern = [&](const std::string& printed) {
    if (literals_.count(printed)) return;
    std::string label = "l" + std::to_string(literals_.size() + 1);
    literals_[printed] = label;
    add(label, LabelKind::Literal, printed);
  };
  auto intern_expr = [&](const Term& t) {
    std::string printed = t.str();
    if (expressions_.count(printed)) return;
    std::string label = "e" + std::to_string(expressions_.size() + 1);
    expressions_[printed] = label;
    add(label, LabelKind::Expression, printed);
  };
  for (const auto& r : program.rules()) {
    for (const auto& h : r.head()) intern(h.str());
    for (const auto& b : r.pos()) {
      if (const auto* l = std::get_if<Literal>(&b)) {
        intern(l->str());
        continue;
      }
      const auto& bi = std::get<Builtin>(b);
      intern(bi.str());
      add(comparison(bi.op), LabelKind::Comparison, std::string(symbol(bi.op)));
      for (const Term* t : {&bi.lhs, &bi.rhs}) {
        if (t->is_arith()) intern_expr(*t);
      }
    }
    for (const auto& n : r.neg()) intern(n.str());
    for (const auto& v : r.variables()) add(variable(v), LabelKind::Variable, v);
  }
  for (const auto& l : interpretation.literals()) intern(l.str());

  std::set<Constant> constants = program.constants();
  auto ic = interpretation.constants();
  constants.insert(ic.begin(), ic.end());
  for (const auto& c : constants) {
    if (c.is_symbol() && reverse_.count(c.as_symbol())) {
      throw Error(ErrorKind::LabelCollision,
                  "constant '" + c.as_symbol() + "' clashes with the label of " +
                      reverse_.at(c.as_symbol()).second + "; rename the constant");
    }
  }
}

std::string LabelTable::find_literal(const std::string& printed) const {
  auto it = literals_.find(printed);
  return it == literals_.end() ? std::string{} : it->second;
}

namespace {

Constant arg_marker_value(const Term& t, const LabelTable& labels, std::string& marker) {
  if (t.is_constant()) {
    marker = "const";
    return t.constant();
  }
  if (t.is_variable()) {
    marker = "var";
    return sym(LabelTable::variable(t.variable().name));
  }
  marker = "expr";
  return sym(labels.expression(t));
}

void struct_fact(FactSet& out, const std::string& owner, std::size_t i, const Term& t,
                 const LabelTable& labels) {
  std::string marker;
  Constant value = arg_marker_value(t, labels, marker);
  out.push_back({"struct", {sym(owner), num(static_cast<std::int64_t>(i)), sym(marker), value}});
  if (!t.is_arith()) return;
  const auto& a = t.arith();
  if (a.lhs->is_arith() || a.rhs->is_arith()) {
    throw Error(ErrorKind::Unsupported,
                "nested arithmetic '" + t.str() + "' cannot be reified; flatten it");
  }
  out.push_back({"arith", {value, sym(a.op == ArithOp::Plus ? "plus" : "times")}});
  struct_fact(out, value.as_symbol(), 1, *a.lhs, labels);
  struct_fact(out, value.as_symbol(), 2, *a.rhs, labels);
}

}  // namespace

FactSet reify_rule(const Program& program, std::size_t index, const LabelTable& labels) {
  const Rule& r = program[index];
  const Constant rl = sym(labels.rule(index));
  FactSet out;
  out.push_back({"rule", {rl}});
  auto literal_facts = [&](const Literal& l) {
    const std::string& ll = labels.literal(l);
    out.push_back({"pred", {sym(ll), sym(labels.eps(l.eps()))}});
    for (std::size_t i = 0; i < l.args().size(); ++i) struct_fact(out, ll, i + 1, l.args()[i], labels);
    return sym(ll);
  };
  for (const auto& h : r.head()) out.push_back({"head", {rl, literal_facts(h)}});
  for (const auto& b : r.pos()) {
    if (const auto* l = std::get_if<Literal>(&b)) {
      out.push_back({"posbody", {rl, literal_facts(*l)}});
      continue;
    }
    const auto& bi = std::get<Builtin>(b);
    const std::string& bl = labels.literal(bi.str());
    out.push_back({"posbody", {rl, sym(bl)}});
    out.push_back({"pred", {sym(bl), sym(LabelTable::comparison(bi.op))}});
    struct_fact(out, bl, 1, bi.lhs, labels);
    struct_fact(out, bl, 2, bi.rhs, labels);
  }
  for (const auto& n : r.neg()) out.push_back({"negbody", {rl, literal_facts(n)}});
  for (const auto& v : r.variables()) out.push_back({"var", {rl, sym(LabelTable::variable(v))}});
  sort_unique(out);
  return out;
}

FactSet reify_program(const Program& program, const LabelTable& labels) {
  FactSet out;
  for (std::size_t i = 0; i < program.size(); ++i) {
    auto f = reify_rule(program, i, labels);
    out.insert(out.end(), f.begin(), f.end());
  }
  for (const auto& c : program.constants()) out.push_back({"dom", {c}});
  for (const auto& r : program.rules()) {
    for (const Literal* l : literals_of(r)) {
      out.push_back({"arity", {sym(labels.eps(l->eps())),
                               num(static_cast<std::int64_t>(l->eps().arity))}});
    }
  }
  sort_unique(out);
  return out;
}

FactSet reify_interpretation(const Interpretation& interpretation, const LabelTable& labels) {
  FactSet out;
  for (const auto& l : interpretation.literals()) {
    Constant ll = sym(labels.literal(l));
    out.push_back({"int", {ll}});
    out.push_back({"pred", {ll, sym(labels.eps(l.eps()))}});
    for (std::size_t i = 0; i < l.args().size(); ++i) {
      out.push_back({"struct", {ll, num(static_cast<std::int64_t>(i + 1)), sym("const"),
                                l.args()[i].constant()}});
    }
  }
  sort_unique(out);
  return out;
}

std::size_t nat_bound(const Program& program, const Interpretation& interpretation) {
  return std::max(interpretation.size(), program.max_arity());
}

namespace {

// plus/times/cmp facts for the comparison and arithmetic symbols used in P.
void builtin_support(const Program& program, FactSet& out) {
  std::set<CompareOp> ops;
  bool plus = false;
  bool times = false;
  for (const auto& r : program.rules()) {
    for (const auto& b : r.pos()) {
      const auto* bi = std::get_if<Builtin>(&b);
      if (!bi) continue;
      ops.insert(bi->op);
      for (const Term* t : {&bi->lhs, &bi->rhs}) {
        if (!t->is_arith()) continue;
        (t->arith().op == ArithOp::Plus ? plus : times) = true;
      }
    }
  }
  if (ops.empty()) return;

  std::set<Constant> values = program.constants();
  std::vector<std::int64_t> numbers;
  for (const auto& c : program.constants()) {
    if (c.is_number()) numbers.push_back(c.as_number());
  }
  for (std::int64_t a : numbers) {
    for (std::int64_t b : numbers) {
      for (ArithOp op : {ArithOp::Plus, ArithOp::Times}) {
        if ((op == ArithOp::Plus && !plus) || (op == ArithOp::Times && !times)) continue;
        auto v = evaluate(Term(op, Term(num(a)), Term(num(b))));
        if (!v) continue;
        out.push_back({op == ArithOp::Plus ? "plus" : "times", {num(a), num(b), *v}});
        values.insert(*v);
      }
    }
  }
  for (CompareOp op : ops) {
    for (const auto& x : values) {
      for (const auto& y : values) {
        if (eval_builtin(Builtin{Term(x), op, Term(y)})) {
          out.push_back({"cmp", {sym(LabelTable::comparison(op)), x, y}});
        }
      }
    }
  }
}

}  // namespace

FactSet reify_input(const Program& program, const Interpretation& interpretation) {
  LabelTable labels(program, interpretation);
  FactSet out = reify_program(program, labels);
  auto li = reify_interpretation(interpretation, labels);
  out.insert(out.end(), li.begin(), li.end());
  const std::size_t n = nat_bound(program, interpretation);
  for (std::size_t k = 0; k <= n; ++k) out.push_back({"natNumber", {num(static_cast<std::int64_t>(k))}});
  builtin_support(program, out);
  sort_unique(out);
  return out;
}

std::string to_text(const FactSet& facts) {
  std::string out;
  for (const auto& f : facts) {
    out += f.str();
    out += '\n';
  }
  return out;
}

}  // namespace aspdbg
