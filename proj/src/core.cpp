#include "aspdbg/core.hpp"

#include <algorithm>
#include <sstream>

namespace aspdbg {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::BuiltinInHead: return "builtin-in-head";
    case ErrorKind::BuiltinInNegativeBody: return "builtin-in-negative-body";
    case ErrorKind::InconsistentInterpretation: return "inconsistent-interpretation";
    case ErrorKind::BuiltinInInterpretation: return "builtin-in-interpretation";
    case ErrorKind::ArityClashWarning: return "arity-clash-warning";
    case ErrorKind::InvalidRule: return "invalid-rule";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::NonGround: return "non-ground";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::LabelCollision: return "label-collision";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::SolverNotConfigured: return "solver-not-configured";
    case ErrorKind::SolverFailure: return "solver-failure";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {
std::string located(SourcePosition pos, const std::string& message) {
  std::ostringstream os;
  os << pos.line << ":" << pos.column << ": " << message;
  return os.str();
}
}  // namespace

ParseError::ParseError(ErrorKind kind, SourcePosition position, const std::string& message)
    : Error(kind, located(position, message)), position_(position), detail_(message) {}

// ---------------------------------------------------------------- constants

std::strong_ordering compare(const Constant& a, const Constant& b) {
  if (a.is_number() != b.is_number()) {
    return a.is_number() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_number()) return a.as_number() <=> b.as_number();
  int c = a.as_symbol().compare(b.as_symbol());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering operator<=>(const Constant& a, const Constant& b) { return compare(a, b); }

std::string Constant::str() const {
  return is_number() ? std::to_string(as_number()) : as_symbol();
}

std::string_view symbol(ArithOp op) { return op == ArithOp::Plus ? "+" : "*"; }

std::string_view symbol(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Neq: return "!=";
    case CompareOp::Leq: return "<=";
    case CompareOp::Lt: return "<";
    case CompareOp::Geq: return ">=";
    case CompareOp::Gt: return ">";
  }
  return "?";
}

// -------------------------------------------------------------------- terms

Term::Term(ArithOp op, Term lhs, Term rhs)
    : value_(ArithExpr{op, std::make_shared<const Term>(std::move(lhs)),
                       std::make_shared<const Term>(std::move(rhs))}) {}

bool Term::is_ground() const {
  if (is_variable()) return false;
  if (is_arith()) return arith().lhs->is_ground() && arith().rhs->is_ground();
  return true;
}

std::size_t Term::arith_depth() const {
  if (!is_arith()) return 0;
  return 1 + std::max(arith().lhs->arith_depth(), arith().rhs->arith_depth());
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (is_variable()) {
    if (std::find(out.begin(), out.end(), variable().name) == out.end()) {
      out.push_back(variable().name);
    }
  } else if (is_arith()) {
    arith().lhs->collect_variables(out);
    arith().rhs->collect_variables(out);
  }
}

void Term::collect_constants(std::set<Constant>& out) const {
  if (is_constant()) {
    out.insert(constant());
  } else if (is_arith()) {
    arith().lhs->collect_constants(out);
    arith().rhs->collect_constants(out);
  }
}

std::string Term::str() const {
  if (is_constant()) return constant().str();
  if (is_variable()) return variable().name;
  auto operand = [](const Term& t) {
    return t.is_arith() ? "(" + t.str() + ")" : t.str();
  };
  return operand(*arith().lhs) + std::string(symbol(arith().op)) + operand(*arith().rhs);
}

bool operator==(const Term& a, const Term& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_constant()) return a.constant() == b.constant();
  if (a.is_variable()) return a.variable() == b.variable();
  return a.arith().op == b.arith().op && *a.arith().lhs == *b.arith().lhs &&
         *a.arith().rhs == *b.arith().rhs;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  if (a.is_constant()) return a.constant() <=> b.constant();
  if (a.is_variable()) return a.variable() <=> b.variable();
  if (auto c = a.arith().op <=> b.arith().op; c != 0) return c;
  if (auto c = *a.arith().lhs <=> *b.arith().lhs; c != 0) return c;
  return *a.arith().rhs <=> *b.arith().rhs;
}

// ----------------------------------------------------------------- literals

std::string Eps::str() const {
  return (strong_neg ? "-" : "") + name + "/" + std::to_string(arity);
}

Literal::Literal(std::string name, bool strong_neg, std::vector<Term> args)
    : eps_{std::move(name), strong_neg, args.size()}, args_(std::move(args)) {
  for (const auto& a : args_) {
    if (a.is_arith()) {
      throw Error(ErrorKind::InvalidRule,
                  "arithmetic term '" + a.str() + "' used as argument of " + eps_.name);
    }
  }
}

bool Literal::is_ground() const {
  return std::all_of(args_.begin(), args_.end(), [](const Term& t) { return t.is_ground(); });
}

std::string Literal::str() const {
  std::string out = eps_.strong_neg ? "-" : "";
  out += eps_.name;
  if (!args_.empty()) {
    out += "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
      if (i) out += ",";
      out += args_[i].str();
    }
    out += ")";
  }
  return out;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.eps_ <=> b.eps_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                b.args_.end());
}

Literal complement(const Literal& l) {
  return Literal(l.eps().name, !l.eps().strong_neg, l.args());
}

bool is_consistent(const LiteralSet& literals) {
  for (const auto& l : literals) {
    if (!l.eps().strong_neg && literals.count(complement(l))) return false;
  }
  return true;
}

std::string Builtin::str() const {
  return lhs.str() + std::string(symbol(op)) + rhs.str();
}

std::string to_string(const BodyAtom& atom) {
  return std::visit([](const auto& a) { return a.str(); }, atom);
}

// -------------------------------------------------------------------- rules

Rule::Rule(std::vector<Literal> head, std::vector<BodyAtom> pos, std::vector<Literal> neg,
           SourceSpan span)
    : head_(std::move(head)), pos_(std::move(pos)), neg_(std::move(neg)), span_(span) {
  if (head_.empty() && pos_.empty() && neg_.empty()) {
    throw Error(ErrorKind::InvalidRule, "a constraint needs a non-empty body");
  }
}

bool Rule::has_builtins() const {
  return std::any_of(pos_.begin(), pos_.end(),
                     [](const BodyAtom& a) { return std::holds_alternative<Builtin>(a); });
}

bool Rule::is_ground() const { return variables().empty(); }

std::vector<std::string> Rule::variables() const {
  std::vector<std::string> vars;
  auto from_literal = [&](const Literal& l) {
    for (const auto& t : l.args()) t.collect_variables(vars);
  };
  for (const auto& h : head_) from_literal(h);
  for (const auto& b : pos_) {
    if (const auto* l = std::get_if<Literal>(&b)) {
      from_literal(*l);
    } else {
      const auto& bi = std::get<Builtin>(b);
      bi.lhs.collect_variables(vars);
      bi.rhs.collect_variables(vars);
    }
  }
  for (const auto& n : neg_) from_literal(n);
  return vars;
}

std::set<Constant> Rule::constants() const {
  std::set<Constant> out;
  auto from_literal = [&](const Literal& l) {
    for (const auto& t : l.args()) t.collect_constants(out);
  };
  for (const auto& h : head_) from_literal(h);
  for (const auto& b : pos_) {
    if (const auto* l = std::get_if<Literal>(&b)) {
      from_literal(*l);
    } else {
      std::get<Builtin>(b).lhs.collect_constants(out);
      std::get<Builtin>(b).rhs.collect_constants(out);
    }
  }
  for (const auto& n : neg_) from_literal(n);
  return out;
}

std::string Rule::str() const {
  std::string out;
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (i) out += " | ";
    out += head_[i].str();
  }
  if (!pos_.empty() || !neg_.empty()) {
    out += head_.empty() ? ":- " : " :- ";
    bool first = true;
    for (const auto& b : pos_) {
      if (!first) out += ", ";
      first = false;
      out += to_string(b);
    }
    for (const auto& n : neg_) {
      if (!first) out += ", ";
      first = false;
      out += "not " + n.str();
    }
  }
  out += ".";
  return out;
}

bool operator==(const Rule& a, const Rule& b) {
  return a.head_ == b.head_ && a.pos_ == b.pos_ && a.neg_ == b.neg_;
}

// ----------------------------------------------------------------- programs

Program::Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    auto cs = r.constants();
    constants_.insert(cs.begin(), cs.end());
  }
}

std::set<Eps> Program::predicates() const {
  std::set<Eps> out;
  for (const auto& r : rules_) {
    for (const auto& h : r.head()) out.insert(h.eps());
    for (const auto& b : r.pos()) {
      if (const auto* l = std::get_if<Literal>(&b)) out.insert(l->eps());
    }
    for (const auto& n : r.neg()) out.insert(n.eps());
  }
  return out;
}

std::size_t Program::max_arity() const {
  std::size_t n = 0;
  for (const auto& e : predicates()) n = std::max(n, e.arity);
  return n;
}

std::string Program::str() const {
  std::string out;
  for (const auto& r : rules_) out += r.str() + "\n";
  return out;
}

// ----------------------------------------------------------- interpretation

Interpretation::Interpretation(LiteralSet literals) : literals_(std::move(literals)) {
  for (const auto& l : literals_) {
    if (!l.is_ground()) {
      throw Error(ErrorKind::NonGround, "interpretation literal '" + l.str() + "' is not ground");
    }
    if (!l.eps().strong_neg && literals_.count(complement(l))) {
      throw Error(ErrorKind::InconsistentInterpretation,
                  "interpretation contains both " + l.str() + " and -" + l.str());
    }
  }
}

std::set<Constant> Interpretation::constants() const {
  std::set<Constant> out;
  for (const auto& l : literals_) {
    for (const auto& t : l.args()) t.collect_constants(out);
  }
  return out;
}

std::string Interpretation::str() const {
  if (literals_.empty()) return "{ }";
  std::string out = "{ ";
  bool first = true;
  for (const auto& l : literals_) {
    if (!first) out += ", ";
    first = false;
    out += l.str();
  }
  return out + " }";
}

// ------------------------------------------------------------ substitutions

std::optional<Constant> Substitution::lookup(const std::string& var) const {
  auto it = map_.find(var);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::string Substitution::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, value] : map_) {
    if (!first) out += ", ";
    first = false;
    out += var + "->" + value.str();
  }
  return out + "}";
}

Term apply(const Term& t, const Substitution& theta) {
  if (t.is_constant()) return t;
  if (t.is_variable()) {
    auto value = theta.lookup(t.variable().name);
    if (!value) {
      throw Error(ErrorKind::UnboundVariable,
                  "substitution does not bind variable " + t.variable().name);
    }
    return *value;
  }
  return Term(t.arith().op, apply(*t.arith().lhs, theta), apply(*t.arith().rhs, theta));
}

Literal apply(const Literal& l, const Substitution& theta) {
  std::vector<Term> args;
  args.reserve(l.args().size());
  for (const auto& a : l.args()) args.push_back(apply(a, theta));
  return Literal(l.eps().name, l.eps().strong_neg, std::move(args));
}

Builtin apply(const Builtin& b, const Substitution& theta) {
  return Builtin{apply(b.lhs, theta), b.op, apply(b.rhs, theta)};
}

Rule apply(const Rule& r, const Substitution& theta) {
  std::vector<Literal> head;
  std::vector<BodyAtom> pos;
  std::vector<Literal> neg;
  for (const auto& h : r.head()) head.push_back(apply(h, theta));
  for (const auto& b : r.pos()) {
    std::visit([&](const auto& a) { pos.emplace_back(apply(a, theta)); }, b);
  }
  for (const auto& n : r.neg()) neg.push_back(apply(n, theta));
  return Rule(std::move(head), std::move(pos), std::move(neg), r.span());
}

}  // namespace aspdbg
