#include "aspdbg/report.hpp"

#include <sstream>

namespace aspdbg {

using nlohmann::json;

json substitution_json(const Substitution& theta) {
  json out = json::object();
  for (const auto& [var, value] : theta.bindings()) out[var] = value.str();
  return out;
}

json to_json(const Explanation& explanation, const Program& program) {
  json unsat = json::array();
  for (const auto& f : explanation.unsatisfied) {
    unsat.push_back({
        {"rule", f.rule_index + 1},
        {"span", {{"begin", f.span.begin}, {"end", f.span.end}}},
        {"rule_text", program[f.rule_index].str()},
        {"substitution", substitution_json(f.theta)},
        {"instance", f.instance.str()},
    });
  }
  json loops = json::array();
  for (const auto& f : explanation.unfounded_loops) {
    json members = json::array();
    for (const auto& l : f.loop.literals) members.push_back(l.str());
    json blocked = json::array();
    for (const auto& d : f.diagnostics) {
      json rules = json::array();
      for (const auto& b : d.blocked) {
        json violated = json::array();
        for (auto c : b.violated) violated.push_back(std::string(roman(c)));
        rules.push_back({
            {"rule", b.rule_index + 1},
            {"substitution", substitution_json(b.theta)},
            {"instance", b.instance.str()},
            {"violated", violated},
        });
      }
      blocked.push_back({{"literal", d.literal.str()}, {"rules", rules}});
    }
    loops.push_back({{"loop", members}, {"blocked", blocked}});
  }
  return {
      {"verdict", std::string(verdict_name(explanation.verdict))},
      {"unsatisfied", unsat},
      {"unfounded_loops", loops},
  };
}

json to_json(const ParseError& error) {
  return {
      {"error", std::string(kind_name(error.kind()))},
      {"line", error.position().line},
      {"column", error.position().column},
      {"offset", error.position().offset},
      {"message", error.detail()},
  };
}

json to_json(const Interpretation& interpretation) {
  json out = json::array();
  for (const auto& l : interpretation.literals()) out.push_back(l.str());
  return out;
}

std::string to_text(const Explanation& explanation, const Program& program) {
  std::ostringstream os;
  if (explanation.verdict == Verdict::IsAnswerSet) {
    os << "I is an answer set of P.\n";
    return os.str();
  }
  os << "I is not an answer set of P.\n";
  if (!explanation.unsatisfied.empty()) {
    os << "\nUnsatisfied rule instances:\n";
    for (const auto& f : explanation.unsatisfied) {
      os << "  r" << f.rule_index + 1 << ": " << program[f.rule_index].str() << '\n'
         << "    with " << f.theta.str() << '\n'
         << "    gives " << f.instance.str() << '\n';
    }
  }
  if (!explanation.unfounded_loops.empty()) {
    os << "\nUnfounded loops:\n";
    for (const auto& f : explanation.unfounded_loops) {
      os << "  {";
      bool sep = false;
      for (const auto& l : f.loop.literals) {
        os << (sep ? ", " : " ") << l.str();
        sep = true;
      }
      os << " }\n";
      for (const auto& d : f.diagnostics) {
        if (d.blocked.empty()) {
          os << "    " << d.literal.str() << ": no rule has it in the head\n";
          continue;
        }
        os << "    " << d.literal.str() << ":\n";
        for (const auto& b : d.blocked) {
          os << "      r" << b.rule_index + 1 << ' ' << b.theta.str() << "  " << b.instance.str()
             << "  fails";
          for (auto c : b.violated) os << " (" << roman(c) << ')';
          os << '\n';
        }
      }
    }
  }
  return os.str();
}

}  // namespace aspdbg
