#pragma once

// Shared helpers for the test binaries: fixture loading and a generator of
// small random programs and interpretations.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aspdbg/parser.hpp"
#include "aspdbg/semantics.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(ASPDBG_FIXTURE_DIR) + "/" + name;
}
inline std::string golden_path(const std::string& name) {
  return std::string(ASPDBG_GOLDEN_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

inline aspdbg::Program program(const std::string& name) {
  return aspdbg::parse_program(slurp(fixture_path(name)));
}
inline aspdbg::Interpretation interpretation(const std::string& name) {
  return aspdbg::parse_interpretation(slurp(fixture_path(name)));
}

struct RandomShape {
  std::size_t max_rules = 6;
  std::size_t max_constants = 3;
  bool disjunction = true;
  bool negation = true;
  bool strong_negation = true;
  bool builtins = false;
};

/// Random programs with at most 6 rules, 3 constants and arity 2.
class Generator {
 public:
  explicit Generator(std::uint32_t seed, RandomShape shape = {}) : rng_(seed), shape_(shape) {}

  std::string program_text() {
    static const std::vector<std::pair<std::string, int>> preds = {
        {"a", 0}, {"p", 1}, {"q", 1}, {"r", 2}};
    static const std::vector<std::string> pool = {"0", "1", "c", "d"};
    std::vector<std::string> constants;
    std::size_t nc = pick(0, shape_.max_constants);
    std::vector<std::string> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng_);
    constants.assign(shuffled.begin(), shuffled.begin() + static_cast<long>(nc));
    static const std::vector<std::string> vars = {"X", "Y"};

    auto literal = [&](bool allow_strong) {
      const auto& [name, arity] = preds[pick(0, preds.size() - 1)];
      std::string out = (allow_strong && shape_.strong_negation && chance(0.15)) ? "-" : "";
      out += name;
      if (arity > 0) {
        out += "(";
        for (int i = 0; i < arity; ++i) {
          if (i) out += ",";
          if (!constants.empty() && chance(0.4)) {
            out += constants[pick(0, constants.size() - 1)];
          } else {
            out += vars[pick(0, vars.size() - 1)];
          }
        }
        out += ")";
      }
      return out;
    };

    std::string text;
    std::size_t nrules = pick(1, shape_.max_rules);
    for (std::size_t k = 0; k < nrules; ++k) {
      std::size_t nh = shape_.disjunction ? pick(0, 2) : pick(0, 1);
      std::size_t np = pick(0, 2);
      std::size_t nn = shape_.negation ? pick(0, 1) : 0;
      if (nh == 0 && np + nn == 0) nh = 1;
      if (nh == 0 && chance(0.5)) nh = 1;
      std::vector<std::string> head, body;
      for (std::size_t i = 0; i < nh; ++i) head.push_back(literal(true));
      for (std::size_t i = 0; i < np; ++i) body.push_back(literal(true));
      for (std::size_t i = 0; i < nn; ++i) body.push_back("not " + literal(true));
      if (shape_.builtins && np > 0 && chance(0.3)) body.push_back("X != Y");
      for (std::size_t i = 0; i < head.size(); ++i) text += (i ? " | " : "") + head[i];
      if (!body.empty()) {
        text += head.empty() ? ":- " : " :- ";
        for (std::size_t i = 0; i < body.size(); ++i) text += (i ? ", " : "") + body[i];
      }
      text += ".\n";
    }
    return text;
  }

  /// Interpretations over at most 10 candidate literals: every answer set
  /// plus random consistent subsets.
  std::vector<aspdbg::Interpretation> interpretations(const aspdbg::Program& program,
                                                      std::size_t random_count) {
    std::vector<aspdbg::Interpretation> out;
    aspdbg::GroundProgram g = aspdbg::ground(program);
    std::vector<aspdbg::Literal> base;
    for (const auto& l : aspdbg::candidate_base(g)) base.push_back(l);
    std::shuffle(base.begin(), base.end(), rng_);
    if (base.size() > 10) base.resize(10);
    try {
      for (auto& a : aspdbg::enumerate_answer_sets(program)) out.push_back(a);
    } catch (const aspdbg::BudgetExceeded&) {
    }
    for (std::size_t k = 0; k < random_count; ++k) {
      aspdbg::LiteralSet s;
      for (const auto& l : base) {
        if (chance(0.5) && !s.count(aspdbg::complement(l))) s.insert(l);
      }
      out.emplace_back(std::move(s));
    }
    return out;
  }

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

 private:
  std::mt19937 rng_;
  RandomShape shape_;
};

}  // namespace testing
