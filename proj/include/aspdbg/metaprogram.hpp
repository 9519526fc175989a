#pragma once

// The fixed meta-program Gamma, the emitted debugging program
// Gamma + Delta(P,I), and a bridge to an external disjunctive ASP solver.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aspdbg/explainer.hpp"
#include "aspdbg/reifier.hpp"

namespace aspdbg {

struct GammaModule {
  std::string name;  // UNSAT_guess, ..., CONS
  std::string text;
};

/// The modules of Gamma in a fixed order. Independent of any P and I.
const std::vector<GammaModule>& gamma();
/// All modules, each preceded by a "% name" comment line.
std::string gamma_text();

/// Gamma, then Delta(P,I), then `directives` (solver-specific lines such as
/// #show statements; may be empty).
std::string debug_program(const Program& program, const Interpretation& interpretation,
                          const std::string& directives = {});
void emit_debug_program(const Program& program, const Interpretation& interpretation,
                        const std::filesystem::path& path, const std::string& directives = {});

/// Projection statements for clingo (use with --project).
std::string clingo_directives();

struct SolverConfig {
  /// Shell command; "{program}" is replaced by the program path, otherwise
  /// the path is appended.
  std::string command;
  /// Appended to the emitted program.
  std::string directives;

  /// From DEBUG_ASP_SOLVER_CMD (and DEBUG_ASP_SOLVER_DIRECTIVES), if set.
  static std::optional<SolverConfig> from_env();
  /// {"command": "...", "directives": "..."} or {"command": ..., "dialect": "clingo"}.
  static SolverConfig from_json(const nlohmann::json& j);
  static SolverConfig from_file(const std::filesystem::path& path);
  /// A command mentioning clingo gets the clingo directives by default.
  static SolverConfig for_command(std::string command);
};

struct MetaAnswerSet {
  std::set<std::string> atoms;
};

/// Answer sets from solver output: clingo style ("Answer: k" then a line of
/// space-separated atoms) or DLV style ("{a, b(c)}" per line).
std::vector<MetaAnswerSet> parse_solver_output(const std::string& output);

/// Runs the solver on Gamma + Delta(P,I). Throws Error(SolverNotConfigured)
/// for an empty command and Error(SolverFailure) when the solver fails.
std::vector<MetaAnswerSet> run_meta(const Program& program, const Interpretation& interpretation,
                                    const SolverConfig& config);

/// Findings read off meta answer sets: flagged rule guesses and loops.
struct MetaFindings {
  std::set<std::pair<std::size_t, Substitution>> unsatisfied;  // (rule index, theta)
  std::set<LiteralSet> unfounded_loops;
  std::size_t answer_sets = 0;
  /// Answer sets with neither unsatisfied nor unfounded.
  std::size_t unflagged = 0;
};

MetaFindings project(const std::vector<MetaAnswerSet>& answer_sets, const Program& program,
                     const Interpretation& interpretation);

struct CrossCheckReport {
  Verdict native = Verdict::IsAnswerSet;
  Verdict meta = Verdict::IsAnswerSet;
  std::vector<std::string> mismatches;
  std::size_t answer_sets = 0;

  bool agree() const { return mismatches.empty(); }
};

/// Compares the meta findings against the native explainer.
CrossCheckReport cross_check(const Program& program, const Interpretation& interpretation,
                             const SolverConfig& config);
CrossCheckReport compare(const Explanation& native, const MetaFindings& meta);

nlohmann::json to_json(const CrossCheckReport& report);

}  // namespace aspdbg
