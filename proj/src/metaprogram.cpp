#include "aspdbg/metaprogram.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "aspdbg/parser.hpp"

namespace aspdbg {

std::string debug_program(const Program& program, const Interpretation& interpretation,
                          const std::string& directives) {
  std::string out = gamma_text();
  out += "\n% Delta(P,I)\n";
  out += to_text(reify_input(program, interpretation));
  if (!directives.empty()) {
    out += "\n";
    out += directives;
    if (directives.back() != '\n') out += '\n';
  }
  return out;
}

void emit_debug_program(const Program& program, const Interpretation& interpretation,
                        const std::filesystem::path& path, const std::string& directives) {
  std::string text = debug_program(program, interpretation, directives);
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

std::string clingo_directives() {
  return "#show guessRule(R) : guessRule(R), unsatisfied.\n"
         "#show subst(X,C) : subst(X,C), unsatisfied.\n"
         "#show inLoop(X) : inLoop(X), isLoop, unfounded.\n"
         "#show isLoop : isLoop, unfounded.\n"
         "#show unsatisfied/0.\n"
         "#show unfounded/0.\n"
         "#show notAnswerSet/0.\n";
}

SolverConfig SolverConfig::for_command(std::string command) {
  SolverConfig c;
  c.command = std::move(command);
  if (c.command.find("clingo") != std::string::npos) c.directives = clingo_directives();
  return c;
}

std::optional<SolverConfig> SolverConfig::from_env() {
  const char* cmd = std::getenv("DEBUG_ASP_SOLVER_CMD");
  if (!cmd || !*cmd) return std::nullopt;
  SolverConfig c = for_command(cmd);
  if (const char* d = std::getenv("DEBUG_ASP_SOLVER_DIRECTIVES")) c.directives = d;
  return c;
}

SolverConfig SolverConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("command") || !j["command"].is_string()) {
    throw Error(ErrorKind::SolverNotConfigured, "solver config needs a \"command\" string");
  }
  SolverConfig c = for_command(j["command"].get<std::string>());
  if (j.contains("dialect")) {
    c.directives = j["dialect"] == "clingo" ? clingo_directives() : std::string{};
  }
  if (j.contains("directives")) c.directives = j["directives"].get<std::string>();
  return c;
}

SolverConfig SolverConfig::from_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot read solver config " + path.string());
  try {
    return from_json(nlohmann::json::parse(f));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SolverNotConfigured,
                "bad solver config " + path.string() + ": " + e.what());
  }
}

namespace {

void add_atoms(const std::string& line, MetaAnswerSet& set) {
  // Split on blanks (clingo) or on commas outside parentheses (DLV).
  std::string atom;
  int depth = 0;
  auto flush = [&] {
    if (!atom.empty()) set.atoms.insert(atom);
    atom.clear();
  };
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ' ' || c == '\t' || (c == ',' && depth == 0) || c == '{' || c == '}') && depth == 0) {
      flush();
    } else if (c != ' ') {
      atom += c;
    }
  }
  flush();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<MetaAnswerSet> parse_solver_output(const std::string& output) {
  std::vector<MetaAnswerSet> out;
  std::istringstream in(output);
  std::string line;
  bool expect_atoms = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (expect_atoms) {
      MetaAnswerSet s;
      add_atoms(line, s);
      out.push_back(std::move(s));
      expect_atoms = false;
      continue;
    }
    if (line.rfind("Answer:", 0) == 0) {
      expect_atoms = true;
    } else if (!line.empty() && line.front() == '{' && line.back() == '}') {
      MetaAnswerSet s;
      add_atoms(line, s);
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& suffix) {
    std::string pattern =
        (std::filesystem::temp_directory_path() / ("debug-asp-XXXXXX" + suffix)).string();
    int fd = mkstemps(pattern.data(), static_cast<int>(suffix.size()));
    if (fd < 0) throw Error(ErrorKind::Io, "cannot create a temporary file");
    close(fd);
    path = pattern;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

}  // namespace

std::vector<MetaAnswerSet> run_meta(const Program& program, const Interpretation& interpretation,
                                    const SolverConfig& config) {
  if (config.command.empty()) {
    throw Error(ErrorKind::SolverNotConfigured,
                "no solver configured; set DEBUG_ASP_SOLVER_CMD or pass --solver-cmd");
  }
  TempFile input(".lp");
  TempFile errors(".err");
  emit_debug_program(program, interpretation, input.path, config.directives);

  std::string cmd = config.command;
  const std::string placeholder = "{program}";
  if (auto pos = cmd.find(placeholder); pos != std::string::npos) {
    cmd.replace(pos, placeholder.size(), shell_quote(input.path.string()));
  } else {
    cmd += " " + shell_quote(input.path.string());
  }
  cmd += " 2>" + shell_quote(errors.path.string());

  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Error(ErrorKind::SolverFailure, "cannot start solver: " + config.command);
  std::string output;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  // clingo reports SAT/UNSAT/exhausted through 10, 20 and 30.
  bool ok = code == 0 || code == 10 || code == 20 || code == 30;
  if (!ok || output.find("INTERRUPTED") != std::string::npos ||
      output.find("UNKNOWN") != std::string::npos) {
    std::string diag = read_file(errors.path);
    if (diag.size() > 4000) diag.resize(4000);
    throw Error(ErrorKind::SolverFailure, "solver exited with status " + std::to_string(code) +
                                              "\n" + diag);
  }
  return parse_solver_output(output);
}

namespace {

// "name(a,b)" -> {"name", {"a","b"}}
std::pair<std::string, std::vector<std::string>> split_atom(const std::string& atom) {
  auto open = atom.find('(');
  if (open == std::string::npos) return {atom, {}};
  std::vector<std::string> args;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < atom.size(); ++i) {
    if (atom[i] == ',') {
      args.push_back(cur);
      cur.clear();
    } else {
      cur += atom[i];
    }
  }
  args.push_back(cur);
  return {atom.substr(0, open), args};
}

Constant parse_constant(const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return Constant::number(std::stoll(s));
  }
  return Constant::symbol(s);
}

}  // namespace

MetaFindings project(const std::vector<MetaAnswerSet>& answer_sets, const Program& program,
                     const Interpretation& interpretation) {
  LabelTable labels(program, interpretation);
  const auto& reverse = labels.reverse();
  auto lookup = [&](const std::string& label, LabelKind kind) -> const std::string& {
    auto it = reverse.find(label);
    if (it == reverse.end() || it->second.first != kind) {
      throw Error(ErrorKind::SolverFailure, "solver output mentions unknown label " + label);
    }
    return it->second.second;
  };

  MetaFindings out;
  out.answer_sets = answer_sets.size();
  for (const auto& s : answer_sets) {
    bool unsat = s.atoms.count("unsatisfied") != 0;
    bool unfounded = s.atoms.count("unfounded") != 0;
    bool loop = s.atoms.count("isLoop") != 0;
    if (!unsat && !unfounded) ++out.unflagged;
    std::optional<std::size_t> rule;
    Substitution theta;
    LiteralSet members;
    for (const auto& atom : s.atoms) {
      auto [name, args] = split_atom(atom);
      if (unsat && name == "guessRule" && args.size() == 1) {
        lookup(args[0], LabelKind::Rule);
        rule = std::stoul(args[0].substr(1)) - 1;
      } else if (unsat && name == "subst" && args.size() == 2) {
        theta.bind(lookup(args[0], LabelKind::Variable), parse_constant(args[1]));
      } else if (loop && unfounded && name == "inLoop" && args.size() == 1) {
        members.insert(parse_literal(lookup(args[0], LabelKind::Literal)));
      }
    }
    if (unsat && rule) {
      // Keep only the variables of the guessed rule (solvers without
      // projection may report more).
      Substitution restricted;
      for (const auto& v : program[*rule].variables()) {
        if (auto c = theta.lookup(v)) restricted.bind(v, *c);
      }
      out.unsatisfied.emplace(*rule, restricted);
    }
    if (loop && unfounded && !members.empty()) out.unfounded_loops.insert(members);
  }
  return out;
}

CrossCheckReport compare(const Explanation& native, const MetaFindings& meta) {
  CrossCheckReport r;
  r.native = native.verdict;
  r.meta = meta.answer_sets == 0 ? Verdict::IsAnswerSet : Verdict::NotAnswerSet;
  r.answer_sets = meta.answer_sets;
  if (r.native != r.meta) {
    r.mismatches.push_back("verdict: native " + std::string(verdict_name(r.native)) + ", meta " +
                           std::string(verdict_name(r.meta)));
  }
  if (meta.unflagged != 0) {
    r.mismatches.push_back(std::to_string(meta.unflagged) +
                           " meta answer set(s) contain neither unsatisfied nor unfounded");
  }
  std::set<std::pair<std::size_t, Substitution>> native_unsat;
  for (const auto& f : native.unsatisfied) native_unsat.emplace(f.rule_index, f.theta);
  for (const auto& [rule, theta] : native_unsat) {
    if (!meta.unsatisfied.count({rule, theta})) {
      r.mismatches.push_back("unsatisfied r" + std::to_string(rule + 1) + " " + theta.str() +
                             " missing from meta answer sets");
    }
  }
  for (const auto& [rule, theta] : meta.unsatisfied) {
    if (!native_unsat.count({rule, theta})) {
      r.mismatches.push_back("meta reports unsatisfied r" + std::to_string(rule + 1) + " " +
                             theta.str() + " which the explainer does not");
    }
  }
  auto show = [](const LiteralSet& s) { return Interpretation(s).str(); };
  std::set<LiteralSet> native_loops;
  for (const auto& f : native.unfounded_loops) native_loops.insert(f.loop.literals);
  for (const auto& l : native_loops) {
    if (!meta.unfounded_loops.count(l)) {
      r.mismatches.push_back("unfounded loop " + show(l) + " missing from meta answer sets");
    }
  }
  for (const auto& l : meta.unfounded_loops) {
    if (!native_loops.count(l)) {
      r.mismatches.push_back("meta reports unfounded loop " + show(l) +
                             " which the explainer does not");
    }
  }
  return r;
}

CrossCheckReport cross_check(const Program& program, const Interpretation& interpretation,
                             const SolverConfig& config) {
  Explanation native = explain(program, interpretation);
  auto sets = run_meta(program, interpretation, config);
  return compare(native, project(sets, program, interpretation));
}

nlohmann::json to_json(const CrossCheckReport& report) {
  return {
      {"agree", report.agree()},
      {"native_verdict", std::string(verdict_name(report.native))},
      {"meta_verdict", std::string(verdict_name(report.meta))},
      {"meta_answer_sets", report.answer_sets},
      {"mismatches", report.mismatches},
  };
}

}  // namespace aspdbg
