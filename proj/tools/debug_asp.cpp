// debug-asp: explain why an interpretation is not an answer set.
//
// Exit codes: 0 = is an answer set (or success), 1 = not an answer set
// (or cross-check mismatch), 2 = error.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aspdbg/metaprogram.hpp"
#include "aspdbg/parser.hpp"
#include "aspdbg/report.hpp"
#include "aspdbg/service.hpp"

using namespace aspdbg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot read " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Program load_program(const std::string& path) {
  auto parsed = parse_program_with_warnings(slurp(path));
  for (const auto& w : parsed.warnings) {
    std::cerr << path << ":" << w.position().line << ":" << w.position().column
              << ": warning: " << w.detail() << "\n";
  }
  return std::move(parsed.program);
}

Interpretation load_interpretation(const std::string& path) {
  return parse_interpretation(slurp(path));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorKind::Io, "cannot write " + path);
}

SolverConfig solver_config(const std::string& cmd, const std::string& config_file) {
  if (!cmd.empty()) return SolverConfig::for_command(cmd);
  if (!config_file.empty()) return SolverConfig::from_file(config_file);
  if (auto env = SolverConfig::from_env()) return *env;
  throw Error(ErrorKind::SolverNotConfigured,
              "no solver configured; use --solver-cmd, --solver-config or DEBUG_ASP_SOLVER_CMD");
}

HttpServer* g_server = nullptr;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explain why an interpretation is not an answer set of a disjunctive program"};
  app.require_subcommand(1);

  std::string program_path, interp_path, format = "text", output, solver_cmd, solver_cfg;
  bool minimal_loops = false, first = false;
  std::size_t limit = 0, max_free = 20;

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("program", program_path, "Program file")->required();
    sub->add_option("interpretation", interp_path, "Interpretation file")->required();
  };

  auto* check = app.add_subcommand("check", "Exit 0 iff the interpretation is an answer set");
  add_inputs(check);

  auto* explain_cmd = app.add_subcommand("explain", "List unsatisfied rules and unfounded loops");
  add_inputs(explain_cmd);
  explain_cmd->add_flag("--minimal-loops", minimal_loops, "Only subset-minimal unfounded loops");
  explain_cmd->add_flag("--first", first, "Stop at the first finding of each kind");
  explain_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* solve = app.add_subcommand("solve", "Enumerate answer sets (small programs only)");
  solve->add_option("program", program_path, "Program file")->required();
  solve->add_option("--limit", limit, "Stop after k answer sets (0 = all)");
  solve->add_option("--max-free", max_free, "Search at most 2^n candidate subsets");

  auto* ground_cmd = app.add_subcommand("ground", "Print ground(P)");
  ground_cmd->add_option("program", program_path, "Program file")->required();

  auto* reify = app.add_subcommand("reify", "Print the facts reifying P and I");
  add_inputs(reify);
  reify->add_option("-o,--output", output, "Output file");

  auto* emit = app.add_subcommand("emit-meta", "Print the meta-program with the reified input");
  add_inputs(emit);
  emit->add_option("-o,--output", output, "Output file");
  std::string dialect = "none";
  emit->add_option("--directives", dialect, "Append solver directives: none or clingo")
      ->check(CLI::IsMember({"none", "clingo"}));

  auto* cross = app.add_subcommand("cross-check", "Compare the external solver with the explainer");
  add_inputs(cross);
  cross->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  for (auto* sub : {emit, cross}) {
    sub->add_option("--solver-cmd", solver_cmd, "Solver command template ({program} = file)");
    sub->add_option("--solver-config", solver_cfg, "JSON solver configuration file");
  }

  auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON service");
  std::string host = "127.0.0.1", static_dir, store_dir;
  int port = 8080;
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--port", port, "Port (0 = any free port)");
  serve->add_option("--static-dir", static_dir, "Directory served at /");
  serve->add_option("--store-dir", store_dir, "Directory for saved interpretations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      Program p = load_program(program_path);
      Interpretation i = load_interpretation(interp_path);
      bool yes = is_answer_set(p, i);
      std::cout << (yes ? "answer set\n" : "not an answer set\n");
      return yes ? 0 : 1;
    }
    if (explain_cmd->parsed()) {
      Program p = load_program(program_path);
      Interpretation i = load_interpretation(interp_path);
      ExplainOptions opts;
      opts.minimal_loops = minimal_loops;
      opts.first = first;
      Explanation e = explain(p, i, opts);
      if (format == "json") {
        std::cout << to_json(e, p).dump(2) << "\n";
      } else {
        std::cout << to_text(e, p);
      }
      return e.verdict == Verdict::IsAnswerSet ? 0 : 1;
    }
    if (solve->parsed()) {
      Program p = load_program(program_path);
      SolveOptions opts;
      opts.max_free_literals = max_free;
      auto sets = enumerate_answer_sets(p, limit, opts);
      for (std::size_t k = 0; k < sets.size(); ++k) {
        std::cout << "Answer " << k + 1 << ": " << sets[k].str() << "\n";
      }
      std::cout << (sets.empty() ? "no answer sets\n" : "");
      return 0;
    }
    if (ground_cmd->parsed()) {
      Program p = load_program(program_path);
      for (const auto& r : ground(p).rules) std::cout << r.str() << "\n";
      return 0;
    }
    if (reify->parsed()) {
      Program p = load_program(program_path);
      Interpretation i = load_interpretation(interp_path);
      write_output(output, to_text(reify_input(p, i)));
      return 0;
    }
    if (emit->parsed()) {
      Program p = load_program(program_path);
      Interpretation i = load_interpretation(interp_path);
      std::string directives;
      if (dialect == "clingo") {
        directives = clingo_directives();
      } else if (!solver_cmd.empty() || !solver_cfg.empty()) {
        directives = solver_config(solver_cmd, solver_cfg).directives;
      }
      write_output(output, debug_program(p, i, directives));
      return 0;
    }
    if (cross->parsed()) {
      Program p = load_program(program_path);
      Interpretation i = load_interpretation(interp_path);
      auto report = cross_check(p, i, solver_config(solver_cmd, solver_cfg));
      if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
      } else {
        std::cout << "native: " << verdict_name(report.native)
                  << "\nmeta:   " << verdict_name(report.meta) << " (" << report.answer_sets
                  << " answer sets)\n";
        for (const auto& m : report.mismatches) std::cout << "mismatch: " << m << "\n";
        std::cout << (report.agree() ? "agree\n" : "DISAGREE\n");
      }
      return report.agree() ? 0 : 1;
    }
    if (serve->parsed()) {
      ServiceOptions opts;
      opts.static_dir = static_dir;
      opts.store_dir = store_dir;
      Service service(opts);
      HttpServer server(service);
      int bound = server.bind(host, port);
      if (bound < 0) throw Error(ErrorKind::Io, "cannot bind " + host + ":" + std::to_string(port));
      g_server = &server;
      std::signal(SIGINT, [](int) {
        if (g_server) g_server->stop();
      });
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      server.listen();
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.position().line << ":" << e.position().column << ": "
              << kind_name(e.kind()) << ": " << e.detail() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
