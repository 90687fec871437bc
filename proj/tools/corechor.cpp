// corechor: command-line front end for the choreography and PRF tooling.
//
// Exit codes: 0 success/pass, 1 failure/counterexample, 2 usage error or
// inconclusive property check.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "corechor/corechor.hpp"

namespace {

using namespace corechor;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

using CProgram = chor::Program<ConcreteParams>;
using CState = chor::GlobalState<ConcreteParams>;
using CConfig = chor::Configuration<ConcreteParams>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct ExecOptions {
  std::string file;
  std::vector<std::string> state;
  std::string state_file;
  std::size_t fuel = 10'000;
  std::string sched = "first";
};

void add_exec_options(CLI::App* cmd, ExecOptions& o, bool with_fuel) {
  cmd->add_option("file", o.file, "choreography program (.cc)")->required();
  cmd->add_option("--state", o.state, "initial value of p.xx, as p=v (repeatable)");
  cmd->add_option("--state-file", o.state_file, "initial state, one 'p.x = v' per line");
  if (with_fuel) {
    cmd->add_option("--fuel", o.fuel, "maximum number of steps");
    cmd->add_option("--sched", o.sched, "scheduler: first or random:SEED");
  }
}

CState initial_state(const ExecOptions& o) {
  CState s = o.state_file.empty() ? CState(0) : text::parse_state(read_file(o.state_file));
  for (const auto& kv : o.state) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--state", "expected p=v, got " + kv);
    s = s.update(std::stoull(kv.substr(0, eq)), Var::xx, std::stoull(kv.substr(eq + 1)));
  }
  return s;
}

chor::Scheduler scheduler_from(const std::string& spec) {
  if (spec == "first") return chor::Scheduler::first();
  if (spec.rfind("random:", 0) == 0) return chor::Scheduler::random(std::stoull(spec.substr(7)));
  throw CLI::ValidationError("--sched", "expected first or random:SEED, got " + spec);
}

int cmd_check(const std::string& file, const std::string& universe_spec) {
  auto prog = text::parse_program(read_file(file));
  chor::NameSet<ConcreteParams> universe;
  if (universe_spec == "auto") {
    universe = chor::procedure_universe(prog);
  } else {
    std::stringstream ss(universe_spec);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty() && item[0] == 'X') item.erase(0, 1);
      universe.insert(std::stoull(item));
    }
  }
  try {
    if (!chor::well_ann(prog, universe)) {
      std::cout << "ill-formed: some procedure uses processes outside its annotation\n";
      return kFail;
    }
  } catch (const UnknownProcedure& e) {
    std::cout << "ill-formed: " << e.what() << '\n';
    return kFail;
  }
  if (auto why = chor::program_wf_diagnose(universe, prog)) {
    std::cout << "ill-formed: " << *why << '\n';
    return kFail;
  }
  std::cout << "well-formed (" << universe.size() << (universe.size() == 1 ? " procedure)\n" : " procedures)\n");
  return kOk;
}

std::optional<CConfig> load_checked(const ExecOptions& o) {
  auto prog = text::parse_program(read_file(o.file));
  if (!chor::ccp_wf(prog)) {
    std::cerr << "program is not well-formed; run 'corechor check' for details\n";
    return std::nullopt;
  }
  return CConfig{std::move(prog), initial_state(o)};
}

int cmd_run(const ExecOptions& o, bool as_trace) {
  auto config = load_checked(o);
  if (!config) return kFail;
  auto result = chor::run(std::move(*config), o.fuel, scheduler_from(o.sched));
  if (as_trace) {
    chor::write_trace_ndjson<ConcreteParams>(std::cout, result.trace);
  } else {
    std::cout << "status: " << chor::status_name(result.status) << '\n';
    std::cout << "steps: " << result.trace.size() << '\n';
    std::cout << "main: " << chor::to_string(result.last.program.main) << '\n';
    std::cout << "state:\n" << text::print_state(result.last.state);
  }
  return result.status == chor::RunStatus::stuck ? kFail : kOk;
}

int cmd_enum(const ExecOptions& o) {
  auto prog = text::parse_program(read_file(o.file));
  CConfig c{prog, initial_state(o)};
  for (const auto& t : chor::enabled(c)) {
    std::cout << chor::rule_name(t.rule) << ' ' << chor::to_string<ConcreteParams>(t.label) << " => "
              << chor::to_string(t.target) << '\n';
  }
  return kOk;
}

int cmd_prop(const std::string& name, const chor::CampaignOptions& opts, const std::string& cx_prefix) {
  auto report = chor::run_campaign(name, opts);
  std::cout << name << ": " << chor::verdict_name(report.verdict()) << " (" << report.trials << " trials, "
            << report.failures << " failures, " << report.inconclusive << " inconclusive)\n";
  if (report.first_failure && report.first_failure->counterexample) {
    const auto& cx = *report.first_failure->counterexample;
    std::ostringstream labels;
    for (const auto& l : cx.labels) labels << chor::to_string<ConcreteParams>(l) << '\n';
    std::cout << "counterexample: " << cx.diagnostic << '\n'
              << "-- program\n"
              << text::print_program(cx.configuration.program) << "-- state\n"
              << text::print_state(cx.configuration.state) << "-- labels\n"
              << labels.str();
    if (!cx_prefix.empty()) {
      write_file(cx_prefix + ".cc", text::print_program(cx.configuration.program));
      write_file(cx_prefix + ".state", text::print_state(cx.configuration.state));
      write_file(cx_prefix + ".labels", labels.str());
    }
  } else if (!report.first_inconclusive.empty()) {
    std::cout << "inconclusive: " << report.first_inconclusive << '\n';
  }
  switch (report.verdict()) {
    case chor::Verdict::pass: return kOk;
    case chor::Verdict::fail: return kFail;
    case chor::Verdict::inconclusive: return kUsage;
  }
  return kUsage;
}

/// A surface-syntax expression, or the name of a standard library function.
prf::Function function_from(const std::string& expr) {
  auto lib = prf::standard_library();
  if (auto it = lib.find(expr); it != lib.end()) return it->second;
  return prf::parse_function(expr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Core Choreographies: checker, interpreter, property tests and PRF compiler"};
  app.require_subcommand(1);

  std::string check_file;
  std::string universe = "auto";
  auto* check = app.add_subcommand("check", "check program well-formedness");
  check->add_option("file", check_file, "choreography program")->required();
  check->add_option("--universe", universe, "procedure universe: auto or a list like X0,X1");

  ExecOptions run_opts;
  auto* run = app.add_subcommand("run", "run a program and print the final configuration");
  add_exec_options(run, run_opts, true);

  ExecOptions trace_opts;
  auto* trace = app.add_subcommand("trace", "run a program and print its steps as JSON lines");
  add_exec_options(trace, trace_opts, true);

  ExecOptions enum_opts;
  auto* enumerate = app.add_subcommand("enum", "list the enabled transitions");
  add_exec_options(enumerate, enum_opts, false);

  std::string prop_name;
  std::string cx_prefix;
  chor::CampaignOptions campaign;
  auto* prop = app.add_subcommand("prop", "check a semantic property on generated programs");
  prop->add_option("name", prop_name, "progress, deadlock, diamond, confluence or termination")
      ->required()
      ->check(CLI::IsMember(chor::property_names()));
  prop->add_option("--trials", campaign.trials, "number of generated instances");
  prop->add_option("--seed", campaign.seed, "campaign seed");
  prop->add_option("--depth", campaign.depth, "run length / exploration depth");
  prop->add_option("--fuel", campaign.run_fuel, "steps per run for deadlock");
  prop->add_option("--counterexample", cx_prefix, "write PREFIX.cc, PREFIX.state, PREFIX.labels on failure");

  auto* prf_cmd = app.add_subcommand("prf", "partial recursive functions");
  prf_cmd->require_subcommand(1);

  std::string eval_expr;
  std::vector<prf::Nat> eval_args;
  std::size_t eval_fuel = 1000;
  auto* eval = prf_cmd->add_subcommand("eval", "evaluate a function with a step budget");
  eval->add_option("expr", eval_expr, "function, e.g. \"R(P[1/1], C(S; P[2/3]))\"")->required();
  eval->add_option("args", eval_args, "natural-number arguments");
  eval->add_option("--fuel", eval_fuel, "step budget");

  std::string compile_expr;
  std::string compile_out;
  auto* compile = prf_cmd->add_subcommand("compile", "compile a function to a choreography");
  compile->add_option("expr", compile_expr, "function")->required();
  compile->add_option("-o,--output", compile_out, "output file (default stdout)");

  std::string impl_expr;
  prf::Nat max_input = 5;
  std::size_t impl_fuel = 100'000;
  std::size_t seeds = 3;
  auto* implements = prf_cmd->add_subcommand("implements", "check that the compiled program implements the function");
  implements->add_option("expr", impl_expr, "function")->required();
  implements->add_option("--max-input", max_input, "inputs range over 0..M");
  implements->add_option("--fuel", impl_fuel, "step budget for evaluation and for each run");
  implements->add_option("--seeds", seeds, "number of random schedulers besides first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(check_file, universe);
    if (*run) return cmd_run(run_opts, false);
    if (*trace) return cmd_run(trace_opts, true);
    if (*enumerate) return cmd_enum(enum_opts);
    if (*prop) return cmd_prop(prop_name, campaign, cx_prefix);
    if (*eval) {
      auto f = function_from(eval_expr);
      auto r = prf::eval(f, eval_fuel, eval_args);
      std::cout << (r ? "Some " + std::to_string(*r) : std::string("None")) << '\n';
      return kOk;
    }
    if (*compile) {
      auto text = text::print_program(enc::encode_default(function_from(compile_expr)));
      if (compile_out.empty()) {
        std::cout << text;
      } else {
        write_file(compile_out, text);
      }
      return kOk;
    }
    if (*implements) {
      auto f = function_from(impl_expr);
      std::vector<std::uint64_t> run_seeds;
      for (std::size_t i = 1; i <= seeds; ++i) run_seeds.push_back(i);
      std::vector<Pid> ps(f.arity());
      for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = i + 1;
      auto report = enc::check_implements(enc::encode_default(f), f, ps, 0, enc::input_grid(f.arity(), max_input),
                                          impl_fuel, run_seeds);
      std::cout << enc::to_json(report).dump(2) << '\n';
      return report.pass ? kOk : kFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
