#ifndef CORECHOR_ENC_IMPLEMENTS_HPP
#define CORECHOR_ENC_IMPLEMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "corechor/chor/semantics.hpp"
#include "corechor/enc/encoder.hpp"
#include "corechor/prf/eval.hpp"
#include "corechor/prf/syntax.hpp"

namespace corechor::enc {

using CState = chor::GlobalState<ConcreteParams>;
using CConfig = chor::Configuration<ConcreteParams>;

struct RunOutcome {
  std::string scheduler;  // "first" or "random:<seed>"
  chor::RunStatus status;
  std::size_t steps;
  std::optional<Value> output;  // q.xx, when the run terminated
};

struct InputVerdict {
  std::vector<prf::Nat> input;
  prf::EvalResult expected;
  std::vector<RunOutcome> runs;
  bool pass;
};

struct ImplementsReport {
  std::string function;
  std::vector<InputVerdict> verdicts;
  bool pass = true;
};

/// Default-0 state with xs[i] stored in ps[i].xx.
inline CState input_state(const std::vector<Pid>& ps, const std::vector<prf::Nat>& xs) {
  CState s(0);
  for (std::size_t i = 0; i < ps.size(); ++i) s = s.update(ps[i], Var::xx, xs.at(i));
  return s;
}

/// Every vector of `arity` naturals in [0, max_input].
inline std::vector<std::vector<prf::Nat>> input_grid(std::size_t arity, prf::Nat max_input) {
  std::vector<std::vector<prf::Nat>> out{{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::vector<prf::Nat>> next;
    for (const auto& prefix : out) {
      for (prf::Nat v = 0; v <= max_input; ++v) {
        auto row = prefix;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Bounded check that P implements f with inputs ps and output q.
///
/// For each input vector the expected value comes from the evaluator with
/// budget `fuel`. A defined value must be produced at q.xx by every run
/// (`first` plus one random run per seed) within `fuel` steps; an undefined
/// one must never let a run reach `end` within `fuel` steps.
inline ImplementsReport check_implements(const CProgram& program, const prf::Function& f, const std::vector<Pid>& ps,
                                         Pid q, const std::vector<std::vector<prf::Nat>>& inputs, std::size_t fuel,
                                         const std::vector<std::uint64_t>& run_seeds) {
  if (ps.size() != f.arity()) throw ArityMismatch("input process count differs from the function's arity");
  ImplementsReport report{prf::to_string(f), {}, true};
  for (const auto& xs : inputs) {
    if (xs.size() != f.arity()) throw ArityMismatch("input vector length differs from the function's arity");
    InputVerdict verdict{xs, std::nullopt, {}, true};
    if (auto conv = prf::converges_within(f, xs, fuel)) verdict.expected = conv->value;
    std::vector<chor::Scheduler> schedulers{chor::Scheduler::first()};
    for (auto seed : run_seeds) schedulers.push_back(chor::Scheduler::random(seed));
    for (auto& sched : schedulers) {
      std::string name = sched.is_random() ? "random:" + std::to_string(sched.seed()) : "first";
      auto result = chor::run(CConfig{program, input_state(ps, xs)}, fuel, sched);
      RunOutcome outcome{name, result.status, result.trace.size(), std::nullopt};
      if (result.status == chor::RunStatus::terminated) outcome.output = result.last.state(q, Var::xx);
      if (verdict.expected) {
        verdict.pass = verdict.pass && outcome.output == verdict.expected;
      } else {
        verdict.pass = verdict.pass && result.status != chor::RunStatus::terminated;
      }
      verdict.runs.push_back(std::move(outcome));
    }
    report.pass = report.pass && verdict.pass;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

/// {function, inputs: [...], verdicts: [...], pass}
inline nlohmann::json to_json(const ImplementsReport& r) {
  nlohmann::json inputs = nlohmann::json::array();
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts) {
    inputs.push_back(v.input);
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& run : v.runs) {
      runs.push_back({{"scheduler", run.scheduler},
                      {"status", std::string(chor::status_name(run.status))},
                      {"steps", run.steps},
                      {"output", run.output ? nlohmann::json(*run.output) : nlohmann::json(nullptr)}});
    }
    verdicts.push_back({{"input", v.input},
                        {"expected", v.expected ? nlohmann::json(*v.expected) : nlohmann::json(nullptr)},
                        {"runs", std::move(runs)},
                        {"pass", v.pass}});
  }
  return {{"function", r.function}, {"inputs", std::move(inputs)}, {"verdicts", std::move(verdicts)}, {"pass", r.pass}};
}

}  // namespace corechor::enc

#endif  // CORECHOR_ENC_IMPLEMENTS_HPP
