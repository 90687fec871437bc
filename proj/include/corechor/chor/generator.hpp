#ifndef CORECHOR_CHOR_GENERATOR_HPP
#define CORECHOR_CHOR_GENERATOR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "corechor/chor/properties.hpp"
#include "corechor/chor/semantics.hpp"
#include "corechor/chor/wellformed.hpp"
#include "corechor/concrete.hpp"

namespace corechor::chor {

using CProgram = Program<ConcreteParams>;
using CChor = Choreography<ConcreteParams>;
using CState = GlobalState<ConcreteParams>;
using CConfig = Configuration<ConcreteParams>;
using CEta = Eta<ConcreteParams>;

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_depth = 6;
  std::size_t processes = 6;  // at least 3
  std::size_t procedures = 3;
  double recursion_probability = 0.4;
  double over_annotation_probability = 0.25;
};

namespace detail {

class ChorGen {
 public:
  ChorGen(const GenConfig& cfg, std::mt19937_64& rng) : cfg_(cfg), rng_(rng) {
    if (cfg.processes < 3) throw std::invalid_argument("generator needs at least three processes");
  }

  Pid pid() { return std::uniform_int_distribution<Pid>(0, cfg_.processes - 1)(rng_); }

  std::pair<Pid, Pid> two_pids() {
    Pid p = pid();
    Pid q = std::uniform_int_distribution<Pid>(0, cfg_.processes - 2)(rng_);
    if (q >= p) ++q;
    return {p, q};
  }

  bool coin(double prob) { return std::bernoulli_distribution(prob)(rng_); }

  CChor leaf() {
    if (cfg_.procedures > 0 && coin(cfg_.recursion_probability)) {
      return call<ConcreteParams>(std::uniform_int_distribution<ProcName>(0, cfg_.procedures - 1)(rng_));
    }
    return CChor{};
  }

  CEta eta() {
    auto [p, q] = two_pids();
    if (coin(0.25)) return Sel<ConcreteParams>{p, q, coin(0.5) ? Label::left : Label::right};
    auto e = static_cast<Expr>(std::uniform_int_distribution<int>(0, 2)(rng_));
    return Com<ConcreteParams>{p, e, q, coin(0.7) ? Var::xx : Var::yy};
  }

  /// An action not involving `p`.
  CEta eta_avoiding(Pid p) {
    for (;;) {
      auto a = eta();
      if (eta_sender<ConcreteParams>(a) != p && eta_receiver<ConcreteParams>(a) != p) return a;
    }
  }

  CChor chor(std::size_t depth) {
    if (depth == 0) return leaf();
    switch (std::uniform_int_distribution<int>(0, 10)(rng_)) {
      case 0:
        return leaf();
      case 10: {
        // Both branches start with the same independent action, which can
        // then be performed before the conditional.
        Pid p = pid();
        auto shared = eta_avoiding(p);
        auto then_branch = interact<ConcreteParams>(shared, chor(depth - 1));
        auto else_branch = interact<ConcreteParams>(shared, chor(depth - 1));
        return cond<ConcreteParams>(p, BExpr::compare, then_branch, else_branch);
      }
      case 1: {
        auto [p, q] = two_pids();
        return sel<ConcreteParams>(p, q, coin(0.5) ? Label::left : Label::right, chor(depth - 1));
      }
      case 2:
      case 3: {
        Pid p = pid();
        auto then_branch = chor(depth - 1);
        auto else_branch = chor(depth - 1);
        return cond<ConcreteParams>(p, BExpr::compare, then_branch, else_branch);
      }
      default: {
        auto [p, q] = two_pids();
        auto e = static_cast<Expr>(std::uniform_int_distribution<int>(0, 2)(rng_));
        auto x = coin(0.7) ? Var::xx : Var::yy;
        return com<ConcreteParams>(p, e, q, x, chor(depth - 1));
      }
    }
  }

 private:
  const GenConfig& cfg_;
  std::mt19937_64& rng_;
};

}  // namespace detail

/// Random well-formed initial program, deterministic in `cfg.seed`.
inline CProgram gen_program(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  detail::ChorGen gen(cfg, rng);
  CProgram prog;
  NameSet<ConcreteParams> names;
  for (ProcName x = 0; x < cfg.procedures; ++x) {
    prog.procedures.define(x, {{}, gen.chor(cfg.max_depth)});
    names.insert(x);
  }
  prog.main = gen.chor(cfg.max_depth == 0 ? 0 : cfg.max_depth + 2);
  annotate_least_fixpoint(prog.procedures, names);
  // A procedure that touches no process (e.g. its body is End) still needs a
  // non-empty annotation; pick one and let it propagate to callers.
  bool padded = false;
  for (const auto& x : names) {
    auto def = prog.procedures(x);
    if (def.annotation.empty() || gen.coin(cfg.over_annotation_probability)) {
      def.annotation.insert(gen.pid());
      prog.procedures.define(x, std::move(def));
      padded = true;
    }
  }
  if (padded) annotate_least_fixpoint(prog.procedures, names);
  return prog;
}

/// Small random values in every process's two variables.
inline CState gen_state(std::mt19937_64& rng, std::size_t processes, Value max_value = 3) {
  CState s(0);
  std::uniform_int_distribution<Value> dist(0, max_value);
  for (Pid p = 0; p < processes; ++p) {
    s = s.update(p, Var::xx, dist(rng));
    s = s.update(p, Var::yy, dist(rng));
  }
  return s;
}

/// A generated program and state, advanced by a random number of random
/// steps so that runtime terms appear in main.
/// When `wf_ok` is given, well-formedness is re-checked after every prefix
/// step and the flag cleared on a violation.
inline CConfig gen_configuration(const GenConfig& cfg, std::size_t max_prefix = 4, bool* wf_ok = nullptr) {
  std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995ULL);
  CConfig c{gen_program(cfg), gen_state(rng, cfg.processes)};
  std::size_t prefix = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
  Scheduler sched = Scheduler::random(rng());
  if (!wf_ok) return run(std::move(c), prefix, std::move(sched)).last;
  auto universe = procedure_universe(c.program);
  *wf_ok = ccp_wf(c.program, universe);
  return run(std::move(c), prefix, std::move(sched), [&](const CConfig& next, const auto&) {
           if (!ccp_wf(next.program, universe)) *wf_ok = false;
         }).last;
}

/// Per-trial seed derived from the campaign seed.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

struct CampaignOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t depth = 6;
  std::size_t run_fuel = 200;
  std::size_t node_limit = default_node_limit;
  GenConfig gen{};
};

struct CampaignReport {
  std::string property;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  std::size_t wf_violations = 0;
  std::optional<PropertyReport<ConcreteParams>> first_failure;
  std::string first_inconclusive;

  Verdict verdict() const noexcept {
    if (failures > 0) return Verdict::fail;
    if (inconclusive > 0) return Verdict::inconclusive;
    return Verdict::pass;
  }
};

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"progress", "deadlock", "diamond", "confluence", "termination"};
  return names;
}

/// One property over `opts.trials` generated instances. Run-based checks
/// re-verify well-formedness after every step.
inline CampaignReport run_campaign(const std::string& property, const CampaignOptions& opts) {
  CampaignReport report;
  report.property = property;
  for (std::size_t i = 0; i < opts.trials; ++i) {
    GenConfig gc = opts.gen;
    gc.seed = trial_seed(opts.seed, i);
    std::mt19937_64 rng(gc.seed);
    PropertyReport<ConcreteParams> r;
    bool wf_ok = true;
    auto generated = [&] { return gen_configuration(gc, 4, &wf_ok); };
    if (property == "progress") {
      auto c = generated();
      r = check_progress(c.program, c.state);
    } else if (property == "deadlock") {
      auto prog = gen_program(gc);
      auto s = gen_state(rng, gc.processes);
      WfRecheck<ConcreteParams> wf{procedure_universe(prog)};
      r = check_deadlock_freedom(prog, s, opts.run_fuel, rng(), wf);
    } else if (property == "diamond") {
      // Along a random run from the instance, not only at its start.
      auto c = generated();
      auto universe = procedure_universe(c.program);
      r = check_diamond(c.program.procedures, c.program.main, c.state);
      run(c, opts.depth, Scheduler::random(rng()), [&](const CConfig& next, const auto&) {
        if (r.verdict == Verdict::fail) return;
        if (!ccp_wf(next.program, universe)) {
          r = PropertyReport<ConcreteParams>::fail(property, {next, {}, "well-formedness lost after a step"});
          return;
        }
        r = check_diamond(next.program.procedures, next.program.main, next.state);
      });
    } else if (property == "confluence") {
      auto c = generated();
      WfRecheck<ConcreteParams> wf{procedure_universe(c.program)};
      r = check_confluence(c, opts.depth, {rng(), rng()}, opts.depth, opts.node_limit, wf);
    } else if (property == "termination") {
      // Deep enough to finish every run when the instance terminates.
      auto c = generated();
      auto probe = run(c, opts.run_fuel, Scheduler::first());
      std::size_t depth = probe.status == RunStatus::terminated ? probe.trace.size() + 2 : 3 * opts.depth;
      r = check_termination_unique(c, depth, opts.node_limit);
    } else {
      throw std::invalid_argument("unknown property: " + property);
    }
    if (!wf_ok || (r.counterexample && r.counterexample->diagnostic.starts_with("well-formedness"))) {
      ++report.wf_violations;
    }
    if (!wf_ok && r.verdict != Verdict::fail) {
      r = PropertyReport<ConcreteParams>::fail(
          property, {CConfig{gen_program(gc), CState(0)}, {}, "well-formedness lost while generating the instance"});
    }
    ++report.trials;
    if (r.verdict == Verdict::fail) {
      if (!report.first_failure) report.first_failure = std::move(r);
      ++report.failures;
    } else if (r.verdict == Verdict::inconclusive) {
      if (report.first_inconclusive.empty()) report.first_inconclusive = r.note;
      ++report.inconclusive;
    }
  }
  return report;
}

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_GENERATOR_HPP
