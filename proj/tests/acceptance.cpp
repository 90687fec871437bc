// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corechor/corechor.hpp"
#include "prf_corpus.hpp"

namespace {

using namespace corechor;
using prf::Function;
using prf::Nat;
namespace lib = prf::lib;

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::vector<std::vector<Nat>> grid(std::size_t arity, Nat max) { return enc::input_grid(arity, max); }

// Shared by criteria 1-4.
chor::CampaignReport deadlock_report;
chor::CampaignReport diamond_report;
chor::CampaignReport confluence_report;
chor::CampaignReport termination_report;

// Shared by criteria 8 and 11.
std::vector<Function> encoded_functions;

Outcome progress_and_deadlock() {
  chor::CampaignOptions opts;
  opts.trials = 1000;
  opts.seed = 1;
  opts.run_fuel = 200;
  deadlock_report = chor::run_campaign("deadlock", opts);
  auto progress = chor::run_campaign("progress", opts);
  std::size_t failures = deadlock_report.failures + progress.failures;
  return {failures == 0, "1000 programs x 200 random steps, plus 1000 progress checks: " +
                             std::to_string(failures) + " stuck configurations"};
}

Outcome diamond() {
  chor::CampaignOptions opts;
  opts.trials = 1000;
  opts.seed = 2;
  diamond_report = chor::run_campaign("diamond", opts);
  return {diamond_report.failures == 0,
          "1000 configurations (checked along 6-step runs): " + std::to_string(diamond_report.failures) + " failures"};
}

Outcome confluence_and_termination() {
  chor::CampaignOptions opts;
  opts.trials = 200;
  opts.seed = 3;
  opts.depth = 6;
  confluence_report = chor::run_campaign("confluence", opts);
  termination_report = chor::run_campaign("termination", opts);
  std::size_t failures = confluence_report.failures + termination_report.failures;
  std::size_t inconclusive = confluence_report.inconclusive + termination_report.inconclusive;
  return {failures == 0 && inconclusive == 0,
          "200 configurations, k = 6: " + std::to_string(failures) + " failures, " + std::to_string(inconclusive) +
              " inconclusive"};
}

Outcome wf_preservation() {
  std::size_t v = deadlock_report.wf_violations + diamond_report.wf_violations + confluence_report.wf_violations +
                  termination_report.wf_violations;
  std::size_t trials =
      deadlock_report.trials + diamond_report.trials + confluence_report.trials + termination_report.trials;
  return {v == 0 && trials == 2400,
          "re-checked after every step of the runs in criteria 1-3 (" + std::to_string(trials) +
              " instances): " + std::to_string(v) + " violations"};
}

Outcome evaluator() {
  std::size_t checks = 0;
  std::size_t wrong = 0;
  auto expect = [&](const Function& f, std::size_t s, std::vector<Nat> xs, Nat want) {
    ++checks;
    if (prf::eval(f, s, xs) != want) ++wrong;
  };
  for (Nat m = 0; m <= 10; ++m) {
    for (Nat n = 0; n <= 10; ++n) {
      for (std::size_t s : {0, 1, 50}) {
        expect(lib::add(), s, {m, n}, m + n);
        expect(lib::mul(), s, {m, n}, m * n);
        expect(lib::gt(), s, {m, n}, m > n);
        expect(lib::lt(), s, {m, n}, m < n);
        expect(lib::eq(), s, {m, n}, m == n);
      }
    }
    for (std::size_t s : {0, 1, 50}) expect(lib::sign(), s, {m}, m > 0);
  }
  return {wrong == 0, std::to_string(checks) + " exact checks (363 for add): " + std::to_string(wrong) + " wrong"};
}

Outcome stability() {
  std::size_t changes = 0;
  std::size_t evaluations = 0;
  for (const auto& [name, f] : prf_corpus::corpus()) {
    for (const auto& xs : grid(f.arity(), 5)) {
      prf::EvalResult seen;
      for (std::size_t s = 0; s <= 30; ++s) {
        auto r = prf::eval(f, s, xs);
        ++evaluations;
        if (seen && r != seen) ++changes;
        if (r) seen = r;
      }
    }
  }
  return {changes == 0, std::to_string(prf_corpus::corpus().size()) + " functions, " + std::to_string(evaluations) +
                            " evaluations: " + std::to_string(changes) + " changed values"};
}

Outcome minimisation() {
  std::mt19937_64 rng(7);
  std::size_t bad = 0;
  for (int i = 0; i < 50; ++i) {
    auto inst = prf_corpus::min_instance(rng);
    auto c = prf::converges_within(Function::minimization(inst.h), {}, 100);
    if (!c || c->value != inst.z || c->steps > inst.z + 1) {
      ++bad;
      continue;
    }
    for (Nat k = 0; k < inst.z; ++k) {
      auto v = prf::eval(inst.h, 100, {k});
      if (!v || *v == 0) ++bad;
    }
  }
  return {bad == 0, "50 instances with first zero <= 10: " + std::to_string(bad) + " mismatches"};
}

Outcome encoding_wf() {
  encoded_functions.clear();
  for (auto& [name, f] : prf::standard_library()) encoded_functions.push_back(f);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) encoded_functions.push_back(prf_corpus::random_function(rng, 1 + rng() % 3, 3, true));
  std::size_t bad = 0;
  for (const auto& f : encoded_functions) {
    if (!chor::ccp_wf(enc::encode_default(f))) ++bad;
  }
  return {bad == 0, std::to_string(encoded_functions.size()) + " encodings (library + 100 random, depth <= 3): " +
                        std::to_string(bad) + " ill-formed"};
}

Outcome implements() {
  std::size_t failed = 0;
  std::size_t runs = 0;
  for (const char* name : {"add", "mul", "sign", "gt", "lt", "eq"}) {
    auto f = prf::standard_library().at(name);
    std::vector<Pid> ps(f.arity());
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = i + 1;
    auto report = enc::check_implements(enc::encode_default(f), f, ps, 0, grid(f.arity(), 5), 100000, {1, 2, 3});
    for (const auto& v : report.verdicts) {
      runs += v.runs.size();
      if (!v.pass || !v.expected) ++failed;
    }
  }
  return {failed == 0, "add, mul, sign, gt, lt, eq on 0..5, {first} + 3 seeds (" + std::to_string(runs) +
                           " runs): " + std::to_string(failed) + " failing inputs"};
}

Outcome divergence() {
  auto f = Function::minimization(Function::compose(Function::successor(), {Function::projection(0, 1)}));
  auto prog = enc::encode_default(f);
  std::vector<chor::Scheduler> scheds{chor::Scheduler::first(), chor::Scheduler::random(1), chor::Scheduler::random(2),
                                      chor::Scheduler::random(3)};
  std::size_t terminated = 0;
  for (auto& s : scheds) {
    auto r = chor::run(chor::Configuration<ConcreteParams>{prog, chor::GlobalState<ConcreteParams>(0)}, 10000, s);
    if (r.status != chor::RunStatus::out_of_fuel) ++terminated;
  }
  return {terminated == 0, "M(C(S; P[1/1])) for 10^4 steps under 4 schedulers: " + std::to_string(terminated) +
                               " runs reached end or got stuck"};
}

Outcome resources() {
  std::size_t violations = 0;
  for (const auto& f : encoded_functions) {
    std::vector<Pid> ps(f.arity());
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = i + 1;
    enc::EncodingContext ctx{ps, 0, static_cast<Pid>(f.arity() + 1), 0};
    violations += enc::resource_violations(f, ctx).size();
    // The whole program, not only the block: nothing beyond the exit procedure.
    auto prog = enc::encode_default(f);
    if (prog.procedures.entries().rbegin()->first != enc::gamma(f)) ++violations;
  }
  return {violations == 0 && !encoded_functions.empty(),
          std::to_string(encoded_functions.size()) + " programs from criterion 8: " + std::to_string(violations) +
              " uses beyond n + pi(f) processes or X + gamma(f) procedures"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "progress / deadlock-freedom", 60, progress_and_deadlock},
      {2, "diamond property", 60, diamond},
      {3, "confluence + termination uniqueness", 120, confluence_and_termination},
      {4, "well-formedness preservation", 1e9, wf_preservation},
      {5, "PRF evaluator correctness", 5, evaluator},
      {6, "evaluation stability", 10, stability},
      {7, "minimisation semantics", 10, minimisation},
      {8, "encoding well-formedness", 30, encoding_wf},
      {9, "encoding soundness (convergent)", 120, implements},
      {10, "encoding soundness (divergent)", 30, divergence},
      {11, "resource-bound scan", 5, resources},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit_seconds;
    bool ok = o.ok && in_time;
    if (!ok) ++failed;
    std::string limit = c.limit_seconds < 1e8 ? " < " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : "";
    std::printf("[%s] %2d %s: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), o.detail.c_str(), secs,
                limit.c_str(), in_time ? "" : ", over the time limit");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
