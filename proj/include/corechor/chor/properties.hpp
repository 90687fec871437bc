#ifndef CORECHOR_CHOR_PROPERTIES_HPP
#define CORECHOR_CHOR_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corechor/chor/print.hpp"
#include "corechor/chor/semantics.hpp"
#include "corechor/chor/wellformed.hpp"

namespace corechor::chor {

enum class Verdict { pass, fail, inconclusive };

constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

template <class P>
struct Counterexample {
  /// The configuration the property fails on; re-checking it fails again.
  Configuration<P> configuration;
  /// Labels relevant to the failure (the path that led there, or the pair
  /// of transitions that did not commute).
  std::vector<RichLabel<P>> labels;
  std::string diagnostic;
};

template <class P>
struct PropertyReport {
  std::string property;
  std::size_t trials = 1;
  Verdict verdict = Verdict::pass;
  std::optional<Counterexample<P>> counterexample;  // set iff verdict == fail
  std::string note;

  bool passed() const noexcept { return verdict == Verdict::pass; }

  static PropertyReport pass(std::string name) { return {std::move(name), 1, Verdict::pass, std::nullopt, {}}; }

  static PropertyReport fail(std::string name, Counterexample<P> cx) {
    return {std::move(name), 1, Verdict::fail, std::move(cx), {}};
  }

  static PropertyReport inconclusive(std::string name, std::string why) {
    return {std::move(name), 1, Verdict::inconclusive, std::nullopt, std::move(why)};
  }
};

/// Optional per-step well-formedness re-check applied by the run-based
/// checkers. An empty universe disables it.
template <class P>
struct WfRecheck {
  std::optional<NameSet<P>> universe;
};

template <class P>
PropertyReport<P> check_progress(const Program<P>& prog, const GlobalState<P>& s) {
  Configuration<P> c{prog, s};
  if (prog.main.is_end() || !enabled(c).empty()) return PropertyReport<P>::pass("progress");
  return PropertyReport<P>::fail("progress", {c, {}, "non-terminated configuration has no transition"});
}

namespace detail {

template <class P>
std::vector<RichLabel<P>> labels_of(const Trace<P>& trace) {
  std::vector<RichLabel<P>> out;
  out.reserve(trace.size());
  for (const auto& e : trace) out.push_back(e.label);
  return out;
}

/// Runs a scheduler, checking progress (and optionally well-formedness) at
/// every configuration reached. Returns the failure, if any.
template <class P>
std::optional<Counterexample<P>> guarded_run(const Configuration<P>& start, std::size_t fuel, Scheduler sched,
                                             const WfRecheck<P>& wf, Configuration<P>* end = nullptr) {
  std::optional<Counterexample<P>> failure;
  Trace<P> path;
  auto check = [&](const Configuration<P>& c) {
    if (failure) return;
    if (wf.universe && !ccp_wf(c.program, *wf.universe)) {
      failure = Counterexample<P>{c, labels_of(path), "well-formedness lost after a step"};
      return;
    }
    if (!c.program.main.is_end() && enabled(c).empty()) {
      failure = Counterexample<P>{c, labels_of(path), "stuck: non-terminated configuration has no transition"};
    }
  };
  check(start);
  if (failure) return failure;
  Configuration<P> c = start;
  for (std::size_t i = 0; i < fuel && !c.program.main.is_end(); ++i) {
    auto ts = enabled(c);
    if (ts.empty()) break;
    const auto& t = ts[sched.pick(ts.size())];
    path.push_back({t.rule, t.label});
    c = apply(c, t);
    check(c);
    if (failure) return failure;
  }
  if (end) *end = std::move(c);
  return std::nullopt;
}

}  // namespace detail

/// Random-scheduler run of up to `fuel` steps; fails on any stuck
/// configuration (and on lost well-formedness when `wf` carries a universe).
template <class P>
PropertyReport<P> check_deadlock_freedom(const Program<P>& prog, const GlobalState<P>& s, std::size_t fuel,
                                         std::uint64_t seed = 0, const WfRecheck<P>& wf = {}) {
  auto failure = detail::guarded_run(Configuration<P>{prog, s}, fuel, Scheduler::random(seed), wf);
  if (failure) return PropertyReport<P>::fail("deadlock-freedom", std::move(*failure));
  return PropertyReport<P>::pass("deadlock-freedom");
}

/// Every pair of distinct enabled labels commutes to the same configuration.
template <class P>
PropertyReport<P> check_diamond(const DefSet<P>& defs, const Choreography<P>& c, const GlobalState<P>& s) {
  Configuration<P> base{Program<P>{defs, c}, s};
  auto ts = enabled(base);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (ts[i].label == ts[j].label) continue;
      auto fail = [&](std::string why) {
        return PropertyReport<P>::fail("diamond", {base, {ts[i].label, ts[j].label}, std::move(why)});
      };
      auto c1 = apply(base, ts[i]);
      auto c2 = apply(base, ts[j]);
      std::optional<Configuration<P>> c12;
      std::optional<Configuration<P>> c21;
      try {
        c12 = step(c1, ts[j].label);
        c21 = step(c2, ts[i].label);
      } catch (const NoSuchTransition&) {
        return fail("second transition not enabled after the first");
      }
      if (!(c12->program.main == c21->program.main)) return fail("the two orders reach different choreographies");
      if (!states_ext_equal(c12->state, c21->state)) return fail("the two orders reach different states");
    }
  }
  return PropertyReport<P>::pass("diamond");
}

/// Two random runs of up to `k` steps, then a bounded search for a common
/// configuration reachable from both ends within `join_depth` steps each.
template <class P>
PropertyReport<P> check_confluence(const Configuration<P>& c, std::size_t k, std::pair<std::uint64_t, std::uint64_t> seeds,
                                   std::size_t join_depth, std::size_t node_limit = default_node_limit,
                                   const WfRecheck<P>& wf = {}) {
  Configuration<P> end1 = c;
  Configuration<P> end2 = c;
  if (auto f = detail::guarded_run(c, k, Scheduler::random(seeds.first), wf, &end1)) {
    return PropertyReport<P>::fail("confluence", std::move(*f));
  }
  if (auto f = detail::guarded_run(c, k, Scheduler::random(seeds.second), wf, &end2)) {
    return PropertyReport<P>::fail("confluence", std::move(*f));
  }
  const auto& defs = c.program.procedures;
  try {
    auto from1 = explore(defs, ExplorationKey<P>{end1.program.main, end1.state}, join_depth, node_limit);
    auto from2 = explore(defs, ExplorationKey<P>{end2.program.main, end2.state}, join_depth, node_limit);
    const auto& small = from1.size() <= from2.size() ? from1 : from2;
    const auto& large = from1.size() <= from2.size() ? from2 : from1;
    for (const auto& key : small) {
      if (large.contains(key)) return PropertyReport<P>::pass("confluence");
    }
  } catch (const BudgetExceeded& e) {
    return PropertyReport<P>::inconclusive("confluence", e.what());
  }
  return PropertyReport<P>::fail(
      "confluence", {c, {}, "runs with seeds " + std::to_string(seeds.first) + " and " + std::to_string(seeds.second) +
                                " do not join within " + std::to_string(join_depth) + " steps"});
}

/// At most one terminal state, up to extensional equality.
template <class P>
PropertyReport<P> check_termination_unique(const Configuration<P>& c, std::size_t depth,
                                           std::size_t node_limit = default_node_limit) {
  try {
    auto terminals = reachable_terminals(c, depth, node_limit);
    if (terminals.size() <= 1) return PropertyReport<P>::pass("termination-unique");
    return PropertyReport<P>::fail("termination-unique",
                                   {c, {}, std::to_string(terminals.size()) + " distinct terminal states"});
  } catch (const BudgetExceeded& e) {
    return PropertyReport<P>::inconclusive("termination-unique", e.what());
  }
}

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_PROPERTIES_HPP
