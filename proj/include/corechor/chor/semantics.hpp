#ifndef CORECHOR_CHOR_SEMANTICS_HPP
#define CORECHOR_CHOR_SEMANTICS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "corechor/chor/syntax.hpp"
#include "corechor/chor/wellformed.hpp"
#include "corechor/error.hpp"

namespace corechor::chor {

// ---------------------------------------------------------------------------
// Labels

template <class P>
struct RCom {
  typename P::Pid p;
  typename P::Value v;
  typename P::Pid q;
  typename P::Var x;
  friend bool operator==(const RCom&, const RCom&) = default;
};

template <class P>
struct RSel {
  typename P::Pid p;
  typename P::Pid q;
  Label l;
  friend bool operator==(const RSel&, const RSel&) = default;
};

template <class P>
struct RCond {
  typename P::Pid p;
  friend bool operator==(const RCond&, const RCond&) = default;
};

template <class P>
struct RCall {
  typename P::ProcName name;
  typename P::Pid p;
  friend bool operator==(const RCall&, const RCall&) = default;
};

/// Internal transition label, carrying the received value and target variable.
template <class P>
using RichLabel = std::variant<RCom<P>, RSel<P>, RCond<P>, RCall<P>>;

template <class P>
struct LCom {
  typename P::Pid p;
  typename P::Value v;
  typename P::Pid q;
  friend bool operator==(const LCom&, const LCom&) = default;
};

template <class P>
struct LSel {
  typename P::Pid p;
  typename P::Pid q;
  Label l;
  friend bool operator==(const LSel&, const LSel&) = default;
};

template <class P>
struct LTau {
  typename P::Pid p;
  friend bool operator==(const LTau&, const LTau&) = default;
};

/// Observable transition label.
template <class P>
using TransitionLabel = std::variant<LCom<P>, LSel<P>, LTau<P>>;

template <class P>
TransitionLabel<P> forget(const RichLabel<P>& rl) {
  return std::visit(
      [](const auto& l) -> TransitionLabel<P> {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, RCom<P>>) {
          return LCom<P>{l.p, l.v, l.q};
        } else if constexpr (std::is_same_v<T, RSel<P>>) {
          return LSel<P>{l.p, l.q, l.l};
        } else {
          return LTau<P>{l.p};
        }
      },
      rl);
}

template <class P>
PidSet<P> label_processes(const RichLabel<P>& rl) {
  return std::visit(
      [](const auto& l) -> PidSet<P> {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, RCom<P>> || std::is_same_v<T, RSel<P>>) {
          return {l.p, l.q};
        } else {
          return {l.p};
        }
      },
      rl);
}

template <class P>
bool disjoint(const PidSet<P>& a, const PidSet<P>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Single-step relation

enum class Rule {
  com,
  sel,
  then_branch,
  else_branch,
  delay_eta,
  delay_cond,
  delay_call,
  call_start,
  call_local,
  call_enter,
  call_finish,
};

constexpr std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::com: return "C_Com";
    case Rule::sel: return "C_Sel";
    case Rule::then_branch: return "C_Then";
    case Rule::else_branch: return "C_Else";
    case Rule::delay_eta: return "C_Delay_Eta";
    case Rule::delay_cond: return "C_Delay_Cond";
    case Rule::delay_call: return "C_Delay_Call";
    case Rule::call_start: return "C_Call_Start";
    case Rule::call_local: return "C_Call_Local";
    case Rule::call_enter: return "C_Call_Enter";
    case Rule::call_finish: return "C_Call_Finish";
  }
  return "?";
}

/// One derivable transition. `rule` is the last rule of the derivation (the
/// one applied at the root of the term).
template <class P>
struct Transition {
  Rule rule;
  RichLabel<P> label;
  Choreography<P> target;
  GlobalState<P> state;
};

namespace detail {

template <class P>
void enumerate(const DefSet<P>& defs, const Choreography<P>& c, const GlobalState<P>& s,
               std::vector<Transition<P>>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          PidSet<P> blocked{eta_sender<P>(n.eta), eta_receiver<P>(n.eta)};
          if (const auto* cm = std::get_if<Com<P>>(&n.eta)) {
            auto v = P::eval(cm->expr, LocalView<P>(s, cm->sender));
            out.push_back({Rule::com, RCom<P>{cm->sender, v, cm->receiver, cm->var}, n.cont,
                           s.update(cm->receiver, cm->var, v)});
          } else {
            const auto& m = std::get<Sel<P>>(n.eta);
            out.push_back({Rule::sel, RSel<P>{m.sender, m.receiver, m.label}, n.cont, s});
          }
          std::vector<Transition<P>> inner;
          enumerate(defs, n.cont, s, inner);
          for (auto& t : inner) {
            if (!disjoint<P>(label_processes<P>(t.label), blocked)) continue;
            out.push_back({Rule::delay_eta, std::move(t.label), Interaction<P>{n.eta, std::move(t.target)},
                           std::move(t.state)});
          }
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          if (P::eval_bool(n.guard, LocalView<P>(s, n.p))) {
            out.push_back({Rule::then_branch, RCond<P>{n.p}, n.then_branch, s});
          } else {
            out.push_back({Rule::else_branch, RCond<P>{n.p}, n.else_branch, s});
          }
          std::vector<Transition<P>> left;
          std::vector<Transition<P>> right;
          enumerate(defs, n.then_branch, s, left);
          if (left.empty()) return;
          enumerate(defs, n.else_branch, s, right);
          for (auto& t1 : left) {
            if (label_processes<P>(t1.label).contains(n.p)) continue;
            for (auto& t2 : right) {
              if (t2.label == t1.label && states_ext_equal(t1.state, t2.state)) {
                out.push_back({Rule::delay_cond, std::move(t1.label),
                               Cond<P>{n.p, n.guard, std::move(t1.target), t2.target}, std::move(t1.state)});
                break;
              }
            }
          }
        } else if constexpr (std::is_same_v<T, Call<P>>) {
          const auto& def = defs(n.name);
          if (def.annotation.size() == 1) {
            out.push_back({Rule::call_local, RCall<P>{n.name, *def.annotation.begin()}, def.body, s});
          } else if (def.annotation.size() > 1) {
            for (const auto& p : def.annotation) {
              PidSet<P> rest = def.annotation;
              rest.erase(p);
              out.push_back(
                  {Rule::call_start, RCall<P>{n.name, p}, RtCall<P>{n.name, std::move(rest), def.body}, s});
            }
          }
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          if (n.pending.empty()) throw MalformedTerm("runtime call with no pending processes");
          if (n.pending.size() == 1) {
            out.push_back({Rule::call_finish, RCall<P>{n.name, *n.pending.begin()}, n.cont, s});
          } else {
            for (const auto& p : n.pending) {
              PidSet<P> rest = n.pending;
              rest.erase(p);
              out.push_back({Rule::call_enter, RCall<P>{n.name, p}, RtCall<P>{n.name, std::move(rest), n.cont}, s});
            }
          }
          std::vector<Transition<P>> inner;
          enumerate(defs, n.cont, s, inner);
          for (auto& t : inner) {
            if (!disjoint<P>(label_processes<P>(t.label), n.pending)) continue;
            out.push_back({Rule::delay_call, std::move(t.label), RtCall<P>{n.name, n.pending, std::move(t.target)},
                           std::move(t.state)});
          }
        }
      },
      c.node());
}

/// Calls `f` on each process named by the label (one or two of them).
template <class P, class F>
bool any_process(const RichLabel<P>& rl, F&& f) {
  return std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, RCom<P>> || std::is_same_v<T, RSel<P>>) {
          return f(l.p) || f(l.q);
        } else {
          return f(l.p);
        }
      },
      rl);
}

template <class P>
using RuleLabel = std::pair<Rule, RichLabel<P>>;

// Same derivations, in the same order, as `enumerate`, without building targets.
template <class P>
void enumerate_labels(const DefSet<P>& defs, const Choreography<P>& c, const GlobalState<P>& s,
                      std::vector<RuleLabel<P>>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          auto snd = eta_sender<P>(n.eta);
          auto rcv = eta_receiver<P>(n.eta);
          if (const auto* cm = std::get_if<Com<P>>(&n.eta)) {
            auto v = P::eval(cm->expr, LocalView<P>(s, cm->sender));
            out.emplace_back(Rule::com, RCom<P>{cm->sender, v, cm->receiver, cm->var});
          } else {
            const auto& m = std::get<Sel<P>>(n.eta);
            out.emplace_back(Rule::sel, RSel<P>{m.sender, m.receiver, m.label});
          }
          std::size_t from = out.size();
          enumerate_labels(defs, n.cont, s, out);
          std::size_t kept = from;
          for (std::size_t i = from; i < out.size(); ++i) {
            if (any_process<P>(out[i].second, [&](const auto& r) { return r == snd || r == rcv; })) continue;
            out[kept++] = {Rule::delay_eta, std::move(out[i].second)};
          }
          out.resize(kept);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          out.emplace_back(P::eval_bool(n.guard, LocalView<P>(s, n.p)) ? Rule::then_branch : Rule::else_branch,
                           RCond<P>{n.p});
          std::vector<RuleLabel<P>> left;
          enumerate_labels(defs, n.then_branch, s, left);
          if (left.empty()) return;
          std::vector<RuleLabel<P>> right;
          enumerate_labels(defs, n.else_branch, s, right);
          for (auto& l : left) {
            if (any_process<P>(l.second, [&](const auto& r) { return r == n.p; })) continue;
            for (const auto& r : right) {
              if (r.second == l.second) {
                out.emplace_back(Rule::delay_cond, std::move(l.second));
                break;
              }
            }
          }
        } else if constexpr (std::is_same_v<T, Call<P>>) {
          const auto& def = defs(n.name);
          if (def.annotation.size() == 1) {
            out.emplace_back(Rule::call_local, RCall<P>{n.name, *def.annotation.begin()});
          } else {
            for (const auto& p : def.annotation) out.emplace_back(Rule::call_start, RCall<P>{n.name, p});
          }
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          if (n.pending.empty()) throw MalformedTerm("runtime call with no pending processes");
          if (n.pending.size() == 1) {
            out.emplace_back(Rule::call_finish, RCall<P>{n.name, *n.pending.begin()});
          } else {
            for (const auto& p : n.pending) out.emplace_back(Rule::call_enter, RCall<P>{n.name, p});
          }
          std::size_t from = out.size();
          enumerate_labels(defs, n.cont, s, out);
          std::size_t kept = from;
          for (std::size_t i = from; i < out.size(); ++i) {
            if (any_process<P>(out[i].second, [&](const auto& r) { return n.pending.contains(r); })) continue;
            out[kept++] = {Rule::delay_call, std::move(out[i].second)};
          }
          out.resize(kept);
        }
      },
      c.node());
}

// Target of the unique derivation of `c` carrying label `rl`, which must be
// enabled.
template <class P>
Choreography<P> target_of(const DefSet<P>& defs, const Choreography<P>& c, const GlobalState<P>& s,
                          const RichLabel<P>& rl) {
  return std::visit(
      [&](const auto& n) -> Choreography<P> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          if (const auto* cm = std::get_if<Com<P>>(&n.eta)) {
            const auto* l = std::get_if<RCom<P>>(&rl);
            if (l && l->p == cm->sender && l->q == cm->receiver && l->x == cm->var) return n.cont;
          } else {
            const auto& m = std::get<Sel<P>>(n.eta);
            if (rl == RichLabel<P>{RSel<P>{m.sender, m.receiver, m.label}}) return n.cont;
          }
          return Interaction<P>{n.eta, target_of(defs, n.cont, s, rl)};
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          if (rl == RichLabel<P>{RCond<P>{n.p}}) {
            return P::eval_bool(n.guard, LocalView<P>(s, n.p)) ? n.then_branch : n.else_branch;
          }
          return Cond<P>{n.p, n.guard, target_of(defs, n.then_branch, s, rl), target_of(defs, n.else_branch, s, rl)};
        } else if constexpr (std::is_same_v<T, Call<P>>) {
          const auto& def = defs(n.name);
          if (def.annotation.size() == 1) return def.body;
          PidSet<P> rest = def.annotation;
          rest.erase(std::get<RCall<P>>(rl).p);
          return RtCall<P>{n.name, std::move(rest), def.body};
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          const auto* l = std::get_if<RCall<P>>(&rl);
          if (l && l->name == n.name && n.pending.contains(l->p)) {
            if (n.pending.size() == 1) return n.cont;
            PidSet<P> rest = n.pending;
            rest.erase(l->p);
            return RtCall<P>{n.name, std::move(rest), n.cont};
          }
          return RtCall<P>{n.name, n.pending, target_of(defs, n.cont, s, rl)};
        } else {
          throw NoSuchTransition("label is not enabled in this configuration");
        }
      },
      c.node());
}

template <class P>
GlobalState<P> state_after(const GlobalState<P>& s, const RichLabel<P>& rl) {
  if (const auto* l = std::get_if<RCom<P>>(&rl)) return s.update(l->q, l->x, l->v);
  return s;
}

}  // namespace detail

/// All single-step transitions of `c` from `s`, one per derivation.
///
/// Order: at every node the transitions of the node's own rule come first
/// (Call/RT_Call entries by ascending process), then those delayed from the
/// continuation. The head of the list is therefore always the first action
/// in the term.
template <class P>
std::vector<Transition<P>> enumerate_transitions(const DefSet<P>& defs, const Choreography<P>& c,
                                                 const GlobalState<P>& s) {
  std::vector<Transition<P>> out;
  detail::enumerate(defs, c, s, out);
  return out;
}

// ---------------------------------------------------------------------------
// Configurations and execution

template <class P>
struct Configuration {
  Program<P> program;
  GlobalState<P> state;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

template <class P>
std::vector<Transition<P>> enabled(const Configuration<P>& c) {
  return enumerate_transitions(c.program.procedures, c.program.main, c.state);
}

template <class P>
Configuration<P> apply(const Configuration<P>& c, const Transition<P>& t) {
  return Configuration<P>{Program<P>{c.program.procedures, t.target}, t.state};
}

template <class P>
Configuration<P> step(const Configuration<P>& c, const RichLabel<P>& rl) {
  std::vector<detail::RuleLabel<P>> labels;
  detail::enumerate_labels(c.program.procedures, c.program.main, c.state, labels);
  for (const auto& [rule, label] : labels) {
    if (label != rl) continue;
    return Configuration<P>{Program<P>{c.program.procedures, detail::target_of(c.program.procedures, c.program.main,
                                                                               c.state, rl)},
                            detail::state_after(c.state, rl)};
  }
  throw NoSuchTransition("label is not enabled in this configuration");
}

template <class P>
struct TraceEntry {
  Rule rule;
  RichLabel<P> label;
};

template <class P>
using Trace = std::vector<TraceEntry<P>>;

enum class RunStatus { terminated, stuck, out_of_fuel };

constexpr std::string_view status_name(RunStatus s) {
  switch (s) {
    case RunStatus::terminated: return "terminated";
    case RunStatus::stuck: return "stuck";
    case RunStatus::out_of_fuel: return "out-of-fuel";
  }
  return "?";
}

/// Picks one of the enabled transitions. `first` always takes index 0;
/// `random` draws uniformly from a seeded generator.
class Scheduler {
 public:
  static Scheduler first() { return Scheduler(); }
  static Scheduler random(std::uint64_t seed) { return Scheduler(seed); }

  bool is_random() const noexcept { return random_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::size_t pick(std::size_t choices) {
    if (!random_ || choices <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, choices - 1)(rng_);
  }

 private:
  Scheduler() = default;
  explicit Scheduler(std::uint64_t seed) : random_(true), seed_(seed), rng_(seed) {}

  bool random_ = false;
  std::uint64_t seed_ = 0;
  std::mt19937_64 rng_;
};

template <class P>
struct RunResult {
  Configuration<P> last;
  Trace<P> trace;
  RunStatus status;
};

/// Runs for at most `fuel` steps. `on_step` sees every configuration reached
/// after a step, together with the transition taken.
template <class P, class OnStep>
RunResult<P> run(Configuration<P> c, std::size_t fuel, Scheduler scheduler, OnStep&& on_step) {
  Trace<P> trace;
  std::vector<detail::RuleLabel<P>> labels;
  for (;;) {
    if (c.program.main.is_end()) return {std::move(c), std::move(trace), RunStatus::terminated};
    labels.clear();
    detail::enumerate_labels(c.program.procedures, c.program.main, c.state, labels);
    if (labels.empty()) return {std::move(c), std::move(trace), RunStatus::stuck};
    if (trace.size() >= fuel) return {std::move(c), std::move(trace), RunStatus::out_of_fuel};
    auto& [rule, label] = labels[scheduler.pick(labels.size())];
    Transition<P> t{rule, label, detail::target_of(c.program.procedures, c.program.main, c.state, label),
                    detail::state_after(c.state, label)};
    trace.push_back({t.rule, t.label});
    c = apply(c, t);
    on_step(static_cast<const Configuration<P>&>(c), static_cast<const Transition<P>&>(t));
  }
}

template <class P>
RunResult<P> run(Configuration<P> c, std::size_t fuel, Scheduler scheduler) {
  return run(std::move(c), fuel, std::move(scheduler), [](const auto&, const auto&) {});
}

// ---------------------------------------------------------------------------
// Exhaustive exploration

/// Configurations sharing a DefSet, keyed by (main, state).
template <class P>
struct ExplorationKey {
  Choreography<P> main;
  GlobalState<P> state;

  friend bool operator==(const ExplorationKey&, const ExplorationKey&) = default;
};

template <class P>
struct ExplorationKeyHash {
  std::size_t operator()(const ExplorationKey<P>& k) const {
    std::size_t seed = k.main.hash();
    corechor::hashing::hash_combine(seed, k.state.hash());
    return seed;
  }
};

template <class P>
using ExploredSet = std::unordered_set<ExplorationKey<P>, ExplorationKeyHash<P>>;

inline constexpr std::size_t default_node_limit = 200'000;

/// Every configuration reachable from (defs, main, state) in at most `depth`
/// steps. Throws BudgetExceeded past `node_limit` distinct configurations.
template <class P>
ExploredSet<P> explore(const DefSet<P>& defs, const ExplorationKey<P>& start, std::size_t depth,
                       std::size_t node_limit = default_node_limit) {
  ExploredSet<P> seen{start};
  std::vector<ExplorationKey<P>> frontier{start};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<ExplorationKey<P>> next;
    for (const auto& k : frontier) {
      for (auto& t : enumerate_transitions(defs, k.main, k.state)) {
        ExplorationKey<P> succ{std::move(t.target), std::move(t.state)};
        if (seen.insert(succ).second) {
          if (seen.size() > node_limit) throw BudgetExceeded("exploration exceeded its node limit");
          next.push_back(std::move(succ));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Canonical states of all terminated configurations reachable within
/// `depth` steps, without duplicates.
template <class P>
std::vector<GlobalState<P>> reachable_terminals(const Configuration<P>& c, std::size_t depth,
                                                std::size_t node_limit = default_node_limit) {
  auto seen = explore(c.program.procedures, ExplorationKey<P>{c.program.main, c.state}, depth, node_limit);
  std::vector<GlobalState<P>> out;
  for (const auto& k : seen) {
    if (!k.main.is_end()) continue;
    bool dup = false;
    for (const auto& s : out) dup = dup || states_ext_equal(s, k.state);
    if (!dup) out.push_back(k.state);
  }
  return out;
}

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_SEMANTICS_HPP
