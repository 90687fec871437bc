#ifndef CORECHOR_CHOR_WELLFORMED_HPP
#define CORECHOR_CHOR_WELLFORMED_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corechor/chor/syntax.hpp"
#include "corechor/error.hpp"

namespace corechor::chor {

template <class P>
using NameSet = std::set<typename P::ProcName>;

/// No self-communication anywhere, and every RT_Call has pending processes.
template <class P>
bool choreography_wf(const Choreography<P>& c) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          return eta_sender<P>(n.eta) != eta_receiver<P>(n.eta) && choreography_wf(n.cont);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          return choreography_wf(n.then_branch) && choreography_wf(n.else_branch);
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          return !n.pending.empty() && choreography_wf(n.cont);
        } else {
          return true;
        }
      },
      c.node());
}

/// True iff no subterm is a runtime term.
template <class P>
bool is_initial(const Choreography<P>& c) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          return is_initial(n.cont);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          return is_initial(n.then_branch) && is_initial(n.else_branch);
        } else {
          return !std::is_same_v<T, RtCall<P>>;
        }
      },
      c.node());
}

/// Names occurring in Call or RT_Call subterms.
template <class P>
void collect_called(const Choreography<P>& c, NameSet<P>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          collect_called(n.cont, out);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          collect_called(n.then_branch, out);
          collect_called(n.else_branch, out);
        } else if constexpr (std::is_same_v<T, Call<P>>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          out.insert(n.name);
          collect_called(n.cont, out);
        }
      },
      c.node());
}

template <class P>
NameSet<P> called_procedures(const Choreography<P>& c) {
  NameSet<P> out;
  collect_called(c, out);
  return out;
}

template <class P>
bool within(const NameSet<P>& xs, const Choreography<P>& c) {
  for (const auto& x : called_procedures(c)) {
    if (!xs.contains(x)) return false;
  }
  return true;
}

namespace detail {

template <class P>
void collect_processes(const Choreography<P>& c, const DefSet<P>& defs, const NameSet<P>& known,
                       PidSet<P>& out) {
  auto require_known = [&](const typename P::ProcName& x) {
    if (!known.contains(x)) {
      std::ostringstream msg;
      msg << "call to procedure " << x << " outside the known set";
      throw UnknownProcedure(msg.str());
    }
  };
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          out.insert(eta_sender<P>(n.eta));
          out.insert(eta_receiver<P>(n.eta));
          collect_processes(n.cont, defs, known, out);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          out.insert(n.p);
          collect_processes(n.then_branch, defs, known, out);
          collect_processes(n.else_branch, defs, known, out);
        } else if constexpr (std::is_same_v<T, Call<P>>) {
          require_known(n.name);
          const auto& ann = defs(n.name).annotation;
          out.insert(ann.begin(), ann.end());
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          require_known(n.name);
          out.insert(n.pending.begin(), n.pending.end());
          collect_processes(n.cont, defs, known, out);
        }
      },
      c.node());
}

}  // namespace detail

/// Processes used by `c`. A call contributes the annotation of the callee;
/// throws UnknownProcedure when a called name is outside `known`.
template <class P>
PidSet<P> chor_processes(const Choreography<P>& c, const DefSet<P>& defs, const NameSet<P>& known) {
  PidSet<P> out;
  detail::collect_processes(c, defs, known, out);
  return out;
}

/// Every RT_Call(X, ps, _) has ps included in the annotation of X.
template <class P>
bool consistent(const DefSet<P>& defs, const Choreography<P>& c) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          return consistent(defs, n.cont);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          return consistent(defs, n.then_branch) && consistent(defs, n.else_branch);
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          const auto& ann = defs(n.name).annotation;
          return std::includes(ann.begin(), ann.end(), n.pending.begin(), n.pending.end()) &&
                 consistent(defs, n.cont);
        } else {
          return true;
        }
      },
      c.node());
}

/// Reports the first violated clause of program well-formedness over `xs`,
/// or nothing when the program is well-formed.
template <class P>
std::optional<std::string> program_wf_diagnose(const NameSet<P>& xs, const Program<P>& prog) {
  if (!choreography_wf(prog.main)) return "main is not well-formed";
  if (!within(xs, prog.main)) return "main calls a procedure outside the universe";
  if (!consistent(prog.procedures, prog.main)) return "main has an inconsistently annotated runtime call";
  for (const auto& x : xs) {
    const auto& def = prog.procedures(x);
    std::ostringstream who;
    who << "procedure " << x;
    if (!choreography_wf(def.body)) return who.str() + " is not well-formed";
    if (!is_initial(def.body)) return who.str() + " contains a runtime term";
    if (def.annotation.empty()) return who.str() + " has an empty annotation";
    if (!within(xs, def.body)) return who.str() + " calls a procedure outside the universe";
  }
  return std::nullopt;
}

template <class P>
bool program_wf(const NameSet<P>& xs, const Program<P>& prog) {
  return !program_wf_diagnose(xs, prog).has_value();
}

/// Call-graph closure from main: every name reachable through main and
/// through the bodies of reachable names.
template <class P>
NameSet<P> procedure_universe(const Program<P>& prog) {
  NameSet<P> seen;
  std::deque<typename P::ProcName> work;
  for (const auto& x : called_procedures(prog.main)) {
    if (seen.insert(x).second) work.push_back(x);
  }
  while (!work.empty()) {
    auto x = work.front();
    work.pop_front();
    for (const auto& y : called_procedures(prog.procedures(x).body)) {
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return seen;
}

template <class P>
bool well_ann(const Program<P>& prog, const NameSet<P>& universe) {
  for (const auto& x : universe) {
    const auto& def = prog.procedures(x);
    auto used = chor_processes(def.body, prog.procedures, universe);
    if (!std::includes(def.annotation.begin(), def.annotation.end(), used.begin(), used.end())) {
      return false;
    }
  }
  return true;
}

/// Full program well-formedness, with the universe standing in for the
/// existentially quantified procedure list.
template <class P>
bool ccp_wf(const Program<P>& prog, const NameSet<P>& universe) {
  return well_ann(prog, universe) && program_wf(universe, prog);
}

template <class P>
bool ccp_wf(const Program<P>& prog) {
  return ccp_wf(prog, procedure_universe(prog));
}


/// Processes occurring syntactically in `c`, not looking through calls.
template <class P>
void direct_processes(const Choreography<P>& c, PidSet<P>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          out.insert(eta_sender<P>(n.eta));
          out.insert(eta_receiver<P>(n.eta));
          direct_processes(n.cont, out);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          out.insert(n.p);
          direct_processes(n.then_branch, out);
          direct_processes(n.else_branch, out);
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          out.insert(n.pending.begin(), n.pending.end());
          direct_processes(n.cont, out);
        }
      },
      c.node());
}

/// Least annotations over a (possibly cyclic) call graph: each procedure's
/// annotation is the processes its body uses directly plus the annotations of
/// everything it calls. Entries already present are kept, so a padded
/// annotation propagates to every caller.
template <class P>
void annotate_least_fixpoint(DefSet<P>& defs, const NameSet<P>& names) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& x : names) {
      auto def = defs(x);
      auto before = def.annotation.size();
      direct_processes(def.body, def.annotation);
      for (const auto& y : called_procedures(def.body)) {
        const auto& ann = defs(y).annotation;
        def.annotation.insert(ann.begin(), ann.end());
      }
      if (def.annotation.size() != before) {
        defs.define(x, std::move(def));
        changed = true;
      }
    }
  }
}

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_WELLFORMED_HPP
