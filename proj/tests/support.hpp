#ifndef CORECHOR_TESTS_SUPPORT_HPP
#define CORECHOR_TESTS_SUPPORT_HPP

#include <string>

#include "corechor/corechor.hpp"

namespace testing_support {

using P = corechor::ConcreteParams;
using C = corechor::chor::Choreography<P>;
using Defs = corechor::chor::DefSet<P>;
using Prog = corechor::chor::Program<P>;
using State = corechor::chor::GlobalState<P>;
using Config = corechor::chor::Configuration<P>;
using Names = corechor::chor::NameSet<P>;
using Pids = corechor::chor::PidSet<P>;
using RL = corechor::chor::RichLabel<P>;

using corechor::BExpr;
using corechor::Expr;
using corechor::Var;
using corechor::chor::Label;

inline C com(corechor::Pid p, Expr e, corechor::Pid q, Var x, C cont = {}) {
  return corechor::chor::com<P>(p, e, q, x, std::move(cont));
}
inline C sel(corechor::Pid p, corechor::Pid q, Label l, C cont = {}) {
  return corechor::chor::sel<P>(p, q, l, std::move(cont));
}
inline C cond(corechor::Pid p, C a, C b) { return corechor::chor::cond<P>(p, BExpr::compare, std::move(a), std::move(b)); }
inline C call(corechor::ProcName x) { return corechor::chor::call<P>(x); }
inline C rt_call(corechor::ProcName x, Pids ps, C cont) { return corechor::chor::rt_call<P>(x, std::move(ps), std::move(cont)); }

inline RL rcom(corechor::Pid p, corechor::Value v, corechor::Pid q, Var x) { return corechor::chor::RCom<P>{p, v, q, x}; }
inline RL rcall(corechor::ProcName x, corechor::Pid p) { return corechor::chor::RCall<P>{x, p}; }
inline RL rcond(corechor::Pid p) { return corechor::chor::RCond<P>{p}; }

inline Prog program(Defs defs, C main) { return Prog{std::move(defs), std::move(main)}; }

inline std::string fixture(const std::string& name) { return std::string(CORECHOR_FIXTURES) + "/" + name; }

}  // namespace testing_support

#endif  // CORECHOR_TESTS_SUPPORT_HPP
