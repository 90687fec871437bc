#ifndef CORECHOR_ENC_MACROS_HPP
#define CORECHOR_ENC_MACROS_HPP

#include <string>

#include "corechor/chor/syntax.hpp"
#include "corechor/concrete.hpp"
#include "corechor/error.hpp"

namespace corechor::enc {

using CChor = chor::Choreography<ConcreteParams>;
using CEta = chor::Eta<ConcreteParams>;
using CProgram = chor::Program<ConcreteParams>;

inline void require_distinct(Pid p, Pid q) {
  if (p == q) throw SelfCommunication("process " + std::to_string(p) + " cannot communicate with itself");
}

/// p evaluates e and q stores the result in xx.
inline CEta send_macro(Pid p, Expr e, Pid q) {
  require_distinct(p, q);
  return chor::Com<ConcreteParams>{p, e, q, Var::xx};
}

inline CChor send(Pid p, Expr e, Pid q, CChor cont) { return chor::interact<ConcreteParams>(send_macro(p, e, q), cont); }

/// q sends its xx into p's yy, then p branches on xx == yy.
inline CChor ifeq_macro(Pid p, Pid q, CChor then_branch, CChor else_branch) {
  require_distinct(p, q);
  return chor::com<ConcreteParams>(q, Expr::this_value, p, Var::yy,
                                   chor::cond<ConcreteParams>(p, BExpr::compare, then_branch, else_branch));
}

/// Like ifeq_macro, but `source` sends the constant zero: branches on p.xx == 0.
inline CChor ifzero_macro(Pid p, Pid source, CChor then_branch, CChor else_branch) {
  require_distinct(p, source);
  return chor::com<ConcreteParams>(source, Expr::zero, p, Var::yy,
                                   chor::cond<ConcreteParams>(p, BExpr::compare, then_branch, else_branch));
}

inline CChor call(ProcName x) { return chor::call<ConcreteParams>(x); }

}  // namespace corechor::enc

#endif  // CORECHOR_ENC_MACROS_HPP
