#ifndef CORECHOR_CONCRETE_HPP
#define CORECHOR_CONCRETE_HPP

#include <cstdint>
#include <ostream>

#include "corechor/chor/params.hpp"
#include "corechor/chor/state.hpp"

namespace corechor {

/// The two storage cells every process owns.
enum class Var : std::uint8_t { xx, yy };

/// `this` reads xx, `zero` is the constant 0, `succ` is xx + 1.
enum class Expr : std::uint8_t { this_value, zero, succ_this };

/// The only boolean expression: xx == yy at the deciding process.
enum class BExpr : std::uint8_t { compare };

inline std::ostream& operator<<(std::ostream& os, Var x) { return os << (x == Var::xx ? "xx" : "yy"); }

inline std::ostream& operator<<(std::ostream& os, Expr e) {
  switch (e) {
    case Expr::this_value: return os << "this";
    case Expr::zero: return os << "zero";
    case Expr::succ_this: return os << "succ";
  }
  return os;
}

inline std::ostream& operator<<(std::ostream& os, BExpr) { return os << "compare"; }

/// Naturals for processes, values and procedure names.
struct ConcreteParams {
  using Pid = std::uint64_t;
  using Var = corechor::Var;
  using Value = std::uint64_t;
  using Expr = corechor::Expr;
  using BExpr = corechor::BExpr;
  using ProcName = std::uint64_t;

  static Value eval(Expr e, const chor::LocalView<ConcreteParams>& local) {
    switch (e) {
      case Expr::this_value: return local(Var::xx);
      case Expr::zero: return 0;
      case Expr::succ_this: return local(Var::xx) + 1;
    }
    return 0;
  }

  static bool eval_bool(BExpr, const chor::LocalView<ConcreteParams>& local) {
    return local(Var::xx) == local(Var::yy);
  }
};

static_assert(chor::LanguageParams<ConcreteParams>);

using Pid = ConcreteParams::Pid;
using Value = ConcreteParams::Value;
using ProcName = ConcreteParams::ProcName;

}  // namespace corechor

#endif  // CORECHOR_CONCRETE_HPP
