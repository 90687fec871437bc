#ifndef CORECHOR_PRF_LIBRARY_HPP
#define CORECHOR_PRF_LIBRARY_HPP

#include <map>
#include <string>

#include "corechor/prf/function.hpp"

namespace corechor::prf {

namespace lib {

inline Function proj(std::size_t index, std::size_t arity) { return Function::projection(index, arity); }

/// Constant c of the given (non-zero) arity.
inline Function constant(Nat c, std::size_t arity) {
  Function f = Function::compose(Function::zero(), {proj(0, arity)});
  for (Nat i = 0; i < c; ++i) f = Function::compose(Function::successor(), {f});
  return f;
}

/// add(m, n) = m + n, by recursion on m.
inline Function add() {
  return Function::recursion(proj(0, 1), Function::compose(Function::successor(), {proj(1, 3)}));
}

/// mul(m, n) = m * n: mul(0, n) = 0, mul(x+1, n) = mul(x, n) + n.
inline Function mul() {
  return Function::recursion(Function::zero(), Function::compose(add(), {proj(1, 3), proj(2, 3)}));
}

/// pred(0) = 0, pred(x+1) = x. Recursion needs a parameter, so the input is
/// duplicated and the copy ignored.
inline Function pred() {
  Function pred2 = Function::recursion(Function::zero(), proj(0, 3));
  return Function::compose(pred2, {proj(0, 1), proj(0, 1)});
}

/// sub(a, b) = a - b truncated at 0.
inline Function sub() {
  // flipped(n, a) = a - n
  Function flipped = Function::recursion(proj(0, 1), Function::compose(pred(), {proj(1, 3)}));
  return Function::compose(flipped, {proj(1, 2), proj(0, 2)});
}

/// sign(0) = 0, sign(x+1) = 1.
inline Function sign() {
  Function sign2 = Function::recursion(Function::zero(), constant(1, 3));
  return Function::compose(sign2, {proj(0, 1), proj(0, 1)});
}

/// Relations return 1 for true and 0 for false.
inline Function gt() { return Function::compose(sign(), {sub()}); }

inline Function lt() { return Function::compose(sign(), {Function::compose(sub(), {proj(1, 2), proj(0, 2)})}); }

inline Function eq() {
  return Function::compose(sub(), {constant(1, 2), Function::compose(add(), {gt(), lt()})});
}

}  // namespace lib

/// add, mul, sign, gt, lt, eq, plus the helpers they are built from.
inline std::map<std::string, Function> standard_library() {
  return {
      {"add", lib::add()}, {"mul", lib::mul()}, {"sign", lib::sign()}, {"gt", lib::gt()},
      {"lt", lib::lt()},   {"eq", lib::eq()},   {"pred", lib::pred()}, {"sub", lib::sub()},
  };
}

}  // namespace corechor::prf

#endif  // CORECHOR_PRF_LIBRARY_HPP
