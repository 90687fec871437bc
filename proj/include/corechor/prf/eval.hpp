#ifndef CORECHOR_PRF_EVAL_HPP
#define CORECHOR_PRF_EVAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corechor/prf/function.hpp"

namespace corechor::prf {

using EvalResult = std::optional<Nat>;
using OptArgs = std::vector<std::optional<Nat>>;

/// Smallest n >= init with h(ns ++ [n]) == 0, probing at most `steps`
/// candidates. Absent if the budget runs out or a probe is undefined.
template <class H>
EvalResult find_zero_from(H&& h, std::span<const std::optional<Nat>> ns, Nat init, std::size_t steps) {
  OptArgs args(ns.begin(), ns.end());
  args.emplace_back();
  for (; steps > 0; --steps, ++init) {
    args.back() = init;
    EvalResult r = h(std::span<const std::optional<Nat>>(args));
    if (!r) return std::nullopt;
    if (*r == 0) return init;
  }
  return std::nullopt;
}

/// Bounded evaluation over possibly-undefined arguments.
///
/// Any absent argument makes the result absent. Composition and recursion
/// pass `steps` unchanged to their parts; only minimisation spends it, one
/// unit per probe. Base functions succeed at any budget, including 0.
inline EvalResult eval_opt(const Function& f, std::size_t steps, std::span<const std::optional<Nat>> ns) {
  if (ns.size() != f.arity()) {
    throw ArityMismatch("function of arity " + std::to_string(f.arity()) + " applied to " +
                        std::to_string(ns.size()) + " arguments");
  }
  for (const auto& n : ns) {
    if (!n) return std::nullopt;
  }
  return std::visit(
      [&](const auto& node) -> EvalResult {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Zero>) {
          return Nat{0};
        } else if constexpr (std::is_same_v<T, Successor>) {
          return *ns[0] + 1;
        } else if constexpr (std::is_same_v<T, Projection>) {
          return ns[node.index];
        } else if constexpr (std::is_same_v<T, Composition>) {
          OptArgs inner;
          inner.reserve(node.fs.size());
          for (const auto& fi : node.fs) inner.push_back(eval_opt(fi, steps, ns));
          return eval_opt(*node.g, steps, inner);
        } else if constexpr (std::is_same_v<T, Recursion>) {
          // R(g,h)(x+1, t) = h(x, R(g,h)(x, t), t), unrolled from 0.
          auto tail = ns.subspan(1);
          EvalResult acc = eval_opt(*node.g, steps, tail);
          OptArgs args;
          args.reserve(ns.size() + 1);
          args.emplace_back();
          args.emplace_back();
          args.insert(args.end(), tail.begin(), tail.end());
          for (Nat x = 0; x < *ns[0] && acc; ++x) {
            args[0] = x;
            args[1] = acc;
            acc = eval_opt(*node.h, steps, args);
          }
          return acc;
        } else {
          return find_zero_from(
              [&](std::span<const std::optional<Nat>> args) { return eval_opt(*node.h, steps, args); }, ns, 0,
              steps);
        }
      },
      f.node());
}

inline EvalResult eval_opt(const Function& f, std::size_t steps, std::initializer_list<std::optional<Nat>> ns) {
  return eval_opt(f, steps, std::span<const std::optional<Nat>>(ns.begin(), ns.size()));
}

inline EvalResult eval(const Function& f, std::size_t steps, std::span<const Nat> ns) {
  OptArgs lifted(ns.begin(), ns.end());
  return eval_opt(f, steps, lifted);
}

inline EvalResult eval(const Function& f, std::size_t steps, std::initializer_list<Nat> ns) {
  return eval(f, steps, std::span<const Nat>(ns.begin(), ns.size()));
}

struct Convergence {
  Nat value;
  std::size_t steps;  // least budget producing the value
  friend bool operator==(const Convergence&, const Convergence&) = default;
};

/// Least budget <= fuel at which `f` is defined on `ns`, with the value.
/// Results are stable in the budget, so the least witness is found by
/// bisection.
inline std::optional<Convergence> converges_within(const Function& f, std::span<const Nat> ns, std::size_t fuel) {
  EvalResult top = eval(f, fuel, ns);
  if (!top) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = fuel;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (eval(f, mid, ns)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return Convergence{*top, lo};
}

inline std::optional<Convergence> converges_within(const Function& f, std::initializer_list<Nat> ns,
                                                   std::size_t fuel) {
  return converges_within(f, std::span<const Nat>(ns.begin(), ns.size()), fuel);
}

}  // namespace corechor::prf

#endif  // CORECHOR_PRF_EVAL_HPP
