#ifndef CORECHOR_CHOR_PARAMS_HPP
#define CORECHOR_CHOR_PARAMS_HPP

#include <concepts>
#include <cstddef>
#include <functional>

#include "corechor/chor/state.hpp"

namespace corechor::chor {

namespace detail {

template <class T>
concept Hashable = requires(const T& v) {
  { std::hash<T>{}(v) } -> std::convertible_to<std::size_t>;
};

template <class T>
concept ParamType = std::totally_ordered<T> && std::copyable<T> && Hashable<T>;

}  // namespace detail

/// The parameter bundle a choreography language is instantiated with.
///
/// A model provides six member types (processes, variables, values,
/// expressions, boolean expressions, procedure names) with decidable equality,
/// plus two static evaluators reading the local state of a single process.
/// Evaluators must be deterministic: they may only observe the state through
/// the `LocalView` they are given.
template <class P>
concept LanguageParams =
    detail::ParamType<typename P::Pid> && detail::ParamType<typename P::Var> &&
    detail::ParamType<typename P::Value> && detail::ParamType<typename P::Expr> &&
    detail::ParamType<typename P::BExpr> && detail::ParamType<typename P::ProcName> &&
    requires(const typename P::Expr& e, const typename P::BExpr& b, const LocalView<P>& local) {
      { P::eval(e, local) } -> std::same_as<typename P::Value>;
      { P::eval_bool(b, local) } -> std::same_as<bool>;
    };

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_PARAMS_HPP
