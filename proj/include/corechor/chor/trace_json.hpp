#ifndef CORECHOR_CHOR_TRACE_JSON_HPP
#define CORECHOR_CHOR_TRACE_JSON_HPP

#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>

#include "json.hpp"

#include "corechor/chor/print.hpp"
#include "corechor/chor/semantics.hpp"

namespace corechor::chor {

namespace detail {

template <class T>
nlohmann::json json_scalar(const T& v) {
  if constexpr (std::is_arithmetic_v<T>) {
    return v;
  } else {
    std::ostringstream os;
    os << v;
    return os.str();
  }
}

}  // namespace detail

/// {kind, p, q?, v?, x?, l?, X?}
template <class P>
nlohmann::json label_to_json(const RichLabel<P>& rl) {
  using detail::json_scalar;
  nlohmann::json j;
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, RCom<P>>) {
          j = {{"kind", "com"}, {"p", json_scalar(l.p)}, {"v", json_scalar(l.v)}, {"q", json_scalar(l.q)},
               {"x", json_scalar(l.x)}};
        } else if constexpr (std::is_same_v<T, RSel<P>>) {
          j = {{"kind", "sel"}, {"p", json_scalar(l.p)}, {"q", json_scalar(l.q)},
               {"l", l.l == Label::left ? "left" : "right"}};
        } else if constexpr (std::is_same_v<T, RCond<P>>) {
          j = {{"kind", "cond"}, {"p", json_scalar(l.p)}};
        } else {
          j = {{"kind", "call"}, {"p", json_scalar(l.p)}, {"X", json_scalar(l.name)}};
        }
      },
      rl);
  return j;
}

template <class P>
nlohmann::json trace_entry_to_json(const TraceEntry<P>& e) {
  return {{"rule", std::string(rule_name(e.rule))}, {"label", label_to_json<P>(e.label)}};
}

/// Newline-delimited JSON, one object per step.
template <class P>
void write_trace_ndjson(std::ostream& os, const Trace<P>& trace) {
  for (const auto& e : trace) os << trace_entry_to_json<P>(e).dump() << '\n';
}

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_TRACE_JSON_HPP
