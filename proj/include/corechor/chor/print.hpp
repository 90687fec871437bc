#ifndef CORECHOR_CHOR_PRINT_HPP
#define CORECHOR_CHOR_PRINT_HPP

#include <ostream>
#include <sstream>
#include <string>

#include "corechor/chor/semantics.hpp"
#include "corechor/chor/syntax.hpp"

namespace corechor::chor {

// Textual form:
//   p.e -> q.x; C          if p ? b then { C1 } else { C2 }
//   p -> q[left]; C        call X3        rtcall X3 {1, 2} { C }        end
// Parameter types are printed with their operator<<.

inline std::ostream& operator<<(std::ostream& os, Label l) { return os << (l == Label::left ? "left" : "right"); }

template <class P>
void print_pids(std::ostream& os, const PidSet<P>& ps) {
  bool first = true;
  for (const auto& p : ps) {
    if (!first) os << ", ";
    os << p;
    first = false;
  }
}

template <class P>
void print_eta(std::ostream& os, const Eta<P>& eta) {
  if (const auto* c = std::get_if<Com<P>>(&eta)) {
    os << c->sender << '.' << c->expr << " -> " << c->receiver << '.' << c->var;
  } else {
    const auto& s = std::get<Sel<P>>(eta);
    os << s.sender << " -> " << s.receiver << '[' << s.label << ']';
  }
}

template <class P>
void print_choreography(std::ostream& os, const Choreography<P>& c) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Interaction<P>>) {
          print_eta<P>(os, n.eta);
          os << "; ";
          print_choreography(os, n.cont);
        } else if constexpr (std::is_same_v<T, Cond<P>>) {
          os << "if " << n.p << " ? " << n.guard << " then { ";
          print_choreography(os, n.then_branch);
          os << " } else { ";
          print_choreography(os, n.else_branch);
          os << " }";
        } else if constexpr (std::is_same_v<T, Call<P>>) {
          os << "call X" << n.name;
        } else if constexpr (std::is_same_v<T, RtCall<P>>) {
          os << "rtcall X" << n.name << " {";
          print_pids<P>(os, n.pending);
          os << "} { ";
          print_choreography(os, n.cont);
          os << " }";
        } else {
          os << "end";
        }
      },
      c.node());
}

template <class P>
std::string to_string(const Choreography<P>& c) {
  std::ostringstream os;
  print_choreography(os, c);
  return os.str();
}

/// One `def` line per defined procedure, then `main`.
template <class P>
void print_program(std::ostream& os, const Program<P>& prog) {
  for (const auto& [x, def] : prog.procedures.entries()) {
    os << "def X" << x << '(';
    print_pids<P>(os, def.annotation);
    os << ") = ";
    print_choreography(os, def.body);
    os << '\n';
  }
  os << "main = ";
  print_choreography(os, prog.main);
  os << '\n';
}

template <class P>
std::string to_string(const Program<P>& prog) {
  std::ostringstream os;
  print_program(os, prog);
  return os.str();
}

template <class P>
void print_label(std::ostream& os, const RichLabel<P>& rl) {
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, RCom<P>>) {
          os << "com(" << l.p << ", " << l.v << ", " << l.q << ", " << l.x << ')';
        } else if constexpr (std::is_same_v<T, RSel<P>>) {
          os << "sel(" << l.p << ", " << l.q << ", " << l.l << ')';
        } else if constexpr (std::is_same_v<T, RCond<P>>) {
          os << "cond(" << l.p << ')';
        } else {
          os << "call(X" << l.name << ", " << l.p << ')';
        }
      },
      rl);
}

template <class P>
std::string to_string(const RichLabel<P>& rl) {
  std::ostringstream os;
  print_label<P>(os, rl);
  return os.str();
}

/// Overrides only, one `p.x = v` per line; the default is implicit.
template <class P>
void print_state(std::ostream& os, const GlobalState<P>& s) {
  for (const auto& [key, value] : s.overrides()) {
    os << key.first << '.' << key.second << " = " << value << '\n';
  }
}

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_PRINT_HPP
