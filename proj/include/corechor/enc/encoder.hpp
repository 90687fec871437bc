#ifndef CORECHOR_ENC_ENCODER_HPP
#define CORECHOR_ENC_ENCODER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "corechor/chor/wellformed.hpp"
#include "corechor/enc/macros.hpp"
#include "corechor/prf/function.hpp"

namespace corechor::enc {

using prf::Function;

/// Auxiliary processes used by the block encoding `f`.
inline std::size_t pi(const Function& f) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, prf::Composition>) {
          std::size_t total = n.fs.size() + pi(*n.g);
          for (const auto& fi : n.fs) total += pi(fi);
          return total;
        } else if constexpr (std::is_same_v<T, prf::Recursion>) {
          return 3 + pi(*n.g) + pi(*n.h);
        } else if constexpr (std::is_same_v<T, prf::Minimization>) {
          return 2 + pi(*n.h);
        } else {
          return 0;
        }
      },
      f.node());
}

/// Procedures defined by the block encoding `f`.
inline std::size_t gamma(const Function& f) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, prf::Composition>) {
          std::size_t total = n.fs.size() + gamma(*n.g);
          for (const auto& fi : n.fs) total += gamma(fi);
          return total;
        } else if constexpr (std::is_same_v<T, prf::Recursion>) {
          return 3 + gamma(*n.g) + gamma(*n.h);
        } else if constexpr (std::is_same_v<T, prf::Minimization>) {
          return 2 + gamma(*n.h);
        } else {
          return 1;
        }
      },
      f.node());
}

/// Where a block reads its inputs, writes its output, and which process and
/// procedure indices it may claim.
struct EncodingContext {
  std::vector<Pid> inputs;
  Pid output = 0;
  Pid next_process = 0;
  ProcName first_procedure = 0;
};

using BlockBodies = std::map<ProcName, CChor>;

/// Appends the bodies of f's block to `out`.
///
/// The block occupies procedures [X, X + gamma(f)) where X is the context's
/// first procedure; it is entered by calling X and leaves by calling
/// X + gamma(f). Inputs are read from `inputs[i].xx` and left untouched, the
/// result lands in `output.xx`, and only processes in
/// [next_process, next_process + pi(f)) are used as scratch.
inline void emit_block(const Function& f, const EncodingContext& ctx, BlockBodies& out) {
  const auto& ps = ctx.inputs;
  const Pid q = ctx.output;
  const Pid n = ctx.next_process;
  const ProcName x = ctx.first_procedure;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, prf::Zero>) {
          out[x] = send(ps.at(0), Expr::zero, q, call(x + 1));
        } else if constexpr (std::is_same_v<T, prf::Successor>) {
          out[x] = send(ps.at(0), Expr::succ_this, q, call(x + 1));
        } else if constexpr (std::is_same_v<T, prf::Projection>) {
          out[x] = send(ps.at(node.index), Expr::this_value, q, call(x + 1));
        } else if constexpr (std::is_same_v<T, prf::Composition>) {
          // fs[i] writes to n + i; a link procedure after each inner block
          // hands over to the next one; g reads n .. n + m - 1.
          const std::size_t m = node.fs.size();
          ProcName y = x;
          Pid aux = n + m;
          std::vector<Pid> results;
          for (std::size_t i = 0; i < m; ++i) {
            emit_block(node.fs[i], {ps, n + i, aux, y}, out);
            y += gamma(node.fs[i]);
            aux += pi(node.fs[i]);
            out[y] = call(y + 1);
            ++y;
            results.push_back(n + i);
          }
          emit_block(*node.g, {results, q, aux, y}, out);
        } else if constexpr (std::is_same_v<T, prf::Recursion>) {
          // n: accumulator, n + 1: counter, n + 2: h's result and scratch.
          std::vector<Pid> tail(ps.begin() + 1, ps.end());
          emit_block(*node.g, {tail, n, n + 3, x}, out);
          const ProcName init = x + gamma(*node.g);
          const ProcName test = init + 1;
          const ProcName h_entry = init + 2;
          const ProcName post = h_entry + gamma(*node.h);
          const ProcName exit = post + 1;
          out[init] = send(n + 2, Expr::zero, n + 1, call(test));
          out[test] = ifeq_macro(n + 1, ps.at(0), send(n, Expr::this_value, q, call(exit)), call(h_entry));
          std::vector<Pid> h_inputs{n + 1, n};
          h_inputs.insert(h_inputs.end(), tail.begin(), tail.end());
          emit_block(*node.h, {h_inputs, n + 2, n + 3 + pi(*node.g), h_entry}, out);
          out[post] = send(n + 2, Expr::this_value, n,
                           send(n + 1, Expr::succ_this, n + 2, send(n + 2, Expr::this_value, n + 1, call(test))));
        } else {
          // n: candidate, n + 1: h's result and scratch.
          out[x] = send(n + 1, Expr::zero, n, call(x + 1));
          std::vector<Pid> h_inputs(ps);
          h_inputs.push_back(n);
          emit_block(*node.h, {h_inputs, n + 1, n + 2, x + 1}, out);
          const ProcName test = x + 1 + gamma(*node.h);
          const ProcName exit = test + 1;
          out[test] = ifzero_macro(n + 1, n, send(n, Expr::this_value, q, call(exit)),
                                   send(n, Expr::succ_this, n + 1, send(n + 1, Expr::this_value, n, call(x + 1))));
        }
      },
      f.node());
}

/// Body of procedure `y` in f's block. Throws std::out_of_range for `y`
/// outside [X, X + gamma(f)).
inline CChor encoding_rec(const Function& f, const EncodingContext& ctx, ProcName y) {
  if (y < ctx.first_procedure || y >= ctx.first_procedure + gamma(f)) {
    throw std::out_of_range("procedure " + std::to_string(y) + " is outside the block");
  }
  BlockBodies bodies;
  emit_block(f, ctx, bodies);
  return bodies.at(y);
}

/// Program computing f from `ps` into `q`: main is `call X0`, procedures
/// 0 .. gamma(f) - 1 hold the block, and the exit procedure gamma(f) is
/// (annotation {q}, end). Annotations are the least fixpoint over the call
/// graph.
inline CProgram encode(const Function& f, const std::vector<Pid>& ps, Pid q) {
  if (ps.size() != f.arity()) {
    throw ArityMismatch("encoding a function of arity " + std::to_string(f.arity()) + " with " +
                        std::to_string(ps.size()) + " input processes");
  }
  if (std::find(ps.begin(), ps.end(), q) != ps.end()) {
    throw std::invalid_argument("output process " + std::to_string(q) + " is also an input");
  }
  if (std::set<Pid>(ps.begin(), ps.end()).size() != ps.size()) {
    throw std::invalid_argument("input processes must be pairwise distinct");
  }
  Pid n = q;
  for (Pid p : ps) n = std::max(n, p);
  ++n;
  BlockBodies bodies;
  emit_block(f, {ps, q, n, 0}, bodies);
  CProgram prog;
  chor::NameSet<ConcreteParams> names;
  for (auto& [y, body] : bodies) {
    prog.procedures.define(y, {{}, body});
    names.insert(y);
  }
  const ProcName exit = gamma(f);
  prog.procedures.define(exit, {{q}, CChor{}});
  names.insert(exit);
  chor::annotate_least_fixpoint(prog.procedures, names);
  prog.main = call(0);
  return prog;
}

/// Inputs in processes 1 .. arity(f), output in process 0.
inline CProgram encode_default(const Function& f) {
  std::vector<Pid> ps(f.arity());
  std::iota(ps.begin(), ps.end(), Pid{1});
  return encode(f, ps, 0);
}

/// Static scan of f's block against its resource bounds. Returns one line
/// per violation; empty means every body only defines procedures in
/// [X, X + gamma), only calls procedures in [X, X + gamma], and only uses the
/// inputs, the output, and processes below n + pi.
inline std::vector<std::string> resource_violations(const Function& f, const EncodingContext& ctx) {
  BlockBodies bodies;
  emit_block(f, ctx, bodies);
  const ProcName lo = ctx.first_procedure;
  const ProcName hi = lo + gamma(f);
  const Pid proc_hi = ctx.next_process + pi(f);
  std::set<Pid> allowed(ctx.inputs.begin(), ctx.inputs.end());
  allowed.insert(ctx.output);
  std::vector<std::string> out;
  for (const auto& [y, body] : bodies) {
    if (y < lo || y >= hi) out.push_back("defines procedure " + std::to_string(y));
    for (auto z : chor::called_procedures(body)) {
      if (z < lo || z > hi) out.push_back("procedure " + std::to_string(y) + " calls " + std::to_string(z));
    }
    chor::PidSet<ConcreteParams> used;
    chor::direct_processes(body, used);
    for (Pid p : used) {
      if (!allowed.contains(p) && (p < ctx.next_process || p >= proc_hi)) {
        out.push_back("procedure " + std::to_string(y) + " uses process " + std::to_string(p));
      }
    }
  }
  return out;
}

}  // namespace corechor::enc

#endif  // CORECHOR_ENC_ENCODER_HPP
