#ifndef CORECHOR_TESTS_PRF_CORPUS_HPP
#define CORECHOR_TESTS_PRF_CORPUS_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "corechor/prf/eval.hpp"
#include "corechor/prf/library.hpp"

namespace prf_corpus {

using corechor::prf::Function;
using corechor::prf::Nat;
namespace lib = corechor::prf::lib;

/// The library plus a few hand-built functions, including partial ones.
inline std::vector<std::pair<std::string, Function>> corpus() {
  std::vector<std::pair<std::string, Function>> out;
  for (auto& [name, f] : corechor::prf::standard_library()) out.emplace_back(name, f);
  out.emplace_back("zero", Function::zero());
  out.emplace_back("succ", Function::successor());
  out.emplace_back("p2of3", Function::projection(1, 3));
  out.emplace_back("const3", lib::constant(3, 2));
  // First n with n >= x: a total function computed by search.
  out.emplace_back("search_ge", Function::minimization(Function::compose(lib::lt(), {lib::proj(1, 2), lib::proj(0, 2)})));
  // Exact halving: defined on even inputs only.
  out.emplace_back("half", Function::minimization(Function::compose(
                               lib::sub(), {lib::constant(1, 2),
                                            Function::compose(lib::eq(), {lib::proj(0, 2),
                                                                          Function::compose(lib::add(), {lib::proj(1, 2),
                                                                                                         lib::proj(1, 2)})})})));
  out.emplace_back("diverge", Function::minimization(Function::compose(Function::successor(), {lib::proj(0, 2)})));
  return out;
}

/// Unary h with known least zero `z`, built from the relation library.
struct MinInstance {
  std::string shape;
  Nat z;
  Function h;
};

inline MinInstance min_instance(std::mt19937_64& rng) {
  Nat z = std::uniform_int_distribution<Nat>(0, 10)(rng);
  auto c = lib::constant(z, 1);
  auto n = lib::proj(0, 1);
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return {"z - n", z, Function::compose(lib::sub(), {c, n})};
    case 1: return {"n < z", z, Function::compose(lib::lt(), {n, c})};
    case 2: return {"sign(z - n)", z, Function::compose(lib::sign(), {Function::compose(lib::sub(), {c, n})})};
    default: return {"1 - (n == z)", z, Function::compose(lib::sub(), {lib::constant(1, 1), Function::compose(lib::eq(), {n, c})})};
  }
}

/// Random function of the given arity (at least 1) and depth at most `depth`.
/// Minimisation only appears when `allow_min` is set.
inline Function random_function(std::mt19937_64& rng, std::size_t arity, std::size_t depth, bool allow_min) {
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  auto leaf = [&]() -> Function {
    if (arity == 1) {
      switch (pick(2)) {
        case 0: return Function::zero();
        case 1: return Function::successor();
        default: return Function::projection(0, 1);
      }
    }
    return Function::projection(std::uniform_int_distribution<std::size_t>(0, arity - 1)(rng), arity);
  };
  if (depth == 0 || pick(3) == 0) return leaf();
  switch (pick(allow_min ? 3 : 2)) {
    case 0:
    case 1: {
      std::size_t m = 1 + pick(1);
      std::vector<Function> fs;
      for (std::size_t i = 0; i < m; ++i) fs.push_back(random_function(rng, arity, depth - 1, allow_min));
      return Function::compose(random_function(rng, m, depth - 1, allow_min), std::move(fs));
    }
    case 2:
      if (arity >= 2) {
        return Function::recursion(random_function(rng, arity - 1, depth - 1, allow_min),
                                   random_function(rng, arity + 1, depth - 1, allow_min));
      }
      return Function::compose(Function::successor(), {random_function(rng, arity, depth - 1, allow_min)});
    default:
      return Function::minimization(random_function(rng, arity + 1, depth - 1, allow_min));
  }
}

}  // namespace prf_corpus

#endif  // CORECHOR_TESTS_PRF_CORPUS_HPP
