#ifndef CORECHOR_PRF_FUNCTION_HPP
#define CORECHOR_PRF_FUNCTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "corechor/error.hpp"

namespace corechor::prf {

using Nat = std::uint64_t;

class Function;

struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};

struct Successor {
  friend bool operator==(const Successor&, const Successor&) = default;
};

/// Projection onto argument `index` (0-based) of `arity` arguments.
struct Projection {
  std::size_t index;
  std::size_t arity;
  friend bool operator==(const Projection&, const Projection&) = default;
};

struct Composition {
  std::vector<Function> fs;
  std::shared_ptr<const Function> g;
  friend bool operator==(const Composition& a, const Composition& b);
};

struct Recursion {
  std::shared_ptr<const Function> g;
  std::shared_ptr<const Function> h;
  friend bool operator==(const Recursion& a, const Recursion& b);
};

struct Minimization {
  std::shared_ptr<const Function> h;
  friend bool operator==(const Minimization& a, const Minimization& b);
};

/// A partial recursive function. Immutable; arities are checked by the
/// named constructors, which throw ArityMismatch on bad input.
class Function {
 public:
  using Node = std::variant<Zero, Successor, Projection, Composition, Recursion, Minimization>;

  static Function zero() { return Function(Zero{}, 1); }
  static Function successor() { return Function(Successor{}, 1); }

  static Function projection(std::size_t index, std::size_t arity) {
    if (index >= arity) {
      throw ArityMismatch("projection index " + std::to_string(index) + " out of range for arity " +
                          std::to_string(arity));
    }
    return Function(Projection{index, arity}, arity);
  }

  /// g composed with fs; every fs[i] must share one arity, and there must be
  /// exactly arity(g) of them.
  static Function compose(const Function& g, std::vector<Function> fs) {
    if (fs.empty()) throw ArityMismatch("composition with no inner functions needs an explicit arity");
    auto k = fs.front().arity();
    return compose(g, std::move(fs), k);
  }

  static Function compose(const Function& g, std::vector<Function> fs, std::size_t arity) {
    if (fs.size() != g.arity()) {
      throw ArityMismatch("composition expects " + std::to_string(g.arity()) + " inner functions, got " +
                          std::to_string(fs.size()));
    }
    for (const auto& f : fs) {
      if (f.arity() != arity) {
        throw ArityMismatch("inner function of arity " + std::to_string(f.arity()) + " in a composition of arity " +
                            std::to_string(arity));
      }
    }
    return Function(Composition{std::move(fs), std::make_shared<const Function>(g)}, arity);
  }

  static Function recursion(const Function& g, const Function& h) {
    if (h.arity() != g.arity() + 2) {
      throw ArityMismatch("recursion step must have arity " + std::to_string(g.arity() + 2) + ", got " +
                          std::to_string(h.arity()));
    }
    return Function(Recursion{std::make_shared<const Function>(g), std::make_shared<const Function>(h)},
                    g.arity() + 1);
  }

  static Function minimization(const Function& h) {
    if (h.arity() == 0) throw ArityMismatch("cannot minimise a function of arity 0");
    return Function(Minimization{std::make_shared<const Function>(h)}, h.arity() - 1);
  }

  std::size_t arity() const noexcept { return rep_->arity; }
  const Node& node() const noexcept { return rep_->node; }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&rep_->node);
  }

  friend bool operator==(const Function& a, const Function& b) {
    return a.rep_ == b.rep_ || (a.rep_->arity == b.rep_->arity && a.rep_->node == b.rep_->node);
  }

 private:
  struct Rep {
    Node node;
    std::size_t arity;
  };

  Function(Node node, std::size_t arity) : rep_(std::make_shared<const Rep>(Rep{std::move(node), arity})) {}

  std::shared_ptr<const Rep> rep_;
};

inline bool operator==(const Composition& a, const Composition& b) { return *a.g == *b.g && a.fs == b.fs; }
inline bool operator==(const Recursion& a, const Recursion& b) { return *a.g == *b.g && *a.h == *b.h; }
inline bool operator==(const Minimization& a, const Minimization& b) { return *a.h == *b.h; }

inline std::size_t arity(const Function& f) { return f.arity(); }

/// Height of the syntax tree: base functions are 0.
inline std::size_t depth(const Function& f) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Composition>) {
          std::size_t d = depth(*n.g);
          for (const auto& fi : n.fs) d = std::max(d, depth(fi));
          return d + 1;
        } else if constexpr (std::is_same_v<T, Recursion>) {
          return std::max(depth(*n.g), depth(*n.h)) + 1;
        } else if constexpr (std::is_same_v<T, Minimization>) {
          return depth(*n.h) + 1;
        } else {
          return 0;
        }
      },
      f.node());
}

}  // namespace corechor::prf

#endif  // CORECHOR_PRF_FUNCTION_HPP
