#ifndef CORECHOR_CHOR_SYNTAX_HPP
#define CORECHOR_CHOR_SYNTAX_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <utility>
#include <variant>

#include "corechor/chor/hash.hpp"
#include "corechor/chor/params.hpp"

namespace corechor::chor {

enum class Label { left, right };

template <class P>
using PidSet = std::set<typename P::Pid>;

/// Value communication `sender.expr -> receiver.var`.
template <class P>
struct Com {
  typename P::Pid sender;
  typename P::Expr expr;
  typename P::Pid receiver;
  typename P::Var var;

  friend bool operator==(const Com&, const Com&) = default;
};

/// Label selection `sender -> receiver[label]`.
template <class P>
struct Sel {
  typename P::Pid sender;
  typename P::Pid receiver;
  Label label;

  friend bool operator==(const Sel&, const Sel&) = default;
};

template <class P>
using Eta = std::variant<Com<P>, Sel<P>>;

template <class P>
const typename P::Pid& eta_sender(const Eta<P>& eta) {
  return std::visit([](const auto& e) -> const typename P::Pid& { return e.sender; }, eta);
}

template <class P>
const typename P::Pid& eta_receiver(const Eta<P>& eta) {
  return std::visit([](const auto& e) -> const typename P::Pid& { return e.receiver; }, eta);
}

template <class P>
class Choreography;

template <class P>
struct Interaction {
  Eta<P> eta;
  Choreography<P> cont;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

template <class P>
struct Cond {
  typename P::Pid p;
  typename P::BExpr guard;
  Choreography<P> then_branch;
  Choreography<P> else_branch;

  friend bool operator==(const Cond&, const Cond&) = default;
};

template <class P>
struct Call {
  typename P::ProcName name;

  friend bool operator==(const Call&, const Call&) = default;
};

/// A procedure that has started executing; `pending` have not entered yet.
template <class P>
struct RtCall {
  typename P::ProcName name;
  PidSet<P> pending;
  Choreography<P> cont;

  friend bool operator==(const RtCall&, const RtCall&) = default;
};

struct End {
  friend bool operator==(const End&, const End&) = default;
};

/// Immutable choreography term with structural equality and a cached hash.
/// Copies share the underlying node.
template <class P>
class Choreography {
 public:
  using Node = std::variant<Interaction<P>, Cond<P>, Call<P>, RtCall<P>, End>;

  Choreography() : rep_(end_rep()) {}
  Choreography(Interaction<P> n) : rep_(make(std::move(n))) {}
  Choreography(Cond<P> n) : rep_(make(std::move(n))) {}
  Choreography(Call<P> n) : rep_(make(std::move(n))) {}
  Choreography(RtCall<P> n) : rep_(make(std::move(n))) {}
  Choreography(End) : rep_(end_rep()) {}

  const Node& node() const noexcept { return rep_->node; }
  std::size_t hash() const noexcept { return rep_->hash; }
  bool is_end() const noexcept { return std::holds_alternative<End>(rep_->node); }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&rep_->node);
  }

  friend bool operator==(const Choreography& a, const Choreography& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.rep_->hash != b.rep_->hash) return false;
    return a.rep_->node == b.rep_->node;
  }

 private:
  struct Rep {
    Node node;
    std::size_t hash;
  };

  static std::size_t compute_hash(const Node& node) {
    std::size_t seed = node.index();
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Interaction<P>>) {
            hashing::hash_combine(seed, n.eta.index());
            std::visit(
                [&](const auto& e) {
                  using E = std::decay_t<decltype(e)>;
                  hashing::hash_value(seed, e.sender);
                  hashing::hash_value(seed, e.receiver);
                  if constexpr (std::is_same_v<E, Com<P>>) {
                    hashing::hash_value(seed, e.expr);
                    hashing::hash_value(seed, e.var);
                  } else {
                    hashing::hash_combine(seed, static_cast<std::size_t>(e.label));
                  }
                },
                n.eta);
            hashing::hash_combine(seed, n.cont.hash());
          } else if constexpr (std::is_same_v<T, Cond<P>>) {
            hashing::hash_value(seed, n.p);
            hashing::hash_value(seed, n.guard);
            hashing::hash_combine(seed, n.then_branch.hash());
            hashing::hash_combine(seed, n.else_branch.hash());
          } else if constexpr (std::is_same_v<T, Call<P>>) {
            hashing::hash_value(seed, n.name);
          } else if constexpr (std::is_same_v<T, RtCall<P>>) {
            hashing::hash_value(seed, n.name);
            for (const auto& p : n.pending) hashing::hash_value(seed, p);
            hashing::hash_combine(seed, n.cont.hash());
          }
        },
        node);
    return seed;
  }

  template <class T>
  static std::shared_ptr<const Rep> make(T n) {
    Node node(std::move(n));
    std::size_t h = compute_hash(node);
    return std::make_shared<const Rep>(Rep{std::move(node), h});
  }

  static const std::shared_ptr<const Rep>& end_rep() {
    static const std::shared_ptr<const Rep> rep = std::make_shared<const Rep>(Rep{End{}, compute_hash(Node{End{}})});
    return rep;
  }

  std::shared_ptr<const Rep> rep_;
};

// Constructor helpers, named after the usual notation.

template <class P>
Choreography<P> com(typename P::Pid p, typename P::Expr e, typename P::Pid q, typename P::Var x,
                    Choreography<P> cont = {}) {
  return Interaction<P>{Com<P>{p, e, q, x}, std::move(cont)};
}

template <class P>
Choreography<P> sel(typename P::Pid p, typename P::Pid q, Label l, Choreography<P> cont = {}) {
  return Interaction<P>{Sel<P>{p, q, l}, std::move(cont)};
}

template <class P>
Choreography<P> interact(Eta<P> eta, Choreography<P> cont = {}) {
  return Interaction<P>{std::move(eta), std::move(cont)};
}

template <class P>
Choreography<P> cond(typename P::Pid p, typename P::BExpr b, Choreography<P> then_branch,
                     Choreography<P> else_branch) {
  return Cond<P>{p, b, std::move(then_branch), std::move(else_branch)};
}

template <class P>
Choreography<P> call(typename P::ProcName x) {
  return Call<P>{x};
}

template <class P>
Choreography<P> rt_call(typename P::ProcName x, PidSet<P> pending, Choreography<P> cont) {
  return RtCall<P>{x, std::move(pending), std::move(cont)};
}

template <class P>
struct ProcDef {
  PidSet<P> annotation;
  Choreography<P> body;

  friend bool operator==(const ProcDef&, const ProcDef&) = default;
};

/// Total map from procedure names to definitions: a finite map plus the
/// default entry (no processes, End).
template <class P>
class DefSet {
 public:
  using ProcName = typename P::ProcName;
  using Map = std::map<ProcName, ProcDef<P>>;

  const ProcDef<P>& operator()(const ProcName& x) const {
    auto it = entries_->find(x);
    return it == entries_->end() ? default_entry() : it->second;
  }

  DefSet& define(const ProcName& x, ProcDef<P> def) {
    if (entries_.use_count() > 1) entries_ = std::make_shared<Map>(*entries_);
    entries_->insert_or_assign(x, std::move(def));
    return *this;
  }

  bool defines(const ProcName& x) const { return entries_->contains(x); }
  const Map& entries() const noexcept { return *entries_; }

  friend bool operator==(const DefSet& a, const DefSet& b) {
    return a.entries_ == b.entries_ || *a.entries_ == *b.entries_;
  }

 private:
  static const ProcDef<P>& default_entry() {
    static const ProcDef<P> entry{};
    return entry;
  }

  // Shared between copies; `define` detaches before writing.
  std::shared_ptr<Map> entries_ = std::make_shared<Map>();
};

template <class P>
struct Program {
  DefSet<P> procedures;
  Choreography<P> main;

  friend bool operator==(const Program&, const Program&) = default;
};

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_SYNTAX_HPP
