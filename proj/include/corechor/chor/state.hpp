#ifndef CORECHOR_CHOR_STATE_HPP
#define CORECHOR_CHOR_STATE_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "corechor/chor/hash.hpp"

namespace corechor::chor {

/// Total map from (process, variable) to value.
///
/// Stored as a finite map of overrides on top of a single default value. The
/// map never holds an entry equal to the default, so two states with the same
/// default are extensionally equal exactly when they compare equal with `==`.
template <class P>
class GlobalState {
 public:
  using Pid = typename P::Pid;
  using Var = typename P::Var;
  using Value = typename P::Value;
  using Key = std::pair<Pid, Var>;

  GlobalState() = default;
  explicit GlobalState(Value default_value) : default_(std::move(default_value)) {}

  const Value& operator()(const Pid& p, const Var& x) const {
    auto it = overrides_.find(Key{p, x});
    return it == overrides_.end() ? default_ : it->second;
  }

  [[nodiscard]] GlobalState update(const Pid& p, const Var& x, Value v) const {
    GlobalState next = *this;
    if (v == default_) {
      next.overrides_.erase(Key{p, x});
    } else {
      next.overrides_.insert_or_assign(Key{p, x}, std::move(v));
    }
    return next;
  }

  const Value& default_value() const noexcept { return default_; }
  const std::map<Key, Value>& overrides() const noexcept { return overrides_; }

  std::size_t hash() const {
    std::size_t seed = 0;
    hashing::hash_value(seed, default_);
    for (const auto& [key, value] : overrides_) {
      hashing::hash_value(seed, key.first);
      hashing::hash_value(seed, key.second);
      hashing::hash_value(seed, value);
    }
    return seed;
  }

  friend bool operator==(const GlobalState&, const GlobalState&) = default;

 private:
  Value default_{};
  std::map<Key, Value> overrides_;
};

/// The local state of one process, as seen by the expression evaluators.
template <class P>
class LocalView {
 public:
  LocalView(const GlobalState<P>& state, const typename P::Pid& p) : state_(&state), p_(p) {}

  const typename P::Value& operator()(const typename P::Var& x) const { return (*state_)(p_, x); }

 private:
  const GlobalState<P>* state_;
  typename P::Pid p_;
};

template <class P>
GlobalState<P> update_state(const GlobalState<P>& s, const typename P::Pid& p,
                            const typename P::Var& x, typename P::Value v) {
  return s.update(p, x, std::move(v));
}

/// Pointwise equality. States with different defaults are reported unequal;
/// they can only agree everywhere when the key space is finite, which the
/// representation does not track.
template <class P>
bool states_ext_equal(const GlobalState<P>& a, const GlobalState<P>& b) {
  return a == b;
}

}  // namespace corechor::chor

#endif  // CORECHOR_CHOR_STATE_HPP
