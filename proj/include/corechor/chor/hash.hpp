#ifndef CORECHOR_CHOR_HASH_HPP
#define CORECHOR_CHOR_HASH_HPP

#include <cstddef>
#include <functional>

namespace corechor::hashing {

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <class T>
void hash_value(std::size_t& seed, const T& value) {
  hash_combine(seed, std::hash<T>{}(value));
}

}  // namespace corechor::hashing

#endif  // CORECHOR_CHOR_HASH_HPP
