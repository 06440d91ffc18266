#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "sdt/subset.hpp"

namespace sdt {

/// Seeded mt19937_64. Draws use raw engine output only, so sequences are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return v % bound;
  }

  /// Each element independently with probability 1/2, redrawn until nonempty.
  Subset nonempty_subset(std::size_t order) {
    Subset s(order);
    while (s.empty()) {
      for (std::size_t base = 0; base < order; base += 64) {
        std::uint64_t bits = engine_();
        for (std::size_t i = 0; i < 64 && base + i < order; ++i)
          if ((bits >> i) & 1u) s.insert(base + i);
      }
    }
    return s;
  }

  /// Uniform subset of exactly `size` elements.
  Subset subset_of_size(std::size_t order, std::size_t size) {
    Subset s(order);
    while (s.size() < size) s.insert(below(order));
    return s;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sdt
