#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "ffhyper/field.hpp"

namespace ffhyper {

/// mt19937_64 with portable bounded draws (the standard distributions are
/// implementation-defined, which would break cross-platform reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  Elem elem(const Field& F) { return Elem{static_cast<std::uint32_t>(below(F.q()))}; }
  Elem nonzero(const Field& F) { return Elem{static_cast<std::uint32_t>(1 + below(F.q() - 1))}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ffhyper
