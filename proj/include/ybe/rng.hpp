#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ybe {

// Seeded generator with platform-independent bounded draws
// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : _engine(seed) {}

  std::uint64_t next() { return _engine(); }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t v;
    do {
      v = _engine();
    } while (v >= limit);
    return v % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[below(i)]);
    }
  }

 private:
  std::mt19937_64 _engine;
};

}  // namespace ybe
