#pragma once

#include <cstdint>

namespace homodyn {

// Counter-based generator: the value at a counter depends only on
// (seed, stream, counter), so parallel loops can draw sample i directly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t bits_at(std::uint64_t counter) const;
  double uniform_at(std::uint64_t counter) const;  // [0, 1)

  std::uint64_t next_bits() { return bits_at(counter_++); }
  double next_uniform() { return uniform_at(counter_++); }
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace homodyn
