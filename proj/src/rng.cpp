#include "homodyn/rng.hpp"

namespace homodyn {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), key_(mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t CounterRng::bits_at(std::uint64_t counter) const {
  return mix64(mix64(key_ + counter * 0x9E3779B97F4A7C15ULL) ^ key_);
}

double CounterRng::uniform_at(std::uint64_t counter) const {
  return static_cast<double>(bits_at(counter) >> 11) * 0x1.0p-53;
}

}  // namespace homodyn
