#pragma once

#include <cstdint>
#include <random>

#include "rarecase/algebra/prime_field.hpp"

namespace rarecase {

// splitmix64 finalizer.
constexpr u64 mix64(u64 x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic PRF of (key, a, b).
constexpr u64 keyed_hash(u64 key, u64 a, u64 b = 0) noexcept {
  return mix64(mix64(mix64(key) ^ a) + b);
}

// Reproducible stream identified by (seed, stream_id). Single owner.
class RandomStream {
 public:
  RandomStream(u64 seed, u64 stream_id);

  u64 seed() const noexcept { return seed_; }
  u64 stream_id() const noexcept { return stream_id_; }

  u64 next_u64() { return engine_(); }
  // Uniform on [0, bound); bound >= 1. Rejection sampling, no modulo bias.
  u64 uniform_below(u64 bound);
  // Uniform on [0, 1).
  double uniform_unit();
  bool bernoulli(double probability);

  // Independent child stream; does not advance this one.
  RandomStream derive(u64 child_id) const;

 private:
  u64 seed_;
  u64 stream_id_;
  std::mt19937_64 engine_;
};

FieldElement sample_field_element(const PrimeModulus& p, RandomStream& rng);
// Uniform on [1, p-1].
u64 sample_nonzero(const PrimeModulus& p, RandomStream& rng);

}  // namespace rarecase
