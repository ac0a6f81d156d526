#include "rarecase/algebra/random_stream.hpp"

#include <bit>
#include <limits>

namespace rarecase {

RandomStream::RandomStream(u64 seed, u64 stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(keyed_hash(seed, stream_id, 0x5eed)) {}

u64 RandomStream::uniform_below(u64 bound) {
  if (bound <= 1) return 0;
  if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
  // Reject the top partial bucket.
  const u64 limit = std::numeric_limits<u64>::max() - (std::numeric_limits<u64>::max() % bound);
  for (;;) {
    u64 x = engine_();
    if (x < limit) return x % bound;
  }
}

double RandomStream::uniform_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool RandomStream::bernoulli(double probability) {
  if (probability >= 1.0) return true;
  if (probability <= 0.0) return false;
  return uniform_unit() < probability;
}

RandomStream RandomStream::derive(u64 child_id) const {
  return RandomStream(keyed_hash(seed_, stream_id_, 0xc41d), child_id);
}

FieldElement sample_field_element(const PrimeModulus& p, RandomStream& rng) {
  return FieldElement(rng.uniform_below(p.value()), p);
}

u64 sample_nonzero(const PrimeModulus& p, RandomStream& rng) {
  return 1 + rng.uniform_below(p.value() - 1);
}

}  // namespace rarecase
