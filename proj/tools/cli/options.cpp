#include "cli/options.hpp"

namespace rarecase::cli {

PrimeModulus prime_from_bits(int bits) {
  if (bits < 2 || bits > 61) throw UsageError("--p-bits must lie in [2, 61]");
  return next_prime_at_least(u64{1} << bits);
}

PrimeModulus resolve_modulus(const CommonOptions& c, u64 fallback) {
  if (c.p && c.p_bits) throw UsageError("give either --p or --p-bits, not both");
  if (c.p) return PrimeModulus(*c.p);
  if (c.p_bits) return prime_from_bits(*c.p_bits);
  return PrimeModulus(fallback);
}

}  // namespace rarecase::cli
