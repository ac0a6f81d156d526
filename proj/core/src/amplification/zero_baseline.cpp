#include "rarecase/amplification/zero_baseline.hpp"

#include <cmath>

namespace rarecase {

ZeroFraction measure_zero_fraction(const PolynomialMachine& m, u64 samples, RandomStream& rng) {
  if (samples == 0) throw UsageError("measure_zero_fraction needs samples >= 1");
  std::vector<u64> x(m.input_size());
  u64 zeros = 0;
  for (u64 s = 0; s < samples; ++s) {
    for (auto& v : x) v = rng.uniform_below(m.modulus().value());
    if (m.evaluate(x).value() == 0) ++zeros;
  }
  const double f = static_cast<double>(zeros) / static_cast<double>(samples);
  return {f, std::sqrt(f * (1.0 - f) / static_cast<double>(samples)), zeros, samples};
}

}  // namespace rarecase
