#pragma once

#include "rarecase/oracle/machine.hpp"

namespace rarecase {

struct ZeroFraction {
  double fraction;
  double standard_error;  // sqrt(f(1-f)/samples)
  u64 zeros;
  u64 samples;
};

// Fraction of uniform inputs on which m evaluates to 0.
ZeroFraction measure_zero_fraction(const PolynomialMachine& m, u64 samples, RandomStream& rng);

}  // namespace rarecase
