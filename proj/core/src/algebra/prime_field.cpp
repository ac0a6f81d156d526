#include "rarecase/algebra/prime_field.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <limits>

namespace rarecase {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(u64 p)
    : p_(p), bits_(std::bit_width(p)), small_(p < (u64{1} << 32)) {
  if (p < 2 || p >= kMaxExclusive) {
    throw UsageError("modulus out of range [2, 2^62): " + std::to_string(p));
  }
  if (!is_prime_u64(p)) throw UsageError("modulus is not prime: " + std::to_string(p));
}

u64 PrimeModulus::from_signed(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

u64 PrimeModulus::pow(u64 base, u64 exp) const noexcept {
  u64 r = 1 % p_;
  base %= p_;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

u64 PrimeModulus::inv(u64 a) const {
  a %= p_;
  if (a == 0) throw DomainError("inverse of zero mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(m_ == o.m_)) {
    throw UsageError("field elements from different moduli: " + std::to_string(m_.value()) +
                     " vs " + std::to_string(o.m_.value()));
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {m_.add(v_, o.v_), m_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {m_.sub(v_, o.v_), m_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {m_.mul(v_, o.v_), m_};
}

PrimeModulus next_prime_at_least(u64 lower) {
  if (lower < 2 || lower >= PrimeModulus::kMaxExclusive) {
    throw UsageError("next_prime_at_least: lower bound out of range: " + std::to_string(lower));
  }
  for (u64 c = lower;; ++c) {
    if (c >= PrimeModulus::kMaxExclusive) {
      throw CapabilityError("no prime below 2^62 at or above " + std::to_string(lower));
    }
    if (is_prime_u64(c)) return PrimeModulus(c);
  }
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<u64>::max()) {
      throw CapabilityError("binomial overflows 64 bits");
    }
  }
  return static_cast<u64>(r);
}

u64 factorial(u64 n) {
  if (n > 20) throw CapabilityError("factorial overflows 64 bits");
  u64 r = 1;
  for (u64 i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace rarecase
