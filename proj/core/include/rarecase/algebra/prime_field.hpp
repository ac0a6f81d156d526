#pragma once

#include <cstdint>
#include <string>

#include "rarecase/errors.hpp"

namespace rarecase {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

// Deterministic for every 64-bit input.
bool is_prime_u64(u64 n) noexcept;

// A prime p with 2 <= p < 2^62.
class PrimeModulus {
 public:
  static constexpr u64 kMaxExclusive = u64{1} << 62;

  explicit PrimeModulus(u64 p);

  u64 value() const noexcept { return p_; }
  int bit_width() const noexcept { return bits_; }

  u64 reduce(u64 x) const noexcept { return x % p_; }
  u64 reduce(u128 x) const noexcept { return static_cast<u64>(x % p_); }
  u64 from_signed(std::int64_t x) const noexcept;

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    if (small_) return (a * b) % p_;
    return static_cast<u64>((static_cast<u128>(a) * b) % p_);
  }
  u64 pow(u64 base, u64 exp) const noexcept;
  // Throws DomainError when a == 0.
  u64 inv(u64 a) const;

  bool operator==(const PrimeModulus& o) const noexcept { return p_ == o.p_; }

 private:
  u64 p_;
  int bits_;
  bool small_;
};

class FieldElement {
 public:
  FieldElement(u64 value, const PrimeModulus& m) : v_(m.reduce(value)), m_(m) {}

  u64 value() const noexcept { return v_; }
  const PrimeModulus& modulus() const noexcept { return m_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {m_.neg(v_), m_}; }
  FieldElement pow(u64 e) const { return {m_.pow(v_, e), m_}; }
  FieldElement inv() const { return {m_.inv(v_), m_}; }

  bool operator==(const FieldElement& o) const noexcept {
    return v_ == o.v_ && m_ == o.m_;
  }

 private:
  void check_same(const FieldElement& o) const;

  u64 v_;
  PrimeModulus m_;
};

PrimeModulus next_prime_at_least(u64 lower);

// Exact C(n, k); throws CapabilityError on 64-bit overflow.
u64 binomial(u64 n, u64 k);
u64 factorial(u64 n);

}  // namespace rarecase
