#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "rarecase/algebra/random_stream.hpp"

namespace rarecase {

// Bijection on {0..n-1}. Files and reports use 1-based labels.
class Permutation {
 public:
  Permutation() = default;
  // Throws UsageError unless mapping is a bijection.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  // 0-based disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(map_.size()); }
  int operator()(int i) const noexcept { return map_[static_cast<std::size_t>(i)]; }
  std::span<const int> mapping() const noexcept { return map_; }
  bool is_identity() const noexcept;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

// Vertex map x -> a(b(x)). On graphs this acts as a, then b:
// permute(compose(a, b), G) == permute(b, permute(a, G)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
// s a s^-1
Permutation conjugate(const Permutation& a, const Permutation& s);

// Fisher-Yates.
Permutation random_permutation(int n, RandomStream& rng);

struct CycleType {
  std::vector<int> parts;  // descending, sums to n
  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& p);
// Representative with cycles laid out consecutively in the order given.
Permutation permutation_of_type(int n, const std::vector<int>& parts);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace rarecase
