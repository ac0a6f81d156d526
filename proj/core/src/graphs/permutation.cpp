#include "rarecase/graphs/permutation.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace rarecase {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<char> seen(map_.size(), 0);
  for (int v : map_) {
    if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("mapping is not a bijection on " + std::to_string(map_.size()) + " points");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw UsageError("negative permutation size");
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k];
      if (a < 0 || a >= n || used[static_cast<std::size_t>(a)]) {
        throw UsageError("cycles are not disjoint points of [0, n)");
      }
      used[static_cast<std::size_t>(a)] = 1;
      m[static_cast<std::size_t>(a)] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw UsageError("compose: size mismatch");
  std::vector<int> m(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) m[static_cast<std::size_t>(x)] = a(b(x));
  return Permutation(std::move(m));
}

Permutation inverse(const Permutation& a) {
  std::vector<int> m(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) m[static_cast<std::size_t>(a(x))] = x;
  return Permutation(std::move(m));
}

Permutation conjugate(const Permutation& a, const Permutation& s) {
  return compose(compose(s, a), inverse(s));
}

Permutation random_permutation(int n, RandomStream& rng) {
  if (n < 1) throw UsageError("random_permutation needs n >= 1");
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    auto j = rng.uniform_below(static_cast<u64>(i) + 1);
    std::swap(m[static_cast<std::size_t>(i)], m[j]);
  }
  return Permutation(std::move(m));
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  std::vector<char> seen(static_cast<std::size_t>(p.size()), 0);
  for (int s = 0; s < p.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++len;
    }
    t.parts.push_back(len);
  }
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  return t;
}

Permutation permutation_of_type(int n, const std::vector<int>& parts) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int len : parts) {
    if (len < 1) throw UsageError("cycle lengths must be positive");
    std::vector<int> c;
    for (int k = 0; k < len; ++k) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  if (next != n) throw UsageError("cycle type does not sum to n");
  return Permutation::from_cycles(n, cycles);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  u64 h = static_cast<u64>(p.size());
  for (int v : p.mapping()) h = mix64(h ^ static_cast<u64>(v));
  return static_cast<std::size_t>(h);
}

}  // namespace rarecase
