#include "rarecase/graphs/graph_universe.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace rarecase {

IndexPermuter::IndexPermuter(int n, const Permutation& pi) {
  if (pi.size() != n) throw UsageError("IndexPermuter: size mismatch");
  source_.reserve(pair_count(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) source_.push_back(static_cast<int>(pair_index(n, pi(i), pi(j))));
  }
}

u64 IndexPermuter::operator()(u64 index) const noexcept {
  u64 out = 0;
  for (std::size_t q = 0; q < source_.size(); ++q) out |= ((index >> source_[q]) & 1U) << q;
  return out;
}

GraphUniverse::GraphUniverse(int n) : n_(n) {
  if (n < 1 || n > kMaxN) {
    throw CapabilityError("graph universe is limited to 1 <= n <= " + std::to_string(kMaxN));
  }
  std::vector<IndexPermuter> perms;
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  do {
    perms.emplace_back(n, Permutation(m));
  } while (std::next_permutation(m.begin(), m.end()));

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  class_id_.assign(size(), kUnset);
  for (u64 idx = 0; idx < size(); ++idx) {
    if (class_id_[idx] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(class_size_.size());
    u64 count = 0;
    for (const auto& p : perms) {
      u64 img = p(idx);
      if (class_id_[img] == kUnset) {
        class_id_[img] = id;
        ++count;
      }
    }
    class_size_.push_back(count);
    representative_.push_back(idx);
  }
}

const GraphUniverse& shared_universe(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GraphUniverse>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GraphUniverse>(n);
  return *slot;
}

}  // namespace rarecase
