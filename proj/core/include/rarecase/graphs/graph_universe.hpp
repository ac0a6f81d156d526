#pragma once

#include <cstdint>
#include <vector>

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

// All 2^C(n,2) labelled graphs on n <= 7 vertices, partitioned into isomorphism classes.
class GraphUniverse {
 public:
  static constexpr int kMaxN = 7;

  explicit GraphUniverse(int n);

  int n() const noexcept { return n_; }
  u64 size() const noexcept { return u64{1} << pair_count(n_); }
  std::size_t class_count() const noexcept { return class_size_.size(); }
  std::uint32_t class_of(u64 index) const noexcept { return class_id_[index]; }
  u64 class_size(std::uint32_t id) const noexcept { return class_size_[id]; }
  // Least index in the class.
  u64 representative(std::uint32_t id) const noexcept { return representative_[id]; }

 private:
  int n_;
  std::vector<std::uint32_t> class_id_;
  std::vector<u64> class_size_;
  std::vector<u64> representative_;
};

// Process-wide cached universe; built on first use.
const GraphUniverse& shared_universe(int n);

// Maps a graph index through pi using a precomputed pair map.
class IndexPermuter {
 public:
  IndexPermuter(int n, const Permutation& pi);
  u64 operator()(u64 index) const noexcept;

 private:
  std::vector<int> source_;  // out bit q reads input bit source_[q]
};

}  // namespace rarecase
