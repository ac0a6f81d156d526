#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rarecase/algebra/prime_field.hpp"
#include "rarecase/graphs/permutation.hpp"

namespace rarecase {

// Canonical pair order: (0,1), (0,2), ..., (n-2,n-1). Requires i != j.
constexpr std::size_t pair_index(int n, int i, int j) noexcept {
  if (i > j) {
    int t = i;
    i = j;
    j = t;
  }
  auto a = static_cast<std::size_t>(i);
  auto b = static_cast<std::size_t>(j);
  auto m = static_cast<std::size_t>(n);
  return a * (2 * m - a - 1) / 2 + (b - a - 1);
}

constexpr std::size_t pair_count(int n) noexcept {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

struct VertexPair {
  int i;
  int j;
};

// Inverse of pair_index.
std::vector<VertexPair> pair_table(int n);

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  static SimpleGraph complete(int n);
  static SimpleGraph empty(int n) { return SimpleGraph(n); }
  static SimpleGraph cycle(int n);
  static SimpleGraph path(int n);
  // Bit q of index is pair q. Requires C(n,2) <= 63.
  static SimpleGraph from_index(int n, u64 index);
  static SimpleGraph from_edges(int n, const std::vector<VertexPair>& edges);

  int n() const noexcept { return n_; }
  std::size_t bit_count() const noexcept { return pair_count(n_); }

  bool bit(std::size_t q) const noexcept { return (words_[q >> 6] >> (q & 63)) & 1U; }
  void set_bit(std::size_t q, bool on) noexcept {
    u64 mask = u64{1} << (q & 63);
    if (on) {
      words_[q >> 6] |= mask;
    } else {
      words_[q >> 6] &= ~mask;
    }
  }
  bool has_edge(int i, int j) const noexcept { return i != j && bit(pair_index(n_, i, j)); }
  void set_edge(int i, int j, bool on = true);

  int degree(int v) const noexcept;
  std::size_t edge_count() const noexcept;
  std::vector<int> degree_sequence() const;  // sorted descending
  u64 to_index() const;
  // Neighbour bitmask per vertex. Requires n <= 64.
  std::vector<u64> row_masks() const;
  std::span<const u64> words() const noexcept { return words_; }

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<u64> words_;
};

struct SimpleGraphHash {
  std::size_t operator()(const SimpleGraph& g) const noexcept;
};

// Loopless directed 0/1 graph.
class SimpleDigraph {
 public:
  SimpleDigraph() = default;
  explicit SimpleDigraph(int n);

  static SimpleDigraph directed_cycle(int n);
  // Orientation i -> j for i < j of an undirected graph.
  static SimpleDigraph acyclic_orientation(const SimpleGraph& g);

  int n() const noexcept { return n_; }
  bool has_arc(int i, int j) const noexcept {
    return arcs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] != 0;
  }
  void set_arc(int i, int j, bool on = true);

  bool operator==(const SimpleDigraph&) const = default;

 private:
  int n_ = 0;
  std::vector<unsigned char> arcs_;
};

// n*n entries in Z_p, row-major, diagonal included.
class DirectedMultigraph {
 public:
  DirectedMultigraph(int n, PrimeModulus p);
  DirectedMultigraph(int n, PrimeModulus p, std::vector<u64> entries);

  static DirectedMultigraph random(int n, PrimeModulus p, RandomStream& rng);
  // All off-diagonal entries set to 1.
  static DirectedMultigraph unit_complete(int n, PrimeModulus p);
  // Unit weights on (0,1), (1,2), ..., (n-1,0).
  static DirectedMultigraph unit_cycle(int n, PrimeModulus p);

  int n() const noexcept { return n_; }
  const PrimeModulus& modulus() const noexcept { return p_; }
  u64 at(int i, int j) const noexcept { return e_[index(i, j)]; }
  void set(int i, int j, u64 v) { e_[index(i, j)] = p_.reduce(v); }
  std::span<const u64> entries() const noexcept { return e_; }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  bool operator==(const DirectedMultigraph&) const = default;

 private:
  int n_;
  PrimeModulus p_;
  std::vector<u64> e_;
};

// C(n,2) entries in Z_p, canonical pair order.
class UndirectedMultigraph {
 public:
  UndirectedMultigraph(int n, PrimeModulus p);
  UndirectedMultigraph(int n, PrimeModulus p, std::vector<u64> entries);

  static UndirectedMultigraph random(int n, PrimeModulus p, RandomStream& rng);
  static UndirectedMultigraph unit(const SimpleGraph& g, PrimeModulus p);
  static UndirectedMultigraph unit_complete(int n, PrimeModulus p);

  int n() const noexcept { return n_; }
  const PrimeModulus& modulus() const noexcept { return p_; }
  u64 at(int i, int j) const noexcept { return i == j ? 0 : e_[pair_index(n_, i, j)]; }
  void set(int i, int j, u64 v);
  std::span<const u64> entries() const noexcept { return e_; }

  bool operator==(const UndirectedMultigraph&) const = default;

 private:
  int n_;
  PrimeModulus p_;
  std::vector<u64> e_;
};

// Output entry (i,j) is input entry (pi(i), pi(j)).
SimpleGraph permute(const Permutation& pi, const SimpleGraph& g);
DirectedMultigraph permute(const Permutation& pi, const DirectedMultigraph& g);
UndirectedMultigraph permute(const Permutation& pi, const UndirectedMultigraph& g);

SimpleGraph complement(const SimpleGraph& g);
// Disjoint union, vertices of b shifted by a.n().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace rarecase
