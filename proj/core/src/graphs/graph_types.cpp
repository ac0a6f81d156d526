#include "rarecase/graphs/graph_types.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

namespace rarecase {

namespace {

void check_n(int n) {
  if (n < 0) throw UsageError("negative vertex count");
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw UsageError("vertex out of range: " + std::to_string(v));
}

void check_perm(const Permutation& pi, int n) {
  if (pi.size() != n) {
    throw UsageError("permutation on " + std::to_string(pi.size()) + " points applied to graph on " +
                     std::to_string(n));
  }
}

}  // namespace

std::vector<VertexPair> pair_table(int n) {
  std::vector<VertexPair> t;
  t.reserve(pair_count(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) t.push_back({i, j});
  }
  return t;
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
  check_n(n);
  words_.assign((pair_count(n) + 63) / 64, 0);
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (std::size_t q = 0; q < g.bit_count(); ++q) g.set_bit(q, true);
  return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
  SimpleGraph g(n);
  if (n >= 3) {
    for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n);
  } else if (n == 2) {
    g.set_edge(0, 1);
  }
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
  return g;
}

SimpleGraph SimpleGraph::from_index(int n, u64 index) {
  SimpleGraph g(n);
  if (g.bit_count() > 63) throw CapabilityError("graph index needs C(n,2) <= 63");
  if (g.bit_count() < 64 && (index >> g.bit_count()) != 0) {
    throw UsageError("graph index out of range");
  }
  if (!g.words_.empty()) g.words_[0] = index;
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<VertexPair>& edges) {
  SimpleGraph g(n);
  for (auto [i, j] : edges) g.set_edge(i, j);
  return g;
}

void SimpleGraph::set_edge(int i, int j, bool on) {
  check_vertex(n_, i);
  check_vertex(n_, j);
  if (i == j) throw UsageError("self-loops are not representable in a simple graph");
  set_bit(pair_index(n_, i, j), on);
}

int SimpleGraph::degree(int v) const noexcept {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += has_edge(u, v) ? 1 : 0;
  return d;
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t c = 0;
  for (u64 w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  std::size_t q = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++q) {
      if (bit(q)) {
        ++d[static_cast<std::size_t>(i)];
        ++d[static_cast<std::size_t>(j)];
      }
    }
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

u64 SimpleGraph::to_index() const {
  if (bit_count() > 63) throw CapabilityError("graph index needs C(n,2) <= 63");
  return words_.empty() ? 0 : words_[0];
}

std::vector<u64> SimpleGraph::row_masks() const {
  if (n_ > 64) throw CapabilityError("row masks need n <= 64");
  std::vector<u64> rows(static_cast<std::size_t>(n_), 0);
  std::size_t q = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++q) {
      if (bit(q)) {
        rows[static_cast<std::size_t>(i)] |= u64{1} << j;
        rows[static_cast<std::size_t>(j)] |= u64{1} << i;
      }
    }
  }
  return rows;
}

std::size_t SimpleGraphHash::operator()(const SimpleGraph& g) const noexcept {
  u64 h = mix64(static_cast<u64>(g.n()));
  for (u64 w : g.words()) h = mix64(h ^ w);
  return static_cast<std::size_t>(h);
}

SimpleDigraph::SimpleDigraph(int n) : n_(n) {
  check_n(n);
  arcs_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

SimpleDigraph SimpleDigraph::directed_cycle(int n) {
  SimpleDigraph d(n);
  if (n >= 2) {
    for (int i = 0; i < n; ++i) d.set_arc(i, (i + 1) % n);
  }
  return d;
}

SimpleDigraph SimpleDigraph::acyclic_orientation(const SimpleGraph& g) {
  SimpleDigraph d(g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.has_edge(i, j)) d.set_arc(i, j);
    }
  }
  return d;
}

void SimpleDigraph::set_arc(int i, int j, bool on) {
  check_vertex(n_, i);
  check_vertex(n_, j);
  if (i == j) throw UsageError("self-loops are not representable in a simple digraph");
  arcs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] = on ? 1 : 0;
}

DirectedMultigraph::DirectedMultigraph(int n, PrimeModulus p)
    : n_(n), p_(p), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  check_n(n);
}

DirectedMultigraph::DirectedMultigraph(int n, PrimeModulus p, std::vector<u64> entries)
    : n_(n), p_(p), e_(std::move(entries)) {
  check_n(n);
  if (e_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw UsageError("directed multigraph needs n^2 entries");
  }
  for (u64& v : e_) {
    if (v >= p_.value()) throw UsageError("entry outside [0, p)");
  }
}

DirectedMultigraph DirectedMultigraph::random(int n, PrimeModulus p, RandomStream& rng) {
  DirectedMultigraph g(n, p);
  for (u64& v : g.e_) v = rng.uniform_below(p.value());
  return g;
}

DirectedMultigraph DirectedMultigraph::unit_complete(int n, PrimeModulus p) {
  DirectedMultigraph g(n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) g.set(i, j, 1);
    }
  }
  return g;
}

DirectedMultigraph DirectedMultigraph::unit_cycle(int n, PrimeModulus p) {
  DirectedMultigraph g(n, p);
  for (int i = 0; i < n; ++i) g.set(i, (i + 1) % n, 1);
  return g;
}

UndirectedMultigraph::UndirectedMultigraph(int n, PrimeModulus p) : n_(n), p_(p), e_(pair_count(n), 0) {
  check_n(n);
}

UndirectedMultigraph::UndirectedMultigraph(int n, PrimeModulus p, std::vector<u64> entries)
    : n_(n), p_(p), e_(std::move(entries)) {
  check_n(n);
  if (e_.size() != pair_count(n)) throw UsageError("undirected multigraph needs C(n,2) entries");
  for (u64 v : e_) {
    if (v >= p_.value()) throw UsageError("entry outside [0, p)");
  }
}

UndirectedMultigraph UndirectedMultigraph::random(int n, PrimeModulus p, RandomStream& rng) {
  UndirectedMultigraph g(n, p);
  for (u64& v : g.e_) v = rng.uniform_below(p.value());
  return g;
}

UndirectedMultigraph UndirectedMultigraph::unit(const SimpleGraph& s, PrimeModulus p) {
  UndirectedMultigraph g(s.n(), p);
  for (std::size_t q = 0; q < s.bit_count(); ++q) g.e_[q] = s.bit(q) ? 1 % p.value() : 0;
  return g;
}

UndirectedMultigraph UndirectedMultigraph::unit_complete(int n, PrimeModulus p) {
  return unit(SimpleGraph::complete(n), p);
}

void UndirectedMultigraph::set(int i, int j, u64 v) {
  check_vertex(n_, i);
  check_vertex(n_, j);
  if (i == j) throw UsageError("undirected multigraphs have no diagonal");
  e_[pair_index(n_, i, j)] = p_.reduce(v);
}

SimpleGraph permute(const Permutation& pi, const SimpleGraph& g) {
  check_perm(pi, g.n());
  SimpleGraph out(g.n());
  std::size_t q = 0;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j, ++q) {
      if (g.has_edge(pi(i), pi(j))) out.set_bit(q, true);
    }
  }
  return out;
}

DirectedMultigraph permute(const Permutation& pi, const DirectedMultigraph& g) {
  check_perm(pi, g.n());
  DirectedMultigraph out(g.n(), g.modulus());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) out.set(i, j, g.at(pi(i), pi(j)));
  }
  return out;
}

UndirectedMultigraph permute(const Permutation& pi, const UndirectedMultigraph& g) {
  check_perm(pi, g.n());
  UndirectedMultigraph out(g.n(), g.modulus());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) out.set(i, j, g.at(pi(i), pi(j)));
  }
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.n());
  for (std::size_t q = 0; q < g.bit_count(); ++q) out.set_bit(q, !g.bit(q));
  return out;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph out(a.n() + b.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i + 1; j < a.n(); ++j) {
      if (a.has_edge(i, j)) out.set_edge(i, j);
    }
  }
  for (int i = 0; i < b.n(); ++i) {
    for (int j = i + 1; j < b.n(); ++j) {
      if (b.has_edge(i, j)) out.set_edge(a.n() + i, a.n() + j);
    }
  }
  return out;
}

}  // namespace rarecase
