#include "rarecase/amplification/reductions.hpp"

#include <string>

namespace rarecase {

DirectedMultigraph reduce_hamcycle_to_counting(const SimpleDigraph& d, const PrimeModulus& p, RandomStream& rng) {
  const u64 n = static_cast<u64>(d.n());
  if (p.value() <= n + 1) throw UsageError("reduction needs p > n + 1 = " + std::to_string(n + 1));
  DirectedMultigraph e(d.n(), p);
  for (int i = 0; i < d.n(); ++i) {
    for (int j = 0; j < d.n(); ++j) {
      if (i != j && d.has_arc(i, j)) e.set(i, j, sample_nonzero(p, rng));
    }
  }
  return e;
}

UndirectedMultigraph reduce_half_to_counting(const SimpleGraph& u, const PrimeModulus& p, RandomStream& rng) {
  const u64 m = pair_count(u.n());
  if (p.value() <= m + 1) throw UsageError("reduction needs p > C(n,2) + 1 = " + std::to_string(m + 1));
  UndirectedMultigraph f(u.n(), p);
  for (int i = 0; i < u.n(); ++i) {
    for (int j = i + 1; j < u.n(); ++j) {
      if (u.has_edge(i, j)) f.set(i, j, sample_nonzero(p, rng));
    }
  }
  return f;
}

SimpleGraph reduce_clique_to_half(const SimpleGraph& u, int k) {
  const int n = u.n();
  if (k < 1 || k > n) throw UsageError("reduce_clique_to_half needs 1 <= k <= n");
  if (k > n / 2) return disjoint_union(u, SimpleGraph::empty(2 * k - n));
  const int extra = n - 2 * k;
  SimpleGraph out = disjoint_union(u, SimpleGraph::complete(extra));
  for (int v = 0; v < n; ++v) {
    for (int w = n; w < n + extra; ++w) out.set_edge(v, w);
  }
  return out;
}

}  // namespace rarecase
