#pragma once

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

// Arcs become uniform values in [1, p-1], non-arcs 0. Needs p > n + 1.
DirectedMultigraph reduce_hamcycle_to_counting(const SimpleDigraph& d, const PrimeModulus& p, RandomStream& rng);
// Edges become uniform values in [1, p-1], non-edges 0. Needs p > C(n,2) + 1.
UndirectedMultigraph reduce_half_to_counting(const SimpleGraph& u, const PrimeModulus& p, RandomStream& rng);
// Output has a floor(n'/2)-clique iff u has a k-clique. 1 <= k <= n.
SimpleGraph reduce_clique_to_half(const SimpleGraph& u, int k);

}  // namespace rarecase
