#pragma once

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

// Sum over Hamiltonian cycles of the arc-weight product. n <= 10.
FieldElement hcy_bruteforce(const DirectedMultigraph& e);
// Sum over floor(n/2)-subsets of the edge-weight product. n <= 14.
FieldElement hcl_bruteforce(const UndirectedMultigraph& f);
// n <= 9.
FieldElement permanent_bruteforce(const DirectedMultigraph& e);
// Weighted k-clique sum. C(n,k) <= 1e7.
FieldElement kclique_bruteforce(const UndirectedMultigraph& f, int k);

// Number of k-cliques in a simple graph. n <= 64.
u64 count_kcliques(const SimpleGraph& g, int k);

}  // namespace rarecase
