#pragma once

#include <vector>

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

bool is_automorphism(const Permutation& pi, const SimpleGraph& g) noexcept;

// Exact |Aut(g)| by backtracking over S_n. n <= 10.
u64 automorphism_order(const SimpleGraph& g);

// Distinct images permute(pi, g) over all of S_n. n <= 8.
std::vector<SimpleGraph> isomorphism_class(const SimpleGraph& g);

// Draws t*n permutations, ACCEPT iff at least n/2 of them fix g.
Verdict aut_size_test(const SimpleGraph& g, u64 t, RandomStream& rng);

// Fraction of uniform graphs on n vertices with trivial automorphism group. n <= 10.
double empirical_rigidity(int n, u64 samples, RandomStream& rng);

SimpleGraph random_graph(int n, RandomStream& rng);

}  // namespace rarecase
