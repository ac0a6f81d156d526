#pragma once

#include <optional>
#include <string>

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

struct SymCliqueCount {
  u64 count;
  u64 collected;  // distinct images found
  u64 matching;   // images whose first k vertices form a clique
  u64 samples;
};

// Collects distinct images of g under t*n^2 random relabelings (at most
// sample_cap) and extrapolates the k-clique count. Throws InternalAssertion
// if the extrapolation is not an integer.
SymCliqueCount sym_clique_count(const SimpleGraph& g, u64 t, int k, RandomStream& rng,
                                u64 sample_cap = u64{1} << 22);

enum class Family {
  none,
  complete,
  complete_minus_edge,
  clique_plus_isolated,
  clique_plus_pendant,
  clique_plus_two_isolated,
  clique_plus_disjoint_edge,
  complement_complete,
  complement_complete_minus_edge,
  complement_clique_plus_isolated,
  complement_clique_plus_pendant,
  complement_clique_plus_two_isolated,
  complement_clique_plus_disjoint_edge,
};

inline constexpr Family kAllFamilies[] = {
    Family::complete,
    Family::complete_minus_edge,
    Family::clique_plus_isolated,
    Family::clique_plus_pendant,
    Family::clique_plus_two_isolated,
    Family::clique_plus_disjoint_edge,
    Family::complement_complete,
    Family::complement_complete_minus_edge,
    Family::complement_clique_plus_isolated,
    Family::complement_clique_plus_pendant,
    Family::complement_clique_plus_two_isolated,
    Family::complement_clique_plus_disjoint_edge,
};

std::string to_string(Family f);
// Canonical member on n >= 3 vertices.
SimpleGraph construct_family(Family f, int n);
// Closed-form k-clique count for a family member on n vertices, k >= 3.
u64 family_clique_count(Family f, int n, int k);

struct Classification {
  Family family = Family::none;
  std::optional<u64> count;
  bool below_floor = false;
  u64 steps = 0;  // elementary graph operations
};

// Matches g and complement(g) against the six dense families in O(n^2).
// Requires k >= 3. Returns below_floor when n < max(floor, 5).
Classification classify_highly_symmetric(const SimpleGraph& g, int k, int floor = 8);

}  // namespace rarecase
