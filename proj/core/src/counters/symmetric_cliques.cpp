#include "rarecase/counters/symmetric_cliques.hpp"

#include <algorithm>
#include <unordered_set>

namespace rarecase {

namespace {

bool prefix_is_clique(const SimpleGraph& g, int k) {
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!g.has_edge(i, j)) return false;
    }
  }
  return true;
}

std::vector<int> vertices_with_degree(const std::vector<int>& deg, int d) {
  std::vector<int> out;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == d) out.push_back(static_cast<int>(v));
  }
  return out;
}

SimpleGraph complete_except(int n, const std::vector<int>& outside) {
  SimpleGraph g(n);
  std::vector<char> out(static_cast<std::size_t>(n), 0);
  for (int v : outside) out[static_cast<std::size_t>(v)] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!out[static_cast<std::size_t>(i)] && !out[static_cast<std::size_t>(j)]) g.set_edge(i, j);
    }
  }
  return g;
}

// Ascending degree sequence of a dense family member.
std::vector<int> dense_degrees(Family f, int n) {
  std::vector<int> d;
  auto put = [&](int count, int value) { d.insert(d.end(), static_cast<std::size_t>(count), value); };
  switch (f) {
    case Family::complete: put(n, n - 1); break;
    case Family::complete_minus_edge: put(2, n - 2), put(n - 2, n - 1); break;
    case Family::clique_plus_isolated: put(1, 0), put(n - 1, n - 2); break;
    case Family::clique_plus_pendant: put(1, 1), put(1, n - 1), put(n - 2, n - 2); break;
    case Family::clique_plus_two_isolated: put(2, 0), put(n - 2, n - 3); break;
    case Family::clique_plus_disjoint_edge: put(2, 1), put(n - 2, n - 3); break;
    default: break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Rebuilds the dense family member from g's special vertices and compares.
bool matches_dense(const SimpleGraph& g, const std::vector<int>& deg, Family f, u64& steps) {
  const int n = g.n();
  std::vector<int> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  steps += static_cast<u64>(n);
  if (sorted != dense_degrees(f, n)) return false;
  SimpleGraph want(n);
  switch (f) {
    case Family::complete:
      want = SimpleGraph::complete(n);
      break;
    case Family::complete_minus_edge: {
      auto s = vertices_with_degree(deg, n - 2);
      if (s.size() != 2) return false;
      want = SimpleGraph::complete(n);
      want.set_edge(s[0], s[1], false);
      break;
    }
    case Family::clique_plus_isolated: {
      auto z = vertices_with_degree(deg, 0);
      if (z.size() != 1) return false;
      want = complete_except(n, z);
      break;
    }
    case Family::clique_plus_pendant: {
      auto leaf = vertices_with_degree(deg, 1);
      auto hub = vertices_with_degree(deg, n - 1);
      if (leaf.size() != 1 || hub.size() != 1) return false;
      want = complete_except(n, leaf);
      want.set_edge(leaf[0], hub[0]);
      break;
    }
    case Family::clique_plus_two_isolated: {
      auto z = vertices_with_degree(deg, 0);
      if (z.size() != 2) return false;
      want = complete_except(n, z);
      break;
    }
    case Family::clique_plus_disjoint_edge: {
      auto x = vertices_with_degree(deg, 1);
      if (x.size() != 2) return false;
      want = complete_except(n, x);
      want.set_edge(x[0], x[1]);
      break;
    }
    default:
      return false;
  }
  steps += g.bit_count();
  return want == g;
}

Family complement_of(Family f) {
  switch (f) {
    case Family::complete: return Family::complement_complete;
    case Family::complete_minus_edge: return Family::complement_complete_minus_edge;
    case Family::clique_plus_isolated: return Family::complement_clique_plus_isolated;
    case Family::clique_plus_pendant: return Family::complement_clique_plus_pendant;
    case Family::clique_plus_two_isolated: return Family::complement_clique_plus_two_isolated;
    case Family::clique_plus_disjoint_edge: return Family::complement_clique_plus_disjoint_edge;
    default: return Family::none;
  }
}

constexpr Family kDense[] = {
    Family::complete,           Family::complete_minus_edge,      Family::clique_plus_isolated,
    Family::clique_plus_pendant, Family::clique_plus_two_isolated, Family::clique_plus_disjoint_edge,
};

}  // namespace

SymCliqueCount sym_clique_count(const SimpleGraph& g, u64 t, int k, RandomStream& rng, u64 sample_cap) {
  const int n = g.n();
  if (t < 1) throw UsageError("sym_clique_count needs t >= 1");
  if (k < 0) throw UsageError("clique size must be non-negative");
  if (n < 1) throw UsageError("sym_clique_count needs n >= 1");
  const u128 wanted = static_cast<u128>(t) * static_cast<u128>(n) * static_cast<u128>(n);
  const u64 samples = wanted > sample_cap ? sample_cap : static_cast<u64>(wanted);

  std::unordered_set<SimpleGraph, SimpleGraphHash> seen;
  seen.insert(g);
  u64 matching = k <= n && prefix_is_clique(g, k) ? 1 : 0;
  for (u64 s = 0; s < samples; ++s) {
    SimpleGraph img = permute(random_permutation(n, rng), g);
    if (seen.contains(img)) continue;
    if (k <= n && prefix_is_clique(img, k)) ++matching;
    seen.insert(std::move(img));
  }
  const u64 collected = seen.size();
  if (k > n) return {0, collected, 0, samples};
  const u128 scaled = static_cast<u128>(matching) * binomial(static_cast<u64>(n), static_cast<u64>(k));
  if (scaled % collected != 0) {
    throw InternalAssertion("sym_clique_count: " + std::to_string(matching) + "*C(n,k) not divisible by " +
                            std::to_string(collected) + " collected images");
  }
  return {static_cast<u64>(scaled / collected), collected, matching, samples};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::none: return "none";
    case Family::complete: return "complete";
    case Family::complete_minus_edge: return "complete-minus-edge";
    case Family::clique_plus_isolated: return "clique-plus-isolated";
    case Family::clique_plus_pendant: return "clique-plus-pendant";
    case Family::clique_plus_two_isolated: return "clique-plus-two-isolated";
    case Family::clique_plus_disjoint_edge: return "clique-plus-disjoint-edge";
    case Family::complement_complete: return "complement-complete";
    case Family::complement_complete_minus_edge: return "complement-complete-minus-edge";
    case Family::complement_clique_plus_isolated: return "complement-clique-plus-isolated";
    case Family::complement_clique_plus_pendant: return "complement-clique-plus-pendant";
    case Family::complement_clique_plus_two_isolated: return "complement-clique-plus-two-isolated";
    case Family::complement_clique_plus_disjoint_edge: return "complement-clique-plus-disjoint-edge";
  }
  return "none";
}

SimpleGraph construct_family(Family f, int n) {
  if (n < 3) throw UsageError("family graphs need n >= 3");
  switch (f) {
    case Family::complete:
      return SimpleGraph::complete(n);
    case Family::complete_minus_edge: {
      auto g = SimpleGraph::complete(n);
      g.set_edge(n - 2, n - 1, false);
      return g;
    }
    case Family::clique_plus_isolated:
      return complete_except(n, {n - 1});
    case Family::clique_plus_pendant: {
      auto g = complete_except(n, {n - 1});
      g.set_edge(0, n - 1);
      return g;
    }
    case Family::clique_plus_two_isolated:
      return complete_except(n, {n - 2, n - 1});
    case Family::clique_plus_disjoint_edge: {
      auto g = complete_except(n, {n - 2, n - 1});
      g.set_edge(n - 2, n - 1);
      return g;
    }
    case Family::none:
      throw UsageError("no graph for family none");
    default:
      for (Family d : kDense) {
        if (complement_of(d) == f) return complement(construct_family(d, n));
      }
  }
  throw UsageError("unknown family");
}

u64 family_clique_count(Family f, int n, int k) {
  if (k < 3) throw UsageError("closed forms need k >= 3");
  const auto N = static_cast<u64>(n);
  const auto K = static_cast<u64>(k);
  switch (f) {
    case Family::complete: return binomial(N, K);
    case Family::complete_minus_edge: return binomial(N, K) - binomial(N - 2, K - 2);
    case Family::clique_plus_isolated:
    case Family::clique_plus_pendant: return binomial(N - 1, K);
    case Family::clique_plus_two_isolated:
    case Family::clique_plus_disjoint_edge: return binomial(N - 2, K);
    // Two universal vertices over an independent set.
    case Family::complement_clique_plus_two_isolated: return k == 3 ? N - 2 : 0;
    case Family::none: throw UsageError("no count for family none");
    default: return 0;
  }
}

Classification classify_highly_symmetric(const SimpleGraph& g, int k, int floor) {
  if (k < 3) throw UsageError("classify_highly_symmetric needs k >= 3");
  Classification out;
  if (g.n() < std::max(floor, 5)) {
    out.below_floor = true;
    return out;
  }
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  out.steps += g.bit_count() * 2;
  for (Family f : kDense) {
    if (matches_dense(g, deg, f, out.steps)) {
      out.family = f;
      out.count = family_clique_count(f, g.n(), k);
      return out;
    }
  }
  const SimpleGraph h = complement(g);
  out.steps += g.bit_count();
  std::vector<int> hdeg(deg.size());
  for (std::size_t v = 0; v < deg.size(); ++v) hdeg[v] = g.n() - 1 - deg[v];
  for (Family f : kDense) {
    if (matches_dense(h, hdeg, f, out.steps)) {
      out.family = complement_of(f);
      out.count = family_clique_count(out.family, g.n(), k);
      return out;
    }
  }
  return out;
}

}  // namespace rarecase
