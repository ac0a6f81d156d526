#include "rarecase/graphs/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace rarecase {

namespace {

constexpr int kMaxAutN = 10;
constexpr int kMaxClassN = 8;

struct AutSearch {
  const std::vector<u64>& rows;
  const std::vector<int>& deg;
  int n;
  u64 cap;
  std::vector<int> image;
  u64 used = 0;
  u64 found = 0;

  void run(int v) {
    if (found >= cap) return;
    if (v == n) {
      ++found;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1U) continue;
      if (deg[static_cast<std::size_t>(v)] != deg[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        bool a = (rows[static_cast<std::size_t>(u)] >> v) & 1U;
        bool b = (rows[static_cast<std::size_t>(image[static_cast<std::size_t>(u)])] >> w) & 1U;
        ok = a == b;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= u64{1} << w;
      run(v + 1);
      used &= ~(u64{1} << w);
      if (found >= cap) return;
    }
  }
};

u64 count_automorphisms(const SimpleGraph& g, u64 cap) {
  if (g.n() > kMaxAutN) {
    throw CapabilityError("automorphism enumeration is limited to n <= " + std::to_string(kMaxAutN));
  }
  auto rows = g.row_masks();
  std::vector<int> deg(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) deg[i] = std::popcount(rows[i]);
  AutSearch s{rows, deg, g.n(), cap, std::vector<int>(rows.size(), 0)};
  s.run(0);
  return s.found;
}

}  // namespace

bool is_automorphism(const Permutation& pi, const SimpleGraph& g) noexcept {
  if (pi.size() != g.n()) return false;
  std::size_t q = 0;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j, ++q) {
      if (g.bit(q) != g.has_edge(pi(i), pi(j))) return false;
    }
  }
  return true;
}

u64 automorphism_order(const SimpleGraph& g) { return count_automorphisms(g, ~u64{0}); }

std::vector<SimpleGraph> isomorphism_class(const SimpleGraph& g) {
  if (g.n() > kMaxClassN) {
    throw CapabilityError("isomorphism class enumeration is limited to n <= " + std::to_string(kMaxClassN));
  }
  std::vector<int> m(static_cast<std::size_t>(g.n()));
  std::iota(m.begin(), m.end(), 0);
  std::unordered_set<SimpleGraph, SimpleGraphHash> seen;
  std::vector<SimpleGraph> out;
  do {
    SimpleGraph img = permute(Permutation(m), g);
    if (seen.insert(img).second) out.push_back(std::move(img));
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

Verdict aut_size_test(const SimpleGraph& g, u64 t, RandomStream& rng) {
  if (t < 1) throw UsageError("aut_size_test needs t >= 1");
  const u64 n = static_cast<u64>(g.n());
  const u64 draws = t * n;
  u64 fixed = 0;
  for (u64 d = 0; d < draws; ++d) {
    if (is_automorphism(random_permutation(g.n(), rng), g)) ++fixed;
    if (2 * fixed >= n) return Verdict::accept;
  }
  return 2 * fixed >= n ? Verdict::accept : Verdict::reject;
}

SimpleGraph random_graph(int n, RandomStream& rng) {
  SimpleGraph g(n);
  for (std::size_t q = 0; q < g.bit_count(); ++q) g.set_bit(q, rng.next_u64() >> 63);
  return g;
}

double empirical_rigidity(int n, u64 samples, RandomStream& rng) {
  if (n > kMaxAutN) throw CapabilityError("empirical_rigidity is limited to n <= 10");
  if (samples == 0) throw UsageError("empirical_rigidity needs samples >= 1");
  u64 rigid = 0;
  for (u64 s = 0; s < samples; ++s) {
    if (count_automorphisms(random_graph(n, rng), 2) == 1) ++rigid;
  }
  return static_cast<double>(rigid) / static_cast<double>(samples);
}

}  // namespace rarecase
