#include "rarecase/counters/brute_force.hpp"

#include <bit>
#include <string>

namespace rarecase {

namespace {

struct CycleWalk {
  const DirectedMultigraph& e;
  const PrimeModulus& p;
  int n;
  u64 total = 0;

  void run(int v, u64 visited, u64 product, int depth) {
    if (depth == n) {
      total = p.add(total, p.mul(product, e.at(v, 0)));
      return;
    }
    for (int w = 1; w < n; ++w) {
      if ((visited >> w) & 1U) continue;
      u64 a = e.at(v, w);
      if (a == 0) continue;
      run(w, visited | (u64{1} << w), p.mul(product, a), depth + 1);
    }
  }
};

struct PermanentWalk {
  const DirectedMultigraph& e;
  const PrimeModulus& p;
  int n;
  u64 total = 0;

  void run(int row, u64 used, u64 product) {
    if (row == n) {
      total = p.add(total, product);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if ((used >> c) & 1U) continue;
      u64 a = e.at(row, c);
      if (a == 0) continue;
      run(row + 1, used | (u64{1} << c), p.mul(product, a));
    }
  }
};

struct CliqueWalk {
  const UndirectedMultigraph& f;
  const PrimeModulus& p;
  int n;
  int k;
  std::vector<int> chosen;
  u64 total = 0;

  void run(int start, u64 product) {
    if (static_cast<int>(chosen.size()) == k) {
      total = p.add(total, product);
      return;
    }
    int need = k - static_cast<int>(chosen.size());
    for (int v = start; v <= n - need; ++v) {
      u64 q = product;
      for (int u : chosen) {
        q = p.mul(q, f.at(u, v));
        if (q == 0) break;
      }
      if (q == 0) continue;
      chosen.push_back(v);
      run(v + 1, q);
      chosen.pop_back();
    }
  }
};

u64 count_cliques_rec(const std::vector<u64>& rows, u64 candidates, int need) {
  if (need == 0) return 1;
  if (need == 1) return static_cast<u64>(std::popcount(candidates));
  u64 total = 0;
  while (candidates) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    total += count_cliques_rec(rows, candidates & rows[static_cast<std::size_t>(v)], need - 1);
  }
  return total;
}

}  // namespace

FieldElement hcy_bruteforce(const DirectedMultigraph& e) {
  const int n = e.n();
  if (n > 10) throw CapabilityError("hcy_bruteforce is limited to n <= 10");
  const auto& p = e.modulus();
  if (n == 0) return {0, p};
  if (n == 1) return {e.at(0, 0), p};
  CycleWalk w{e, p, n};
  w.run(0, 1, 1, 1);
  return {w.total, p};
}

FieldElement hcl_bruteforce(const UndirectedMultigraph& f) {
  if (f.n() > 14) throw CapabilityError("hcl_bruteforce is limited to n <= 14");
  return kclique_bruteforce(f, f.n() / 2);
}

FieldElement permanent_bruteforce(const DirectedMultigraph& e) {
  if (e.n() > 9) throw CapabilityError("permanent_bruteforce is limited to n <= 9");
  PermanentWalk w{e, e.modulus(), e.n()};
  w.run(0, 0, 1);
  return {w.total, e.modulus()};
}

FieldElement kclique_bruteforce(const UndirectedMultigraph& f, int k) {
  if (k < 0) throw UsageError("clique size must be non-negative");
  if (k > f.n()) return {0, f.modulus()};
  if (binomial(static_cast<u64>(f.n()), static_cast<u64>(k)) > 10'000'000) {
    throw CapabilityError("kclique_bruteforce needs C(n,k) <= 1e7");
  }
  CliqueWalk w{f, f.modulus(), f.n(), k, {}};
  w.run(0, 1);
  return {w.total, f.modulus()};
}

u64 count_kcliques(const SimpleGraph& g, int k) {
  if (k < 0) throw UsageError("clique size must be non-negative");
  if (g.n() > 64) throw CapabilityError("count_kcliques is limited to n <= 64");
  if (k > g.n()) return 0;
  auto rows = g.row_masks();
  // Orient edges low -> high so each clique is counted once.
  for (int v = 0; v < g.n(); ++v) {
    u64 higher = v == 63 ? 0 : ~((u64{2} << v) - 1);
    rows[static_cast<std::size_t>(v)] &= higher;
  }
  u64 all = g.n() == 64 ? ~u64{0} : (u64{1} << g.n()) - 1;
  return count_cliques_rec(rows, all, k);
}

}  // namespace rarecase
