#include "rarecase/identity/hcy_tests.hpp"

#include <optional>

#include "checks.hpp"

namespace rarecase {

namespace {

struct Rejection {
  std::string round;
  std::string reason;
};

using Outcome = std::optional<Rejection>;

void check_hcy_domain(const PolynomialMachine& m) {
  detail::require_kind(m, DomainKind::directed);
  detail::require_prime_above(m, static_cast<u64>(m.n()));
}

std::vector<u64> random_entries(const PolynomialMachine& m, RandomStream& rng) {
  std::vector<u64> e(m.input_size());
  for (auto& v : e) v = rng.uniform_below(m.modulus().value());
  return e;
}

Outcome genperm_pass(QuerySession& s, RandomStream& rng) {
  const auto& m = s.machine();
  const int n = m.n();
  const auto un = static_cast<std::size_t>(n);
  s.begin_round();
  for (int i = 0; i < n; ++i) {
    auto e = random_entries(m, rng);
    for (std::size_t j = 0; j < un; ++j) e[static_cast<std::size_t>(i) * un + j] = 0;
    if (s.ask(e, "genperm-row") != 0) return Rejection{"genperm", "nonzero with row " + std::to_string(i + 1) + " zeroed"};
    auto f = random_entries(m, rng);
    for (std::size_t j = 0; j < un; ++j) f[j * un + static_cast<std::size_t>(i)] = 0;
    if (s.ask(f, "genperm-col") != 0) return Rejection{"genperm", "nonzero with column " + std::to_string(i + 1) + " zeroed"};
  }
  return std::nullopt;
}

Outcome isoperm_round(QuerySession& s, RandomStream& rng) {
  const auto& m = s.machine();
  s.begin_round();
  DirectedMultigraph e(m.n(), m.modulus(), random_entries(m, rng));
  const auto pi = random_permutation(m.n(), rng);
  const u64 a = s.ask(e.entries(), "isoperm");
  const u64 b = s.ask(permute(pi, e).entries(), "isoperm");
  if (a != b) return Rejection{"isoperm", "answer changed under relabeling"};
  return std::nullopt;
}

Outcome nocycle_round(QuerySession& s, int k, RandomStream& rng) {
  const auto& m = s.machine();
  const int n = m.n();
  s.begin_round();
  DirectedMultigraph e(n, m.modulus());
  for (int i = k; i < n; ++i) {
    for (int j = k; j < n; ++j) e.set(i, j, rng.uniform_below(m.modulus().value()));
  }
  for (int i = 0; i + 1 < k; ++i) e.set(i, i + 1, 1);
  e.set(k - 1, 0, 1);
  if (s.ask(e.entries(), "nocycle-" + std::to_string(k)) != 0) {
    return Rejection{"nocycle-" + std::to_string(k), "nonzero with a planted " + std::to_string(k) + "-cycle"};
  }
  return std::nullopt;
}

void check_k(const PolynomialMachine& m, int k) {
  if (k < 1 || k > m.n() / 2) throw UsageError("nocycle needs 1 <= k <= n/2, got k=" + std::to_string(k));
}

}  // namespace

TestVerdict genperm_test(const PolynomialMachine& m, RandomStream& rng, const IdentityOptions& opt) {
  check_hcy_domain(m);
  detail::require_degree_at_most(m, static_cast<u64>(m.n()));
  QuerySession s(m, opt.record_transcript);
  if (auto r = genperm_pass(s, rng)) return s.reject(1, r->round, r->reason);
  return s.accept(1);
}

TestVerdict isoperm_test(const PolynomialMachine& m, RandomStream& rng, const IdentityOptions& opt) {
  check_hcy_domain(m);
  QuerySession s(m, opt.record_transcript);
  if (auto r = isoperm_round(s, rng)) return s.reject(1, r->round, r->reason);
  return s.accept(1);
}

TestVerdict nocycle_test(const PolynomialMachine& m, int k, RandomStream& rng, const IdentityOptions& opt) {
  check_hcy_domain(m);
  check_k(m, k);
  QuerySession s(m, opt.record_transcript);
  if (auto r = nocycle_round(s, k, rng)) return s.reject(1, r->round, r->reason);
  return s.accept(1);
}

TestVerdict is_hcy_pipeline(const PolynomialMachine& m, u64 repetitions, RandomStream& rng,
                            const IdentityOptions& opt) {
  check_hcy_domain(m);
  detail::require_degree_at_most(m, static_cast<u64>(m.n()));
  if (repetitions < 1) throw UsageError("repetitions must be >= 1");
  if (opt.nocycle_k_min < 1) throw UsageError("nocycle_k_min must be >= 1");
  QuerySession s(m, opt.record_transcript);
  u64 rounds = 0;
  for (u64 r = 0; r < repetitions; ++r) {
    ++rounds;
    if (auto x = genperm_pass(s, rng)) return s.reject(rounds, x->round, x->reason);
  }
  for (u64 r = 0; r < repetitions; ++r) {
    ++rounds;
    if (auto x = isoperm_round(s, rng)) return s.reject(rounds, x->round, x->reason);
  }
  for (int k = opt.nocycle_k_min; k <= m.n() / 2; ++k) {
    for (u64 r = 0; r < repetitions; ++r) {
      ++rounds;
      if (auto x = nocycle_round(s, k, rng)) return s.reject(rounds, x->round, x->reason);
    }
  }
  ++rounds;
  s.begin_round();
  const auto cycle = DirectedMultigraph::unit_cycle(m.n(), m.modulus());
  if (s.ask(cycle.entries(), "final-probe") != 1) {
    return s.reject(rounds, "final-probe", "unit Hamiltonian cycle did not evaluate to 1");
  }
  return s.accept(rounds);
}

u64 hcy_pipeline_query_count(int n, u64 repetitions, int nocycle_k_min) {
  const int ks = std::max(0, n / 2 - nocycle_k_min + 1);
  return repetitions * (2 * static_cast<u64>(n) + 2 + static_cast<u64>(ks)) + 1;
}

}  // namespace rarecase
