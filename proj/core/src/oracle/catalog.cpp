#include "rarecase/oracle/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>

#include "rarecase/counters/brute_force.hpp"

namespace rarecase {

namespace {

constexpr int kMaxDpN = 20;

// Accumulates products mod p in 128 bits, reducing before overflow.
class Accumulator {
 public:
  explicit Accumulator(const PrimeModulus& p) : p_(p) {}
  void add_product(u64 a, u64 b) {
    acc_ += static_cast<u128>(a) * b;
    if (acc_ >> 125) acc_ %= p_.value();
  }
  u64 value() const { return p_.reduce(acc_); }

 private:
  const PrimeModulus& p_;
  u128 acc_ = 0;
};

// Held-Karp over paths starting at vertex 0.
u64 hamiltonian_cycles_dp(int n, const PrimeModulus& p, std::span<const u64> e) {
  auto at = [&](int i, int j) { return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
  if (n == 1) return at(0, 0);
  const int m = n - 1;  // vertices 1..n-1 live at bits 0..m-1
  const std::size_t states = std::size_t{1} << m;
  std::vector<u64> dp(states * static_cast<std::size_t>(m), 0);
  for (int v = 0; v < m; ++v) dp[(std::size_t{1} << v) * static_cast<std::size_t>(m) + static_cast<std::size_t>(v)] = at(0, v + 1);
  for (std::size_t mask = 1; mask < states; ++mask) {
    if (std::has_single_bit(mask)) continue;
    for (u64 rest = mask; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::size_t prev = mask & ~(std::size_t{1} << v);
      Accumulator acc(p);
      for (u64 us = prev; us; us &= us - 1) {
        const int u = std::countr_zero(us);
        acc.add_product(dp[prev * static_cast<std::size_t>(m) + static_cast<std::size_t>(u)], at(u + 1, v + 1));
      }
      dp[mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(v)] = acc.value();
    }
  }
  Accumulator acc(p);
  const std::size_t full = states - 1;
  for (int v = 0; v < m; ++v) acc.add_product(dp[full * static_cast<std::size_t>(m) + static_cast<std::size_t>(v)], at(v + 1, 0));
  return acc.value();
}

u64 permanent_dp(int n, const PrimeModulus& p, std::span<const u64> e) {
  const std::size_t states = std::size_t{1} << n;
  std::vector<u64> dp(states, 0);
  dp[0] = 1;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const int row = std::popcount(mask) - 1;
    Accumulator acc(p);
    for (std::size_t cs = mask; cs; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      acc.add_product(dp[mask & ~(std::size_t{1} << c)], e[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]);
    }
    dp[mask] = acc.value();
  }
  return dp[states - 1];
}

PolynomialMachine from_poly(SparseMonomialPoly poly, DomainKind kind, int n, PrimeModulus p, int degree_bound,
                            std::string label) {
  auto shared = std::make_shared<const SparseMonomialPoly>(poly);
  return PolynomialMachine(
      kind, n, p, degree_bound, std::move(label), [shared](std::span<const u64> x) { return shared->evaluate(x); },
      std::move(poly));
}

int directed_var(int n, int i, int j) { return i * n + j; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

u64 parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    auto v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": '" + s + "'");
  }
}

}  // namespace

PolynomialMachine exact_hcy_machine(int n, PrimeModulus p) {
  if (n > kMaxDpN) throw CapabilityError("exact_hcy is limited to n <= 20");
  return PolynomialMachine(DomainKind::directed, n, p, n, "exact_hcy",
                           [n, p](std::span<const u64> x) { return hamiltonian_cycles_dp(n, p, x); });
}

PolynomialMachine exact_hcl_machine(int n, PrimeModulus p) {
  if (n > 14) throw CapabilityError("exact_hcl is limited to n <= 14");
  const int half = n / 2;
  const int degree = half * (half - 1) / 2;
  return PolynomialMachine(DomainKind::undirected, n, p, degree, "exact_hcl", [n, p](std::span<const u64> x) {
    return hcl_bruteforce(UndirectedMultigraph(n, p, std::vector<u64>(x.begin(), x.end()))).value();
  });
}

PolynomialMachine exact_permanent_machine(int n, PrimeModulus p) {
  if (n > kMaxDpN) throw CapabilityError("exact_permanent is limited to n <= 20");
  return PolynomialMachine(DomainKind::directed, n, p, n, "exact_permanent",
                           [n, p](std::span<const u64> x) { return permanent_dp(n, p, x); });
}

PolynomialMachine scaled_machine(const PolynomialMachine& inner, u64 alpha) {
  const PrimeModulus p = inner.modulus();
  const u64 a = p.reduce(alpha);
  auto in = std::make_shared<const PolynomialMachine>(inner);
  std::string label = "scaled(" + std::to_string(alpha) + "," + inner.label() + ")";
  return PolynomialMachine(inner.domain_kind(), inner.n(), p, inner.degree_bound(), std::move(label),
                           [in, a, p](std::span<const u64> x) { return p.mul(a, in->evaluate(x).value()); });
}

PolynomialMachine conj_class_machine(const std::vector<int>& parts, int n, PrimeModulus p) {
  if (n > 8) throw CapabilityError("conj_class is limited to n <= 8");
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const CycleType type{sorted};
  SparseMonomialPoly poly(VariableKind::directed, n, p);
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  (void)permutation_of_type(n, sorted);
  do {
    Permutation s(m);
    if (!(cycle_type(s) == type)) continue;
    std::vector<int> vars;
    for (int i = 0; i < n; ++i) vars.push_back(directed_var(n, i, s(i)));
    poly.add_term(std::move(vars), 1);
  } while (std::next_permutation(m.begin(), m.end()));
  std::string label = "conj_class(";
  for (std::size_t i = 0; i < sorted.size(); ++i) label += (i ? "," : "") + std::to_string(sorted[i]);
  label += ")";
  return from_poly(std::move(poly), DomainKind::directed, n, p, n, std::move(label));
}

PolynomialMachine single_cover_monomial_machine(int n, PrimeModulus p) {
  SparseMonomialPoly poly(VariableKind::directed, n, p);
  std::vector<int> vars;
  for (int i = 0; i < n; ++i) vars.push_back(directed_var(n, i, (i + 1) % n));
  poly.add_term(std::move(vars), 1);
  return from_poly(std::move(poly), DomainKind::directed, n, p, n, "single_cover_monomial");
}

PolynomialMachine row_monomial_machine(int n, PrimeModulus p) {
  SparseMonomialPoly poly(VariableKind::directed, n, p);
  std::vector<int> vars;
  for (int j = 1; j < n; ++j) vars.push_back(directed_var(n, 0, j));
  poly.add_term(std::move(vars), 1);
  return from_poly(std::move(poly), DomainKind::directed, n, p, n, "row_monomial");
}

PolynomialMachine edge_sum_machine(int n, PrimeModulus p) {
  SparseMonomialPoly poly(VariableKind::undirected, n, p);
  for (std::size_t q = 0; q < pair_count(n); ++q) poly.add_term({static_cast<int>(q)}, 1);
  return from_poly(std::move(poly), DomainKind::undirected, n, p, 1, "edge_sum");
}

PolynomialMachine square_variable_machine(int n, PrimeModulus p) {
  if (n < 2) throw UsageError("square_variable needs n >= 2");
  SparseMonomialPoly poly(VariableKind::undirected, n, p);
  poly.add_term({0, 0}, 1);
  return from_poly(std::move(poly), DomainKind::undirected, n, p, 2, "square_variable");
}

PolynomialMachine single_edge_machine(int n, PrimeModulus p) {
  if (n < 2) throw UsageError("single_edge_monomial needs n >= 2");
  SparseMonomialPoly poly(VariableKind::undirected, n, p);
  poly.add_term({0}, 1);
  return from_poly(std::move(poly), DomainKind::undirected, n, p, 1, "single_edge_monomial");
}

PolynomialMachine noisy_machine(const PolynomialMachine& inner, double epsilon, u64 seed) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw UsageError("noise rate must lie in [0, 1]");
  const PrimeModulus p = inner.modulus();
  auto in = std::make_shared<const PolynomialMachine>(inner);
  const double scaled = std::ldexp(epsilon, 64);
  const u64 threshold = scaled >= 0x1.0p64 ? ~u64{0} : static_cast<u64>(scaled);
  std::string label = "noisy(" + inner.label() + ")";
  return PolynomialMachine(inner.domain_kind(), inner.n(), p, inner.degree_bound(), std::move(label),
                           [in, p, seed, threshold](std::span<const u64> x) {
                             u64 h = mix64(seed);
                             for (u64 v : x) h = mix64(h ^ v);
                             const u64 truth = in->evaluate(x).value();
                             if (h >= threshold) return truth;
                             return p.add(truth, 1 + keyed_hash(seed, h, 1) % (p.value() - 1));
                           });
}

PolynomialMachine machine_catalog(const std::string& id, int n, PrimeModulus p) {
  const auto parts = split(id, ':');
  if (parts.empty()) throw UsageError("empty machine id");
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i) -> const std::string& {
    if (parts.size() <= i) throw UsageError("machine '" + kind + "' is missing an argument");
    return parts[i];
  };
  if (kind == "exact_hcy" || kind == "hcy") return exact_hcy_machine(n, p);
  if (kind == "exact_hcl" || kind == "hcl") return exact_hcl_machine(n, p);
  if (kind == "exact_permanent" || kind == "permanent") return exact_permanent_machine(n, p);
  if (kind == "scaled_hcy" || kind == "scaled_hcl") {
    u64 alpha = parts.size() > 1 ? parse_u64(arg(1), "alpha") : 2;
    return scaled_machine(kind == "scaled_hcy" ? exact_hcy_machine(n, p) : exact_hcl_machine(n, p), alpha);
  }
  if (kind == "conj_class") {
    std::vector<int> type;
    if (parts.size() > 1) {
      for (const auto& s : split(arg(1), ',')) type.push_back(static_cast<int>(parse_u64(s, "cycle length")));
    } else {
      type = {n - 2, 2};
    }
    return conj_class_machine(type, n, p);
  }
  if (kind == "single_cover_monomial") return single_cover_monomial_machine(n, p);
  if (kind == "row_monomial") return row_monomial_machine(n, p);
  if (kind == "edge_sum") return edge_sum_machine(n, p);
  if (kind == "square_variable") return square_variable_machine(n, p);
  if (kind == "single_edge_monomial") return single_edge_machine(n, p);
  if (kind == "noisy") {
    double eps = parse_double(arg(1), "noise rate");
    u64 seed = parse_u64(arg(2), "noise seed");
    std::string inner = arg(3);
    for (std::size_t i = 4; i < parts.size(); ++i) inner += ":" + parts[i];
    return noisy_machine(machine_catalog(inner, n, p), eps, seed);
  }
  throw UsageError("unknown machine: " + id);
}

std::vector<std::string> catalog_ids() {
  return {"exact_hcy",       "exact_hcl",    "exact_permanent", "scaled_hcy",      "scaled_hcl",
          "conj_class",      "single_cover_monomial", "row_monomial", "edge_sum", "square_variable",
          "single_edge_monomial", "noisy"};
}

}  // namespace rarecase
