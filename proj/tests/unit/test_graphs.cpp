#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "oracles.hpp"
#include "rarecase/counters/brute_force.hpp"
#include "rarecase/graphs/graph_io.hpp"
#include "rarecase/graphs/graph_universe.hpp"
#include "rarecase/graphs/permutation.hpp"
#include "rarecase/graphs/symmetry.hpp"

namespace rarecase {
namespace {

const PrimeModulus kP(1009);

TEST(PairIndex, CanonicalOrder) {
  EXPECT_EQ(pair_index(5, 0, 1), 0u);
  EXPECT_EQ(pair_index(5, 0, 4), 3u);
  EXPECT_EQ(pair_index(5, 1, 2), 4u);
  EXPECT_EQ(pair_index(5, 3, 4), 9u);
  EXPECT_EQ(pair_index(5, 4, 3), 9u);
  auto t = pair_table(7);
  for (std::size_t q = 0; q < t.size(); ++q) EXPECT_EQ(pair_index(7, t[q].i, t[q].j), q);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), UsageError);
  EXPECT_THROW(Permutation({0, 3, 1}), UsageError);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, ComposeWithInverseIsIdentity) {
  RandomStream rng(1, 1);
  for (int t = 0; t < 200; ++t) {
    auto p = random_permutation(1 + t % 9, rng);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
  }
}

TEST(RandomPermutation, SingletonIsIdentity) {
  RandomStream rng(0, 0);
  EXPECT_TRUE(random_permutation(1, rng).is_identity());
}

TEST(RandomPermutation, UniformOnThreePoints) {
  RandomStream rng(17, 0);
  std::map<Permutation, int> freq;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++freq[random_permutation(3, rng)];
  ASSERT_EQ(freq.size(), 6u);
  for (const auto& [p, c] : freq) EXPECT_NEAR(static_cast<double>(c) / draws, 1.0 / 6, 0.01);
}

TEST(RandomPermutation, Reproducible) {
  RandomStream a(5, 2), b(5, 2);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(random_permutation(8, a), random_permutation(8, b));
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(Permutation::identity(4)).parts, (std::vector<int>{1, 1, 1, 1}));
  auto p = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(cycle_type(p).parts, (std::vector<int>{3, 2}));
}

TEST(CycleType, ConjugationInvariant) {
  RandomStream rng(3, 0);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rng.uniform_below(9));
    auto p = random_permutation(n, rng);
    auto s = random_permutation(n, rng);
    ASSERT_EQ(cycle_type(conjugate(p, s)), cycle_type(p));
  }
}

TEST(Permute, IdentityLeavesGraphsUnchanged) {
  RandomStream rng(4, 0);
  auto g = random_graph(6, rng);
  auto e = DirectedMultigraph::random(6, kP, rng);
  auto f = UndirectedMultigraph::random(6, kP, rng);
  auto id = Permutation::identity(6);
  EXPECT_EQ(permute(id, g), g);
  EXPECT_EQ(permute(id, e), e);
  EXPECT_EQ(permute(id, f), f);
}

TEST(Permute, SwapMovesSingleDirectedEntry) {
  DirectedMultigraph e(3, PrimeModulus(101));
  e.set(0, 1, 5);
  auto out = permute(Permutation({1, 0, 2}), e);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(out.at(i, j), (i == 1 && j == 0) ? 5u : 0u);
  }
}

TEST(Permute, SizeMismatchIsUsageError) {
  EXPECT_THROW(permute(Permutation::identity(3), SimpleGraph(4)), UsageError);
  EXPECT_THROW(permute(Permutation::identity(3), DirectedMultigraph(4, kP)), UsageError);
  EXPECT_THROW(permute(Permutation::identity(3), UndirectedMultigraph(4, kP)), UsageError);
}

TEST(Permute, HamiltonianCycleSumInvariant) {
  RandomStream rng(8, 0);
  for (int t = 0; t < 100; ++t) {
    auto e = DirectedMultigraph::random(5, kP, rng);
    auto pi = random_permutation(5, rng);
    auto pe = permute(pi, e);
    std::vector<u64> a(e.entries().begin(), e.entries().end()), b(pe.entries().begin(), pe.entries().end());
    ASSERT_EQ(oracle::hcy(5, kP.value(), a), oracle::hcy(5, kP.value(), b));
  }
}

template <typename G, typename Make>
void check_action_contract(Make make) {
  RandomStream rng(21, 0);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform_below(6));
    G g = make(n, rng);
    auto pi = random_permutation(n, rng);
    auto sigma = random_permutation(n, rng);
    ASSERT_EQ(permute(compose(pi, sigma), g), permute(sigma, permute(pi, g)));
  }
}

TEST(Permute, ActionContractSimple) {
  check_action_contract<SimpleGraph>([](int n, RandomStream& r) { return random_graph(n, r); });
}

TEST(Permute, ActionContractDirected) {
  check_action_contract<DirectedMultigraph>(
      [](int n, RandomStream& r) { return DirectedMultigraph::random(n, kP, r); });
}

TEST(Permute, ActionContractUndirected) {
  check_action_contract<UndirectedMultigraph>(
      [](int n, RandomStream& r) { return UndirectedMultigraph::random(n, kP, r); });
}

TEST(Complement, InvolutionAndComplete) {
  RandomStream rng(6, 0);
  auto g = random_graph(7, rng);
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_EQ(complement(SimpleGraph::complete(4)), SimpleGraph::empty(4));
}

TEST(AutomorphismOrder, Examples) {
  EXPECT_EQ(automorphism_order(SimpleGraph::complete(4)), 24u);
  EXPECT_EQ(automorphism_order(SimpleGraph::path(3)), 2u);
  EXPECT_EQ(automorphism_order(SimpleGraph::cycle(5)), 10u);
  EXPECT_EQ(automorphism_order(SimpleGraph::empty(1)), 1u);
  EXPECT_THROW(automorphism_order(SimpleGraph(11)), CapabilityError);
}

TEST(AutomorphismOrder, MatchesNaiveOracleOnRandomGraphs) {
  RandomStream rng(12, 0);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform_below(7));
    auto g = random_graph(n, rng);
    ASSERT_EQ(automorphism_order(g), oracle::aut_order(g));
  }
}

TEST(AutomorphismOrder, OrbitStabilizerAndComplementExhaustive) {
  for (int n = 1; n <= 5; ++n) {
    for (u64 idx = 0; idx < (u64{1} << pair_count(n)); ++idx) {
      auto g = SimpleGraph::from_index(n, idx);
      const u64 aut = automorphism_order(g);
      ASSERT_EQ(aut, oracle::aut_order(g));
      ASSERT_EQ(aut * isomorphism_class(g).size(), oracle::factorial(static_cast<u64>(n)));
      ASSERT_EQ(aut, automorphism_order(complement(g)));
    }
  }
}

TEST(AutomorphismOrder, OrbitStabilizerOnRandomLargerGraphs) {
  RandomStream rng(13, 0);
  for (int n : {6, 7}) {
    for (int t = 0; t < 100; ++t) {
      auto g = random_graph(n, rng);
      ASSERT_EQ(automorphism_order(g) * isomorphism_class(g).size(), oracle::factorial(static_cast<u64>(n)));
    }
  }
}

TEST(IsomorphismClass, Examples) {
  EXPECT_EQ(isomorphism_class(SimpleGraph::complete(5)).size(), 1u);
  EXPECT_EQ(isomorphism_class(SimpleGraph::from_edges(4, {{0, 1}})).size(), 6u);
  EXPECT_THROW(isomorphism_class(SimpleGraph(9)), CapabilityError);
}

// Cycle covers of the unit complete digraph related by a relabeling iff
// their cycle types agree.
TEST(CycleCovers, RelabelingClassesAreCycleTypes) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Permutation> all;
    auto m = oracle::iota_vec(n);
    do {
      all.emplace_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    auto cover = [&](const Permutation& s) {
      DirectedMultigraph d(n, kP);
      for (int i = 0; i < n; ++i) d.set(i, s(i), 1);
      return d;
    };
    for (std::size_t a = 0; a < all.size(); ++a) {
      auto da = cover(all[a]);
      for (std::size_t b = a; b < all.size(); ++b) {
        auto db = cover(all[b]);
        bool related = false;
        for (const auto& sigma : all) {
          if (permute(sigma, da) == db) {
            related = true;
            break;
          }
        }
        ASSERT_EQ(related, cycle_type(all[a]) == cycle_type(all[b]));
      }
    }
  }
}

SimpleGraph rigid_graph(int n, u64 seed) {
  RandomStream rng(seed, 77);
  for (;;) {
    auto g = random_graph(n, rng);
    if (oracle::aut_order(g) == 1) return g;
  }
}

TEST(AutSizeTest, CompleteGraphAccepted) {
  RandomStream rng(31, 0);
  int accepted = 0;
  for (int t = 0; t < 1000; ++t) accepted += aut_size_test(SimpleGraph::complete(8), 4, rng) == Verdict::accept;
  EXPECT_GE(accepted, 990);
}

TEST(AutSizeTest, RigidGraphRejected) {
  auto g = rigid_graph(8, 5);
  ASSERT_EQ(oracle::aut_order(g), 1u);
  RandomStream rng(32, 0);
  int rejected = 0;
  for (int t = 0; t < 1000; ++t) rejected += aut_size_test(g, 4, rng) == Verdict::reject;
  EXPECT_GE(rejected, 990);
}

TEST(AutSizeTest, GrayZoneReturnsAVerdict) {
  RandomStream rng(33, 0);
  auto v = aut_size_test(SimpleGraph::path(8), 20160, rng);
  EXPECT_TRUE(v == Verdict::accept || v == Verdict::reject);
  EXPECT_THROW(aut_size_test(SimpleGraph::path(3), 0, rng), UsageError);
}

TEST(EmpiricalRigidity, Examples) {
  RandomStream rng(40, 0);
  EXPECT_EQ(empirical_rigidity(3, 500, rng), 0.0);
  EXPECT_EQ(empirical_rigidity(1, 10, rng), 1.0);
}

TEST(EmpiricalRigidity, MatchesNaiveAutomorphismCount) {
  for (int n : {6, 8}) {
    RandomStream a(41, static_cast<u64>(n));
    RandomStream b(41, static_cast<u64>(n));
    const double measured = empirical_rigidity(n, 3000, a);
    int rigid = 0;
    for (int s = 0; s < 3000; ++s) rigid += oracle::aut_order(random_graph(n, b)) == 1;
    EXPECT_DOUBLE_EQ(measured, rigid / 3000.0);
  }
}

TEST(EmpiricalRigidity, SixVertexRateMatchesExhaustiveCount) {
  u64 rigid = 0;
  for (u64 idx = 0; idx < (u64{1} << 15); ++idx) rigid += oracle::aut_order(SimpleGraph::from_index(6, idx)) == 1;
  EXPECT_EQ(rigid, 8u * 720u);
  RandomStream rng(42, 0);
  const double exact = static_cast<double>(rigid) / 32768.0;
  EXPECT_NEAR(empirical_rigidity(6, 100000, rng), exact, 4 * std::sqrt(exact * (1 - exact) / 100000));
}

TEST(EmpiricalRigidity, NoThreeVertexGraphIsRigid) {
  for (u64 idx = 0; idx < 8; ++idx) EXPECT_GT(oracle::aut_order(SimpleGraph::from_index(3, idx)), 1u);
}

TEST(GraphUniverse, ClassSizesMatchOrbitStabilizer) {
  GraphUniverse uni(5);
  EXPECT_EQ(uni.class_count(), 34u);
  u64 total = 0;
  for (std::uint32_t id = 0; id < uni.class_count(); ++id) {
    auto g = SimpleGraph::from_index(5, uni.representative(id));
    EXPECT_EQ(uni.class_size(id), 120 / oracle::aut_order(g));
    total += uni.class_size(id);
  }
  EXPECT_EQ(total, uni.size());
  EXPECT_EQ(GraphUniverse(7).class_count(), 1044u);
}

TEST(GraphUniverse, IndexPermuterAgreesWithPermute) {
  RandomStream rng(41, 0);
  for (int t = 0; t < 200; ++t) {
    auto g = random_graph(7, rng);
    auto pi = random_permutation(7, rng);
    EXPECT_EQ(IndexPermuter(7, pi)(g.to_index()), permute(pi, g).to_index());
  }
}

TEST(GraphIo, RoundTripAllKinds) {
  RandomStream rng(50, 0);
  std::vector<AnyGraph> graphs{random_graph(6, rng), DirectedMultigraph::random(4, kP, rng),
                               UndirectedMultigraph::random(5, kP, rng)};
  for (const auto& g : graphs) EXPECT_EQ(parse_graph_json(to_graph_json(g)), g);
}

TEST(GraphIo, OneBasedEdgesAndDefaults) {
  auto g = parse_graph_json(R"({"kind":"simple","n":3,"edges":[[1,2],[2,3]]})");
  auto& s = std::get<SimpleGraph>(g);
  EXPECT_TRUE(s.has_edge(0, 1));
  EXPECT_TRUE(s.has_edge(1, 2));
  EXPECT_FALSE(s.has_edge(0, 2));
  auto d = std::get<DirectedMultigraph>(parse_graph_json(R"({"kind":"directed-multi","n":2,"p":7,"edges":[[1,1,9]]})"));
  EXPECT_EQ(d.at(0, 0), 2u);
  EXPECT_EQ(d.at(1, 0), 0u);
}

TEST(GraphIo, MalformedInputsAreUsageErrors) {
  EXPECT_THROW(parse_graph_json("{"), UsageError);
  EXPECT_THROW(parse_graph_json(R"({"kind":"weird","n":3})"), UsageError);
  EXPECT_THROW(parse_graph_json(R"({"kind":"simple","n":3,"edges":[[0,1]]})"), UsageError);
  EXPECT_THROW(parse_graph_json(R"({"kind":"simple","n":3,"edges":[[1,1]]})"), UsageError);
  EXPECT_THROW(parse_graph_json(R"({"kind":"undirected-multi","n":3,"p":8})"), UsageError);
}

TEST(GraphIo, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "rarecase_graph_io_test.json";
  AnyGraph g = SimpleGraph::cycle(5);
  write_graph_file(path, g);
  EXPECT_EQ(read_graph_file(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(read_graph_file(path), UsageError);
}

TEST(SimpleGraph, IndexRoundTripAndDegrees) {
  auto g = SimpleGraph::from_index(6, 0b101101);
  EXPECT_EQ(g.to_index(), 0b101101u);
  EXPECT_EQ(SimpleGraph::complete(6).degree_sequence(), (std::vector<int>(6, 5)));
  EXPECT_EQ(SimpleGraph::cycle(6).edge_count(), 6u);
  EXPECT_THROW(SimpleGraph(3).set_edge(1, 1), UsageError);
}

}  // namespace
}  // namespace rarecase
