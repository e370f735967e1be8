#include "mec/orderly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "mec/oracles.hpp"

namespace mec {
namespace {

std::vector<Bits128> codes_of(const std::vector<UndirectedGraph>& graphs) {
  std::vector<Bits128> out;
  for (const auto& g : graphs) out.push_back(g.bits());
  return out;
}

std::vector<Bits128> layer_codes(const GenerationLayer& layer) {
  std::vector<Bits128> out;
  for (const auto& g : layer.graphs) out.push_back(g.bits());
  return out;
}

TEST(AugmentTest, Children) {
  const VertexCount n(3);
  EXPECT_EQ(codes_of(augment_children({UndirectedGraph(n, 0), true})), (std::vector<Bits128>{4, 2, 1}));
  EXPECT_EQ(codes_of(augment_children({UndirectedGraph(n, 4), true})), (std::vector<Bits128>{6, 5}));
  EXPECT_TRUE(augment_children({UndirectedGraph(n, 7), true}).empty());
}

TEST(AugmentTest, ChildrenRecoverParentByDroppingLowestBit) {
  for (const auto& layer : generate_all(VertexCount(5))) {
    for (const auto& g : layer.graphs) {
      for (const auto& child : augment_children(g)) {
        ASSERT_EQ(child.edge_count(), g.graph.edge_count() + 1);
        ASSERT_EQ(child.bits() & (child.bits() - 1), g.bits());
      }
    }
  }
}

TEST(QuickRejectTest, Examples) {
  const VertexCount n(3);
  EXPECT_TRUE(quick_reject(UndirectedGraph(n, 1)));
  EXPECT_TRUE(quick_reject(UndirectedGraph(n, 1), PruneRules::only(1)));
  EXPECT_FALSE(quick_reject(UndirectedGraph(n, 4)));
  EXPECT_FALSE(quick_reject(UndirectedGraph(n, 1), PruneRules::none()));
}

TEST(QuickRejectTest, SecondVertexRuleUsesNeighbourhoodDegree) {
  // Top vertex 4 adjacent to 3, 2, 1. Vertex 2 has more neighbours inside
  // {1, 2, 3} than vertex 3 does, so 3 cannot sit just below the top.
  const VertexCount n(5);
  const UndirectedGraph g(encode({{3, 4}, {2, 4}, {1, 4}, {1, 2}, {0, 3}}, n));
  EXPECT_TRUE(quick_reject(g, PruneRules::only(3)));
  EXPECT_FALSE(is_canonical(g));
}

TEST(QuickRejectTest, EveryRuleSoundExhaustive) {
  // A rule that ever rejects a canonical graph fails here.
  for (int n = 1; n <= 6; ++n) {
    const VertexCount vc(n);
    const auto perms = oracle::all_permutations(n);
    std::array<int, 5> rejected{};
    for (Bits128 bits = 0; bits < bit128(vc.pairs()); ++bits) {
      const UndirectedGraph g(vc, bits);
      const bool canonical = oracle::max_relabelled_code(bits, n, perms) == bits;
      for (int rule = 1; rule <= 4; ++rule) {
        if (quick_reject(g, PruneRules::only(rule))) {
          ASSERT_FALSE(canonical) << "rule " << rule << " rejects canonical code " << static_cast<std::uint64_t>(bits);
          ++rejected[static_cast<std::size_t>(rule)];
        }
      }
    }
    if (n == 6) {
      for (int rule = 1; rule <= 4; ++rule) EXPECT_GT(rejected[static_cast<std::size_t>(rule)], 0) << rule;
    }
  }
}

TEST(IsCanonicalTest, Examples) {
  const VertexCount n(3);
  EXPECT_TRUE(is_canonical(UndirectedGraph(n, 4)));
  EXPECT_FALSE(is_canonical(UndirectedGraph(n, 1)));
  EXPECT_FALSE(is_canonical(UndirectedGraph(n, 2)));
  for (int k = 1; k <= 12; ++k) EXPECT_TRUE(is_canonical(UndirectedGraph::complete(VertexCount(k))));
}

TEST(IsCanonicalTest, AgreesWithPermutationOracleExhaustive) {
  const std::vector<CanonOptions> variants = {
      {},
      {PruneRules::none(), true},
      {PruneRules::none(), false},
  };
  for (int n = 1; n <= 6; ++n) {
    const VertexCount vc(n);
    const auto perms = oracle::all_permutations(n);
    int canonical_count = 0;
    for (Bits128 bits = 0; bits < bit128(vc.pairs()); ++bits) {
      const UndirectedGraph g(vc, bits);
      const bool expected = oracle::max_relabelled_code(bits, n, perms) == bits;
      canonical_count += expected;
      for (const auto& opt : variants) {
        if (n == 6 && !opt.restricted_search && bits % 17 != 0) continue;
        ASSERT_EQ(is_canonical(g, opt), expected) << "n=" << n << " code=" << static_cast<std::uint64_t>(bits);
      }
    }
    if (n == 4) {
      EXPECT_EQ(canonical_count, 11);
    }
  }
}

TEST(CanonicalizeTest, Examples) {
  EXPECT_EQ(canonicalize(UndirectedGraph(VertexCount(3), 1)).bits(), 4u);
  EXPECT_EQ(canonicalize(UndirectedGraph(VertexCount(3), 4)).bits(), 4u);
}

TEST(CanonicalizeTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n) {
    const VertexCount vc(n);
    const auto perms = oracle::all_permutations(n);
    for (int trial = 0; trial < 300; ++trial) {
      const UndirectedGraph g(vc, static_cast<Bits128>(rng()) & low_mask128(vc.pairs()));
      const auto c = canonicalize(g);
      ASSERT_TRUE(c.certified);
      ASSERT_EQ(c.bits(), oracle::max_relabelled_code(g.bits(), n, perms));
      ASSERT_EQ(canonicalize(c.graph).bits(), c.bits());
      const auto& p = perms[static_cast<std::size_t>(rng() % perms.size())];
      ASSERT_EQ(canonicalize(UndirectedGraph(apply_permutation(g, p))).bits(), c.bits());
    }
  }
}

TEST(CanonicalizeTest, LargerGraphsAreFixedPointsUnderRelabelling) {
  std::mt19937_64 rng(9);
  for (int n = 7; n <= 10; ++n) {
    const VertexCount vc(n);
    for (int trial = 0; trial < 20; ++trial) {
      const UndirectedGraph g(vc, static_cast<Bits128>(rng()) & low_mask128(vc.pairs()));
      Permutation p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      const auto c = canonicalize(g);
      ASSERT_TRUE(is_canonical(c.graph));
      ASSERT_EQ(canonicalize(UndirectedGraph(apply_permutation(g, p))).bits(), c.bits());
    }
  }
}

TEST(GenerateAllTest, LayerCounts) {
  auto sizes = [](int n) {
    std::vector<std::size_t> out;
    for (const auto& layer : generate_all(VertexCount(n))) out.push_back(layer.graphs.size());
    return out;
  };
  EXPECT_EQ(sizes(1), (std::vector<std::size_t>{1}));
  EXPECT_EQ(sizes(4), (std::vector<std::size_t>{1, 1, 2, 3, 2, 1, 1}));
  auto total = [&](int n) {
    auto s = sizes(n);
    return std::accumulate(s.begin(), s.end(), std::size_t{0});
  };
  EXPECT_EQ(total(5), 34u);
  EXPECT_EQ(total(6), 156u);
  EXPECT_EQ(total(7), 1044u);
}

TEST(GenerateAllTest, MatchesIsomorphismRejectOracle) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Bits128> expected;
    for (const auto& c : oracle::brute_force_unlabeled(n)) expected.push_back(c.bits());
    std::vector<Bits128> actual;
    for (const auto& layer : generate_all(VertexCount(n))) {
      const auto codes = layer_codes(layer);
      ASSERT_TRUE(std::is_sorted(codes.begin(), codes.end(), std::greater<>()));
      ASSERT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
      for (const auto& g : layer.graphs) {
        ASSERT_TRUE(g.certified);
        ASSERT_EQ(g.graph.edge_count(), layer.edge_count);
      }
      actual.insert(actual.end(), codes.begin(), codes.end());
    }
    std::sort(actual.begin(), actual.end(), std::greater<>());
    ASSERT_EQ(actual, expected) << "n=" << n;
  }
}

TEST(GenerateAllTest, OrderlyUniqueParent) {
  // Every canonical graph with e+1 edges is produced by exactly one
  // canonical parent with e edges.
  for (int n = 2; n <= 6; ++n) {
    const VertexCount vc(n);
    const auto layers = generate_all(vc);
    for (int e = 0; e < vc.pairs(); ++e) {
      std::map<Bits128, int> hits;
      for (const auto& g : layers[static_cast<std::size_t>(e)].graphs) {
        for (const auto& child : augment_children(g)) {
          if (is_canonical(child)) ++hits[child.bits()];
        }
      }
      const auto next = layer_codes(layers[static_cast<std::size_t>(e + 1)]);
      ASSERT_EQ(hits.size(), next.size());
      for (Bits128 c : next) ASSERT_EQ(hits[c], 1);
    }
  }
}

TEST(GenerateAllTest, ComplementLayersMatchAugmentation) {
  for (int n = 2; n <= 6; ++n) {
    const VertexCount vc(n);
    const auto layers = generate_all(vc);
    const int m = vc.pairs();
    GenerationLayer augmented = layers.front();
    for (int e = 1; e <= m; ++e) {
      augmented = augment_layer(augmented);
      ASSERT_EQ(layer_codes(augmented), layer_codes(layers[static_cast<std::size_t>(e)])) << "n=" << n << " e=" << e;
      const auto mirrored = complement_layer(layers[static_cast<std::size_t>(m - e)]);
      ASSERT_EQ(layer_codes(mirrored), layer_codes(layers[static_cast<std::size_t>(e)]));
    }
  }
}

}  // namespace
}  // namespace mec
