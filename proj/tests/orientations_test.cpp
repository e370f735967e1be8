#include "mec/orientations.hpp"

#include <set>

#include "gtest/gtest.h"
#include "mec/oracles.hpp"
#include "mec/orderly.hpp"

namespace mec {
namespace {

oracle::Dag to_dag(const Orientation& o) {
  oracle::Dag d(static_cast<std::size_t>(o.skeleton().n()));
  for (int v = 0; v < o.skeleton().n(); ++v) d[static_cast<std::size_t>(v)] = o.parents(v);
  return d;
}

// All 2^edges direction assignments, acyclic ones kept.
std::uint64_t brute_force_acyclic(const UndirectedGraph& g) {
  const auto edges = decode(g.code());
  std::uint64_t count = 0;
  for (std::uint64_t dir = 0; dir < (std::uint64_t{1} << edges.size()); ++dir) {
    oracle::Dag d(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [lo, hi] = edges[k];
      if ((dir >> k) & 1) d[static_cast<std::size_t>(hi)] |= static_cast<std::uint16_t>(1u << lo);
      else d[static_cast<std::size_t>(lo)] |= static_cast<std::uint16_t>(1u << hi);
    }
    count += oracle::is_acyclic(d);
  }
  return count;
}

TEST(OrientationTest, Examples) {
  const VertexCount n3(3);
  EXPECT_EQ(count_acyclic_orientations(UndirectedGraph(n3, 6)), 4u);
  EXPECT_EQ(count_acyclic_orientations(UndirectedGraph(n3, 7)), 6u);
  EXPECT_EQ(brute_force_acyclic(UndirectedGraph(n3, 7)), 6u);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(count_acyclic_orientations(UndirectedGraph::empty(VertexCount(n))), 1u);
  }
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count_acyclic_orientations(UndirectedGraph::complete(VertexCount(n))), factorial(n));
  }
  const UndirectedGraph c4(encode({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, VertexCount(4)));
  EXPECT_EQ(count_acyclic_orientations(c4), 14u);
}

TEST(OrientationTest, StreamIsAcyclicDistinctAndComplete) {
  for (int n = 1; n <= 5; ++n) {
    const VertexCount vc(n);
    for (Bits128 bits = 0; bits < bit128(vc.pairs()); ++bits) {
      const UndirectedGraph g(vc, bits);
      std::set<Bits128> seen;
      enumerate_acyclic_orientations(g, [&](const Orientation& o) {
        const auto d = to_dag(o);
        ASSERT_TRUE(oracle::is_acyclic(d));
        ASSERT_EQ(oracle::skeleton_bits(d), bits);
        ASSERT_TRUE(seen.insert(o.direction()).second);
      });
      ASSERT_EQ(seen.size(), brute_force_acyclic(g));
    }
  }
}

TEST(OrientationTest, DirectionBitsMatchArcs) {
  const UndirectedGraph g(encode({{0, 1}, {1, 2}, {0, 2}, {2, 3}}, VertexCount(4)));
  const auto edges = decode(g.code());
  enumerate_acyclic_orientations(g, [&](const Orientation& o) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [lo, hi] = edges[k];
      ASSERT_EQ(static_cast<bool>((o.direction() >> k) & 1), o.has_arc(lo, hi));
      ASSERT_NE(o.has_arc(lo, hi), o.has_arc(hi, lo));
    }
  });
}

TEST(OrientationTest, NoDuplicatesOnSixVertexSkeletons) {
  for (const auto& layer : generate_all(VertexCount(6))) {
    for (const auto& g : layer.graphs) {
      std::set<Bits128> seen;
      enumerate_acyclic_orientations(g.graph, [&](const Orientation& o) { ASSERT_TRUE(seen.insert(o.direction()).second); });
    }
  }
}

TEST(OrientationTest, CountsEqualChromaticAtMinusOne) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& layer : generate_all(VertexCount(n))) {
      for (const auto& g : layer.graphs) {
        const auto chi = oracle::chromatic_polynomial_at(g.graph, -1);
        ASSERT_EQ(count_acyclic_orientations(g.graph), static_cast<std::uint64_t>(chi < 0 ? -chi : chi));
      }
    }
  }
}

TEST(OrientationTest, Deterministic) {
  const UndirectedGraph g(encode({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}}, VertexCount(5)));
  std::vector<Bits128> first, second;
  enumerate_acyclic_orientations(g, [&](const Orientation& o) { first.push_back(o.direction()); });
  enumerate_acyclic_orientations(g, [&](const Orientation& o) { second.push_back(o.direction()); });
  EXPECT_EQ(first, second);
}

}  // namespace
}  // namespace mec
