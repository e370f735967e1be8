#include "mec/census.hpp"

#include <random>

#include "gtest/gtest.h"
#include "mec/oracles.hpp"

namespace mec {
namespace {

CensusReport full_census(int n) {
  const VertexCount vc(n);
  const auto src = skeleton_source(vc);
  return census(vc, src);
}

TEST(CensusTest, ThreeVertices) {
  const auto r = full_census(3);
  EXPECT_EQ(r.total_classes, 11u);
  EXPECT_EQ(r.total_adgs, 25u);
  EXPECT_NEAR(r.ratio(), 0.44, 1e-12);
  EXPECT_EQ(r.classes_by_edges, (std::vector<std::uint64_t>{1, 3, 6, 1}));
  EXPECT_EQ(r.size_histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 4}, {2, 3}, {3, 3}, {6, 1}}));
}

TEST(CensusTest, ThreeVertexBreakdownMatchesBruteForce) {
  // Frozen values above, recomputed from the labelled-DAG oracle.
  const auto brute = oracle::brute_force_census(3);
  std::vector<std::uint64_t> by_edges(4, 0);
  for (const auto& [key, size] : brute.classes) ++by_edges[static_cast<std::size_t>(popcount(key.first))];
  EXPECT_EQ(by_edges, (std::vector<std::uint64_t>{1, 3, 6, 1}));
  EXPECT_EQ(brute.size_multiset(), (std::map<std::uint64_t, std::uint64_t>{{1, 4}, {2, 3}, {3, 3}, {6, 1}}));
}

TEST(CensusTest, SixVertices) {
  const auto r = full_census(6);
  EXPECT_EQ(r.total_classes, 1067825u);
  EXPECT_NEAR(r.ratio(), 0.28238, 5e-6);
  EXPECT_NEAR(static_cast<double>(r.total_adgs) / static_cast<double>(r.total_classes), 1 / 0.28238, 5e-4);
}

TEST(CensusTest, FiveVertexMaxima) {
  const auto r = full_census(5);
  EXPECT_EQ(r.max_vconfigs, 9);
  EXPECT_EQ(r.max_classes_per_skeleton, 22u);
  ASSERT_EQ(r.max_vconfig_codes.size(), 1u);
  EXPECT_EQ(find_v_configurations(UndirectedGraph(r.max_vconfig_codes[0])).size(), 9u);
}

TEST(CensusTest, ReportInvariants) {
  for (int n = 1; n <= 6; ++n) {
    const auto r = full_census(n);
    std::uint64_t adgs = 0, classes = 0, weighted = 0, counted = 0;
    for (auto v : r.adgs_by_edges) adgs += v;
    for (auto v : r.classes_by_edges) classes += v;
    for (const auto& [size, count] : r.size_histogram) {
      weighted += size * count;
      counted += count;
    }
    EXPECT_EQ(adgs, r.total_adgs);
    EXPECT_EQ(classes, r.total_classes);
    EXPECT_EQ(weighted, r.total_adgs);
    EXPECT_EQ(counted, r.total_classes);
    EXPECT_GT(r.ratio(), 0.0);
    EXPECT_LE(r.ratio(), 1.0);
    EXPECT_EQ(r.total_adgs, robinson_adg_count(n));
  }
}

TEST(MergeTest, IdentityAndCommutativity) {
  const VertexCount vc(5);
  const auto src = skeleton_source(vc);
  const auto whole = census(vc, src);
  EXPECT_EQ(merge(whole, CensusReport(vc)), whole);
  EXPECT_EQ(merge(CensusReport(vc), whole), whole);

  const std::span<const SkeletonEntry> all(src);
  const auto a = census(vc, all.subspan(0, 10));
  const auto b = census(vc, all.subspan(10));
  EXPECT_EQ(merge(a, b), merge(b, a));
  EXPECT_EQ(merge(a, b), whole);
}

TEST(MergeTest, RandomPartitionsReproduceWholeCensus) {
  const VertexCount vc(5);
  const auto src = skeleton_source(vc);
  const auto whole = census(vc, src);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int parts = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<SkeletonEntry>> buckets(static_cast<std::size_t>(parts));
    for (const auto& s : src) buckets[rng() % buckets.size()].push_back(s);
    std::shuffle(buckets.begin(), buckets.end(), rng);
    CensusReport left(vc), right(vc);
    for (std::size_t i = 0; i < buckets.size(); ++i) {
      auto part = census(vc, buckets[i]);
      left = merge(left, part);
      right = merge(part, right);
    }
    ASSERT_EQ(left, whole);
    ASSERT_EQ(right, whole);
  }
}

TEST(MergeTest, RejectsMismatchedVertexCounts) {
  EXPECT_THROW(merge(CensusReport(VertexCount(4)), CensusReport(VertexCount(5))), std::invalid_argument);
}

TEST(ParallelCensusTest, IndependentOfWorkerCount) {
  const VertexCount vc(6);
  const auto src = skeleton_source(vc);
  const auto one = census_parallel(vc, src, 1);
  for (int jobs : {2, 3, 8, 500}) EXPECT_EQ(census_parallel(vc, src, jobs), one) << jobs;
  EXPECT_THROW(census_parallel(vc, src, 0), std::invalid_argument);
}

TEST(CensusTest, CounterOverflowIsReported) {
  const VertexCount vc(3);
  const std::vector<SkeletonEntry> src{{UndirectedGraph::complete(vc), std::numeric_limits<std::uint64_t>::max() / 2}};
  EXPECT_THROW(census(vc, src), std::overflow_error);
}

TEST(RobinsonTest, Values) {
  EXPECT_EQ(robinson_adg_count(0), 1u);
  EXPECT_EQ(robinson_adg_count(1), 1u);
  EXPECT_EQ(robinson_adg_count(2), 3u);
  EXPECT_EQ(robinson_adg_count(3), 25u);
  EXPECT_EQ(robinson_adg_count(4), 543u);
  EXPECT_EQ(robinson_adg_count(10), 4175098976430598143ULL);
  EXPECT_THROW(robinson_adg_count(11), std::overflow_error);
  EXPECT_THROW(robinson_adg_count(-1), std::invalid_argument);
}

TEST(RobinsonTest, AgreesWithBruteForceDags) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(robinson_adg_count(n), oracle::brute_force_census(n).total_dags);
}

TEST(MedianTest, Prediction) {
  EXPECT_EQ(median_edges_prediction(VertexCount(10)), 25u);
  EXPECT_EQ(median_edges_prediction(VertexCount(5)), 6u);
  EXPECT_EQ(median_edges_prediction(VertexCount(6)), 9u);
  const auto r = full_census(6);
  EXPECT_EQ(median_index(r.classes_by_edges), 9);
}

TEST(MedianTest, Index) {
  EXPECT_EQ(median_index(std::vector<std::uint64_t>{1, 1, 1}), 1);
  EXPECT_EQ(median_index(std::vector<std::uint64_t>{0, 5, 0, 1}), 1);
  EXPECT_THROW(median_index(std::vector<std::uint64_t>{0, 0}), std::invalid_argument);
}

TEST(ExtrapolateTest, PublishedAsymptote) {
  for (auto conv : {SIndex::kNext, SIndex::kCurrent}) {
    EXPECT_NEAR(extrapolate_ratio(0.26888, 0.26799, 10, 200, conv), 0.26714, 5e-4);
  }
}

TEST(ExtrapolateTest, FixedPointAndMonotone) {
  EXPECT_DOUBLE_EQ(extrapolate_ratio(0.3, 0.3, 5, 50), 0.3);
  EXPECT_DOUBLE_EQ(extrapolate_ratio(0.28, 0.27, 10, 10), 0.27);
  double previous = 0.26799;
  for (int target = 11; target <= 40; ++target) {
    const double r = extrapolate_ratio(0.26888, 0.26799, 10, target);
    EXPECT_LT(r, previous);
    EXPECT_GT(r, 0.0);
    previous = r;
  }
}

TEST(ExtrapolateTest, RejectsBadInput) {
  EXPECT_THROW(extrapolate_ratio(0.2, 0.3, 10, 20), std::invalid_argument);
  EXPECT_THROW(extrapolate_ratio(0.3, 0.0, 10, 20), std::invalid_argument);
  EXPECT_THROW(extrapolate_ratio(0.3, 0.2, 10, 9), std::invalid_argument);
}

TEST(GaussianChi2Test, SyntheticGaussianIsNearZero) {
  std::vector<std::uint64_t> counts;
  for (int e = 0; e <= 60; ++e) {
    const double d = (e - 30.0) / 6.0;
    counts.push_back(static_cast<std::uint64_t>(std::llround(1e12 * std::exp(-d * d / 2))));
  }
  EXPECT_LT(gaussian_chi2(counts), 1e-6);
}

TEST(GaussianChi2Test, RejectsDegenerateInput) {
  EXPECT_THROW(gaussian_chi2(std::vector<std::uint64_t>{0, 7, 0}), std::invalid_argument);
  EXPECT_THROW(gaussian_chi2(std::vector<std::uint64_t>{0, 0}), std::invalid_argument);
}

TEST(GaussianChi2Test, RegressionValues) {
  const double chi5 = gaussian_chi2(full_census(5).classes_by_edges);
  const double chi6 = gaussian_chi2(full_census(6).classes_by_edges);
  const double chi7 = gaussian_chi2(full_census(7).classes_by_edges);
  EXPECT_NEAR(chi5, 0.0077440718051, 1e-12);
  EXPECT_NEAR(chi6, 0.0022828679551, 1e-12);
  EXPECT_NEAR(chi7, 0.00088703064710, 1e-12);
  EXPECT_LT(chi6, 0.01);
  EXPECT_LE(chi7, chi5);
}

}  // namespace
}  // namespace mec
