#pragma once

// Cross-checks of the census pipeline against the oracles, identities and
// published values for one vertex count.

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mec/automorphisms.hpp"
#include "mec/census.hpp"
#include "mec/known_values.hpp"
#include "mec/markov.hpp"
#include "mec/oracles.hpp"
#include "mec/orderly.hpp"
#include "mec/orientations.hpp"

namespace mec {

struct CheckResult {
  std::string name;
  bool passed;
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  int jobs = 1;
  /// Adds one to every labelling count before the census. Test hook.
  bool inject_labelling_fault = false;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace detail {

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string str_vec(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string str_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    s += (first ? "" : ",") + std::to_string(k) + ":" + std::to_string(v);
    first = false;
  }
  return s + "}";
}

inline std::string round5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

}  // namespace detail

inline std::vector<CheckResult> verify(VertexCount vc, const VerifyOptions& opt = {}) {
  using detail::str;
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool ok, std::string expected, std::string actual) {
    out.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
  };
  const int n = vc.value();
  const int m = vc.pairs();

  const auto layers = generate_all(vc);
  auto skeletons = skeleton_source(layers, 0, m);
  if (opt.inject_labelling_fault) {
    for (auto& s : skeletons) s.labellings += 1;
  }

  // Unlabeled graph counts per layer.
  if (n <= 6) {
    std::vector<std::uint64_t> expected(static_cast<std::size_t>(m + 1), 0);
    for (const auto& code : oracle::brute_force_unlabeled(n)) ++expected[static_cast<std::size_t>(code.edge_count())];
    std::vector<std::uint64_t> actual;
    for (const auto& layer : layers) actual.push_back(layer.graphs.size());
    check("unlabeled graphs by edges (brute-force isomorphism)", expected == actual, detail::str_vec(expected),
          detail::str_vec(actual));
  }

  // Labelled graph counts per layer.
  {
    std::vector<std::uint64_t> expected, actual(static_cast<std::size_t>(m + 1), 0);
    for (int e = 0; e <= m; ++e) expected.push_back(binomial(m, e));
    for (const auto& s : skeletons) actual[static_cast<std::size_t>(s.graph.edge_count())] += s.labellings;
    check("labelled graphs by edges = C(m, e)", expected == actual, detail::str_vec(expected), detail::str_vec(actual));
  }

  // Pruning rules and the restricted search against the full permutation test.
  if (n <= 6) {
    const auto perms = oracle::all_permutations(n);
    std::uint64_t bad_rules = 0, bad_search = 0;
    for (Bits128 bits = 0; bits < bit128(m); ++bits) {
      const UndirectedGraph g(vc, bits);
      const bool canonical = oracle::max_relabelled_code(bits, n, perms) == bits;
      for (int rule = 1; rule <= 4; ++rule) {
        if (canonical && quick_reject(g, PruneRules::only(rule))) ++bad_rules;
      }
      if (is_canonical(g) != canonical) ++bad_search;
    }
    check("pruning rules never reject a canonical graph", bad_rules == 0, "0", str(bad_rules));
    check("canonicity test agrees with full permutation test", bad_search == 0, "0", str(bad_search));
  }

  // Acyclic orientation counts against |chromatic polynomial at -1|.
  if (n <= 6) {
    std::uint64_t mismatches = 0;
    for (const auto& s : skeletons) {
      const auto chi = oracle::chromatic_polynomial_at(s.graph, -1);
      if (static_cast<std::uint64_t>(chi < 0 ? -chi : chi) != count_acyclic_orientations(s.graph)) ++mismatches;
    }
    check("acyclic orientations = |chi(-1)| for every skeleton", mismatches == 0, "0", str(mismatches));
  }

  const CensusReport report = census_parallel(vc, skeletons, opt.jobs);

  if (n <= 10) {
    const std::uint64_t robinson = robinson_adg_count(n);
    check("total ADGs = Robinson count", report.total_adgs == robinson, str(robinson), str(report.total_adgs));
  }

  if (n <= 4) {
    const auto brute = oracle::brute_force_census(n);
    check("DAG count = brute-force census", brute.total_dags == report.total_adgs, str(brute.total_dags),
          str(report.total_adgs));
    check("class count = brute-force census", brute.class_count() == report.total_classes, str(brute.class_count()),
          str(report.total_classes));
    check("class-size multiset = brute-force census", brute.size_multiset() == report.size_histogram,
          detail::str_map(brute.size_multiset()), detail::str_map(report.size_histogram));
  }

  if (auto known = known_census(n)) {
    check("total classes = published", report.total_classes == known->classes, str(known->classes),
          str(report.total_classes));
    check("classes/ADGs ratio = published (5 dp)", detail::round5(report.ratio()) == detail::round5(known->ratio),
          detail::round5(known->ratio), detail::round5(report.ratio()));
    check("size-1 fraction = published (5 dp)",
          detail::round5(report.size_one_fraction()) == detail::round5(known->size1_fraction),
          detail::round5(known->size1_fraction), detail::round5(report.size_one_fraction()));
    check("max v-configurations per skeleton = published", report.max_vconfigs == known->max_vconfigs,
          str(known->max_vconfigs), str(report.max_vconfigs));
    check("max classes per skeleton = published", report.max_classes_per_skeleton == known->max_classes_per_skeleton,
          str(known->max_classes_per_skeleton), str(report.max_classes_per_skeleton));
  }

  const auto predicted = max_vconfig_prediction(vc);
  check("max v-configurations = balanced bipartite formula",
        static_cast<std::uint64_t>(report.max_vconfigs) == predicted, str(predicted), str(report.max_vconfigs));
  return out;
}

}  // namespace mec
