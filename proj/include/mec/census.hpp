#pragma once

// Per-n aggregation of skeleton class tables, plus the closed-form and
// recursive quantities the counts are compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mec/automorphisms.hpp"
#include "mec/graph.hpp"
#include "mec/markov.hpp"
#include "mec/orderly.hpp"

namespace mec {

namespace checked {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit counter overflow");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit counter overflow");
  return r;
}

}  // namespace checked

/// An unlabeled skeleton with the number of labelled graphs it stands for.
struct SkeletonEntry {
  UndirectedGraph graph;
  std::uint64_t labellings;
};

struct CensusReport {
  explicit CensusReport(VertexCount vertices)
      : n(vertices),
        classes_by_edges(static_cast<std::size_t>(vertices.pairs() + 1), 0),
        adgs_by_edges(static_cast<std::size_t>(vertices.pairs() + 1), 0),
        graphs_by_edges(static_cast<std::size_t>(vertices.pairs() + 1), 0),
        skeletons_by_edges(static_cast<std::size_t>(vertices.pairs() + 1), 0) {}

  VertexCount n;
  std::uint64_t total_adgs = 0;
  std::uint64_t total_classes = 0;
  std::vector<std::uint64_t> classes_by_edges;
  std::vector<std::uint64_t> adgs_by_edges;
  /// Labelled skeletons per edge count.
  std::vector<std::uint64_t> graphs_by_edges;
  /// Unlabeled skeletons per edge count.
  std::vector<std::uint64_t> skeletons_by_edges;
  /// class size -> number of classes of that size.
  std::map<std::uint64_t, std::uint64_t> size_histogram;
  /// (edge count, class size) -> number of classes.
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> joint;
  int max_vconfigs = 0;
  std::vector<GraphCode> max_vconfig_codes;
  std::uint64_t max_classes_per_skeleton = 0;
  std::vector<GraphCode> max_classes_codes;

  double ratio() const {
    return total_adgs == 0 ? 0.0 : static_cast<double>(total_classes) / static_cast<double>(total_adgs);
  }

  double size_one_fraction() const {
    auto it = size_histogram.find(1);
    const std::uint64_t ones = it == size_histogram.end() ? 0 : it->second;
    return total_classes == 0 ? 0.0 : static_cast<double>(ones) / static_cast<double>(total_classes);
  }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

namespace detail {

template <typename T>
void merge_argmax(T& best, std::vector<GraphCode>& codes, T value, const std::vector<GraphCode>& other) {
  if (value > best) {
    best = value;
    codes = other;
  } else if (value == best) {
    std::vector<GraphCode> merged;
    std::set_union(codes.begin(), codes.end(), other.begin(), other.end(), std::back_inserter(merged),
                   std::greater<>());
    codes = std::move(merged);
  }
}

}  // namespace detail

/// Folds one classified skeleton into the report.
inline void add_skeleton(CensusReport& report, const SkeletonEntry& entry, const SkeletonClassTable& table,
                         int vconfig_count) {
  const auto e = static_cast<std::size_t>(entry.graph.edge_count());
  const std::uint64_t labels = entry.labellings;
  const std::uint64_t classes = checked::mul(labels, table.class_count());
  const std::uint64_t adgs = checked::mul(labels, table.total_orientations);

  report.classes_by_edges[e] = checked::add(report.classes_by_edges[e], classes);
  report.adgs_by_edges[e] = checked::add(report.adgs_by_edges[e], adgs);
  report.graphs_by_edges[e] = checked::add(report.graphs_by_edges[e], labels);
  report.skeletons_by_edges[e] += 1;
  report.total_classes = checked::add(report.total_classes, classes);
  report.total_adgs = checked::add(report.total_adgs, adgs);
  for (const auto& [code, size] : table.classes) {
    auto& h = report.size_histogram[size];
    h = checked::add(h, labels);
    auto& j = report.joint[{static_cast<int>(e), size}];
    j = checked::add(j, labels);
  }
  const std::vector<GraphCode> self{entry.graph.code()};
  detail::merge_argmax(report.max_vconfigs, report.max_vconfig_codes, vconfig_count, self);
  detail::merge_argmax(report.max_classes_per_skeleton, report.max_classes_codes,
                       static_cast<std::uint64_t>(table.class_count()), self);
}

inline void add_skeleton(CensusReport& report, const SkeletonEntry& entry) {
  add_skeleton(report, entry, classify_skeleton(entry.graph),
               static_cast<int>(find_v_configurations(entry.graph).size()));
}

/// Componentwise sum; maxima keep the union of their argmax codes.
inline CensusReport merge(const CensusReport& a, const CensusReport& b) {
  if (!(a.n == b.n)) throw std::invalid_argument("cannot merge censuses for different n");
  CensusReport r = a;
  r.total_adgs = checked::add(a.total_adgs, b.total_adgs);
  r.total_classes = checked::add(a.total_classes, b.total_classes);
  for (std::size_t e = 0; e < r.classes_by_edges.size(); ++e) {
    r.classes_by_edges[e] = checked::add(a.classes_by_edges[e], b.classes_by_edges[e]);
    r.adgs_by_edges[e] = checked::add(a.adgs_by_edges[e], b.adgs_by_edges[e]);
    r.graphs_by_edges[e] = checked::add(a.graphs_by_edges[e], b.graphs_by_edges[e]);
    r.skeletons_by_edges[e] = checked::add(a.skeletons_by_edges[e], b.skeletons_by_edges[e]);
  }
  for (const auto& [size, count] : b.size_histogram) {
    auto& h = r.size_histogram[size];
    h = checked::add(h, count);
  }
  for (const auto& [key, count] : b.joint) {
    auto& j = r.joint[key];
    j = checked::add(j, count);
  }
  detail::merge_argmax(r.max_vconfigs, r.max_vconfig_codes, b.max_vconfigs, b.max_vconfig_codes);
  detail::merge_argmax(r.max_classes_per_skeleton, r.max_classes_codes, b.max_classes_per_skeleton,
                       b.max_classes_codes);
  return r;
}

inline CensusReport census(VertexCount n, std::span<const SkeletonEntry> skeletons) {
  CensusReport report(n);
  for (const auto& entry : skeletons) {
    if (entry.graph.n() != n.value()) throw std::invalid_argument("skeleton has the wrong vertex count");
    add_skeleton(report, entry);
  }
  return report;
}

/// Splits the skeleton list into `jobs` contiguous slices, one thread each,
/// and merges the partial reports in slice order.
inline CensusReport census_parallel(VertexCount n, std::span<const SkeletonEntry> skeletons, int jobs) {
  if (jobs < 1) throw std::invalid_argument("worker count must be at least 1");
  const std::size_t slices = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(1, skeletons.size()));
  if (slices == 1) return census(n, skeletons);

  std::vector<CensusReport> partial(slices, CensusReport(n));
  std::vector<std::exception_ptr> errors(slices);
  {
    std::vector<std::jthread> workers;
    workers.reserve(slices);
    for (std::size_t s = 0; s < slices; ++s) {
      const std::size_t begin = skeletons.size() * s / slices;
      const std::size_t end = skeletons.size() * (s + 1) / slices;
      workers.emplace_back([&, s, begin, end] {
        try {
          partial[s] = census(n, skeletons.subspan(begin, end - begin));
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  CensusReport total(n);
  for (const auto& p : partial) total = merge(total, p);
  return total;
}

/// Every canonical skeleton with its labelling count, optionally restricted
/// to an inclusive edge range.
inline std::vector<SkeletonEntry> skeleton_source(const std::vector<GenerationLayer>& layers, int min_edges,
                                                  int max_edges) {
  std::vector<SkeletonEntry> out;
  for (const auto& layer : layers) {
    if (layer.edge_count < min_edges || layer.edge_count > max_edges) continue;
    for (const auto& g : layer.graphs) out.push_back({g.graph, labelling_count(g).count});
  }
  return out;
}

inline std::vector<SkeletonEntry> skeleton_source(VertexCount n) {
  return skeleton_source(generate_all(n), 0, n.pairs());
}

/// Labelled acyclic digraphs on n vertices:
///   a_0 = 1,  a_n = sum_{k=1..n} (-1)^(k+1) C(n,k) 2^(k(n-k)) a_(n-k).
inline std::uint64_t robinson_adg_count(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  using Wide = __int128;
  std::vector<Wide> a(static_cast<std::size_t>(n + 1), 0);
  a[0] = 1;
  const Wide limit = static_cast<Wide>(std::numeric_limits<std::uint64_t>::max());
  for (int m = 1; m <= n; ++m) {
    Wide sum = 0;
    Wide binom = 1;
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      const int shift = k * (m - k);
      if (shift > 62) throw std::overflow_error("ADG count exceeds the 64-bit budget");
      Wide term;
      if (__builtin_mul_overflow(binom << shift, a[static_cast<std::size_t>(m - k)], &term)) {
        throw std::overflow_error("ADG count exceeds the 64-bit budget");
      }
      sum += (k % 2 == 1) ? term : -term;
    }
    if (sum <= 0 || sum > limit) throw std::overflow_error("ADG count exceeds the 64-bit budget");
    a[static_cast<std::size_t>(m)] = sum;
  }
  return static_cast<std::uint64_t>(a[static_cast<std::size_t>(n)]);
}

/// floor(n/2) * ceil(n/2), the largest i(n - i).
inline std::uint64_t median_edges_prediction(VertexCount n) {
  const auto v = static_cast<std::uint64_t>(n.value());
  return (v / 2) * ((v + 1) / 2);
}

/// Smallest e whose cumulative count reaches half the total.
inline int median_index(std::span<const std::uint64_t> counts) {
  unsigned __int128 total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw std::invalid_argument("median of an empty distribution");
  unsigned __int128 running = 0;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    running += counts[e];
    if (2 * running >= total) return static_cast<int>(e);
  }
  return static_cast<int>(counts.size()) - 1;
}

/// Which s_k drives the step that produces r_(n+1).
enum class SIndex { kNext, kCurrent };

inline double s_factor(int k) { return 2.0 + 20.0 / 3.0 * std::exp(-k / 2.0); }

/// Iterates r_(n+1) = r_n - (r_(n-1) - r_n) / s from (r_(n_cur - 1), r_(n_cur)).
inline double extrapolate_ratio(double r_prev, double r_cur, int n_cur, int n_target,
                                SIndex convention = SIndex::kNext) {
  if (!(r_cur > 0.0) || !(r_prev >= r_cur) || !(r_prev <= 1.0)) {
    throw std::invalid_argument("extrapolation needs 0 < r_cur <= r_prev <= 1");
  }
  if (n_target < n_cur) throw std::invalid_argument("target must not precede the current index");
  long double prev = r_prev;
  long double cur = r_cur;
  for (int n = n_cur; n < n_target; ++n) {
    const long double s = s_factor(convention == SIndex::kNext ? n + 1 : n);
    const long double next = cur - (prev - cur) / s;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

/// Pearson statistic of the proportions against a Gaussian with matching
/// mean and variance, evaluated at the integer bins and renormalised.
inline double gaussian_chi2(std::span<const std::uint64_t> counts) {
  long double total = 0;
  for (auto c : counts) total += static_cast<long double>(c);
  if (total <= 0) throw std::invalid_argument("distribution has no mass");
  long double mean = 0;
  for (std::size_t e = 0; e < counts.size(); ++e) mean += e * (counts[e] / total);
  long double var = 0;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    const long double d = static_cast<long double>(e) - mean;
    var += d * d * (counts[e] / total);
  }
  if (var <= 0) throw std::invalid_argument("degenerate single-bin distribution");

  std::vector<long double> model(counts.size());
  long double norm = 0;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    const long double d = static_cast<long double>(e) - mean;
    model[e] = std::exp(-d * d / (2 * var));
    norm += model[e];
  }
  long double chi2 = 0;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    const long double q = model[e] / norm;
    if (q <= 1e-12L) continue;
    const long double p = counts[e] / total;
    chi2 += (p - q) * (p - q) / q;
  }
  return static_cast<double>(chi2);
}

}  // namespace mec
