#pragma once

// Slow reference implementations used only for verification. Apart from the
// graph-core types they share nothing with the generation and census code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "mec/graph.hpp"

namespace mec::oracle {

/// A labelled digraph as per-vertex parent masks.
using Dag = std::vector<std::uint16_t>;

inline bool is_acyclic(const Dag& parents) {
  const int n = static_cast<int>(parents.size());
  std::uint16_t removed = 0;
  for (int round = 0; round < n; ++round) {
    int source = -1;
    for (int v = 0; v < n && source < 0; ++v) {
      if (!((removed >> v) & 1) && (parents[v] & ~removed) == 0) source = v;
    }
    if (source < 0) return false;
    removed |= static_cast<std::uint16_t>(1u << source);
  }
  return true;
}

inline Bits128 skeleton_bits(const Dag& parents) {
  Bits128 bits = 0;
  const int n = static_cast<int>(parents.size());
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if ((parents[v] >> u) & 1) bits |= bit128(pair_index(u, v));
    }
  }
  return bits;
}

/// Immoralities a -> b <- c (a < c, a and c non-adjacent), as a set of
/// triples (a, b, c).
inline std::set<std::tuple<int, int, int>> immoralities(const Dag& parents) {
  const int n = static_cast<int>(parents.size());
  auto linked = [&](int x, int y) { return ((parents[x] >> y) & 1) || ((parents[y] >> x) & 1); };
  std::set<std::tuple<int, int, int>> out;
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      for (int c = a + 1; c < n; ++c) {
        if (a != b && c != b && ((parents[b] >> a) & 1) && ((parents[b] >> c) & 1) && !linked(a, c)) {
          out.insert({a, b, c});
        }
      }
    }
  }
  return out;
}

/// Same skeleton and same immoralities.
inline bool markov_equivalent(const Dag& x, const Dag& y) {
  return skeleton_bits(x) == skeleton_bits(y) && immoralities(x) == immoralities(y);
}

struct LabeledDagCensus {
  int n = 0;
  std::uint64_t total_dags = 0;
  /// (skeleton code, immorality set) -> number of DAGs.
  std::map<std::pair<Bits128, std::set<std::tuple<int, int, int>>>, std::uint64_t> classes;

  std::uint64_t class_count() const { return classes.size(); }

  /// class size -> number of classes.
  std::map<std::uint64_t, std::uint64_t> size_multiset() const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& [key, size] : classes) ++out[size];
    return out;
  }
};

/// Every assignment of {absent, i->j, j->i} to every pair, cyclic ones
/// dropped, survivors grouped by skeleton and immoralities.
inline LabeledDagCensus brute_force_census(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("brute-force census supports 1 <= n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::uint64_t states = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) states *= 3;

  LabeledDagCensus out;
  out.n = n;
  Dag parents(static_cast<std::size_t>(n));
  for (std::uint64_t s = 0; s < states; ++s) {
    std::fill(parents.begin(), parents.end(), 0);
    std::uint64_t digits = s;
    for (auto [i, j] : pairs) {
      const auto d = digits % 3;
      digits /= 3;
      if (d == 1) parents[j] |= static_cast<std::uint16_t>(1u << i);
      if (d == 2) parents[i] |= static_cast<std::uint16_t>(1u << j);
    }
    if (!is_acyclic(parents)) continue;
    ++out.total_dags;
    ++out.classes[{skeleton_bits(parents), immoralities(parents)}];
  }
  return out;
}

/// Largest code over all n! relabellings, by direct search.
inline Bits128 max_relabelled_code(Bits128 bits, int n, const std::vector<std::vector<int>>& perms) {
  Bits128 best = 0;
  for (const auto& p : perms) {
    Bits128 c = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if ((bits >> pair_index(i, j)) & 1) c |= bit128(pair_index(p[i], p[j]));
      }
    }
    best = std::max(best, c);
  }
  return best;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// One maximal code per isomorphism class, descending.
inline std::vector<GraphCode> brute_force_unlabeled(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("brute-force unlabeled generation supports 1 <= n <= 6");
  const VertexCount vc(n);
  const auto perms = all_permutations(n);
  std::set<Bits128, std::greater<>> seen;
  const Bits128 limit = bit128(vc.pairs());
  for (Bits128 bits = 0; bits < limit; ++bits) seen.insert(max_relabelled_code(bits, n, perms));
  std::vector<GraphCode> out;
  for (Bits128 b : seen) out.emplace_back(vc, b);
  return out;
}

namespace detail {

// Deletion-contraction on an adjacency-mask graph with `alive` vertices.
inline std::int64_t chromatic(std::vector<std::uint16_t> adj, std::uint16_t alive, std::int64_t x) {
  int u = -1;
  int v = -1;
  for (int a = 0; a < static_cast<int>(adj.size()) && u < 0; ++a) {
    if (((alive >> a) & 1) && (adj[a] & alive)) {
      u = a;
      v = std::countr_zero(static_cast<std::uint16_t>(adj[a] & alive));
    }
  }
  if (u < 0) {
    std::int64_t r = 1;
    for (int k = std::popcount(alive); k > 0; --k) r *= x;
    return r;
  }
  auto deleted = adj;
  deleted[u] &= static_cast<std::uint16_t>(~(1u << v));
  deleted[v] &= static_cast<std::uint16_t>(~(1u << u));

  // Merge v into u.
  auto contracted = deleted;
  contracted[u] |= deleted[v];
  for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
    if ((deleted[v] >> w) & 1) {
      contracted[w] &= static_cast<std::uint16_t>(~(1u << v));
      contracted[w] |= static_cast<std::uint16_t>(1u << u);
    }
  }
  contracted[v] = 0;
  return chromatic(deleted, alive, x) -
         chromatic(contracted, static_cast<std::uint16_t>(alive & ~(1u << v)), x);
}

}  // namespace detail

/// Chromatic polynomial of g evaluated at x.
inline std::int64_t chromatic_polynomial_at(const UndirectedGraph& g, std::int64_t x) {
  std::vector<std::uint16_t> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [i, j] : decode(g.code())) {
    adj[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
    adj[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
  }
  return detail::chromatic(std::move(adj), static_cast<std::uint16_t>((1u << g.n()) - 1), x);
}

}  // namespace mec::oracle
