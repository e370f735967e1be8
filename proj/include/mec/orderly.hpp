#pragma once

// Isomorph-free generation of undirected graphs by edge augmentation.
//
// The canonical representative of an isomorphism class is the labelling with
// the largest code. Layers are built from the empty graph by setting one bit
// in the trailing run of zeros of each canonical parent and keeping the
// children that are canonical themselves. Deleting the least significant edge
// of a canonical code gives a canonical code, so every canonical graph is
// reached exactly once.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

/// Cheap non-canonicity tests. Each one is sound on its own and can be
/// switched off for cross-checking against the permutation search.
struct PruneRules {
  bool top_degree = true;       // 1: top vertex has maximal degree
  bool isolated_low = true;     // 2: isolated vertices occupy the lowest positions
  bool second_vertex = true;    // 3: vertex below the top dominates the top's neighbourhood
  bool column_gap = true;       // 4: no 0 above a 1 among rows with equal higher columns

  static constexpr PruneRules none() { return {false, false, false, false}; }
  static constexpr PruneRules only(int rule) {
    return {rule == 1, rule == 2, rule == 3, rule == 4};
  }
};

struct CanonOptions {
  PruneRules rules{};
  /// Branch and bound over position assignments, top vertex first. When
  /// false every one of the n! relabellings is tried.
  bool restricted_search = true;
};

struct CanonicalGraph {
  UndirectedGraph graph;
  bool certified = false;

  Bits128 bits() const { return graph.bits(); }
};

struct GenerationLayer {
  VertexCount n;
  int edge_count;
  /// Strictly descending by code.
  std::vector<CanonicalGraph> graphs;
};

namespace detail {

inline bool reject_top_degree(const UndirectedGraph& g) {
  const int top = g.n() - 1;
  for (int v = 0; v < top; ++v) {
    if (g.degree(v) > g.degree(top)) return true;
  }
  return false;
}

inline bool reject_isolated_low(const UndirectedGraph& g) {
  bool seen_edge_vertex = false;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 0) {
      seen_edge_vertex = true;
    } else if (seen_edge_vertex) {
      return true;
    }
  }
  return false;
}

// Among the neighbours A of the top vertex, the vertex just below the top
// must maximise (neighbours inside A, total degree).
inline bool reject_second_vertex(const UndirectedGraph& g) {
  const int n = g.n();
  if (n < 3) return false;
  const std::uint16_t nbhd = g.neighbours(n - 1);
  const int second = n - 2;
  if (!((nbhd >> second) & 1)) return false;
  auto key = [&](int v) {
    return std::pair{std::popcount(static_cast<std::uint16_t>(g.neighbours(v) & nbhd)),
                     g.degree(v)};
  };
  const auto second_key = key(second);
  for (int v = 0; v < second; ++v) {
    if (((nbhd >> v) & 1) && key(v) > second_key) return true;
  }
  return false;
}

// Rows a > b of column c whose bits agree in every column above c can be
// swapped without touching those columns; a 0 at a over a 1 at b means the
// swap raises column c and hence the code.
inline bool reject_column_gap(const UndirectedGraph& g) {
  const int n = g.n();
  for (int c = n - 1; c >= 1; --c) {
    for (int a = c - 1; a >= 1; --a) {
      if (g.adjacent(a, c)) continue;
      const unsigned sig_a = static_cast<unsigned>(g.neighbours(a)) >> (c + 1);
      for (int b = a - 1; b >= 0; --b) {
        if (g.adjacent(b, c) && (static_cast<unsigned>(g.neighbours(b)) >> (c + 1)) == sig_a) {
          return true;
        }
      }
    }
  }
  return false;
}

// Branch and bound over relabellings. Positions are filled from n-1 down;
// pos[p] is the original vertex placed at position p. A node is cut when no
// completion can produce a code strictly above the current threshold.
class CanonSearch {
 public:
  CanonSearch(const UndirectedGraph& g, bool stop_at_first)
      : g_(g), n_(g.n()), stop_at_first_(stop_at_first), best_(g.bits()) {
    std::iota(best_pos_.begin(), best_pos_.begin() + n_, 0);
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  void run() { descend(n_, 0, static_cast<std::uint16_t>((1u << n_) - 1)); }

  bool improved() const { return improved_; }
  Bits128 best() const { return best_; }
  /// perm[v] = position of v in the best labelling found.
  Permutation best_permutation() const {
    Permutation perm(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) perm[best_pos_[p]] = p;
    return perm;
  }

 private:
  Bits128 bound(int k, Bits128 known, std::uint16_t free) const {
    Bits128 b = known;
    for (int c = k; c < n_; ++c) {
      const int r = std::popcount(static_cast<std::uint16_t>(g_.neighbours(pos_[c]) & free));
      for (int row = k - 1; row >= k - r; --row) b |= bit128(pair_index(row, c));
    }
    int twice_inner = 0;
    for (std::uint16_t rest = free; rest != 0; rest &= rest - 1) {
      twice_inner += std::popcount(static_cast<std::uint16_t>(g_.neighbours(std::countr_zero(rest)) & free));
    }
    const int low = k * (k - 1) / 2;
    const int inner = twice_inner / 2;
    b |= low_mask128(low) & ~low_mask128(low - inner);
    return b;
  }

  void descend(int k, Bits128 known, std::uint16_t free) {
    if (done_) return;
    const Bits128 b = bound(k, known, free);
    if (b <= best_) return;
    if (k == 0) {
      best_ = b;
      improved_ = true;
      std::copy(pos_.begin(), pos_.begin() + n_, best_pos_.begin());
      if (stop_at_first_) done_ = true;
      return;
    }
    const int p = k - 1;
    for (int v : order_) {
      if (!((free >> v) & 1)) continue;
      pos_[p] = v;
      Bits128 next = known;
      for (int c = k; c < n_; ++c) {
        if (g_.adjacent(v, pos_[c])) next |= bit128(pair_index(p, c));
      }
      descend(p, next, static_cast<std::uint16_t>(free & ~(1u << v)));
      if (done_) return;
    }
  }

  const UndirectedGraph& g_;
  int n_;
  bool stop_at_first_;
  bool done_ = false;
  bool improved_ = false;
  Bits128 best_;
  std::array<int, kMaxVertices> pos_{};
  std::array<int, kMaxVertices> best_pos_{};
  std::vector<int> order_;
};

// Largest code over all n! labellings, or the first one beating g when
// stop_at_first is set. Returns the permutation attaining it.
inline std::pair<Bits128, Permutation> exhaustive_max(const UndirectedGraph& g, bool stop_at_first) {
  const int n = g.n();
  Permutation perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Bits128 best = g.bits();
  Permutation best_perm = perm;
  do {
    const Bits128 c = apply_permutation(g, perm).bits();
    if (c > best) {
      best = c;
      best_perm = perm;
      if (stop_at_first) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_perm};
}

}  // namespace detail

/// True only when g is provably non-canonical by one of the enabled rules.
inline bool quick_reject(const UndirectedGraph& g, const PruneRules& rules = {}) {
  return (rules.top_degree && detail::reject_top_degree(g)) ||
         (rules.isolated_low && detail::reject_isolated_low(g)) ||
         (rules.second_vertex && detail::reject_second_vertex(g)) ||
         (rules.column_gap && detail::reject_column_gap(g));
}

/// True iff no relabelling of g has a strictly larger code.
inline bool is_canonical(const UndirectedGraph& g, const CanonOptions& opts = {}) {
  if (quick_reject(g, opts.rules)) return false;
  if (!opts.restricted_search) return detail::exhaustive_max(g, true).first == g.bits();
  detail::CanonSearch search(g, /*stop_at_first=*/true);
  search.run();
  return !search.improved();
}

/// Permutation taking g to its canonical labelling.
inline Permutation canonical_permutation(const UndirectedGraph& g, const CanonOptions& opts = {}) {
  if (!opts.restricted_search) return detail::exhaustive_max(g, false).second;
  detail::CanonSearch search(g, /*stop_at_first=*/false);
  search.run();
  return search.best_permutation();
}

inline CanonicalGraph canonicalize(const UndirectedGraph& g, const CanonOptions& opts = {}) {
  return {UndirectedGraph(apply_permutation(g, canonical_permutation(g, opts))), true};
}

/// One child per zero in the trailing zero run, largest position first.
inline std::vector<UndirectedGraph> augment_children(const CanonicalGraph& parent) {
  const UndirectedGraph& g = parent.graph;
  const int trailing = g.bits() == 0 ? g.pairs() : countr_zero(g.bits());
  std::vector<UndirectedGraph> children;
  children.reserve(static_cast<std::size_t>(trailing));
  for (int k = trailing - 1; k >= 0; --k) {
    children.emplace_back(g.vertex_count(), g.bits() | bit128(k));
  }
  return children;
}

namespace detail {

inline void sort_descending(std::vector<CanonicalGraph>& graphs) {
  std::sort(graphs.begin(), graphs.end(),
            [](const CanonicalGraph& a, const CanonicalGraph& b) { return a.bits() > b.bits(); });
}

}  // namespace detail

/// Canonical graphs with e + 1 edges from the layer with e edges.
inline GenerationLayer augment_layer(const GenerationLayer& layer, const CanonOptions& opts = {}) {
  GenerationLayer next{layer.n, layer.edge_count + 1, {}};
  for (const CanonicalGraph& parent : layer.graphs) {
    for (UndirectedGraph& child : augment_children(parent)) {
      if (is_canonical(child, opts)) next.graphs.push_back({std::move(child), true});
    }
  }
  detail::sort_descending(next.graphs);
  return next;
}

/// Layer with m - e edges from the layer with e edges.
inline GenerationLayer complement_layer(const GenerationLayer& layer, const CanonOptions& opts = {}) {
  GenerationLayer out{layer.n, layer.n.pairs() - layer.edge_count, {}};
  out.graphs.reserve(layer.graphs.size());
  for (const CanonicalGraph& g : layer.graphs) {
    out.graphs.push_back(canonicalize(complement(g.graph), opts));
  }
  detail::sort_descending(out.graphs);
  return out;
}

/// All layers 0..m. Layers up to m/2 (inclusive) come from augmentation, the
/// rest from complementing their mirror layer.
inline std::vector<GenerationLayer> generate_all(VertexCount n, const CanonOptions& opts = {}) {
  const int m = n.pairs();
  std::vector<GenerationLayer> layers;
  layers.reserve(static_cast<std::size_t>(m + 1));
  layers.push_back({n, 0, {{UndirectedGraph::empty(n), true}}});
  for (int e = 1; 2 * e <= m; ++e) layers.push_back(augment_layer(layers.back(), opts));
  for (int e = static_cast<int>(layers.size()); e <= m; ++e) {
    layers.push_back(complement_layer(layers[static_cast<std::size_t>(m - e)], opts));
  }
  return layers;
}

}  // namespace mec
