#pragma once

// Acyclic orientations of an undirected graph, each produced exactly once.
//
// Edges are directed one at a time in code order (least significant pair
// first). Descendant sets are kept for the edges fixed so far, and a
// direction u -> v is skipped when v already reaches u. Every leaf is a
// distinct complete assignment and no cyclic one survives.

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

class Orientation {
 public:
  const UndirectedGraph& skeleton() const { return *skeleton_; }

  /// Bit k refers to the k-th edge in ascending code order; 1 means the
  /// edge points from its lower to its higher vertex.
  Bits128 direction() const { return direction_; }

  /// parents(v) has bit u set iff u -> v.
  std::uint16_t parents(int v) const { return parents_[v]; }

  bool has_arc(int from, int to) const { return (parents_[to] >> from) & 1; }

 private:
  template <typename Visitor>
  friend class OrientationEnumerator;

  const UndirectedGraph* skeleton_ = nullptr;
  Bits128 direction_ = 0;
  std::array<std::uint16_t, kMaxVertices> parents_{};
};

template <typename Visitor>
class OrientationEnumerator {
 public:
  OrientationEnumerator(const UndirectedGraph& g, Visitor& visit) : visit_(visit) {
    current_.skeleton_ = &g;
    n_ = g.n();
    edges_ = decode(g.code());
  }

  void run() {
    std::array<std::uint16_t, kMaxVertices> reach{};
    assign(0, reach);
  }

 private:
  using Reach = std::array<std::uint16_t, kMaxVertices>;

  void assign(std::size_t k, const Reach& reach) {
    if (k == edges_.size()) {
      visit_(static_cast<const Orientation&>(current_));
      return;
    }
    const auto [lo, hi] = edges_[k];
    if (!((reach[hi] >> lo) & 1)) {
      current_.direction_ |= bit128(static_cast<int>(k));
      current_.parents_[hi] |= static_cast<std::uint16_t>(1u << lo);
      assign(k + 1, with_arc(reach, lo, hi));
      current_.parents_[hi] &= static_cast<std::uint16_t>(~(1u << lo));
      current_.direction_ &= ~bit128(static_cast<int>(k));
    }
    if (!((reach[lo] >> hi) & 1)) {
      current_.parents_[lo] |= static_cast<std::uint16_t>(1u << hi);
      assign(k + 1, with_arc(reach, hi, lo));
      current_.parents_[lo] &= static_cast<std::uint16_t>(~(1u << hi));
    }
  }

  Reach with_arc(const Reach& reach, int from, int to) const {
    Reach next = reach;
    const auto gained = static_cast<std::uint16_t>(reach[to] | (1u << to));
    for (int x = 0; x < n_; ++x) {
      if (x == from || ((reach[x] >> from) & 1)) next[x] |= gained;
    }
    return next;
  }

  Visitor& visit_;
  Orientation current_;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Calls visit(const Orientation&) once per acyclic orientation of g, in a
/// fixed order. The Orientation reference is only valid during the call.
template <typename Visitor>
void enumerate_acyclic_orientations(const UndirectedGraph& g, Visitor&& visit) {
  OrientationEnumerator<std::remove_reference_t<Visitor>> e(g, visit);
  e.run();
}

inline std::uint64_t count_acyclic_orientations(const UndirectedGraph& g) {
  std::uint64_t count = 0;
  enumerate_acyclic_orientations(g, [&](const Orientation&) {
    if (count == std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("acyclic orientation count exceeds 64 bits");
    }
    ++count;
  });
  return count;
}

}  // namespace mec
