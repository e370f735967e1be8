#pragma once

// Automorphism group order by enumerating relabellings that only permute
// vertices of equal degree, and the labelled-copy count n!/|Aut| it implies.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mec/graph.hpp"
#include "mec/orderly.hpp"

namespace mec {

struct AutomorphismCount {
  std::uint64_t size = 1;
};

struct LabellingCount {
  std::uint64_t count = 1;
};

namespace detail {

// Assigns images vertex by vertex inside each degree class and checks
// adjacency against the already-mapped vertices as it goes, so a leaf is a
// permutation reproducing the code.
class AutomorphismCounter {
 public:
  explicit AutomorphismCounter(const UndirectedGraph& g) : g_(g), n_(g.n()) {}

  std::uint64_t count() {
    image_.assign(static_cast<std::size_t>(n_), -1);
    total_ = 0;
    extend(0, 0);
    return total_;
  }

 private:
  void extend(int v, std::uint16_t used) {
    if (v == n_) {
      ++total_;
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if ((used >> w) & 1 || g_.degree(w) != g_.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g_.adjacent(u, v) == g_.adjacent(image_[u], w);
      if (!ok) continue;
      image_[v] = w;
      extend(v + 1, static_cast<std::uint16_t>(used | (1u << w)));
    }
  }

  const UndirectedGraph& g_;
  int n_;
  std::vector<int> image_;
  std::uint64_t total_ = 0;
};

}  // namespace detail

inline AutomorphismCount automorphism_group_size(const UndirectedGraph& g) {
  return {detail::AutomorphismCounter(g).count()};
}

inline AutomorphismCount automorphism_group_size(const CanonicalGraph& g) {
  return automorphism_group_size(g.graph);
}

/// Number of distinct labelled copies, n! / |Aut(g)|.
inline LabellingCount labelling_count(const UndirectedGraph& g, AutomorphismCount aut) {
  const std::uint64_t group = factorial(g.n());
  if (aut.size == 0 || group % aut.size != 0) {
    throw std::logic_error("automorphism count does not divide n!");
  }
  return {group / aut.size};
}

inline LabellingCount labelling_count(const CanonicalGraph& g) {
  return labelling_count(g.graph, automorphism_group_size(g));
}

}  // namespace mec
