#pragma once

// Markov equivalence classes on a fixed skeleton. Two acyclic orientations
// of the same skeleton are equivalent iff they have the same immoralities, so
// the set of immoral v-configurations is a complete class key.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "mec/graph.hpp"
#include "mec/orientations.hpp"

namespace mec {

/// Induced path a - b - c with a < c; b is the centre.
struct VConfig {
  int a;
  int b;
  int c;
  friend constexpr bool operator==(const VConfig&, const VConfig&) = default;
};

/// One bit per v-configuration of the skeleton, set when it is an immorality.
/// 256 bits covers the n(n-1)(n-2)/6 = 220 bound at n = 12.
class ClassCode {
 public:
  static constexpr int kMaxBits = 256;

  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const { return count() == 0; }

  friend auto operator<=>(const ClassCode&, const ClassCode&) = default;

 private:
  std::array<std::uint64_t, 4> words_{};
};

struct SkeletonClassTable {
  std::map<ClassCode, std::uint64_t> classes;
  std::uint64_t total_orientations = 0;

  std::uint64_t class_count() const { return classes.size(); }
};

/// Ordered by (b, a, c).
inline std::vector<VConfig> find_v_configurations(const UndirectedGraph& g) {
  std::vector<VConfig> out;
  const int n = g.n();
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (a == b || !g.adjacent(a, b)) continue;
      for (int c = a + 1; c < n; ++c) {
        if (c != b && g.adjacent(b, c) && !g.adjacent(a, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

inline ClassCode class_code(const Orientation& o, const std::vector<VConfig>& vconfigs) {
  ClassCode code;
  for (std::size_t i = 0; i < vconfigs.size(); ++i) {
    const auto& v = vconfigs[i];
    if (o.has_arc(v.a, v.b) && o.has_arc(v.c, v.b)) code.set(static_cast<int>(i));
  }
  return code;
}

inline SkeletonClassTable classify_skeleton(const UndirectedGraph& g) {
  const auto vconfigs = find_v_configurations(g);
  if (vconfigs.size() > static_cast<std::size_t>(ClassCode::kMaxBits)) {
    throw std::length_error("too many v-configurations for a class code");
  }

  // Per-centre masks turn the immorality test into one AND per v-configuration.
  struct Site {
    int centre;
    std::uint16_t ends;
  };
  std::vector<Site> sites;
  sites.reserve(vconfigs.size());
  for (const auto& v : vconfigs) {
    sites.push_back({v.b, static_cast<std::uint16_t>((1u << v.a) | (1u << v.c))});
  }

  SkeletonClassTable table;
  enumerate_acyclic_orientations(g, [&](const Orientation& o) {
    ClassCode code;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      if ((o.parents(sites[i].centre) & sites[i].ends) == sites[i].ends) code.set(static_cast<int>(i));
    }
    if (table.total_orientations == std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("orientation count exceeds 64 bits");
    }
    ++table.total_orientations;
    ++table.classes[code];
  });
  return table;
}

/// (n-2)/2 * floor(n/2) * ceil(n/2), the v-configuration count of the
/// balanced complete bipartite graph.
inline std::uint64_t max_vconfig_prediction(VertexCount n) {
  const std::uint64_t v = static_cast<std::uint64_t>(n.value());
  if (v < 2) return 0;
  // floor * ceil * (n - 2) is always even.
  return (v / 2) * ((v + 1) / 2) * (v - 2) / 2;
}

}  // namespace mec
