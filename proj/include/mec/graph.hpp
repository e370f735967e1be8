#pragma once

// Undirected graphs on up to 12 labeled vertices, coded as the
// upper-triangular adjacency matrix read column by column.
//
// Vertices are 0-based. The pair (i, j), i < j, occupies bit
//   j * (j - 1) / 2 + i
// so column j = n - 1 holds the most significant bits, and within a column
// the row nearest the diagonal is the most significant.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mec {

inline constexpr int kMaxVertices = 12;

using Bits128 = unsigned __int128;

inline constexpr int popcount(Bits128 x) {
  return std::popcount(static_cast<std::uint64_t>(x)) +
         std::popcount(static_cast<std::uint64_t>(x >> 64));
}

inline constexpr int countr_zero(Bits128 x) {
  auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

inline constexpr Bits128 bit128(int i) { return Bits128{1} << i; }

inline constexpr Bits128 low_mask128(int count) {
  return count >= 128 ? ~Bits128{0} : bit128(count) - 1;
}

/// Number of vertices, 1 <= n <= 12.
class VertexCount {
 public:
  constexpr explicit VertexCount(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw std::invalid_argument("vertex count out of range [1, 12]: " +
                                  std::to_string(n));
    }
  }
  constexpr int value() const { return n_; }
  /// Number of unordered vertex pairs, n(n-1)/2.
  constexpr int pairs() const { return n_ * (n_ - 1) / 2; }
  friend constexpr bool operator==(VertexCount, VertexCount) = default;

 private:
  int n_;
};

inline constexpr int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

/// Inverse of pair_index.
inline constexpr std::pair<int, int> pair_at(int index) {
  int j = 1;
  while ((j + 1) * j / 2 <= index) ++j;
  return {index - j * (j - 1) / 2, j};
}

/// Bit string of length n(n-1)/2 coding the upper-triangular adjacency matrix.
class GraphCode {
 public:
  constexpr GraphCode() = default;
  constexpr GraphCode(VertexCount n, Bits128 bits) : n_(n.value()), bits_(bits) {
    if ((bits & ~low_mask128(n.pairs())) != 0) {
      throw std::invalid_argument("graph code has bits beyond n(n-1)/2");
    }
  }

  constexpr VertexCount n() const { return VertexCount(n_); }
  constexpr Bits128 bits() const { return bits_; }
  constexpr bool test(int i, int j) const { return (bits_ >> pair_index(i, j)) & 1; }
  constexpr int edge_count() const { return popcount(bits_); }

  /// Lowest 64 bits; exact for n <= 11.
  constexpr std::uint64_t low64() const { return static_cast<std::uint64_t>(bits_); }

  friend constexpr bool operator==(const GraphCode&, const GraphCode&) = default;
  friend constexpr auto operator<=>(const GraphCode& a, const GraphCode& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int n_ = 1;
  Bits128 bits_ = 0;
};

/// Image of each vertex: perm[v] is where v goes.
using Permutation = std::vector<int>;

inline bool is_bijection(const Permutation& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::uint32_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen >> v) & 1) return false;
    seen |= 1u << v;
  }
  return true;
}

/// (q o p)(v) = q(p(v)).
inline Permutation compose(const Permutation& q, const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) r[v] = q[p[v]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) r[p[v]] = static_cast<int>(v);
  return r;
}

using DegreeSequence = std::vector<int>;

/// Simple undirected graph. Immutable; keeps per-vertex neighbour masks next
/// to the code so adjacency queries are a single bit test.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(GraphCode code) : code_(code) {
    const int n = code.n().value();
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (code.test(i, j)) {
          adj_[i] |= static_cast<std::uint16_t>(1u << j);
          adj_[j] |= static_cast<std::uint16_t>(1u << i);
        }
      }
    }
  }

  UndirectedGraph(VertexCount n, Bits128 bits) : UndirectedGraph(GraphCode(n, bits)) {}

  static UndirectedGraph empty(VertexCount n) { return UndirectedGraph(n, 0); }
  static UndirectedGraph complete(VertexCount n) {
    return UndirectedGraph(n, low_mask128(n.pairs()));
  }

  int n() const { return code_.n().value(); }
  VertexCount vertex_count() const { return code_.n(); }
  int pairs() const { return code_.n().pairs(); }
  const GraphCode& code() const { return code_; }
  Bits128 bits() const { return code_.bits(); }
  int edge_count() const { return code_.edge_count(); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  std::uint16_t neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.code_ == b.code_;
  }

 private:
  GraphCode code_;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

/// Codes an edge set. Rejects loops, out-of-range endpoints and duplicates.
/// Pairs may be given in either orientation.
inline GraphCode encode(const std::vector<std::pair<int, int>>& edges, VertexCount n) {
  Bits128 bits = 0;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n.value() || j >= n.value()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (i == j) throw std::invalid_argument("loops are not allowed");
    const Bits128 b = bit128(pair_index(i, j));
    if (bits & b) throw std::invalid_argument("duplicate edge");
    bits |= b;
  }
  return GraphCode(n, bits);
}

/// Edge list (i < j), least significant pair first.
inline std::vector<std::pair<int, int>> decode(const GraphCode& code) {
  std::vector<std::pair<int, int>> edges;
  for (Bits128 rest = code.bits(); rest != 0; rest &= rest - 1) {
    edges.push_back(pair_at(countr_zero(rest)));
  }
  return edges;
}

inline UndirectedGraph complement(const UndirectedGraph& g) {
  return UndirectedGraph(g.vertex_count(), ~g.bits() & low_mask128(g.pairs()));
}

inline DegreeSequence degree_sequence(const UndirectedGraph& g) {
  DegreeSequence d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  return d;
}

/// Relabels g so that pair (perm[i], perm[j]) of the result carries the bit of
/// pair (i, j) of g.
inline GraphCode apply_permutation(const UndirectedGraph& g, const Permutation& perm) {
  if (!is_bijection(perm, g.n())) {
    throw std::invalid_argument("permutation is not a bijection on the vertex set");
  }
  Bits128 bits = 0;
  for (Bits128 rest = g.bits(); rest != 0; rest &= rest - 1) {
    auto [i, j] = pair_at(countr_zero(rest));
    bits |= bit128(pair_index(perm[i], perm[j]));
  }
  return GraphCode(g.vertex_count(), bits);
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

/// Hex digits of a code, most significant pair first, zero-padded to
/// ceil(m / 4) digits (at least one).
inline std::string to_hex(const GraphCode& code) {
  const int digits = std::max(1, (code.n().pairs() + 3) / 4);
  std::string s(static_cast<std::size_t>(digits), '0');
  Bits128 v = code.bits();
  for (int k = digits - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = "0123456789abcdef"[static_cast<int>(v & 0xf)];
    v >>= 4;
  }
  return s;
}

inline GraphCode from_hex(const std::string& hex, VertexCount n) {
  if (hex.empty() || hex.size() > 32) throw std::invalid_argument("bad hex code: '" + hex + "'");
  Bits128 v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("bad hex code: '" + hex + "'");
    v = (v << 4) | static_cast<Bits128>(d);
  }
  return GraphCode(n, v);
}

}  // namespace mec
