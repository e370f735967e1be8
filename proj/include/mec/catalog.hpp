#pragma once

// Layer catalog files, one per (n, e):
//
//   MECCAT 1 n=<N> e=<E> count=<C>
//   <hex code> <labellings>
//   ...
//
// Codes are written most significant pair first and listed in strictly
// descending order.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "mec/automorphisms.hpp"
#include "mec/census.hpp"
#include "mec/graph.hpp"
#include "mec/orderly.hpp"

namespace mec {

inline constexpr int kCatalogVersion = 1;

struct CatalogRecord {
  GraphCode code;
  std::uint64_t labellings;
  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

struct Catalog {
  int n = 1;
  int edge_count = 0;
  std::vector<CatalogRecord> records;
  friend bool operator==(const Catalog&, const Catalog&) = default;
};

class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& source, const std::string& what)
      : std::runtime_error(source + ": " + what), source_(source) {}
  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

inline Catalog make_catalog(const GenerationLayer& layer) {
  Catalog c{layer.n.value(), layer.edge_count, {}};
  c.records.reserve(layer.graphs.size());
  for (const auto& g : layer.graphs) c.records.push_back({g.graph.code(), labelling_count(g).count});
  return c;
}

inline void write_catalog(std::ostream& os, const Catalog& c) {
  os << "MECCAT " << kCatalogVersion << " n=" << c.n << " e=" << c.edge_count
     << " count=" << c.records.size() << '\n';
  for (const auto& r : c.records) os << to_hex(r.code) << ' ' << r.labellings << '\n';
}

/// Parses and validates a catalog. `source` names the input in errors.
/// With check_canonical set, every code is also run through the canonicity
/// test.
inline Catalog read_catalog(std::istream& is, const std::string& source, bool check_canonical = true) {
  auto fail = [&](const std::string& what) -> CatalogError { return CatalogError(source, what); };

  std::string header;
  if (!std::getline(is, header)) throw fail("missing header");
  std::istringstream hs(header);
  std::string magic, nfield, efield, cfield;
  int version = 0;
  if (!(hs >> magic >> version >> nfield >> efield >> cfield) || magic != "MECCAT") {
    throw fail("malformed header '" + header + "'");
  }
  if (version != kCatalogVersion) throw fail("unsupported catalog version " + std::to_string(version));
  auto field = [&](const std::string& f, const std::string& key) -> long long {
    if (f.rfind(key + "=", 0) != 0) throw fail("expected '" + key + "=' in header");
    try {
      std::size_t used = 0;
      const long long v = std::stoll(f.substr(key.size() + 1), &used);
      if (used != f.size() - key.size() - 1 || v < 0) throw std::invalid_argument(f);
      return v;
    } catch (const std::logic_error&) {
      throw fail("bad header field '" + f + "'");
    }
  };

  Catalog c;
  const long long n = field(nfield, "n");
  if (n < 1 || n > kMaxVertices) throw fail("vertex count out of range");
  c.n = static_cast<int>(n);
  const VertexCount vc(c.n);
  const long long e = field(efield, "e");
  if (e > vc.pairs()) throw fail("edge count out of range");
  c.edge_count = static_cast<int>(e);
  const long long count = field(cfield, "count");

  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string hex;
    std::uint64_t labels = 0;
    std::string extra;
    if (!(ls >> hex >> labels) || (ls >> extra)) throw fail("malformed record '" + line + "'");
    GraphCode code;
    try {
      code = from_hex(hex, vc);
    } catch (const std::invalid_argument& ex) {
      throw fail(ex.what());
    }
    if (code.edge_count() != c.edge_count) throw fail("record " + hex + " has the wrong edge count");
    if (!c.records.empty() && !(code.bits() < c.records.back().code.bits())) {
      throw fail("codes are not strictly descending at " + hex);
    }
    if (labels == 0 || factorial(c.n) % labels != 0) throw fail("impossible labelling count at " + hex);
    if (check_canonical && !is_canonical(UndirectedGraph(code))) throw fail("non-canonical code " + hex);
    c.records.push_back({code, labels});
  }
  if (static_cast<long long>(c.records.size()) != count) {
    throw fail("header announces " + std::to_string(count) + " records, found " +
               std::to_string(c.records.size()));
  }
  return c;
}

inline std::filesystem::path catalog_path(const std::filesystem::path& root, int n, int e) {
  return root / ("n" + std::to_string(n)) / ("e" + std::to_string(e) + ".cat");
}

/// Writes every layer to <root>/n<N>/e<E>.cat. Files are written to a
/// temporary name and renamed, so a failure never leaves a partial catalog.
inline void write_catalog_files(const std::filesystem::path& root, const std::vector<GenerationLayer>& layers) {
  for (const auto& layer : layers) {
    const auto path = catalog_path(root, layer.n.value(), layer.edge_count);
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw CatalogError(path.parent_path().string(), ec.message());
    {
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      if (os) write_catalog(os, make_catalog(layer));
      os.flush();
      if (!os) {
        std::filesystem::remove(tmp, ec);
        throw CatalogError(path.string(), "write failed");
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw CatalogError(path.string(), "rename failed");
    }
  }
}

inline Catalog read_catalog_file(const std::filesystem::path& path, bool check_canonical = true) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CatalogError(path.string(), "cannot open catalog");
  return read_catalog(is, path.string(), check_canonical);
}

/// Skeletons for edge counts [min_edges, max_edges] read from catalog files.
inline std::vector<SkeletonEntry> load_skeletons(const std::filesystem::path& root, VertexCount n, int min_edges,
                                                 int max_edges) {
  std::vector<SkeletonEntry> out;
  for (int e = min_edges; e <= max_edges; ++e) {
    const auto path = catalog_path(root, n.value(), e);
    const Catalog c = read_catalog_file(path);
    if (c.n != n.value() || c.edge_count != e) throw CatalogError(path.string(), "header does not match file name");
    for (const auto& r : c.records) out.push_back({UndirectedGraph(r.code), r.labellings});
  }
  return out;
}

}  // namespace mec
