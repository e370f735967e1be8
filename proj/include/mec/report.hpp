#pragma once

// Text serialisation of a CensusReport: a key=value document plus optional
// CSV tables. Output depends only on the report contents.

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mec/census.hpp"
#include "mec/graph.hpp"

namespace mec {

struct ReportOptions {
  int min_edges = 0;
  int max_edges = 0;
  /// Largest class size listed individually; 0 lists all of them.
  std::uint64_t size_cap = 0;
};

namespace detail {

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string join_codes(const std::vector<GraphCode>& codes) {
  std::string s;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) s += ',';
    s += to_hex(codes[i]);
  }
  return s;
}

}  // namespace detail

inline void write_report(std::ostream& os, const CensusReport& r, const ReportOptions& opt) {
  const std::uint64_t skeletons = [&] {
    std::uint64_t s = 0;
    for (auto k : r.skeletons_by_edges) s += k;
    return s;
  }();
  os << "# MECREPORT 1\n";
  os << "n=" << r.n.value() << '\n';
  os << "edges=" << opt.min_edges << ".." << opt.max_edges << '\n';
  os << "skeletons=" << skeletons << '\n';
  os << "total_adgs=" << r.total_adgs << '\n';
  os << "total_classes=" << r.total_classes << '\n';
  os << "ratio=" << detail::fixed(r.ratio(), 10) << '\n';
  os << "size1_fraction=" << detail::fixed(r.size_one_fraction(), 10) << '\n';
  os << "mean_class_size="
     << detail::fixed(r.total_classes ? static_cast<double>(r.total_adgs) / static_cast<double>(r.total_classes) : 0.0, 10)
     << '\n';
  os << "max_vconfigs=" << r.max_vconfigs << '\n';
  os << "max_vconfigs_codes=" << detail::join_codes(r.max_vconfig_codes) << '\n';
  os << "max_classes_per_skeleton=" << r.max_classes_per_skeleton << '\n';
  os << "max_classes_codes=" << detail::join_codes(r.max_classes_codes) << '\n';
  os << "skeletons_by_edges=" << detail::join(r.skeletons_by_edges) << '\n';
  os << "graphs_by_edges=" << detail::join(r.graphs_by_edges) << '\n';
  os << "adgs_by_edges=" << detail::join(r.adgs_by_edges) << '\n';
  os << "classes_by_edges=" << detail::join(r.classes_by_edges) << '\n';

  std::string hist;
  std::uint64_t above_cap = 0;
  for (const auto& [size, count] : r.size_histogram) {
    if (opt.size_cap != 0 && size > opt.size_cap) {
      above_cap += count;
      continue;
    }
    if (!hist.empty()) hist += ',';
    hist += std::to_string(size) + ':' + std::to_string(count);
  }
  os << "size_histogram=" << hist << '\n';
  if (opt.size_cap != 0) {
    os << "size_cap=" << opt.size_cap << '\n';
    os << "size_histogram_above_cap=" << above_cap << '\n';
  }

  int current = -1;
  std::string line;
  auto flush = [&] {
    if (current >= 0) os << "joint." << current << '=' << line << '\n';
  };
  for (const auto& [key, count] : r.joint) {
    const auto& [e, size] = key;
    if (opt.size_cap != 0 && size > opt.size_cap) continue;
    if (e != current) {
      flush();
      current = e;
      line.clear();
    } else {
      line += ',';
    }
    line += std::to_string(size) + ':' + std::to_string(count);
  }
  flush();
}

inline std::string format_report(const CensusReport& r, const ReportOptions& opt) {
  std::ostringstream os;
  write_report(os, r, opt);
  return os.str();
}

inline void write_edges_csv(std::ostream& os, const CensusReport& r) {
  os << "edges,skeletons,graphs,adgs,classes\n";
  for (std::size_t e = 0; e < r.classes_by_edges.size(); ++e) {
    os << e << ',' << r.skeletons_by_edges[e] << ',' << r.graphs_by_edges[e] << ',' << r.adgs_by_edges[e] << ','
       << r.classes_by_edges[e] << '\n';
  }
}

inline void write_sizes_csv(std::ostream& os, const CensusReport& r) {
  os << "size,classes\n";
  for (const auto& [size, count] : r.size_histogram) os << size << ',' << count << '\n';
}

inline void write_joint_csv(std::ostream& os, const CensusReport& r) {
  os << "edges,size,classes\n";
  for (const auto& [key, count] : r.joint) os << key.first << ',' << key.second << ',' << count << '\n';
}

}  // namespace mec
