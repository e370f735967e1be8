#pragma once

// Command-line front end: generate, census, verify, extrapolate.
// Exit codes: 0 success, 1 verification mismatch, 2 invalid usage or input.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mec/catalog.hpp"
#include "mec/census.hpp"
#include "mec/orderly.hpp"
#include "mec/report.hpp"
#include "mec/verify.hpp"

namespace mec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct EdgeRange {
  int min = 0;
  int max = -1;  // -1: up to m
};

/// "e" or "min..max".
inline EdgeRange parse_edge_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument("bad edge range '" + text + "'");
    return v;
  };
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int e = to_int(text);
      return {e, e};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad edge range '" + text + "'");
  }
}

struct RunConfig {
  int n = 0;
  std::string edges;
  int jobs = 1;
  std::string out;
  std::string format = "report";
  std::string graphs;
  std::uint64_t size_cap = 0;
  bool inject_fault = false;

  EdgeRange resolved_edges() const {
    const int m = VertexCount(n).pairs();
    EdgeRange r = edges.empty() ? EdgeRange{0, m} : parse_edge_range(edges);
    if (r.max < 0) r.max = m;
    if (r.min > r.max || r.max > m) {
      throw std::invalid_argument("edge range must lie within [0, " + std::to_string(m) + "]");
    }
    return r;
  }
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const VertexCount vc(cfg.n);
  const EdgeRange range = cfg.resolved_edges();
  const auto layers = generate_all(vc);
  std::vector<GenerationLayer> selected;
  std::size_t records = 0;
  for (const auto& layer : layers) {
    if (layer.edge_count < range.min || layer.edge_count > range.max) continue;
    selected.push_back(layer);
    records += layer.graphs.size();
  }
  const std::filesystem::path root = cfg.out.empty() ? "graphs" : cfg.out;
  write_catalog_files(root, selected);
  out << "wrote " << selected.size() << " catalog files, " << records << " graphs, under "
      << (root / ("n" + std::to_string(cfg.n))).string() << '\n';
  return kExitOk;
}

inline int cmd_census(const RunConfig& cfg, std::ostream& out) {
  const VertexCount vc(cfg.n);
  const EdgeRange range = cfg.resolved_edges();
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (cfg.format != "report" && cfg.format != "csv") throw UsageError("--format must be 'report' or 'csv'");

  std::vector<SkeletonEntry> skeletons = cfg.graphs.empty()
                                             ? skeleton_source(generate_all(vc), range.min, range.max)
                                             : load_skeletons(cfg.graphs, vc, range.min, range.max);
  const CensusReport report = census_parallel(vc, skeletons, cfg.jobs);
  const ReportOptions ropt{range.min, range.max, cfg.size_cap};

  auto open = [](const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw CatalogError(path, "cannot open for writing");
    return os;
  };

  if (cfg.out.empty()) {
    if (cfg.format == "csv") {
      write_edges_csv(out, report);
    } else {
      write_report(out, report, ropt);
    }
    return kExitOk;
  }
  {
    auto os = open(cfg.out);
    write_report(os, report, ropt);
    if (!os.flush()) throw CatalogError(cfg.out, "write failed");
  }
  if (cfg.format == "csv") {
    auto edges = open(cfg.out + ".edges.csv");
    write_edges_csv(edges, report);
    auto sizes = open(cfg.out + ".sizes.csv");
    write_sizes_csv(sizes, report);
    auto joint = open(cfg.out + ".joint.csv");
    write_joint_csv(joint, report);
  }
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const VertexCount vc(cfg.n);
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
  const auto results = verify(vc, {cfg.jobs, cfg.inject_fault});
  bool all = true;
  for (const auto& r : results) {
    if (r.passed) {
      out << "PASS  " << r.name << '\n';
    } else {
      all = false;
      out << "FAIL  " << r.name << "\n        expected: " << r.expected << "\n        actual:   " << r.actual << '\n';
    }
  }
  out << (all ? "verify: all checks passed" : "verify: MISMATCH") << " (n=" << cfg.n << ", " << results.size()
      << " checks)\n";
  return all ? kExitOk : kExitMismatch;
}

struct ExtrapolateConfig {
  double r_prev = 0;
  double r_cur = 0;
  int n_cur = 0;
  int target = 0;
  std::string s_index = "next";
};

inline int cmd_extrapolate(const ExtrapolateConfig& cfg, std::ostream& out) {
  if (cfg.s_index != "next" && cfg.s_index != "current") throw UsageError("--s-index must be 'next' or 'current'");
  const SIndex conv = cfg.s_index == "next" ? SIndex::kNext : SIndex::kCurrent;
  const double value = extrapolate_ratio(cfg.r_prev, cfg.r_cur, cfg.n_cur, cfg.target, conv);
  const double limit = extrapolate_ratio(cfg.r_prev, cfg.r_cur, cfg.n_cur, std::max(cfg.target, cfg.n_cur + 1000), conv);
  char buf[128];
  std::snprintf(buf, sizeof buf, "r_%d=%.10f\n", cfg.target, value);
  out << buf;
  std::snprintf(buf, sizeof buf, "asymptote=%.5f\nasymptote_3sig=%.3g\n", limit, limit);
  out << buf;
  return kExitOk;
}

/// Runs the CLI; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Markov equivalence class census for acyclic digraphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  ExtrapolateConfig ext;

  auto* gen = app.add_subcommand("generate", "write canonical graph catalogs, one file per edge count");
  gen->add_option("--n", cfg.n, "number of vertices")->required()->check(CLI::Range(1, kMaxVertices));
  gen->add_option("--edges", cfg.edges, "edge count or range min..max");
  gen->add_option("--out", cfg.out, "catalog root directory (default: graphs)");

  auto* cen = app.add_subcommand("census", "count equivalence classes for n vertices");
  cen->add_option("--n", cfg.n, "number of vertices")->required()->check(CLI::Range(1, kMaxVertices));
  cen->add_option("--edges", cfg.edges, "edge count or range min..max");
  cen->add_option("--jobs", cfg.jobs, "worker threads");
  cen->add_option("--out", cfg.out, "report path (default: stdout)");
  cen->add_option("--format", cfg.format, "report | csv");
  cen->add_option("--graphs", cfg.graphs, "read skeletons from this catalog root instead of generating");
  cen->add_option("--size-cap", cfg.size_cap, "list class sizes up to K individually");

  auto* ver = app.add_subcommand("verify", "check the pipeline against oracles and published values");
  ver->add_option("--n", cfg.n, "number of vertices")->required()->check(CLI::Range(1, kMaxVertices));
  ver->add_option("--jobs", cfg.jobs, "worker threads");
  ver->add_flag("--inject-fault", cfg.inject_fault, "perturb labelling counts by one (self-test)")->group("");

  auto* exq = app.add_subcommand("extrapolate", "extend the classes/ADGs ratio sequence");
  exq->add_option("--r-prev", ext.r_prev, "ratio at n_cur - 1")->required();
  exq->add_option("--r-cur", ext.r_cur, "ratio at n_cur")->required();
  exq->add_option("--n-cur", ext.n_cur, "index of r_cur")->required();
  exq->add_option("--target", ext.target, "index to extrapolate to")->required();
  exq->add_option("--s-index", ext.s_index, "s used for the step to n+1: next (s_{n+1}) | current (s_n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(cfg, out);
    if (*cen) return cmd_census(cfg, out);
    if (*ver) return cmd_verify(cfg, out);
    if (*exq) return cmd_extrapolate(ext, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<const char*> argv{"mec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mec::cli
