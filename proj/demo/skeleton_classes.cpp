// Lists the Markov equivalence classes of one skeleton.
//
//   skeleton_classes <n> <u-v> [<u-v> ...]     (0-based vertices)
//   skeleton_classes 4 0-1 1-2 2-3             path on four vertices

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mec/automorphisms.hpp"
#include "mec/markov.hpp"
#include "mec/orderly.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <n> <u-v>...\n", argv[0]);
    return 2;
  }
  try {
    const mec::VertexCount n(std::atoi(argv[1]));
    std::vector<std::pair<int, int>> edges;
    for (int k = 2; k < argc; ++k) {
      const std::string arg = argv[k];
      const auto dash = arg.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("edge must look like u-v: " + arg);
      edges.emplace_back(std::stoi(arg.substr(0, dash)), std::stoi(arg.substr(dash + 1)));
    }
    const mec::UndirectedGraph g(mec::encode(edges, n));
    const auto canon = mec::canonicalize(g);
    const auto vconfigs = mec::find_v_configurations(g);
    const auto table = mec::classify_skeleton(g);

    std::printf("code %s  canonical %s  labellings %llu\n", mec::to_hex(g.code()).c_str(),
                mec::to_hex(canon.graph.code()).c_str(),
                static_cast<unsigned long long>(mec::labelling_count(canon).count));
    std::printf("v-configurations:");
    for (const auto& v : vconfigs) std::printf(" %d-%d-%d", v.a, v.b, v.c);
    std::printf("\nacyclic orientations %llu, classes %llu\n",
                static_cast<unsigned long long>(table.total_orientations),
                static_cast<unsigned long long>(table.class_count()));
    for (const auto& [code, size] : table.classes) {
      std::printf("  immoralities {");
      bool first = true;
      for (std::size_t i = 0; i < vconfigs.size(); ++i) {
        if (!code.test(static_cast<int>(i))) continue;
        std::printf("%s%d->%d<-%d", first ? "" : ", ", vconfigs[i].a, vconfigs[i].b, vconfigs[i].c);
        first = false;
      }
      std::printf("}  size %llu\n", static_cast<unsigned long long>(size));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
