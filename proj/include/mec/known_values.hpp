#pragma once

// Published census values for n = 1..10, used as golden data.

#include <array>
#include <cstdint>
#include <optional>

namespace mec {

struct KnownCensus {
  int n;
  std::uint64_t classes;
  double ratio;           // classes / ADGs, 5 decimals
  double size1_fraction;  // size-1 classes / classes, 5 decimals
  int max_vconfigs;
  std::uint64_t max_classes_per_skeleton;
};

inline constexpr std::array<KnownCensus, 10> kKnownCensus{{
    {1, 1ULL, 1.00000, 1.00000, 0, 1},
    {2, 2ULL, 0.66667, 0.50000, 0, 1},
    {3, 11ULL, 0.44000, 0.36364, 1, 2},
    {4, 185ULL, 0.34070, 0.31892, 4, 6},
    {5, 8782ULL, 0.29992, 0.29788, 9, 22},
    {6, 1067825ULL, 0.28238, 0.28667, 18, 104},
    {7, 312510571ULL, 0.27443, 0.28068, 30, 594},
    {8, 212133402500ULL, 0.27068, 0.27754, 48, 3978},
    {9, 326266056291213ULL, 0.26888, 0.27590, 70, 30768},
    {10, 1118902054495975141ULL, 0.26799, 0.27507, 100, 257694},
}};

inline std::optional<KnownCensus> known_census(int n) {
  if (n < 1 || n > static_cast<int>(kKnownCensus.size())) return std::nullopt;
  return kKnownCensus[static_cast<std::size_t>(n - 1)];
}

}  // namespace mec
