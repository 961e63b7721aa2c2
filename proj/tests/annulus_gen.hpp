// Random valid annulus diagrams for the imbalance property.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "tight/dividing_sets.hpp"

namespace testgen {

// Places `crossing` arc ends on a circle of m points, separated by gaps of
// even size that are filled with nested boundary arcs. Returns the indices of
// the crossing ends in counterclockwise order.
inline std::vector<int> fill_circle(int side, int m, int crossing, std::mt19937_64& rng,
                                    std::vector<tight::AnnulusArc>& arcs) {
  const int pairs = (m - crossing) / 2;
  const int gaps = std::max(crossing, 1);
  std::vector<int> gap_pairs(static_cast<std::size_t>(gaps), 0);
  std::uniform_int_distribution<int> which(0, gaps - 1);
  for (int k = 0; k < pairs; ++k) ++gap_pairs[static_cast<std::size_t>(which(rng))];

  const int start = m > 0 ? std::uniform_int_distribution<int>(0, m - 1)(rng) : 0;
  std::vector<int> ends;
  int pos = 0;
  for (int g = 0; g < gaps; ++g) {
    if (crossing > 0) ends.push_back((start + pos++) % m);
    std::vector<std::pair<int, int>> local;
    oracle::random_linear_matching(0, gap_pairs[static_cast<std::size_t>(g)], rng, local);
    for (auto [u, v] : local) {
      arcs.push_back({{side, (start + pos + u) % m}, {side, (start + pos + v) % m}});
    }
    pos += 2 * gap_pairs[static_cast<std::size_t>(g)];
  }
  return ends;
}

inline tight::AnnulusDiagram random_annulus(std::mt19937_64& rng, int max_half = 8) {
  std::uniform_int_distribution<int> half(0, max_half);
  int m0 = 2 * half(rng), m1 = 2 * half(rng);
  if (m0 > m1) std::swap(m0, m1);
  if (m0 == m1) m1 += 2;
  // Crossing arcs: same parity as both counts, at most m0.
  std::uniform_int_distribution<int> cross_half(0, m0 / 2);
  int crossing = 2 * cross_half(rng);

  tight::AnnulusDiagram a;
  a.m0 = m0;
  a.m1 = m1;
  auto ends0 = fill_circle(0, m0, crossing, rng, a.arcs);
  auto ends1 = fill_circle(1, m1, crossing, rng, a.arcs);
  if (crossing > 0) {
    int twist = std::uniform_int_distribution<int>(0, crossing - 1)(rng);
    for (int k = 0; k < crossing; ++k) {
      a.arcs.push_back({{0, ends0[static_cast<std::size_t>(k)]},
                        {1, ends1[static_cast<std::size_t>((k + twist) % crossing)]}});
    }
  } else {
    a.closed_curves = std::uniform_int_distribution<int>(0, 2)(rng);
  }
  return a;
}

}  // namespace testgen
