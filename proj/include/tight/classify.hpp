#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tight/farey.hpp"
#include "tight/legendrian.hpp"

namespace tight {

/// Peeling path split into continued fraction blocks: maximal runs of edges
/// whose starting slopes have continued fractions of the same length.
/// Blocks are listed in peeling order (innermost coefficient first).
struct BlockDecomposition {
  std::vector<Slope> path;
  std::vector<std::int64_t> block_edge_counts;

  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

BlockDecomposition block_decompose(std::int64_t p, std::int64_t q);

/// |(r_0+1)...(r_{k-1}+1) r_k| for the solid torus with boundary slope -p/q
/// and two dividing curves; (1, 1) gives 1.
std::int64_t solid_torus_count_formula(std::int64_t p, std::int64_t q);

/// |(r_0+1)(r_1+1)...(r_k+1)| for L(p, q); requires p > q >= 1 coprime.
std::int64_t lens_count_formula(std::int64_t p, std::int64_t q);

/// Number of positive basic slices in each block. Slices inside a block can
/// be shuffled, so a count per block identifies the structure.
struct TightDecoration {
  std::vector<std::int64_t> plus_counts;
  friend bool operator==(const TightDecoration&, const TightDecoration&) = default;
  friend auto operator<=>(const TightDecoration&, const TightDecoration&) = default;
};

/// Every (m_1, ..., m_B) with 0 <= m_b <= e_b, lexicographic.
std::vector<TightDecoration> enumerate_tight_decorations(std::int64_t p, std::int64_t q);

/// Poincare dual of the relative half-Euler class, as an integer vector.
struct HalfEulerClass {
  std::array<std::int64_t, 2> vector{0, 0};
  friend bool operator==(const HalfEulerClass&, const HalfEulerClass&) = default;
};

/// Shortest integer vector of a slope: (b, a) for a/b with b > 0, and (0, 1)
/// for infinity.
std::array<std::int64_t, 2> shortest_vector(const Slope& s);

/// Sum over the path of sign_i * (v(path[i+1]) - v(path[i])).
/// Throws std::invalid_argument unless signs.size() + 1 == path.size().
HalfEulerClass half_euler(std::span<const Slope> path, std::span<const Sign> signs);

/// Half-Euler class of a decoration: within block b the first m_b slices
/// are positive and the rest negative (any shuffle gives the same sum).
HalfEulerClass decoration_half_euler(const BlockDecomposition& blocks, const TightDecoration& deco);

/// A = (-q, q'; p, -p') with p q' - q p' = 1 and 0 < q' <= q, so det A = -1.
struct GluingMatrix {
  std::array<std::array<std::int64_t, 2>, 2> entries{};
  std::int64_t det() const {
    return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
  }
  friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

GluingMatrix lens_gluing_matrix(std::int64_t p, std::int64_t q);

}  // namespace tight
