#include "tight/classify.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tight {

namespace {

std::size_t cf_length(const Slope& s) {
  // Path slopes are -a/b <= -1; slope -1 terminates the path and has length 0 here.
  if (s == Slope::integer(-1)) return 0;
  return cf_expand(-s.num(), s.den()).size();
}

}  // namespace

BlockDecomposition block_decompose(std::int64_t p, std::int64_t q) {
  BlockDecomposition out;
  out.path = peel_path(p, q);
  std::size_t current = 0;
  for (std::size_t j = 0; j + 1 < out.path.size(); ++j) {
    std::size_t len = cf_length(out.path[j]);
    if (out.block_edge_counts.empty() || len != current) {
      out.block_edge_counts.push_back(0);
      current = len;
    }
    ++out.block_edge_counts.back();
  }
  return out;
}

std::int64_t solid_torus_count_formula(std::int64_t p, std::int64_t q) {
  if (p == 1 && q == 1) return 1;
  auto cf = cf_expand(p, q);
  std::int64_t product = 1;
  for (std::size_t i = 0; i + 1 < cf.size(); ++i) product *= cf[i] + 1;
  product *= cf[cf.size() - 1];
  return std::llabs(product);
}

std::int64_t lens_count_formula(std::int64_t p, std::int64_t q) {
  auto cf = cf_expand(p, q);
  std::int64_t product = 1;
  for (auto r : cf.coeffs()) product *= r + 1;
  return std::llabs(product);
}

std::vector<TightDecoration> enumerate_tight_decorations(std::int64_t p, std::int64_t q) {
  auto blocks = block_decompose(p, q);
  const auto& e = blocks.block_edge_counts;
  std::vector<TightDecoration> out;
  std::vector<std::int64_t> m(e.size(), 0);
  while (true) {
    out.push_back({m});
    std::size_t pos = m.size();
    while (true) {
      if (pos == 0) return out;
      --pos;
      if (++m[pos] <= e[pos]) break;
      m[pos] = 0;
    }
  }
}

std::array<std::int64_t, 2> shortest_vector(const Slope& s) {
  if (s.is_infinite()) return {0, 1};
  return {s.den(), s.num()};
}

HalfEulerClass half_euler(std::span<const Slope> path, std::span<const Sign> signs) {
  if (path.empty() || signs.size() + 1 != path.size()) {
    throw std::invalid_argument("half_euler needs exactly one sign per path edge");
  }
  HalfEulerClass out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    auto from = shortest_vector(path[i]);
    auto to = shortest_vector(path[i + 1]);
    std::int64_t sgn = signs[i] == Sign::plus ? 1 : -1;
    out.vector[0] += sgn * (to[0] - from[0]);
    out.vector[1] += sgn * (to[1] - from[1]);
  }
  return out;
}

HalfEulerClass decoration_half_euler(const BlockDecomposition& blocks, const TightDecoration& deco) {
  if (deco.plus_counts.size() != blocks.block_edge_counts.size()) {
    throw std::invalid_argument("decoration does not match the block decomposition");
  }
  std::vector<Sign> signs;
  for (std::size_t b = 0; b < deco.plus_counts.size(); ++b) {
    std::int64_t e = blocks.block_edge_counts[b];
    std::int64_t m = deco.plus_counts[b];
    if (m < 0 || m > e) throw std::invalid_argument("plus count outside [0, block size]");
    for (std::int64_t j = 0; j < e; ++j) signs.push_back(j < m ? Sign::plus : Sign::minus);
  }
  return half_euler(blocks.path, signs);
}

GluingMatrix lens_gluing_matrix(std::int64_t p, std::int64_t q) {
  cf_expand(p, q);  // same preconditions: p > q >= 1, coprime
  std::int64_t q_prime = 1;
  while ((p * q_prime) % q != 1 % q) ++q_prime;
  std::int64_t p_prime = (p * q_prime - 1) / q;
  GluingMatrix a;
  a.entries = {{{-q, q_prime}, {p, -p_prime}}};
  return a;
}

}  // namespace tight
