#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "tight/classify.hpp"
#include "tight/legendrian.hpp"

using tight::Sign;
using tight::Slope;

namespace {

// Block sizes read off the expansion: the innermost block is |r_k| - 1,
// the others |r_i| - 2, empty blocks dropped, innermost first.
std::vector<std::int64_t> blocks_by_ceiling(std::int64_t p, std::int64_t q) {
  auto r = oracle::cf_by_ceiling(p, q);
  std::vector<std::int64_t> out{-r.back() - 1};
  for (std::size_t k = r.size() - 1; k-- > 0;) {
    if (-r[k] - 2 > 0) out.push_back(-r[k] - 2);
  }
  return out;
}

}  // namespace

TEST_CASE("block decomposition") {
  auto b = tight::block_decompose(14, 5);
  CHECK(b.block_edge_counts == std::vector<std::int64_t>{4, 1});
  CHECK(b.path.size() == 6);
  CHECK(tight::block_decompose(2, 1).block_edge_counts == std::vector<std::int64_t>{1});
  CHECK(tight::block_decompose(5, 2).block_edge_counts == std::vector<std::int64_t>{1, 1});
  CHECK(tight::block_decompose(1, 1).block_edge_counts.empty());
  CHECK_THROWS_AS(tight::block_decompose(6, 3), std::invalid_argument);

  for (std::int64_t p = 2; p <= 50; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto blocks = tight::block_decompose(p, q);
      REQUIRE(blocks.block_edge_counts == blocks_by_ceiling(p, q));
      std::int64_t total = std::accumulate(blocks.block_edge_counts.begin(), blocks.block_edge_counts.end(),
                                           std::int64_t{0});
      REQUIRE(total + 1 == static_cast<std::int64_t>(blocks.path.size()));
      std::int64_t product = 1;
      for (auto e : blocks.block_edge_counts) product *= e + 1;
      REQUIRE(product == tight::solid_torus_count_formula(p, q));
    }
  }
}

TEST_CASE("count formulas") {
  CHECK(tight::solid_torus_count_formula(14, 5) == 10);
  CHECK(tight::solid_torus_count_formula(2, 1) == 2);
  CHECK(tight::solid_torus_count_formula(3, 1) == 3);
  CHECK(tight::solid_torus_count_formula(1, 1) == 1);
  CHECK(tight::lens_count_formula(14, 5) == 8);
  CHECK(tight::lens_count_formula(2, 1) == 1);
  for (std::int64_t p = 2; p <= 30; ++p) CHECK(tight::lens_count_formula(p, 1) == p - 1);
  CHECK_THROWS_AS(tight::lens_count_formula(4, 2), std::invalid_argument);

  for (std::int64_t p = 2; p <= 20; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      REQUIRE(static_cast<std::int64_t>(tight::surgery_rotation_tuples(p, q).size()) ==
              tight::lens_count_formula(p, q));
    }
  }
}

TEST_CASE("tight decorations") {
  CHECK(tight::enumerate_tight_decorations(14, 5).size() == 10);
  auto two = tight::enumerate_tight_decorations(2, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].plus_counts == std::vector<std::int64_t>{0});
  CHECK(two[1].plus_counts == std::vector<std::int64_t>{1});
  CHECK(tight::enumerate_tight_decorations(5, 2).size() == 4);
  CHECK(tight::enumerate_tight_decorations(1, 1).size() == 1);

  for (std::int64_t p = 2; p <= 30; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto decos = tight::enumerate_tight_decorations(p, q);
      REQUIRE(static_cast<std::int64_t>(decos.size()) == tight::solid_torus_count_formula(p, q));
      REQUIRE(std::is_sorted(decos.begin(), decos.end()));
      REQUIRE(std::adjacent_find(decos.begin(), decos.end()) == decos.end());
    }
  }
}

TEST_CASE("half-Euler classes") {
  std::vector<Slope> edge{Slope::infinity(), Slope::integer(0)};
  std::vector<Sign> plus{Sign::plus}, minus{Sign::minus};
  CHECK(tight::half_euler(edge, plus).vector == std::array<std::int64_t, 2>{1, -1});
  CHECK(tight::half_euler(edge, minus).vector == std::array<std::int64_t, 2>{-1, 1});
  CHECK(tight::shortest_vector(Slope::parse("-14/5")) == std::array<std::int64_t, 2>{5, -14});
  CHECK_THROWS_AS(tight::half_euler(edge, std::vector<Sign>{}), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (std::int64_t p = 2; p <= 25; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto path = tight::peel_path(p, q);
      std::vector<Sign> signs;
      for (std::size_t k = 0; k + 1 < path.size(); ++k) signs.push_back(rng() % 2 ? Sign::plus : Sign::minus);
      auto e = tight::half_euler(path, signs);

      std::vector<Sign> flipped;
      for (auto s : signs) flipped.push_back(s == Sign::plus ? Sign::minus : Sign::plus);
      auto f = tight::half_euler(path, flipped);
      REQUIRE(f.vector[0] == -e.vector[0]);
      REQUIRE(f.vector[1] == -e.vector[1]);

      // Additivity under splitting the path at an interior slope.
      std::size_t cut = path.size() / 2;
      if (cut >= 1 && cut + 1 < path.size()) {
        std::span<const Slope> all(path);
        std::span<const Sign> sg(signs);
        auto left = tight::half_euler(all.first(cut + 1), sg.first(cut));
        auto right = tight::half_euler(all.subspan(cut), sg.subspan(cut));
        REQUIRE(left.vector[0] + right.vector[0] == e.vector[0]);
        REQUIRE(left.vector[1] + right.vector[1] == e.vector[1]);
      }
    }
  }
}

TEST_CASE("decorations within a block have distinct classes") {
  for (std::int64_t p = 2; p <= 30; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto blocks = tight::block_decompose(p, q);
      std::map<std::vector<std::int64_t>, std::set<std::array<std::int64_t, 2>>> by_rest;
      std::map<std::vector<std::int64_t>, std::size_t> sizes;
      for (const auto& d : tight::enumerate_tight_decorations(p, q)) {
        auto cls = tight::decoration_half_euler(blocks, d).vector;
        for (std::size_t b = 0; b < d.plus_counts.size(); ++b) {
          auto rest = d.plus_counts;
          rest[b] = -1 - static_cast<std::int64_t>(b);  // marks which block varies
          by_rest[rest].insert(cls);
          ++sizes[rest];
        }
      }
      for (const auto& [rest, classes] : by_rest) REQUIRE(classes.size() == sizes[rest]);
    }
  }
  tight::TightDecoration bad{{5}};
  CHECK_THROWS_AS(tight::decoration_half_euler(tight::block_decompose(2, 1), bad), std::invalid_argument);
  CHECK_THROWS_AS(tight::decoration_half_euler(tight::block_decompose(14, 5), bad), std::invalid_argument);
}

TEST_CASE("lens gluing matrix") {
  auto a = tight::lens_gluing_matrix(14, 5);
  CHECK(a.entries[0] == std::array<std::int64_t, 2>{-5, 4});
  CHECK(a.entries[1] == std::array<std::int64_t, 2>{14, -11});
  CHECK(a.det() == -1);
  auto b = tight::lens_gluing_matrix(2, 1);
  CHECK(b.entries[0] == std::array<std::int64_t, 2>{-1, 1});
  CHECK(b.entries[1] == std::array<std::int64_t, 2>{2, -1});
  for (std::int64_t p = 2; p <= 60; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto m = tight::lens_gluing_matrix(p, q);
      REQUIRE(m.det() == -1);
      REQUIRE(m.entries[0][0] == -q);
      REQUIRE(m.entries[1][0] == p);
      REQUIRE(m.entries[0][1] > 0);
      REQUIRE(m.entries[0][1] < p);
      REQUIRE(m.entries[1][1] <= 0);
    }
  }
}
