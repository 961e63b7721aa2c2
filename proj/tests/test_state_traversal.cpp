#include <doctest.h>

#include <json.hpp>
#include <numeric>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "tight/state_traversal.hpp"

using tight::BypassKind;
using tight::BypassSide;
using tight::DiskDiagram;
using tight::SolidTorusProblem;

namespace {

int wrap(int x, int m) { return ((x % m) + m) % m; }

// Components of the curve system on 4p nodes: + copy chords, - copy chords,
// and the annulus strands. The annulus advances 2q positions and the two
// corner roundings together step back by one.
int components_by_union_find(int p, int q, const std::vector<int>& plus, const std::vector<int>& minus) {
  const int m = 2 * p;
  std::vector<int> parent(static_cast<std::size_t>(2 * m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int i = 0; i < m; ++i) {
    unite(i, plus[static_cast<std::size_t>(i)]);
    unite(m + i, m + minus[static_cast<std::size_t>(i)]);
    unite(i, m + wrap(i + 2 * q - 1, m));
  }
  std::set<int> roots;
  for (int x = 0; x < 2 * m; ++x) roots.insert(find(x));
  return static_cast<int>(roots.size());
}

std::vector<int> vec(const DiskDiagram& d) { return {d.match().begin(), d.match().end()}; }

std::vector<std::pair<int, int>> coprime_pairs(int p_max) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= p_max; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

std::int64_t formula_by_ceiling(int p, int q) {
  if (p == 1) return 1;
  auto r = oracle::cf_by_ceiling(p, q);
  std::int64_t v = -r.back();
  for (std::size_t k = 0; k + 1 < r.size(); ++k) v *= -(r[k] + 1);
  return v;
}

}  // namespace

TEST_CASE("problem validation") {
  CHECK_NOTHROW((SolidTorusProblem{1, 1}.validate()));
  CHECK_NOTHROW((SolidTorusProblem{5, 3}.validate()));
  CHECK_THROWS_AS((SolidTorusProblem{0, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SolidTorusProblem{4, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SolidTorusProblem{3, 4}.validate()), std::invalid_argument);
  CHECK(SolidTorusProblem{5, 2}.points() == 10);
}

TEST_CASE("sphere assembly agrees with a union-find count") {
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      SolidTorusProblem prob{p, q};
      auto all = tight::enumerate_disk_diagrams(p);
      for (const auto& x : all) {
        for (const auto& y : all) {
          auto s = tight::assemble_sphere(prob, x, y);
          REQUIRE(s.component_count == components_by_union_find(p, q, vec(x), vec(y)));
        }
      }
    }
  }
  CHECK_THROWS_AS(tight::assemble_sphere({2, 1}, DiskDiagram({1, 0})), std::invalid_argument);
}

TEST_CASE("base cases") {
  SolidTorusProblem one{1, 1};
  auto s = tight::assemble_sphere(one, DiskDiagram({1, 0}));
  CHECK(s.component_count == 1);
  CHECK(tight::is_potentially_allowable(one, DiskDiagram({1, 0})));
  auto g1 = tight::build_state_graph(one);
  CHECK(g1.vertices.size() == 1);
  CHECK(g1.edges.empty());
  CHECK(g1.tight_count == 1);

  SolidTorusProblem two{2, 1};
  CHECK(tight::is_potentially_allowable(two, DiskDiagram({1, 0, 3, 2})));
  CHECK(tight::is_potentially_allowable(two, DiskDiagram({3, 2, 1, 0})));
  auto g2 = tight::build_state_graph(two);
  CHECK(g2.vertices.size() == 2);
  CHECK(g2.edges.empty());
  CHECK(g2.component == std::vector<int>{0, 1});
  CHECK(g2.tight_count == 2);
}

TEST_CASE("transition criterion") {
  SolidTorusProblem prob{3, 1};
  for (const auto& d : tight::enumerate_disk_diagrams(3)) {
    for (int i = 0; i < 6; ++i) {
      for (auto side : {BypassSide::front, BypassSide::back}) {
        auto check = tight::evaluate_transition(prob, d, i, side);
        REQUIRE(check.before == tight::assemble_sphere(prob, d).component_count);
        auto kind = tight::disk_bypass_move(d, i, side).kind;
        REQUIRE(check.kind == kind);
        if (kind == BypassKind::trivial) REQUIRE(check.exists);
        if (kind == BypassKind::disallowed) REQUIRE_FALSE(check.exists);
        REQUIRE(check.exists == tight::transition_exists(prob, d, i, side));
      }
    }
  }
  CHECK_THROWS_AS(tight::transition_exists(prob, DiskDiagram({1, 0, 3, 2}), 0, BypassSide::front),
                  std::invalid_argument);
}

TEST_CASE("component count is invariant under the symmetries of the gluing") {
  for (int p = 2; p <= 5; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      SolidTorusProblem prob{p, q};
      const int m = 2 * p;
      auto all = tight::enumerate_disk_diagrams(p);
      for (const auto& x : all) {
        for (const auto& y : all) {
          const int c = tight::sphere_components(prob, x.match(), y.match());
          for (int k = 0; k < m; ++k) {
            auto rx = tight::rotate(x, k), ry = tight::rotate(y, k);
            REQUIRE(tight::sphere_components(prob, rx.match(), ry.match()) == c);
          }
          // i -> -i reverses the annulus, so the copies trade places.
          auto fx = tight::reflect(x), fy = tight::reflect(y);
          REQUIRE(tight::sphere_components(prob, fy.match(), fx.match()) == c);
        }
      }
    }
  }
}

TEST_CASE("serial reference and parallel kernel build identical graphs") {
  for (auto [p, q] : coprime_pairs(9)) {
    SolidTorusProblem prob{p, q};
    auto serial = tight::build_state_graph_serial(prob);
    auto parallel = tight::build_state_graph_parallel(prob);
    INFO("p = " << p << ", q = " << q);
    REQUIRE(serial == parallel);
  }
}

TEST_CASE("graph invariants") {
  for (auto [p, q] : coprime_pairs(8)) {
    SolidTorusProblem prob{p, q};
    auto g = tight::build_state_graph(prob);
    REQUIRE(g.vertices.size() == tight::catalan(p));
    REQUIRE(std::is_sorted(g.vertices.begin(), g.vertices.end()));
    std::set<std::pair<int, int>> keys;
    for (const auto& e : g.edges) {
      REQUIRE(e.a != e.b);
      REQUIRE(keys.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second);
      auto moved = tight::disk_bypass_move(g.vertices[static_cast<std::size_t>(e.a)], e.triple, e.side);
      REQUIRE(moved.diagram == g.vertices[static_cast<std::size_t>(e.b)]);
      REQUIRE(g.allowable[static_cast<std::size_t>(e.a)]);
      REQUIRE(g.component[static_cast<std::size_t>(e.a)] == g.component[static_cast<std::size_t>(e.b)]);
    }
    REQUIRE(std::is_sorted(keys.begin(), keys.end()));
    auto allowable = std::count(g.allowable.begin(), g.allowable.end(), true);
    REQUIRE(allowable >= g.tight_count);
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      REQUIRE(g.allowable[k] == tight::is_potentially_allowable(prob, g.vertices[k]));
      REQUIRE(g.component[k] <= static_cast<int>(k));
    }
  }
}

TEST_CASE("traversal counts agree with the closed formula") {
  CHECK(tight::tight_count_traversal({1, 1}) == 1);
  CHECK(tight::tight_count_traversal({2, 1}) == 2);
  CHECK(tight::tight_count_traversal({3, 1}) == 3);
  for (auto [p, q] : coprime_pairs(9)) {
    INFO("p = " << p << ", q = " << q);
    REQUIRE(tight::tight_count_traversal({p, q}) == formula_by_ceiling(p, q));
  }
}

TEST_CASE("graph export") {
  auto g1 = tight::build_state_graph({1, 1});
  auto dot = tight::export_graph(g1, tight::GraphFormat::dot);
  CHECK(dot.rfind("graph solid_torus_1_1 {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '[') == 1);

  auto g2 = tight::build_state_graph({2, 1});
  auto doc = nlohmann::json::parse(tight::export_graph(g2, tight::GraphFormat::json));
  CHECK(doc["schema_version"] == tight::kGraphSchemaVersion);
  CHECK(doc["p"] == 2);
  CHECK(doc["q"] == 1);
  CHECK(doc["vertices"].size() == 2);
  CHECK(doc["vertices"][0]["match"] == std::vector<int>{1, 0, 3, 2});
  CHECK(doc["vertices"][1]["allowable"] == true);
  CHECK(doc["edges"].empty());
  CHECK(doc["tight_count"] == 2);

  auto g5 = tight::build_state_graph({5, 2});
  auto j5 = nlohmann::json::parse(tight::export_graph(g5, tight::GraphFormat::json));
  REQUIRE(j5["edges"].size() == g5.edges.size());
  for (std::size_t k = 0; k < g5.edges.size(); ++k) {
    CHECK(j5["edges"][k]["a"] == g5.edges[k].a);
    CHECK(j5["edges"][k]["side"] == std::string(tight::to_string(g5.edges[k].side)));
  }
  CHECK(tight::export_graph(g5, tight::GraphFormat::json) == tight::export_graph(g5, tight::GraphFormat::json));

  CHECK(tight::parse_graph_format("dot") == tight::GraphFormat::dot);
  CHECK(tight::parse_graph_format("json") == tight::GraphFormat::json);
  CHECK_THROWS_AS(tight::parse_graph_format("svg"), std::invalid_argument);
}
