#include "tight/state_traversal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tight {

void SolidTorusProblem::validate() const {
  if (p < 1) throw std::invalid_argument("p must be positive");
  if (q < 1 || q > p) throw std::invalid_argument("q must satisfy 1 <= q <= p");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

int SolidTorusProblem::link_shift() const {
  const int n = points();
  return ((2 * q - 1) % n + n) % n;
}

int sphere_components(const SolidTorusProblem& prob, std::span<const int> plus,
                      std::span<const int> minus) {
  const int n = prob.points();
  if (static_cast<int>(plus.size()) != n || static_cast<int>(minus.size()) != n) {
    throw std::invalid_argument("diagram size does not match 2p");
  }
  const int shift = prob.link_shift();
  // Every curve alternates D+ chord, link, D- chord, link; walk from each
  // unvisited D+ chord and count the cycles.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int cur = start;
    do {
      int other = plus[static_cast<std::size_t>(cur)];
      seen[static_cast<std::size_t>(cur)] = 1;
      seen[static_cast<std::size_t>(other)] = 1;
      int on_minus = (other + shift) % n;
      int back = minus[static_cast<std::size_t>(on_minus)];
      cur = (back - shift + n) % n;
    } while (cur != start);
  }
  return cycles;
}

namespace {

void require_size(const SolidTorusProblem& prob, const DiskDiagram& d) {
  if (d.n() != prob.p) {
    throw std::invalid_argument("diagram has n = " + std::to_string(d.n()) + " but p = " +
                                std::to_string(prob.p));
  }
}

}  // namespace

SphereAssembly assemble_sphere(const SolidTorusProblem& prob, const DiskDiagram& d) {
  return assemble_sphere(prob, d, d);
}

SphereAssembly assemble_sphere(const SolidTorusProblem& prob, const DiskDiagram& plus,
                               const DiskDiagram& minus) {
  prob.validate();
  require_size(prob, plus);
  require_size(prob, minus);
  int count = sphere_components(prob, plus.match(), minus.match());
  return SphereAssembly{prob.p, prob.q, plus, minus, count};
}

bool is_potentially_allowable(const SolidTorusProblem& prob, const DiskDiagram& d) {
  return assemble_sphere(prob, d).component_count == 1;
}

TransitionCheck evaluate_transition(const SolidTorusProblem& prob, const DiskDiagram& d, int i,
                                    BypassSide side) {
  prob.validate();
  require_size(prob, d);
  auto outcome = disk_bypass_move(d, i, side);
  TransitionCheck check;
  check.kind = outcome.kind;
  check.before = sphere_components(prob, d.match(), d.match());
  switch (outcome.kind) {
    case BypassKind::trivial:
      check.after = check.before;
      check.exists = true;
      return check;
    case BypassKind::disallowed:
      check.exists = false;
      return check;
    case BypassKind::nontrivial:
      break;
  }
  if (check.before != 1) return check;
  const auto& moved = *outcome.diagram;
  check.after = side == BypassSide::front ? sphere_components(prob, moved.match(), d.match())
                                          : sphere_components(prob, d.match(), moved.match());
  check.exists = check.after <= check.before;
  return check;
}

bool transition_exists(const SolidTorusProblem& prob, const DiskDiagram& d, int i, BypassSide side) {
  return evaluate_transition(prob, d, i, side).exists;
}

// ---------------------------------------------------------------------------
// Serial reference: public API only, std::map lookup, breadth-first search.

StateGraph build_state_graph_serial(const SolidTorusProblem& prob) {
  prob.validate();
  StateGraph g;
  g.p = prob.p;
  g.q = prob.q;
  g.vertices = enumerate_disk_diagrams(prob.p);
  std::sort(g.vertices.begin(), g.vertices.end());

  std::map<DiskDiagram, int> index;
  for (int k = 0; k < static_cast<int>(g.vertices.size()); ++k) index.emplace(g.vertices[k], k);

  for (const auto& d : g.vertices) g.allowable.push_back(is_potentially_allowable(prob, d));

  // (min, max) -> edge; the first discovery wins the label.
  std::map<std::pair<int, int>, StateEdge> found;
  if (prob.p >= 2) {
    for (int k = 0; k < static_cast<int>(g.vertices.size()); ++k) {
      const auto& d = g.vertices[k];
      for (int i = 0; i < prob.points(); ++i) {
        for (auto side : {BypassSide::front, BypassSide::back}) {
          auto check = evaluate_transition(prob, d, i, side);
          if (!check.exists || check.kind != BypassKind::nontrivial) continue;
          int target = index.at(*disk_bypass_move(d, i, side).diagram);
          std::pair<int, int> key{std::min(k, target), std::max(k, target)};
          auto it = found.find(key);
          if (it == found.end()) {
            found.emplace(key, StateEdge{k, target, i, side, false});
          } else if (it->second.a != k) {
            it->second.bidirectional = true;
          }
        }
      }
    }
  }
  for (auto& [key, e] : found) g.edges.push_back(e);

  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  g.component.assign(g.vertices.size(), -1);
  for (int s = 0; s < static_cast<int>(g.vertices.size()); ++s) {
    if (g.component[static_cast<std::size_t>(s)] != -1) continue;
    std::deque<int> queue{s};
    g.component[static_cast<std::size_t>(s)] = s;
    bool all_allowable = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      all_allowable = all_allowable && g.allowable[static_cast<std::size_t>(v)];
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (g.component[static_cast<std::size_t>(w)] == -1) {
          g.component[static_cast<std::size_t>(w)] = s;
          queue.push_back(w);
        }
      }
    }
    if (all_allowable) ++g.tight_count;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Parallel kernel.

namespace {

struct Candidate {
  int target;
  int triple;
  BypassSide side;
};

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // Keeps the smaller index as root so roots are canonical.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[static_cast<std::size_t>(a)] = b;
  }
};

int locate(const std::vector<DiskDiagram>& sorted, std::span<const int> match) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), match,
                             [](const DiskDiagram& d, std::span<const int> m) {
                               return std::lexicographical_compare(d.match().begin(), d.match().end(),
                                                                   m.begin(), m.end());
                             });
  if (it == sorted.end() || !std::equal(it->match().begin(), it->match().end(), match.begin(), match.end())) {
    throw std::logic_error("bypass produced a diagram outside the enumeration");
  }
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

StateGraph build_state_graph_parallel(const SolidTorusProblem& prob) {
  prob.validate();
  StateGraph g;
  g.p = prob.p;
  g.q = prob.q;
  g.vertices = enumerate_disk_diagrams(prob.p);  // already lexicographic

  const int count = static_cast<int>(g.vertices.size());
  const int n = prob.points();
  std::vector<char> allowable(static_cast<std::size_t>(count), 0);
  std::vector<std::vector<Candidate>> found(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 64)
  for (int k = 0; k < count; ++k) {
    const auto& d = g.vertices[static_cast<std::size_t>(k)];
    const int before = sphere_components(prob, d.match(), d.match());
    allowable[static_cast<std::size_t>(k)] = before == 1;
    if (before != 1 || prob.p < 2) continue;
    auto& out = found[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i) {
      for (auto side : {BypassSide::front, BypassSide::back}) {
        auto outcome = disk_bypass_move(d, i, side);
        if (outcome.kind != BypassKind::nontrivial) continue;
        const auto& moved = *outcome.diagram;
        int after = side == BypassSide::front ? sphere_components(prob, moved.match(), d.match())
                                              : sphere_components(prob, d.match(), moved.match());
        if (after <= before) out.push_back({locate(g.vertices, moved.match()), i, side});
      }
    }
  }

  g.allowable.assign(allowable.begin(), allowable.end());

  std::vector<StateEdge> edges;
  std::map<std::pair<int, int>, std::size_t> slot;
  for (int k = 0; k < count; ++k) {
    for (const auto& c : found[static_cast<std::size_t>(k)]) {
      std::pair<int, int> key{std::min(k, c.target), std::max(k, c.target)};
      auto [it, inserted] = slot.emplace(key, edges.size());
      if (inserted) {
        edges.push_back({k, c.target, c.triple, c.side, false});
      } else if (edges[it->second].a != k) {
        edges[it->second].bidirectional = true;
      }
    }
  }
  for (const auto& [key, pos] : slot) g.edges.push_back(edges[pos]);

  DisjointSets sets(static_cast<std::size_t>(count));
  for (const auto& e : g.edges) sets.unite(e.a, e.b);
  g.component.resize(static_cast<std::size_t>(count));
  std::vector<char> clean(static_cast<std::size_t>(count), 1);
  for (int k = 0; k < count; ++k) {
    int root = sets.find(k);
    g.component[static_cast<std::size_t>(k)] = root;
    if (!allowable[static_cast<std::size_t>(k)]) clean[static_cast<std::size_t>(root)] = 0;
  }
  for (int k = 0; k < count; ++k) {
    if (g.component[static_cast<std::size_t>(k)] == k && clean[static_cast<std::size_t>(k)]) ++g.tight_count;
  }
  return g;
}

StateGraph build_state_graph(const SolidTorusProblem& prob, Execution exec) {
  return exec == Execution::serial ? build_state_graph_serial(prob) : build_state_graph_parallel(prob);
}

std::int64_t tight_count_traversal(const SolidTorusProblem& prob, Execution exec) {
  return build_state_graph(prob, exec).tight_count;
}

GraphFormat parse_graph_format(std::string_view text) {
  if (text == "dot") return GraphFormat::dot;
  if (text == "json") return GraphFormat::json;
  throw std::invalid_argument("unknown graph format '" + std::string(text) + "' (expected dot or json)");
}

std::string export_graph(const StateGraph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kGraphSchemaVersion;
    doc["p"] = g.p;
    doc["q"] = g.q;
    auto vertices = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      nlohmann::ordered_json v;
      v["id"] = k;
      v["match"] = std::vector<int>(g.vertices[k].match().begin(), g.vertices[k].match().end());
      v["allowable"] = static_cast<bool>(g.allowable[k]);
      vertices.push_back(std::move(v));
    }
    doc["vertices"] = std::move(vertices);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) {
      nlohmann::ordered_json j;
      j["a"] = e.a;
      j["b"] = e.b;
      j["triple"] = e.triple;
      j["side"] = std::string(to_string(e.side));
      j["bidirectional"] = e.bidirectional;
      edges.push_back(std::move(j));
    }
    doc["edges"] = std::move(edges);
    doc["tight_count"] = g.tight_count;
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "graph solid_torus_" << g.p << "_" << g.q << " {\n";
  out << "  // tight_count = " << g.tight_count << "\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    out << "  v" << k << " [label=\"" << g.vertices[k].encode() << "\""
        << (g.allowable[k] ? ", allowable=true" : ", allowable=false, style=dashed") << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.triple << " " << to_string(e.side)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tight
