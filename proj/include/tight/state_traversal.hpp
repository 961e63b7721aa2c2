#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tight/dividing_sets.hpp"

namespace tight {

/// Solid torus whose boundary carries two dividing curves of slope -p/q.
/// A meridional disk meets the boundary dividing set in 2p points.
struct SolidTorusProblem {
  int p = 1;
  int q = 1;

  /// Throws std::invalid_argument unless p >= 1, 1 <= q <= p, gcd(p, q) = 1.
  void validate() const;

  int points() const { return 2 * p; }

  /// After cutting along the meridional disk D, the boundary sphere is
  /// D+ u A u D-. Arcs of the annulus A shift the endpoint index by 2q; edge
  /// rounding moves half a step back at the D+ corner and half a step forward
  /// at the D- corner. Net: endpoint i of D+ is joined to endpoint
  /// (i + 2q - 1) mod 2p of D-.
  int link_shift() const;
};

/// The rounded dividing set on the boundary of the cut-open solid torus.
struct SphereAssembly {
  int p = 1;
  int q = 1;
  DiskDiagram plus_diagram;
  DiskDiagram minus_diagram;
  int component_count = 1;
};

/// Number of closed curves formed by `plus` on D+, `minus` on D- and the
/// rounded annulus arcs. Both spans are match vectors of length 2p.
int sphere_components(const SolidTorusProblem& prob, std::span<const int> plus,
                      std::span<const int> minus);

/// Same diagram on both copies of the cutting disk.
SphereAssembly assemble_sphere(const SolidTorusProblem& prob, const DiskDiagram& d);

/// Different diagrams on the two copies; this is the sphere seen after a
/// bypass is attached to one side of the disk from inside the ball.
SphereAssembly assemble_sphere(const SolidTorusProblem& prob, const DiskDiagram& plus,
                               const DiskDiagram& minus);

/// The rounded sphere dividing set is a single circle.
bool is_potentially_allowable(const SolidTorusProblem& prob, const DiskDiagram& d);

/// Details of one candidate state transition.
struct TransitionCheck {
  BypassKind kind = BypassKind::trivial;
  int before = 0;  ///< components of the sphere for the source state
  int after = 0;   ///< components once the bypass is attached (0 if never evaluated)
  bool exists = false;
};

/// A bypass from the front is attached to the D+ copy, one from the back to
/// the D- copy. The candidate exists iff attaching it from inside the ball
/// does not increase the number of sphere dividing curves. The criterion is
/// only meaningful when the ball carries a tight structure, so for a source
/// that is not potentially allowable only the trivial move exists.
TransitionCheck evaluate_transition(const SolidTorusProblem& prob, const DiskDiagram& d, int i,
                                    BypassSide side);

bool transition_exists(const SolidTorusProblem& prob, const DiskDiagram& d, int i, BypassSide side);

struct StateEdge {
  int a = 0;  ///< vertex the transition was first discovered from
  int b = 0;
  int triple = 0;
  BypassSide side = BypassSide::front;
  bool bidirectional = false;  ///< also discovered starting from b

  friend bool operator==(const StateEdge&, const StateEdge&) = default;
};

struct StateGraph {
  int p = 1;
  int q = 1;
  std::vector<DiskDiagram> vertices;  ///< lexicographic on the match vector
  std::vector<StateEdge> edges;       ///< ordered by (min endpoint, max endpoint)
  std::vector<bool> allowable;
  std::vector<int> component;         ///< smallest vertex index of each vertex's component
  std::int64_t tight_count = 0;

  friend bool operator==(const StateGraph&, const StateGraph&) = default;
};

enum class Execution { serial, parallel };

/// Vertices are all Catalan(p) disk diagrams; an undirected edge joins two
/// diagrams related by an existing transition. tight_count is the number of
/// components all of whose vertices are potentially allowable.
StateGraph build_state_graph(const SolidTorusProblem& prob, Execution exec = Execution::parallel);

/// Straightforward single-threaded construction kept as the reference the
/// OpenMP path is checked against.
StateGraph build_state_graph_serial(const SolidTorusProblem& prob);

/// OpenMP kernel: per-vertex transition evaluation in parallel, then a
/// deterministic reduction in vertex order.
StateGraph build_state_graph_parallel(const SolidTorusProblem& prob);

std::int64_t tight_count_traversal(const SolidTorusProblem& prob,
                                   Execution exec = Execution::parallel);

enum class GraphFormat { dot, json };

/// "dot" or "json"; anything else throws std::invalid_argument.
GraphFormat parse_graph_format(std::string_view text);

inline constexpr int kGraphSchemaVersion = 1;

std::string export_graph(const StateGraph& g, GraphFormat format);

}  // namespace tight
