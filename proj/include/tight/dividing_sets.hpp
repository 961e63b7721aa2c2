#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tight/farey.hpp"

namespace tight {

/// A chord between two boundary points of a disk, stored with a < b.
struct Chord {
  int a = 0;
  int b = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Dividing set of a convex disk whose Legendrian boundary meets it in 2n
/// points: a non-crossing perfect matching of 0..2n-1 (arcs only, no closed
/// curves). Points are numbered counterclockwise.
class DiskDiagram {
 public:
  /// Validates: even size >= 2, fixed-point-free involution, non-crossing.
  /// Throws std::invalid_argument otherwise.
  explicit DiskDiagram(std::vector<int> match);

  static DiskDiagram from_chords(int n, std::span<const Chord> chords);

  /// Parses the canonical encoding "m0 m1 ... m{2n-1}" (commas also accepted).
  static DiskDiagram parse(std::string_view text);

  int n() const { return static_cast<int>(match_.size() / 2); }
  int points() const { return static_cast<int>(match_.size()); }
  int partner(int i) const { return match_[static_cast<std::size_t>(i)]; }
  std::span<const int> match() const { return match_; }
  std::vector<Chord> chords() const;

  /// Space separated match(0) ... match(2n-1).
  std::string encode() const;

  friend bool operator==(const DiskDiagram&, const DiskDiagram&) = default;
  friend auto operator<=>(const DiskDiagram&, const DiskDiagram&) = default;

 private:
  std::vector<int> match_;
};

/// True iff chords (a, b) and (c, d) interleave on the circle.
bool chords_cross(int a, int b, int c, int d);

/// All non-crossing perfect matchings on 2n points, lexicographic on the
/// match vector. Count is Catalan(n).
std::vector<DiskDiagram> enumerate_disk_diagrams(int n);

/// Number of non-crossing matchings, by the Catalan recurrence.
std::uint64_t catalan(int n);

/// Chords joining cyclically adjacent points. Never empty.
std::vector<Chord> boundary_parallel_chords(const DiskDiagram& d);

enum class BypassSide { front, back };

enum class BypassKind {
  nontrivial,  ///< dividing set changes
  trivial,     ///< dividing set unchanged
  disallowed,  ///< would create a closed dividing curve; cannot occur in a tight manifold
};

std::string_view to_string(BypassSide side);
std::string_view to_string(BypassKind kind);
BypassSide parse_side(std::string_view text);

struct BypassOutcome {
  BypassKind kind = BypassKind::trivial;
  /// Resulting diagram; empty exactly when kind == disallowed.
  std::optional<DiskDiagram> diagram;
};

/// Bypass attached along a Legendrian arc parallel to the boundary that meets
/// the dividing arcs ending at points i, i+1, i+2 (mod 2n).
///
/// Locally the arc sits in a hexagon whose corners are the three boundary
/// stubs and the three inner continuations; the move rotates that six-point
/// matching by one step (front: +1, back: -1). With partners a, b, c of
/// i, i+1, i+2 the front move gives (i,i+1), (i+2,a), (b,c) and the back
/// move gives (i+1,i+2), (i,c), (a,b). When a chord already joins the first
/// two points the front move is trivial and the back move closes a curve;
/// symmetrically for a chord on the last two points.
///
/// Throws std::invalid_argument for n = 1 or i outside [0, 2n).
BypassOutcome disk_bypass_move(const DiskDiagram& d, int i, BypassSide side);

/// Rotation by k positions (point j goes to j + k).
DiskDiagram rotate(const DiskDiagram& d, int k);

/// Reflection j -> -j (mod 2n).
DiskDiagram reflect(const DiskDiagram& d);

// ---------------------------------------------------------------------------
// Annulus

/// An endpoint on boundary circle `side` (0 or 1) at cyclic position `index`.
struct AnnulusEndpoint {
  int side = 0;
  int index = 0;
  friend bool operator==(const AnnulusEndpoint&, const AnnulusEndpoint&) = default;
  friend auto operator<=>(const AnnulusEndpoint&, const AnnulusEndpoint&) = default;
};

/// A properly embedded dividing arc. For arcs with both ends on one circle,
/// the arc cuts off the half-disk containing the boundary interval running
/// counterclockwise from `from` to `to`.
struct AnnulusArc {
  AnnulusEndpoint from;
  AnnulusEndpoint to;
  bool crosses() const { return from.side != to.side; }
  friend bool operator==(const AnnulusArc&, const AnnulusArc&) = default;
};

/// Dividing set on S^1 x [0,1]: m0 and m1 endpoints on the two circles, arcs
/// between them and a number of closed (core-parallel) curves.
struct AnnulusDiagram {
  int m0 = 0;
  int m1 = 0;
  std::vector<AnnulusArc> arcs;
  int closed_curves = 0;

  /// Throws std::invalid_argument unless the data describes a non-crossing
  /// embedded arc system using every endpoint exactly once.
  void validate() const;
};

/// Same-side arcs on `side` whose half-disk contains no other endpoint.
std::vector<AnnulusArc> annulus_boundary_parallel(const AnnulusDiagram& a, int side);

// ---------------------------------------------------------------------------
// Torus

/// 2n parallel essential dividing curves of a common slope.
struct TorusDividingSet {
  std::int64_t count = 2;
  Slope slope;

  void validate() const;
  friend bool operator==(const TorusDividingSet&, const TorusDividingSet&) = default;
};

/// Effect of a nontrivial bypass attached along a curve of slope
/// `attach_slope`: with more than two curves two of them merge away and the
/// slope stays; with exactly two the slope moves by bypass_slope().
TorusDividingSet torus_attach_bypass(const TorusDividingSet& t, const Slope& attach_slope);

/// Twisting number of a Legendrian curve meeting the dividing set in the
/// given (even) number of points: -count/2.
std::int64_t twisting_from_intersections(std::int64_t intersection_count);

/// Boundary slope of a standard neighbourhood of a Legendrian curve with
/// twisting number -n: -1/n.
Slope std_nbhd_slope(std::int64_t n);

}  // namespace tight
