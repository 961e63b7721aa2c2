#include "tight/dividing_sets.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tight {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

// Lexicographically ordered matchings of [0, 2k), memoised by k.
const std::vector<std::vector<int>>& matchings_of_length(int k) {
  static thread_local std::map<int, std::vector<std::vector<int>>> memo;
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;

  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.emplace_back();
  } else {
    for (int j = 0; j < k; ++j) {
      // 0 pairs with 2j+1; j chords inside, k-1-j chords after.
      const auto& inside = matchings_of_length(j);
      const auto& outside = matchings_of_length(k - 1 - j);
      for (const auto& in : inside) {
        for (const auto& outm : outside) {
          std::vector<int> m(static_cast<std::size_t>(2 * k));
          m[0] = 2 * j + 1;
          m[static_cast<std::size_t>(2 * j + 1)] = 0;
          for (std::size_t t = 0; t < in.size(); ++t) m[t + 1] = in[t] + 1;
          for (std::size_t t = 0; t < outm.size(); ++t) {
            m[t + static_cast<std::size_t>(2 * j + 2)] = outm[t] + 2 * j + 2;
          }
          out.push_back(std::move(m));
        }
      }
    }
  }
  return memo.emplace(k, std::move(out)).first->second;
}

}  // namespace

bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  return c != a && c != b && d != a && d != b && c_in != d_in;
}

DiskDiagram::DiskDiagram(std::vector<int> match) : match_(std::move(match)) {
  const int size = static_cast<int>(match_.size());
  if (size < 2 || size % 2 != 0) {
    throw std::invalid_argument("a disk diagram needs an even, positive number of points");
  }
  for (int i = 0; i < size; ++i) {
    int j = match_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= size) throw std::invalid_argument("partner index out of range");
    if (j == i) throw std::invalid_argument("point " + std::to_string(i) + " is matched to itself");
    if (match_[static_cast<std::size_t>(j)] != i) {
      throw std::invalid_argument("match is not an involution at point " + std::to_string(i));
    }
  }
  // Stack check: scanning 0..2n-1, each chord must close the most recent open one.
  std::vector<int> open;
  for (int i = 0; i < size; ++i) {
    int j = match_[static_cast<std::size_t>(i)];
    if (j > i) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != j) {
        throw std::invalid_argument("chords cross at point " + std::to_string(i));
      }
      open.pop_back();
    }
  }
}

DiskDiagram DiskDiagram::from_chords(int n, std::span<const Chord> chords) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> m(static_cast<std::size_t>(2 * n), -1);
  for (const auto& c : chords) {
    if (c.a < 0 || c.b < 0 || c.a >= 2 * n || c.b >= 2 * n) {
      throw std::invalid_argument("chord endpoint out of range");
    }
    if (m[static_cast<std::size_t>(c.a)] != -1 || m[static_cast<std::size_t>(c.b)] != -1) {
      throw std::invalid_argument("point used by two chords");
    }
    m[static_cast<std::size_t>(c.a)] = c.b;
    m[static_cast<std::size_t>(c.b)] = c.a;
  }
  return DiskDiagram(std::move(m));
}

DiskDiagram DiskDiagram::parse(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> m;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed diagram entry '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed diagram entry '" + token + "'");
    m.push_back(v);
  }
  return DiskDiagram(std::move(m));
}

std::vector<Chord> DiskDiagram::chords() const {
  std::vector<Chord> out;
  for (int i = 0; i < points(); ++i) {
    if (partner(i) > i) out.push_back({i, partner(i)});
  }
  return out;
}

std::string DiskDiagram::encode() const {
  std::string out;
  for (std::size_t i = 0; i < match_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(match_[i]);
  }
  return out;
}

std::uint64_t catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of a negative number");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j < k; ++j) {
      c[static_cast<std::size_t>(k)] +=
          c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - 1 - j)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

std::vector<DiskDiagram> enumerate_disk_diagrams(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_disk_diagrams needs n >= 1");
  std::vector<DiskDiagram> out;
  const auto& raw = matchings_of_length(n);
  out.reserve(raw.size());
  for (const auto& m : raw) out.emplace_back(m);
  return out;
}

std::vector<Chord> boundary_parallel_chords(const DiskDiagram& d) {
  std::vector<Chord> out;
  const int size = d.points();
  for (int i = 0; i < size; ++i) {
    int j = mod(i + 1, size);
    if (d.partner(i) == j) {
      Chord c{std::min(i, j), std::max(i, j)};
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(BypassSide side) { return side == BypassSide::front ? "front" : "back"; }

std::string_view to_string(BypassKind kind) {
  switch (kind) {
    case BypassKind::nontrivial:
      return "nontrivial";
    case BypassKind::trivial:
      return "trivial";
    case BypassKind::disallowed:
      return "disallowed";
  }
  return "?";
}

BypassSide parse_side(std::string_view text) {
  if (text == "front") return BypassSide::front;
  if (text == "back") return BypassSide::back;
  throw std::invalid_argument("side must be 'front' or 'back', got '" + std::string(text) + "'");
}

BypassOutcome disk_bypass_move(const DiskDiagram& d, int i, BypassSide side) {
  const int size = d.points();
  if (d.n() < 2) {
    throw std::invalid_argument("bypass moves need at least two chords (n >= 2)");
  }
  if (i < 0 || i >= size) {
    throw std::invalid_argument("attachment index " + std::to_string(i) + " out of range");
  }
  const int x0 = i, x1 = mod(i + 1, size), x2 = mod(i + 2, size);
  const bool first_pair = d.partner(x0) == x1;
  const bool last_pair = d.partner(x1) == x2;

  if (side == BypassSide::front) {
    if (first_pair) return {BypassKind::trivial, d};
    if (last_pair) return {BypassKind::disallowed, std::nullopt};
  } else {
    if (last_pair) return {BypassKind::trivial, d};
    if (first_pair) return {BypassKind::disallowed, std::nullopt};
  }

  const int a = d.partner(x0), b = d.partner(x1), c = d.partner(x2);
  std::vector<int> m(d.match().begin(), d.match().end());
  auto join = [&m](int u, int v) {
    m[static_cast<std::size_t>(u)] = v;
    m[static_cast<std::size_t>(v)] = u;
  };
  if (side == BypassSide::front) {
    join(x0, x1);
    join(x2, a);
    join(b, c);
  } else {
    join(x1, x2);
    join(x0, c);
    join(a, b);
  }
  return {BypassKind::nontrivial, DiskDiagram(std::move(m))};
}

DiskDiagram rotate(const DiskDiagram& d, int k) {
  const int size = d.points();
  std::vector<int> m(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    m[static_cast<std::size_t>(mod(j + k, size))] = mod(d.partner(j) + k, size);
  }
  return DiskDiagram(std::move(m));
}

DiskDiagram reflect(const DiskDiagram& d) {
  const int size = d.points();
  std::vector<int> m(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    m[static_cast<std::size_t>(mod(-j, size))] = mod(-d.partner(j), size);
  }
  return DiskDiagram(std::move(m));
}

// ---------------------------------------------------------------------------
// Annulus

namespace {

int circle_size(const AnnulusDiagram& a, int side) { return side == 0 ? a.m0 : a.m1; }

// Positions strictly between from and to, counterclockwise.
bool in_open_interval(int from, int to, int x, int m) {
  int span = mod(to - from, m);
  int off = mod(x - from, m);
  return off > 0 && off < span;
}

bool in_closed_interval(int from, int to, int x, int m) {
  int span = mod(to - from, m);
  int off = mod(x - from, m);
  return off <= span;
}

}  // namespace

void AnnulusDiagram::validate() const {
  if (m0 < 0 || m1 < 0 || m0 % 2 != 0 || m1 % 2 != 0) {
    throw std::invalid_argument("endpoint counts must be non-negative and even");
  }
  if (closed_curves < 0) throw std::invalid_argument("negative closed curve count");

  std::vector<int> used0(static_cast<std::size_t>(m0), 0), used1(static_cast<std::size_t>(m1), 0);
  auto mark = [&](const AnnulusEndpoint& e) {
    if (e.side != 0 && e.side != 1) throw std::invalid_argument("endpoint side must be 0 or 1");
    int m = circle_size(*this, e.side);
    if (e.index < 0 || e.index >= m) throw std::invalid_argument("endpoint index out of range");
    auto& slot = e.side == 0 ? used0[static_cast<std::size_t>(e.index)] : used1[static_cast<std::size_t>(e.index)];
    if (slot++) throw std::invalid_argument("endpoint used twice");
  };
  for (const auto& arc : arcs) {
    mark(arc.from);
    mark(arc.to);
  }
  for (int u : used0) {
    if (!u) throw std::invalid_argument("endpoint on circle 0 left unmatched");
  }
  for (int u : used1) {
    if (!u) throw std::invalid_argument("endpoint on circle 1 left unmatched");
  }

  std::vector<const AnnulusArc*> crossing;
  std::vector<const AnnulusArc*> same[2];
  for (const auto& arc : arcs) {
    if (arc.crosses()) {
      crossing.push_back(&arc);
    } else {
      same[arc.from.side].push_back(&arc);
    }
  }
  if (!crossing.empty() && closed_curves > 0) {
    throw std::invalid_argument("closed core curves cannot coexist with arcs joining the two circles");
  }

  for (int side = 0; side < 2; ++side) {
    const int m = circle_size(*this, side);
    const auto& list = same[side];
    for (std::size_t x = 0; x < list.size(); ++x) {
      const auto& a = *list[x];
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        const auto& b = *list[y];
        bool b_inside_a = in_open_interval(a.from.index, a.to.index, b.from.index, m) &&
                          in_open_interval(a.from.index, a.to.index, b.to.index, m) &&
                          !in_open_interval(b.from.index, b.to.index, a.from.index, m);
        bool a_inside_b = in_open_interval(b.from.index, b.to.index, a.from.index, m) &&
                          in_open_interval(b.from.index, b.to.index, a.to.index, m) &&
                          !in_open_interval(a.from.index, a.to.index, b.from.index, m);
        bool disjoint = !in_closed_interval(a.from.index, a.to.index, b.from.index, m) &&
                        !in_closed_interval(a.from.index, a.to.index, b.to.index, m) &&
                        !in_closed_interval(b.from.index, b.to.index, a.from.index, m);
        if (!(b_inside_a || a_inside_b || disjoint)) {
          throw std::invalid_argument("same-side arcs cross on circle " + std::to_string(side));
        }
      }
      for (const auto* c : crossing) {
        const auto& e = c->from.side == side ? c->from : c->to;
        if (in_open_interval(a.from.index, a.to.index, e.index, m)) {
          throw std::invalid_argument("an arc joining the circles enters a boundary half-disk");
        }
      }
    }
  }

  // Arcs joining the circles must meet both circles in the same cyclic order.
  if (crossing.size() > 1) {
    std::vector<std::pair<int, int>> ends;
    for (const auto* c : crossing) {
      const auto& e0 = c->from.side == 0 ? c->from : c->to;
      const auto& e1 = c->from.side == 0 ? c->to : c->from;
      ends.emplace_back(e0.index, e1.index);
    }
    std::sort(ends.begin(), ends.end());
    int descents = 0;
    for (std::size_t k = 0; k < ends.size(); ++k) {
      if (ends[(k + 1) % ends.size()].second < ends[k].second) ++descents;
    }
    if (descents != 1) throw std::invalid_argument("arcs joining the circles cross each other");
  }
}

std::vector<AnnulusArc> annulus_boundary_parallel(const AnnulusDiagram& a, int side) {
  if (side != 0 && side != 1) throw std::invalid_argument("side must be 0 or 1");
  const int m = circle_size(a, side);
  std::vector<AnnulusArc> out;
  for (const auto& arc : a.arcs) {
    if (arc.crosses() || arc.from.side != side) continue;
    if (mod(arc.to.index - arc.from.index, m) == 1) out.push_back(arc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Torus

void TorusDividingSet::validate() const {
  if (count < 2 || count % 2 != 0) {
    throw std::invalid_argument("a torus dividing set has a positive even number of curves");
  }
}

TorusDividingSet torus_attach_bypass(const TorusDividingSet& t, const Slope& attach_slope) {
  t.validate();
  if (attach_slope == t.slope) {
    throw std::invalid_argument("attaching curve is parallel to the dividing curves");
  }
  if (t.count > 2) return {t.count - 2, t.slope};
  return {2, bypass_slope(t.slope, attach_slope)};
}

std::int64_t twisting_from_intersections(std::int64_t intersection_count) {
  if (intersection_count < 0 || intersection_count % 2 != 0) {
    throw std::invalid_argument("intersection count must be a non-negative even number");
  }
  return -intersection_count / 2;
}

Slope std_nbhd_slope(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("twisting parameter n must be positive");
  return make_slope(-1, n);
}

}  // namespace tight
