#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tight {

/// Reduced rational slope num/den, with infinity stored as 1/0.
///
/// The sign is carried by the numerator and the denominator is never
/// negative. Construct through make_slope() or Slope::parse(); the raw
/// fields are exposed read-only.
class Slope {
 public:
  /// 0/1.
  constexpr Slope() = default;

  static Slope infinity() { return Slope(1, 0); }
  static Slope integer(std::int64_t n) { return Slope(n, 1); }

  /// Accepts "a/b", "-a/b", "n" and "inf" (also "oo", "infinity").
  static Slope parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// "a/b", "n" or "inf".
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;

  /// Lexicographic on (num, den); only used for canonical container ordering.
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  friend Slope make_slope(std::int64_t num, std::int64_t den);
  constexpr Slope(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

/// Reduces num/den. Any (a, 0) with a != 0 becomes infinity.
/// Throws std::invalid_argument for (0, 0).
Slope make_slope(std::int64_t num, std::int64_t den);

/// num(a)*den(b) - den(a)*num(b). Two slopes span a Farey edge iff this is +-1.
std::int64_t farey_det(const Slope& a, const Slope& b);

bool is_farey_edge(const Slope& a, const Slope& b);

/// Negative continued fraction r_0 - 1/(r_1 - 1/(... - 1/r_k)), all r_i <= -2.
class ContinuedFraction {
 public:
  /// Throws std::invalid_argument when empty or when some coefficient exceeds -2.
  explicit ContinuedFraction(std::vector<std::int64_t> coeffs);

  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Expansion of -p/q. Requires gcd(p, q) = 1 and p > q >= 1; slope -1 has
/// no expansion with coefficients <= -2 and is rejected.
ContinuedFraction cf_expand(std::int64_t p, std::int64_t q);

Slope cf_to_slope(const ContinuedFraction& cf);

/// Evaluates an arbitrary coefficient list (coefficients may be -1); used by
/// the peeling walk where a trailing -1 is about to collapse.
Slope evaluate_coefficients(std::span<const std::int64_t> coeffs);

/// Shortest counterclockwise Farey path from -p/q to -1, obtained by
/// repeatedly incrementing the last continued-fraction coefficient.
/// (1, 1) yields the single-element path [-1].
std::vector<Slope> peel_path(std::int64_t p, std::int64_t q);

/// Slope after a bypass attached along a curve of slope `attach` to a torus
/// whose two dividing curves have slope `s`: the Farey neighbour of `s` in
/// the counterclockwise interval (attach, s) that is closest to `attach`.
/// Counterclockwise means moving downward through the reals from `attach`,
/// wrapping through infinity. Throws std::invalid_argument when s == attach.
Slope bypass_slope(const Slope& s, const Slope& attach);

}  // namespace tight
