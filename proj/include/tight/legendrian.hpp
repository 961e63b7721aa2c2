#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tight {

enum class Sign { plus, minus };

/// Cusp and crossing counts of a closed front projection.
struct FrontCounts {
  std::int64_t up_cusps = 0;
  std::int64_t down_cusps = 0;
  std::int64_t pos_crossings = 0;
  std::int64_t neg_crossings = 0;

  /// Throws std::invalid_argument unless counts are non-negative and the
  /// total number of cusps is even and at least 2.
  void validate() const;

  friend bool operator==(const FrontCounts&, const FrontCounts&) = default;
};

/// tb = -(#cusps)/2 + #positive crossings - #negative crossings.
std::int64_t front_tb(const FrontCounts& f);

/// r = (#downward cusps - #upward cusps)/2. Throws on an odd difference.
std::int64_t front_r(const FrontCounts& f);

/// Adds a zigzag: S+ contributes two downward cusps, S- two upward ones.
FrontCounts stabilize(const FrontCounts& f, Sign sign);

/// S_+^{k_plus} S_-^{k_minus} applied to the tb = -1 unknot.
struct UnknotForm {
  std::int64_t k_plus = 0;
  std::int64_t k_minus = 0;

  std::int64_t tb() const { return -1 - k_plus - k_minus; }
  std::int64_t r() const { return k_plus - k_minus; }

  friend bool operator==(const UnknotForm&, const UnknotForm&) = default;
};

UnknotForm stabilize(const UnknotForm& u, Sign sign);

/// Legendrian unknots in the tight three-sphere are determined by (tb, r).
/// Returns the stabilization form realising the pair, or nullopt when no
/// tight unknot has these invariants.
std::optional<UnknotForm> unknot_from_invariants(std::int64_t tb, std::int64_t r);

/// tb + r <= -chi and tb - r <= -chi. Throws when chi > 1.
bool bennequin_check(std::int64_t tb, std::int64_t r, std::int64_t chi);

/// Rotation numbers available to the i-th surgery unknot (tb = r_i + 1):
/// r_i+2, r_i+4, ..., -(r_i+2).
std::vector<std::int64_t> rotation_menu(std::int64_t coefficient);

/// Cartesian product of rotation_menu over the continued fraction of -p/q,
/// in lexicographic order.
std::vector<std::vector<std::int64_t>> surgery_rotation_tuples(std::int64_t p, std::int64_t q);

}  // namespace tight
