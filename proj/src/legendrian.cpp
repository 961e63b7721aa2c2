#include "tight/legendrian.hpp"

#include <stdexcept>
#include <string>

#include "tight/farey.hpp"

namespace tight {

void FrontCounts::validate() const {
  if (up_cusps < 0 || down_cusps < 0 || pos_crossings < 0 || neg_crossings < 0) {
    throw std::invalid_argument("front counts must be non-negative");
  }
  std::int64_t cusps = up_cusps + down_cusps;
  if (cusps < 2 || cusps % 2 != 0) {
    throw std::invalid_argument("a closed front has an even number (>= 2) of cusps, got " +
                                std::to_string(cusps));
  }
}

std::int64_t front_tb(const FrontCounts& f) {
  f.validate();
  return -(f.up_cusps + f.down_cusps) / 2 + f.pos_crossings - f.neg_crossings;
}

std::int64_t front_r(const FrontCounts& f) {
  std::int64_t diff = f.down_cusps - f.up_cusps;
  if (diff % 2 != 0) {
    throw std::invalid_argument("odd cusp difference: not a closed oriented front");
  }
  return diff / 2;
}

FrontCounts stabilize(const FrontCounts& f, Sign sign) {
  FrontCounts out = f;
  if (sign == Sign::plus) {
    out.down_cusps += 2;
  } else {
    out.up_cusps += 2;
  }
  return out;
}

UnknotForm stabilize(const UnknotForm& u, Sign sign) {
  UnknotForm out = u;
  if (sign == Sign::plus) {
    ++out.k_plus;
  } else {
    ++out.k_minus;
  }
  return out;
}

std::optional<UnknotForm> unknot_from_invariants(std::int64_t tb, std::int64_t r) {
  // k+ + k- = -1 - tb, k+ - k- = r
  std::int64_t sum = -1 - tb;
  if (sum < 0 || (sum + r) % 2 != 0) return std::nullopt;
  std::int64_t k_plus = (sum + r) / 2;
  std::int64_t k_minus = (sum - r) / 2;
  if (k_plus < 0 || k_minus < 0) return std::nullopt;
  return UnknotForm{k_plus, k_minus};
}

bool bennequin_check(std::int64_t tb, std::int64_t r, std::int64_t chi) {
  if (chi > 1) {
    throw std::invalid_argument("Euler characteristic of a Seifert surface is at most 1");
  }
  return tb + r <= -chi && tb - r <= -chi;
}

std::vector<std::int64_t> rotation_menu(std::int64_t coefficient) {
  if (coefficient > -2) {
    throw std::invalid_argument("continued fraction coefficient must be <= -2");
  }
  std::vector<std::int64_t> menu;
  for (std::int64_t v = coefficient + 2; v <= -(coefficient + 2); v += 2) menu.push_back(v);
  return menu;
}

std::vector<std::vector<std::int64_t>> surgery_rotation_tuples(std::int64_t p, std::int64_t q) {
  auto cf = cf_expand(p, q);
  std::vector<std::vector<std::int64_t>> menus;
  for (auto r : cf.coeffs()) menus.push_back(rotation_menu(r));

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::size_t> digit(menus.size(), 0);
  while (true) {
    std::vector<std::int64_t> tuple;
    tuple.reserve(menus.size());
    for (std::size_t i = 0; i < menus.size(); ++i) tuple.push_back(menus[i][digit[i]]);
    out.push_back(std::move(tuple));

    std::size_t pos = menus.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < menus[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace tight
