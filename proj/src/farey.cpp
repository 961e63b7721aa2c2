#include "tight/farey.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tight {

namespace {

__extension__ using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("slope arithmetic overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return v;
}

// x*a + y*b = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

void require_coprime_pair(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0) {
    throw std::invalid_argument("p and q must be positive");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("p and q must be coprime");
  }
}

}  // namespace

Slope make_slope(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) {
    throw std::invalid_argument("0/0 is not a slope");
  }
  if (den == 0) return Slope(1, 0);
  if (num == 0) return Slope(0, 1);
  std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Slope(num, den);
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "infinity" || text == "1/0") {
    return infinity();
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return make_slope(parse_int(text), 1);
  }
  return make_slope(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

std::int64_t farey_det(const Slope& a, const Slope& b) {
  return checked_narrow(static_cast<i128>(a.num()) * b.den() -
                        static_cast<i128>(a.den()) * b.num());
}

bool is_farey_edge(const Slope& a, const Slope& b) {
  std::int64_t d = farey_det(a, b);
  return d == 1 || d == -1;
}

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("continued fraction needs at least one coefficient");
  }
  for (auto r : coeffs_) {
    if (r > -2) {
      throw std::invalid_argument("continued fraction coefficient " + std::to_string(r) +
                                  " is not <= -2");
    }
  }
}

std::string ContinuedFraction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs_[i]);
  }
  return out + ")";
}

ContinuedFraction cf_expand(std::int64_t p, std::int64_t q) {
  require_coprime_pair(p, q);
  if (p <= q) {
    throw std::invalid_argument("cf_expand requires p > q (slope -1 has no expansion with r_i <= -2)");
  }
  // x = num/den with den > 0. Take r = floor(x); then x - r lies in (0, 1) and
  // the remainder x' = -1/(x - r) < -1, so every coefficient stays <= -2.
  std::vector<std::int64_t> coeffs;
  std::int64_t num = -p, den = q;
  while (true) {
    std::int64_t r = floor_div(num, den);
    coeffs.push_back(r);
    std::int64_t rem = num - r * den;  // x - r = rem/den, 0 <= rem < den
    if (rem == 0) break;
    // -1 / (rem/den) = -den/rem
    num = -den;
    den = rem;
  }
  return ContinuedFraction(std::move(coeffs));
}

Slope evaluate_coefficients(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("empty coefficient list");
  }
  // value = num/den, folded from the innermost coefficient outward.
  i128 num = coeffs.back(), den = 1;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    // r - 1/(num/den) = (r*num - den)/num
    i128 next_num = static_cast<i128>(coeffs[i]) * num - den;
    den = num;
    num = next_num;
  }
  return make_slope(checked_narrow(num), checked_narrow(den));
}

Slope cf_to_slope(const ContinuedFraction& cf) { return evaluate_coefficients(cf.coeffs()); }

std::vector<Slope> peel_path(std::int64_t p, std::int64_t q) {
  require_coprime_pair(p, q);
  if (p == 1 && q == 1) return {Slope::integer(-1)};
  auto cf = cf_expand(p, q);
  std::vector<std::int64_t> coeffs(cf.coeffs().begin(), cf.coeffs().end());

  std::vector<Slope> path{cf_to_slope(cf)};
  while (!(coeffs.size() == 1 && coeffs[0] == -1)) {
    ++coeffs.back();
    // (..., r, -1) == (..., r + 1)
    while (coeffs.size() > 1 && coeffs.back() == -1) {
      coeffs.pop_back();
      ++coeffs.back();
    }
    path.push_back(evaluate_coefficients(coeffs));
  }
  return path;
}

Slope bypass_slope(const Slope& s, const Slope& attach) {
  if (s == attach) {
    throw std::invalid_argument("bypass_slope needs distinct slopes");
  }
  // M in SL(2,Z) sends the vector (num, den) of s to (1, 0), i.e. s to infinity.
  // Orientation-preserving, so the downward interval from `attach` to `s`
  // becomes the downward interval from t = M(attach) to infinity, whose Farey
  // neighbours of infinity are the integers below t.
  std::int64_t x = 0, y = 0;
  ext_gcd(s.num(), s.den(), x, y);  // x*num + y*den = 1
  i128 top = static_cast<i128>(x) * attach.num() + static_cast<i128>(y) * attach.den();
  i128 bottom = -static_cast<i128>(s.den()) * attach.num() +
                    static_cast<i128>(s.num()) * attach.den();
  // bottom = det(s, attach) != 0 because the slopes differ.
  if (bottom < 0) {
    top = -top;
    bottom = -bottom;
  }
  i128 n = top / bottom;
  if (top % bottom != 0 && top < 0) --n;  // floor
  if (top % bottom == 0) --n;             // strictly below t
  // M^{-1} = [[num, -y], [den, x]] applied to (n, 1).
  i128 out_num = static_cast<i128>(s.num()) * n - y;
  i128 out_den = static_cast<i128>(s.den()) * n + x;
  return make_slope(checked_narrow(out_num), checked_narrow(out_den));
}

}  // namespace tight
