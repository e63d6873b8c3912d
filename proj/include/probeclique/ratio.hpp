#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace probeclique {

// Exact nonnegative rational, used wherever a density threshold originates
// from an integer edge count and the comparison must not go through
// floating point.
struct ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr ratio() = default;
  ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0 || n < 0) throw std::invalid_argument("ratio: need n >= 0, d > 0");
    std::int64_t g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  // Exact conversion: every finite nonnegative double is a dyadic rational.
  static ratio from_double(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::invalid_argument("ratio: need a finite nonnegative value");
    int exp = 0;
    double m = std::frexp(x, &exp); // x = m * 2^exp, m in [0.5, 1)
    std::int64_t mant = std::llround(std::ldexp(m, 53));
    exp -= 53;
    while (mant != 0 && (mant & 1) == 0) { mant >>= 1; ++exp; }
    if (mant == 0) return {};
    if (exp >= 0) {
      if (exp > 9) throw std::invalid_argument("ratio: value too large");
      return ratio(mant << exp, 1);
    }
    if (exp < -62) throw std::invalid_argument("ratio: value too small");
    return ratio(mant, std::int64_t(1) << -exp);
  }

  double to_double() const { return double(num) / double(den); }

  friend bool operator==(const ratio& a, const ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// a >= r * b, exactly.
inline bool at_least_fraction(std::int64_t a, const ratio& r, std::int64_t b) {
  return __int128(a) * r.den >= __int128(r.num) * b;
}

} // namespace probeclique
