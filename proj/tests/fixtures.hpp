#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "veech/origami.hpp"
#include "veech/sl2.hpp"

namespace fixtures {

inline std::vector<std::uint32_t> random_images(std::size_t d, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(d);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

/// A connected origami of degree d; retries until transitive.
inline veech::Origami random_origami(std::size_t d, std::mt19937_64& rng) {
  while (true) {
    auto sx = random_images(d, rng);
    auto sy = random_images(d, rng);
    if (!veech::check_origami(sx, sy)) return veech::Origami(std::move(sx), std::move(sy));
  }
}

/// Relabel squares by a random permutation r: sigma -> r sigma r^-1.
inline veech::Origami random_conjugate(const veech::Origami& o, std::mt19937_64& rng) {
  const veech::Permutation r(random_images(o.degree(), rng));
  return veech::Origami(o.sigma_x().conjugate_by(r), o.sigma_y().conjugate_by(r));
}

inline bool identical(const veech::Origami& a, const veech::Origami& b) {
  return a.sigma_x() == b.sigma_x() && a.sigma_y() == b.sigma_y();
}

/// Random determinant-1 matrix with |c|, |d| <= bound.
inline veech::MatZ random_sl2(std::int64_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  while (true) {
    const auto c = dist(rng), d = dist(rng);
    if (std::gcd(c, d) != 1) continue;
    // extended Euclid: a d - b c = 1
    std::int64_t r0 = d, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const auto q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
      std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    // s0 d + t0 c = r0 = +-1
    std::int64_t a = s0 * r0, b = -t0 * r0;
    // shift (a, b) by multiples of (c, d) to keep entries small
    const auto k = c != 0 ? a / c : (d != 0 ? b / d : 0);
    a -= k * c;
    b -= k * d;
    return veech::MatZ(a, b, c, d);
  }
}

}  // namespace fixtures
