#include "veech/origami.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace veech {

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

bool transitive(std::span<const std::uint32_t> sx, std::span<const std::uint32_t> sy) {
  std::vector<bool> seen(sx.size(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (auto j : {sx[i], sy[i]}) {
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == sx.size();
}

// Finds the unique map rho with rho(0) == start and rho(src[k](i)) == dst[k](rho(i)) for
// every generator pair k, if it exists and is a bijection. src must act transitively.
std::optional<Permutation> propagate(std::span<const Permutation* const> src,
                                     std::span<const Permutation* const> dst, std::uint32_t start) {
  const auto d = src.front()->degree();
  std::vector<std::uint32_t> rho(d, kUnset);
  std::vector<bool> hit(d, false);
  rho[0] = start;
  hit[start] = true;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t k = 0; k < src.size(); ++k) {
      auto j = (*src[k])(i);
      auto image = (*dst[k])(rho[i]);
      if (rho[j] == kUnset) {
        if (hit[image]) return std::nullopt;
        rho[j] = image;
        hit[image] = true;
        stack.push_back(j);
      } else if (rho[j] != image) {
        return std::nullopt;
      }
    }
  }
  return Permutation(std::move(rho));
}

std::vector<Permutation> all_propagations(const Origami& o, const Permutation& tx, const Permutation& ty) {
  const std::array<const Permutation*, 2> src{&o.sigma_x(), &o.sigma_y()};
  const std::array<const Permutation*, 2> dst{&tx, &ty};
  std::vector<Permutation> out;
  for (std::uint32_t t = 0; t < o.degree(); ++t)
    if (auto rho = propagate(src, dst, t)) out.push_back(std::move(*rho));
  return out;
}

void append_u32(std::string& s, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) s.push_back(static_cast<char>((v >> shift) & 0xff));
}

}  // namespace

std::optional<ErrorCode> check_origami(std::span<const std::uint32_t> sigma_x,
                                       std::span<const std::uint32_t> sigma_y) {
  if (sigma_x.size() != sigma_y.size() || sigma_x.empty()) return ErrorCode::LengthMismatch;
  if (!is_bijection(sigma_x) || !is_bijection(sigma_y)) return ErrorCode::NotBijection;
  if (!transitive(sigma_x, sigma_y)) return ErrorCode::NotConnected;
  return std::nullopt;
}

Origami::Origami(std::vector<std::uint32_t> sigma_x, std::vector<std::uint32_t> sigma_y) {
  if (auto err = check_origami(sigma_x, sigma_y)) throw Error(*err, "invalid origami data");
  sigma_x_ = Permutation(std::move(sigma_x));
  sigma_y_ = Permutation(std::move(sigma_y));
}

Origami::Origami(Permutation sigma_x, Permutation sigma_y) {
  if (auto err = check_origami(sigma_x.images(), sigma_y.images())) throw Error(*err, "invalid origami data");
  sigma_x_ = std::move(sigma_x);
  sigma_y_ = std::move(sigma_y);
}

Permutation Origami::commutator() const {
  return sigma_x_ * sigma_y_ * sigma_x_.inverse() * sigma_y_.inverse();
}

int genus(const Origami& o) {
  const auto c = static_cast<long>(o.commutator().cycles().size());
  const auto d = static_cast<long>(o.degree());
  // 2 - 2g = c - d
  return static_cast<int>((2 - c + d) / 2);
}

Stratum stratum(const Origami& o) {
  Stratum s;
  for (const auto& cycle : o.commutator().cycles()) {
    if (cycle.size() >= 2)
      s.zero_orders.push_back(static_cast<int>(cycle.size()) - 1);
    else
      ++s.regular_vertices;
  }
  std::sort(s.zero_orders.rbegin(), s.zero_orders.rend());
  s.genus = genus(o);
  return s;
}

std::optional<Permutation> isomorphism(const Origami& o1, const Origami& o2) {
  if (o1.degree() != o2.degree()) return std::nullopt;
  const std::array<const Permutation*, 2> src{&o1.sigma_x(), &o1.sigma_y()};
  const std::array<const Permutation*, 2> dst{&o2.sigma_x(), &o2.sigma_y()};
  for (std::uint32_t t = 0; t < o2.degree(); ++t)
    if (auto rho = propagate(src, dst, t)) return rho;
  return std::nullopt;
}

std::string canonical_key(const Origami& o) {
  const auto d = static_cast<std::uint32_t>(o.degree());
  const auto sx = o.sigma_x().images();
  const auto sy = o.sigma_y().images();
  const auto sxi = o.sigma_x().inverse();
  const auto syi = o.sigma_y().inverse();

  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> label(d);
  std::vector<std::uint32_t> order(d);
  std::vector<std::uint32_t> candidate(2 * d);
  for (std::uint32_t base = 0; base < d; ++base) {
    std::fill(label.begin(), label.end(), kUnset);
    label[base] = 0;
    order[0] = base;
    std::uint32_t next = 1;
    for (std::uint32_t head = 0; head < next; ++head) {
      const auto i = order[head];
      for (auto j : {sx[i], sxi(i), sy[i], syi(i)}) {
        if (label[j] == kUnset) {
          label[j] = next;
          order[next++] = j;
        }
      }
    }
    for (std::uint32_t k = 0; k < d; ++k) {
      candidate[k] = label[sx[order[k]]];
      candidate[d + k] = label[sy[order[k]]];
    }
    if (best.empty() || candidate < best) best = candidate;
  }

  std::string key;
  key.reserve(4 * (2 * d + 1));
  append_u32(key, d);
  for (auto v : best) append_u32(key, v);
  return key;
}

std::vector<Permutation> translations(const Origami& o) {
  return all_propagations(o, o.sigma_x(), o.sigma_y());
}

std::vector<MinusOneLift> minus_one_lifts(const Origami& o) {
  const auto sx = o.sigma_x();
  const auto sy = o.sigma_y();
  const auto rhos = all_propagations(o, sx.inverse(), sy.inverse());

  const auto vertex_cycles = o.commutator().cycles();
  std::vector<std::uint32_t> vertex_class(o.degree());
  for (std::uint32_t c = 0; c < vertex_cycles.size(); ++c)
    for (auto i : vertex_cycles[c]) vertex_class[i] = c;

  std::vector<MinusOneLift> out;
  for (const auto& rho : rhos) {
    MinusOneLift lift{rho};
    for (std::uint32_t i = 0; i < o.degree(); ++i) {
      lift.fixed_centers += rho(i) == i;
      lift.fixed_vertical_edge_midpoints += rho(i) == sx(i);
      lift.fixed_horizontal_edge_midpoints += rho(i) == sy(i);
    }
    // lower-left corner of i goes to the upper-right corner of rho(i)
    for (std::uint32_t c = 0; c < vertex_cycles.size(); ++c) {
      const auto i = vertex_cycles[c].front();
      lift.fixed_vertices += vertex_class[sy(sx(rho(i)))] == c;
    }
    lift.total_fixed = lift.fixed_centers + lift.fixed_vertical_edge_midpoints +
                       lift.fixed_horizontal_edge_midpoints + lift.fixed_vertices;
    out.push_back(std::move(lift));
  }
  return out;
}

std::optional<int> involution_quotient_genus(const Origami& o, const MinusOneLift& lift) {
  if (!lift.is_involution()) return std::nullopt;
  // 2g - 2 = 2(2g' - 2) + F
  const long g = genus(o);
  const long numerator = 2 * g + 2 - static_cast<long>(lift.total_fixed);
  if (numerator < 0 || numerator % 4 != 0) return std::nullopt;
  return static_cast<int>(numerator / 4);
}

Origami quotient_by_translations(const Origami& o, const std::vector<Permutation>& group) {
  const auto d = static_cast<std::uint32_t>(o.degree());
  for (const auto& t : group) {
    if (t.degree() != d) throw Error(ErrorCode::LengthMismatch, "translation has wrong degree");
    if (!t.is_identity() && t.fixed_points() > 0)
      throw Error(ErrorCode::NotFreeAction, "a non-identity translation fixes a square");
  }

  std::vector<std::uint32_t> cls(d, kUnset);
  std::uint32_t count = 0;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (cls[i] != kUnset) continue;
    cls[i] = count;
    queue.push_back(i);
    while (!queue.empty()) {
      auto j = queue.front();
      queue.pop_front();
      for (const auto& t : group) {
        if (cls[t(j)] == kUnset) {
          cls[t(j)] = count;
          queue.push_back(t(j));
        }
      }
    }
    ++count;
  }

  std::vector<std::uint32_t> qx(count, kUnset), qy(count, kUnset);
  for (std::uint32_t i = 0; i < d; ++i) {
    const auto c = cls[i];
    const auto cx = cls[o.sigma_x()(i)];
    const auto cy = cls[o.sigma_y()(i)];
    if ((qx[c] != kUnset && qx[c] != cx) || (qy[c] != kUnset && qy[c] != cy))
      throw Error(ErrorCode::NotFreeAction, "gluing does not descend to the orbit set");
    qx[c] = cx;
    qy[c] = cy;
  }
  return Origami(std::move(qx), std::move(qy));
}

}  // namespace veech
