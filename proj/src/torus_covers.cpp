#include "veech/torus_covers.hpp"

#include <algorithm>

#include "veech/gf2.hpp"
#include "veech/sl2.hpp"

namespace veech {

Flavor Flavor::parse(const std::string& s) {
  for (const auto& f : all_flavors)
    if (f.to_string() == s) return f;
  throw Error(ErrorCode::InvalidConfig, "flavor must be one of 11, 00, 10, 01 (got '" + s + "')");
}

namespace {

struct Constraint {
  std::vector<std::size_t> vars;
  bool rhs;
};

// Unknowns: lambda_x(a, b) at b*n + a, lambda_y(a, b) at n^2 + b*n + a.
std::vector<Constraint> constraints(const TorsionConfig& cfg, Flavor f) {
  const auto n = cfg.n();
  const auto nn = static_cast<std::size_t>(n * n);
  auto at = [n](std::int64_t a, std::int64_t b) {
    return static_cast<std::size_t>(mod_reduce(b, n) * n + mod_reduce(a, n));
  };
  std::vector<Constraint> out;
  for (std::int64_t b = 0; b < n; ++b)
    for (std::int64_t a = 0; a < n; ++a)
      out.push_back({{at(a - 1, b - 1), nn + at(a, b - 1), at(a - 1, b), nn + at(a - 1, b - 1)},
                     cfg.multiplicity(a, b) % 2 == 1});
  Constraint row{{}, f.eps_x == 1}, col{{}, f.eps_y == 1};
  for (std::int64_t k = 0; k < n; ++k) {
    row.vars.push_back(at(k, 0));
    col.vars.push_back(nn + at(0, k));
  }
  out.push_back(std::move(row));
  out.push_back(std::move(col));
  return out;
}

std::uint32_t square(std::int64_t n, std::int64_t a, std::int64_t b, int s) {
  return static_cast<std::uint32_t>(s * n * n + mod_reduce(b, n) * n + mod_reduce(a, n));
}

std::vector<std::uint32_t> vertex_classes(const Origami& o) {
  std::vector<std::uint32_t> cls(o.degree());
  const auto cycles = o.commutator().cycles();
  for (std::uint32_t c = 0; c < cycles.size(); ++c)
    for (auto i : cycles[c]) cls[i] = c;
  return cls;
}

}  // namespace

bool check_cocycle(const TorsionConfig& cfg, Flavor f, const EdgeCocycle& lam) {
  const auto nn = static_cast<std::size_t>(cfg.n() * cfg.n());
  if (lam.n != cfg.n() || lam.lambda_x.size() != nn || lam.lambda_y.size() != nn) return false;
  for (const auto& c : constraints(cfg, f)) {
    bool s = false;
    for (auto v : c.vars) s ^= (v < nn ? lam.lambda_x[v] : lam.lambda_y[v - nn]) != 0;
    if (s != c.rhs) return false;
  }
  return true;
}

EdgeCocycle solve_cocycle(const TorsionConfig& cfg, Flavor f, const std::vector<std::size_t>& column_order) {
  const auto n = cfg.n();
  const auto nn = static_cast<std::size_t>(n * n);
  Gf2System sys(2 * nn);
  for (const auto& c : constraints(cfg, f)) sys.add_equation(c.vars, c.rhs);
  const auto x = sys.solve(column_order);
  if (!x) throw Error(ErrorCode::Unsolvable, "edge cocycle system is inconsistent");
  EdgeCocycle lam{n, std::vector<std::uint8_t>(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(nn)),
                  std::vector<std::uint8_t>(x->begin() + static_cast<std::ptrdiff_t>(nn), x->end())};
  return lam;
}

Origami origami_from_cocycle(const EdgeCocycle& lam) {
  const auto n = lam.n;
  const auto d = static_cast<std::size_t>(2 * n * n);
  std::vector<std::uint32_t> sx(d), sy(d);
  for (int s = 0; s < 2; ++s)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t a = 0; a < n; ++a) {
        sx[square(n, a, b, s)] = square(n, a + 1, b, s ^ lam.x(a, b));
        sy[square(n, a, b, s)] = square(n, a, b + 1, s ^ lam.y(a, b));
      }
  return Origami(std::move(sx), std::move(sy));
}

Origami build_dp(const TorsionConfig& cfg, Flavor f) { return origami_from_cocycle(solve_cocycle(cfg, f)); }

Origami build_w() {
  // element = sign * unit, unit in {1, i, j, k}; index = 4 * (sign < 0) + unit
  // unit products: sign and unit of e_u * e_v
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto mul = [](std::uint32_t x, std::uint32_t y) {
    const int u = static_cast<int>(x % 4), v = static_cast<int>(y % 4);
    const bool neg = ((x >= 4) != (y >= 4)) != (sign[u][v] < 0);
    return static_cast<std::uint32_t>(unit[u][v] + (neg ? 4 : 0));
  };
  std::vector<std::uint32_t> sx(8), sy(8);
  for (std::uint32_t g = 0; g < 8; ++g) {
    sx[g] = mul(g, 1);
    sy[g] = mul(g, 2);
  }
  return Origami(std::move(sx), std::move(sy));
}

std::vector<Vec2> branch_vertices(const Origami& dp, std::int64_t n) {
  std::vector<Vec2> out;
  const auto nn = n * n;
  for (const auto& cycle : dp.commutator().cycles()) {
    if (cycle.size() != 2) continue;
    const auto i = static_cast<std::int64_t>(cycle.front()) % nn;
    out.push_back({i % n, i / n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FlavorReport> classify_flavors(const TorsionConfig& cfg, bool with_index) {
  const auto n = cfg.n();
  const auto h = (n - 1) / 2;
  std::vector<FlavorReport> out;
  for (const auto& f : all_flavors) {
    const auto dp = build_dp(cfg, f);
    const auto cls = vertex_classes(dp);
    const auto& sx = dp.sigma_x();
    const auto& sy = dp.sigma_y();
    FlavorReport r{f, {}, false, false, 0};
    for (const auto& lift : minus_one_lifts(dp)) {
      r.lift_totals.push_back(static_cast<int>(lift.total_fixed));
      r.hyperelliptic |= lift.total_fixed == 8;
      if (lift.total_fixed != 4) continue;
      bool ok = true;
      for (int s = 0; s < 2; ++s) {
        const auto o = square(n, 0, 0, s);
        const auto m = square(n, h, h, s);
        ok = ok && cls[sy(sx(lift.rho(o)))] == cls[o] && lift.rho(m) == m;
      }
      r.fixes_o_and_m |= ok;
    }
    std::sort(r.lift_totals.rbegin(), r.lift_totals.rend());
    if (with_index) r.veech_index = orbit(dp).size();
    out.push_back(std::move(r));
  }
  return out;
}

Flavor dp_flavor(const TorsionConfig& cfg) {
  for (const auto& r : classify_flavors(cfg))
    if (!r.hyperelliptic && r.fixes_o_and_m) return r.flavor;
  throw Error(ErrorCode::InvalidConfig, "no flavor has a four-point lift over O and M");
}

TheoremReport verify_theorem(const TorsionConfig& cfg) {
  const auto predicted = predicted_veech_action(cfg);  // throws NotOdd / NotGeneralPosition
  TheoremReport rep;
  rep.n = cfg.n();
  rep.p = cfg.p();
  rep.q = cfg.q();
  rep.flavors = classify_flavors(cfg, true);
  rep.flavor = dp_flavor(cfg);

  const auto action = veech_action(build_dp(cfg, rep.flavor));
  rep.computed_index = action.size();
  rep.predicted_index = sl2_group_order(2 * cfg.n()) / 8;
  rep.pointed_equivalent = pointed_equivalent(action, predicted.action);
  rep.stab_order = stab_of_config(cfg).size();
  rep.index3_value = 3 * sl2_group_order(cfg.n()) / rep.stab_order;
  rep.index3_check = rep.computed_index == rep.index3_value;
  rep.minus_identity_in = veech_contains(action, MatZ::minus_identity());
  rep.t_not_in = !veech_contains(action, MatZ::T());
  rep.pass = rep.computed_index == rep.predicted_index && predicted.action.size() == rep.predicted_index &&
             rep.pointed_equivalent && rep.index3_check && rep.minus_identity_in && rep.t_not_in;
  return rep;
}

}  // namespace veech
