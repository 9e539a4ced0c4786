#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veech/modular.hpp"
#include "veech/origami.hpp"

namespace veech {

/// Monodromy of the double cover along x^n and y^n (1 = sheets swapped).
struct Flavor {
  int eps_x = 0;
  int eps_y = 0;

  /// "11", "00", "10" or "01"; throws Error(InvalidConfig) otherwise.
  static Flavor parse(const std::string& s);
  std::string to_string() const { return std::to_string(eps_x) + std::to_string(eps_y); }
  friend bool operator==(const Flavor&, const Flavor&) = default;
};

/// mu_1 .. mu_4 in that order.
inline constexpr std::array<Flavor, 4> all_flavors{Flavor{1, 1}, Flavor{0, 0}, Flavor{1, 0}, Flavor{0, 1}};

/// Sheet-swap labels on the right edge (lambda_x) and top edge (lambda_y) of each grid square.
struct EdgeCocycle {
  std::int64_t n = 0;
  std::vector<std::uint8_t> lambda_x;  // index b * n + a
  std::vector<std::uint8_t> lambda_y;

  int x(std::int64_t a, std::int64_t b) const { return lambda_x[idx(a, b)]; }
  int y(std::int64_t a, std::int64_t b) const { return lambda_y[idx(a, b)]; }
  std::size_t idx(std::int64_t a, std::int64_t b) const {
    return static_cast<std::size_t>(mod_reduce(b, n) * n + mod_reduce(a, n));
  }
};

/// True iff every vertex, row and column constraint holds.
bool check_cocycle(const TorsionConfig& cfg, Flavor f, const EdgeCocycle& lam);

/// Solves the vertex/row/column constraints over GF(2). `column_order` permutes the
/// 2n^2 unknowns (lambda_x first, then lambda_y) for pivot selection.
EdgeCocycle solve_cocycle(const TorsionConfig& cfg, Flavor f, const std::vector<std::size_t>& column_order = {});

/// Square (a, b, s) has index s * n^2 + b * n + a.
Origami origami_from_cocycle(const EdgeCocycle& lam);
Origami build_dp(const TorsionConfig& cfg, Flavor f);

/// The quaternion group with sigma_x = right multiplication by i, sigma_y by j.
/// Squares 0..7 are 1, i, j, k, -1, -i, -j, -k.
Origami build_w();

/// Grid vertex (a, b) of every commutator 2-cycle, sorted.
std::vector<Vec2> branch_vertices(const Origami& dp, std::int64_t n);

struct FlavorReport {
  Flavor flavor;
  std::vector<int> lift_totals;  // fixed-point totals of the -I lifts, descending
  bool hyperelliptic = false;    // some lift has 8 fixed points
  bool fixes_o_and_m = false;    // a 4-point lift fixes both points over O and over M
  std::size_t veech_index = 0;
};

/// Per-flavor lift data; veech indices only when `with_index`.
std::vector<FlavorReport> classify_flavors(const TorsionConfig& cfg, bool with_index = false);

/// The flavor realizing D_P: non-hyperelliptic, with its 4-point lift over O and M.
Flavor dp_flavor(const TorsionConfig& cfg);

struct TheoremReport {
  std::int64_t n = 0, p = 0, q = 0;
  Flavor flavor;
  std::vector<FlavorReport> flavors;
  std::size_t computed_index = 0;
  std::uint64_t predicted_index = 0;
  bool pointed_equivalent = false;
  std::size_t stab_order = 0;
  std::uint64_t index3_value = 0;  // 3 |SL2(Z/n)| / |Stab|
  bool index3_check = false;
  bool minus_identity_in = false;
  bool t_not_in = false;
  bool pass = false;
};

/// Throws Error(NotOdd) or Error(NotGeneralPosition).
TheoremReport verify_theorem(const TorsionConfig& cfg);

}  // namespace veech
