#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veech/error.hpp"
#include "veech/permutation.hpp"

namespace veech {

/// A square-tiled surface: `degree` unit squares glued by two permutations.
/// sigma_x(i) is the right neighbour of square i, sigma_y(i) its upper neighbour.
/// Instances are always valid (bijective, equal length, transitive).
class Origami {
 public:
  /// Throws Error with LengthMismatch, NotBijection or NotConnected.
  Origami(std::vector<std::uint32_t> sigma_x, std::vector<std::uint32_t> sigma_y);
  Origami(Permutation sigma_x, Permutation sigma_y);

  static Origami torus() { return Origami(Permutation::identity(1), Permutation::identity(1)); }

  std::size_t degree() const { return sigma_x_.degree(); }
  const Permutation& sigma_x() const { return sigma_x_; }
  const Permutation& sigma_y() const { return sigma_y_; }

  /// sigma_x * sigma_y * sigma_x^-1 * sigma_y^-1. Its cycles are the vertex classes,
  /// square i standing for its lower-left corner.
  Permutation commutator() const;

  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Permutation sigma_x_;
  Permutation sigma_y_;
};

/// Returns the first violated condition, or nullopt when the data forms an origami.
std::optional<ErrorCode> check_origami(std::span<const std::uint32_t> sigma_x,
                                       std::span<const std::uint32_t> sigma_y);

struct Stratum {
  std::vector<int> zero_orders;  // sorted descending, one entry per cone point
  int genus = 1;
  std::size_t regular_vertices = 0;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

int genus(const Origami& o);
Stratum stratum(const Origami& o);

/// A relabeling rho with rho*sx1*rho^-1 == sx2 and rho*sy1*rho^-1 == sy2, if one exists.
std::optional<Permutation> isomorphism(const Origami& o1, const Origami& o2);
inline bool are_isomorphic(const Origami& o1, const Origami& o2) { return isomorphism(o1, o2).has_value(); }

/// Lexicographic minimum over all base squares of the breadth-first relabeling
/// (edge priority x, x^-1, y, y^-1). Equal keys iff isomorphic.
std::string canonical_key(const Origami& o);

/// Permutations commuting with both sigma_x and sigma_y (the translation group).
std::vector<Permutation> translations(const Origami& o);

struct MinusOneLift {
  Permutation rho;
  std::size_t fixed_centers = 0;
  std::size_t fixed_vertical_edge_midpoints = 0;
  std::size_t fixed_horizontal_edge_midpoints = 0;
  std::size_t fixed_vertices = 0;
  std::size_t total_fixed = 0;

  bool is_involution() const { return (rho * rho).is_identity(); }
};

/// All lifts of -I: rho with rho*sx*rho^-1 == sx^-1 and rho*sy*rho^-1 == sy^-1,
/// together with the fixed points of (i,(u,v)) -> (rho(i),(1-u,1-v)).
std::vector<MinusOneLift> minus_one_lifts(const Origami& o);

/// Genus of X/<rho> by Riemann-Hurwitz for an involutive lift; nullopt if rho is not
/// an involution or the fixed-point count is inconsistent.
std::optional<int> involution_quotient_genus(const Origami& o, const MinusOneLift& lift);

/// Quotient by a group of translations acting freely on squares.
/// Throws Error(NotFreeAction) if a non-identity element fixes a square.
Origami quotient_by_translations(const Origami& o, const std::vector<Permutation>& group);

}  // namespace veech
