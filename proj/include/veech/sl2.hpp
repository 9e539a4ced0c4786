#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "veech/origami.hpp"
#include "veech/permutation.hpp"

namespace veech {

/// An integer 2x2 matrix of determinant 1, stored row-major (a b; c d).
/// Arithmetic throws Error(Overflow) instead of wrapping.
struct MatZ {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  MatZ() = default;
  /// Throws Error(BadDet) unless a*d - b*c == 1.
  MatZ(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static MatZ identity() { return {}; }
  static MatZ S() { return {0, -1, 1, 0}; }
  static MatZ T() { return {1, 1, 0, 1}; }
  static MatZ minus_identity() { return {-1, 0, 0, -1}; }

  MatZ inverse() const { return {d, -b, -c, a}; }
  MatZ power(std::int64_t k) const;
  std::string to_string() const;

  friend MatZ operator*(const MatZ& x, const MatZ& y);
  friend bool operator==(const MatZ&, const MatZ&) = default;
};

enum class Generator : std::uint8_t { S, T };

/// A run S^k or T^k inside a word.
struct Syllable {
  Generator gen;
  std::int64_t exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word in S, T and their inverses, kept run-length encoded so that long
/// T-powers from the Euclidean reduction stay cheap.
class GeneratorWord {
 public:
  GeneratorWord() = default;

  void append(Generator gen, std::int64_t exponent);
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  /// Total number of letters from {S, S^-1, T, T^-1}.
  std::uint64_t length() const;
  /// Letters as strings ("S", "S^-1", "T", "T^-1"); only sensible for short words.
  std::vector<std::string> letters() const;
  MatZ product() const;
  std::string to_string() const;

 private:
  std::vector<Syllable> syllables_;
};

/// Exact word in S and T for A, by the Euclidean algorithm on the first column.
GeneratorWord decompose_word(const MatZ& A);

enum class Letter : std::uint8_t { S, SInv, T, TInv };

/// T.(sx, sy) = (sx, sy*sx^-1),  S.(sx, sy) = (sy^-1, sx).
Origami act_generator(Letter g, const Origami& o);

/// A transitive action of S and T on {0, ..., size-1} with base point 0.
/// Words act from the left end first: base . (g1 g2 ... gk), so the stabilizer of
/// the base is a subgroup and w_i g w_j^-1 fixes the base whenever i.g == j.
struct CosetAction {
  Permutation perm_S;
  Permutation perm_T;

  std::size_t size() const { return perm_S.degree(); }
  static constexpr std::uint32_t base = 0;

  std::uint32_t apply(Generator g, std::int64_t exponent, std::uint32_t node) const;
  std::uint32_t apply(const GeneratorWord& w, std::uint32_t node = base) const;
  std::uint32_t apply(const MatZ& A, std::uint32_t node = base) const { return apply(decompose_word(A), node); }

  bool is_transitive() const;
  /// perm_S^4 == id, (perm_S perm_T)^6 == id and perm_S^2 == (perm_S perm_T)^3.
  bool satisfies_relations() const;
};

struct OrbitGraph {
  std::vector<std::string> keys;
  std::vector<Origami> representatives;
  std::vector<std::uint32_t> s_edge;
  std::vector<std::uint32_t> t_edge;

  std::size_t size() const { return keys.size(); }
  CosetAction action() const;
};

/// Breadth-first closure under S and T, deduplicated by canonical key.
/// Nodes are numbered in discovery order; node 0 is o.
OrbitGraph orbit(const Origami& o);

inline CosetAction veech_action(const Origami& o) { return orbit(o).action(); }

/// Schreier generators of the base stabilizer: w_i * g * w_j^-1 for every non-tree
/// edge i -g-> j of a breadth-first spanning tree.
std::vector<MatZ> veech_generators(const CosetAction& a);

inline bool veech_contains(const CosetAction& a, const MatZ& A) { return a.apply(A) == CosetAction::base; }

}  // namespace veech
