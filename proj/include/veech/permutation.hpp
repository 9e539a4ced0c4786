#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace veech {

/// A bijection of {0, ..., d-1}, stored as its image table.
///
/// Composition follows function notation: (p * q)(i) == p(q(i)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(NotBijection) if `images` is not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  static Permutation cycle(std::size_t degree);  // i -> i+1 mod d

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  std::span<const std::uint32_t> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t fixed_points() const;

  /// Cycles in order of their smallest element; each cycle starts there.
  std::vector<std::vector<std::uint32_t>> cycles() const;
  /// Sorted cycle lengths.
  std::vector<std::size_t> cycle_type() const;
  std::uint64_t order() const;

  /// p * q * p^-1, i.e. relabel q by p.
  Permutation conjugate_by(const Permutation& p) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

/// Returns true if `images` is a bijection of {0, ..., images.size()-1}.
bool is_bijection(std::span<const std::uint32_t> images);

}  // namespace veech
