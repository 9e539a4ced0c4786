#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace veech {

/// Dense linear system over the two-element field, one bit-packed row per equation.
class Gf2System {
 public:
  explicit Gf2System(std::size_t variables);

  std::size_t variables() const { return vars_; }
  std::size_t equations() const { return rhs_.size(); }

  /// Adds sum_{k in vars} x_k = rhs; repeated indices cancel.
  void add_equation(const std::vector<std::size_t>& vars, bool rhs);

  /// Gaussian elimination with free variables set to 0. Pivot columns are tried in
  /// `column_order` (default 0, 1, ...). Returns nullopt if inconsistent.
  std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::size_t>& column_order = {}) const;

  /// Checks a candidate assignment against every equation.
  bool satisfied_by(const std::vector<std::uint8_t>& x) const;

 private:
  using Row = std::vector<std::uint64_t>;
  std::size_t vars_;
  std::size_t words_;
  std::vector<Row> rows_;
  std::vector<bool> rhs_;

  bool bit(const Row& r, std::size_t k) const { return (r[k / 64] >> (k % 64)) & 1; }
};

}  // namespace veech
