#include "veech/gf2.hpp"

#include <numeric>
#include <stdexcept>

namespace veech {

Gf2System::Gf2System(std::size_t variables) : vars_(variables), words_((variables + 63) / 64) {}

void Gf2System::add_equation(const std::vector<std::size_t>& vars, bool rhs) {
  Row r(words_, 0);
  for (auto k : vars) {
    if (k >= vars_) throw std::out_of_range("variable index out of range");
    r[k / 64] ^= std::uint64_t{1} << (k % 64);
  }
  rows_.push_back(std::move(r));
  rhs_.push_back(rhs);
}

std::optional<std::vector<std::uint8_t>> Gf2System::solve(const std::vector<std::size_t>& column_order) const {
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(vars_);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != vars_) throw std::invalid_argument("column order must list every variable once");

  auto rows = rows_;
  std::vector<bool> rhs = rhs_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::size_t next = 0;
  for (auto col : order) {
    std::size_t r = next;
    while (r < rows.size() && !bit(rows[r], col)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[next]);
    {
      bool t = rhs[r];
      rhs[r] = rhs[next];
      rhs[next] = t;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == next || !bit(rows[k], col)) continue;
      for (std::size_t w = 0; w < words_; ++w) rows[k][w] ^= rows[next][w];
      rhs[k] = rhs[k] != rhs[next];
    }
    pivots.emplace_back(next, col);
    ++next;
  }
  for (std::size_t r = next; r < rows.size(); ++r)
    if (rhs[r]) return std::nullopt;

  // reduced form: each pivot row has a single pivot and free variables are zero
  std::vector<std::uint8_t> x(vars_, 0);
  for (auto [r, col] : pivots) x[col] = rhs[r];
  return x;
}

bool Gf2System::satisfied_by(const std::vector<std::uint8_t>& x) const {
  if (x.size() != vars_) return false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    bool s = false;
    for (std::size_t k = 0; k < vars_; ++k)
      if (bit(rows_[r], k) && x[k]) s = !s;
    if (s != rhs_[r]) return false;
  }
  return true;
}

}  // namespace veech
