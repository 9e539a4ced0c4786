#include "veech/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "veech/error.hpp"

namespace veech {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotFreeAction: return "NotFreeAction";
    case ErrorCode::NotOdd: return "NotOdd";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::BadTrace: return "BadTrace";
    case ErrorCode::BadDet: return "BadDet";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Dependent: return "Dependent";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::ExcludedValue: return "ExcludedValue";
    case ErrorCode::Unsolvable: return "Unsolvable";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_bijection(std::span<const std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw Error(ErrorCode::NotBijection, "image table is not a bijection");
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::cycle(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint32_t>((i + 1) % degree);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::uint32_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    auto& c = out.emplace_back();
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> t;
  for (const auto& c : cycles()) t.push_back(c.size());
  std::sort(t.begin(), t.end());
  return t;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (auto len : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

Permutation Permutation::conjugate_by(const Permutation& p) const { return p * (*this) * p.inverse(); }

Permutation operator*(const Permutation& p, const Permutation& q) {
  Permutation r;
  r.images_.resize(q.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

}  // namespace veech
