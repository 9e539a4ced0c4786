#include "veech/modular.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>
#include <sstream>

namespace veech {

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
  auto r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  std::int64_t old_r = mod_reduce(x, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw Error(ErrorCode::NotInvertible, std::to_string(x) + " is not a unit mod " + std::to_string(m));
  return mod_reduce(old_s, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

MatMod::MatMod(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : m_(m) {
  if (m < 2) throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
  a_ = mod_reduce(a, m);
  b_ = mod_reduce(b, m);
  c_ = mod_reduce(c, m);
  d_ = mod_reduce(d, m);
  if (mod_reduce(a_ * d_ - b_ * c_, m) != 1) throw Error(ErrorCode::BadDet, to_string() + " is not in SL2");
}

MatMod MatMod::reduce_to(std::int64_t divisor) const { return {divisor, a_, b_, c_, d_}; }

Vec2 MatMod::apply(const Vec2& v) const {
  return {mod_reduce(a_ * v[0] + b_ * v[1], m_), mod_reduce(c_ * v[0] + d_ * v[1], m_)};
}

std::string MatMod::to_string() const {
  std::ostringstream os;
  os << "(" << a_ << " " << b_ << "; " << c_ << " " << d_ << ") mod " << m_;
  return os.str();
}

MatMod operator*(const MatMod& x, const MatMod& y) {
  const auto m = x.m_;
  return {m, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

std::uint64_t sl2_group_order(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
  // m^3 prod (1 - p^-2) == prod over p^e || m of p^(3e-2) (p^2 - 1)
  std::uint64_t order = 1;
  auto rest = m;
  for (std::int64_t p = 2; p * p <= rest || rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const auto up = static_cast<std::uint64_t>(p);
    for (int k = 0; k < 3 * e - 2; ++k) order *= up;
    order *= up * up - 1;
  }
  return order;
}

std::vector<MatMod> sl2_enumerate(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::BadModulus, "modulus must be at least 2");
  std::vector<MatMod> out;
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = 0; b < m; ++b)
      for (std::int64_t c = 0; c < m; ++c)
        for (std::int64_t d = 0; d < m; ++d)
          if ((a * d - b * c - 1) % m == 0) out.emplace_back(m, a, b, c, d);
  return out;
}

TorsionConfig::TorsionConfig(std::int64_t n, std::int64_t p, std::int64_t q) : n_(n) {
  if (n < 3) throw Error(ErrorCode::InvalidConfig, "n must be at least 3");
  p_ = mod_reduce(p, n);
  q_ = mod_reduce(q, n);
  if (p_ == 0 && q_ == 0) throw Error(ErrorCode::InvalidConfig, "(p, q) must be non-zero mod n");
}

std::array<Vec2, 4> TorsionConfig::points() const {
  const auto r = [this](std::int64_t x) { return mod_reduce(x, n_); };
  return {Vec2{p_, q_}, Vec2{r(-q_), p_}, Vec2{r(-p_), r(-q_)}, Vec2{q_, r(-p_)}};
}

int TorsionConfig::multiplicity(std::int64_t a, std::int64_t b) const {
  const Vec2 v{mod_reduce(a, n_), mod_reduce(b, n_)};
  int k = 0;
  for (const auto& pt : points()) k += pt == v;
  return k;
}

bool general_position(const TorsionConfig& cfg) {
  const auto n = cfg.n();
  auto x = mod_reduce(cfg.p() * cfg.p() + cfg.q() * cfg.q(), n);
  return std::gcd(x, n) == 1;
}

std::vector<MatMod> stab_of_config(const TorsionConfig& cfg) {
  auto target = cfg.points();
  std::sort(target.begin(), target.end());
  std::vector<MatMod> out;
  for (const auto& A : sl2_enumerate(cfg.n())) {
    auto image = cfg.points();
    for (auto& v : image) v = A.apply(v);
    std::sort(image.begin(), image.end());
    if (image == target) out.push_back(A);
  }
  return out;
}

bool in_predicted_group(const MatMod& A, std::int64_t n) {
  const auto modn = A.reduce_to(n);
  const auto I = MatMod::identity(n);
  const auto S = MatMod::S(n);
  const bool ok_n = modn == I || modn == I.negate() || modn == S || modn == S.negate();
  const auto mod2 = A.reduce_to(2);
  const bool ok_2 = mod2 == MatMod::identity(2) || mod2 == MatMod::S(2);
  return ok_n && ok_2;
}

FiniteAction predicted_veech_action(const TorsionConfig& cfg) {
  const auto n = cfg.n();
  if (n % 2 == 0) throw Error(ErrorCode::NotOdd, "the congruence description needs odd n");
  if (!general_position(cfg)) throw Error(ErrorCode::NotGeneralPosition, "p^2 + q^2 is not a unit mod n");
  const auto m = 2 * n;

  std::vector<MatMod> subgroup;
  for (const auto& A : sl2_enumerate(m))
    if (in_predicted_group(A, n)) subgroup.push_back(A);

  auto code = [m](const MatMod& A) { return static_cast<std::size_t>(((A.a() * m + A.b()) * m + A.c()) * m + A.d()); };
  std::vector<std::int32_t> coset(static_cast<std::size_t>(m * m * m * m), -1);
  std::vector<MatMod> reps;
  auto label = [&](const MatMod& g) -> std::uint32_t {
    if (coset[code(g)] < 0) {
      const auto id = static_cast<std::int32_t>(reps.size());
      for (const auto& h : subgroup) coset[code(h * g)] = id;
      reps.push_back(g);
    }
    return static_cast<std::uint32_t>(coset[code(g)]);
  };

  label(MatMod::identity(m));
  std::vector<std::uint32_t> perm_s, perm_t;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto r = reps[i];
    perm_s.push_back(label(r * MatMod::S(m)));
    perm_t.push_back(label(r * MatMod::T(m)));
  }
  return {CosetAction{Permutation(perm_s), Permutation(perm_t)}, m};
}

bool pointed_equivalent(const CosetAction& a1, const CosetAction& a2) {
  if (a1.size() != a2.size()) return false;
  constexpr auto unset = UINT32_MAX;
  std::vector<std::uint32_t> map(a1.size(), unset);
  std::vector<bool> hit(a2.size(), false);
  std::deque<std::uint32_t> queue{CosetAction::base};
  map[CosetAction::base] = CosetAction::base;
  hit[CosetAction::base] = true;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int g = 0; g < 2; ++g) {
      const auto x2 = (g == 0 ? a1.perm_S : a1.perm_T)(x);
      const auto y2 = (g == 0 ? a2.perm_S : a2.perm_T)(map[x]);
      if (map[x2] == unset) {
        if (hit[y2]) return false;
        map[x2] = y2;
        hit[y2] = true;
        queue.push_back(x2);
      } else if (map[x2] != y2) {
        return false;
      }
    }
  }
  return std::find(map.begin(), map.end(), unset) == map.end();
}

namespace {

// A non-zero vector in the kernel of the singular matrix (a b; c d) mod p.
Vec2 kernel_vector(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  a = mod_reduce(a, p), b = mod_reduce(b, p), c = mod_reduce(c, p), d = mod_reduce(d, p);
  if (a != 0 || b != 0) return {b, mod_reduce(-a, p)};
  return {d, mod_reduce(-c, p)};
}

std::int64_t sqrt_mod(std::int64_t x, std::int64_t p) {
  x = mod_reduce(x, p);
  for (std::int64_t r = 0; r < p; ++r)
    if (r * r % p == x) return r;
  return -1;
}

// Basis change with columns v, w scaled so that the determinant is 1.
MatMod unimodular_columns(std::int64_t p, Vec2 v, const Vec2& w) {
  const auto det = mod_reduce(v[0] * w[1] - v[1] * w[0], p);
  const auto scale = mod_inverse(det, p);
  v = {v[0] * scale % p, v[1] * scale % p};
  return {p, v[0], w[0], v[1], w[1]};
}

}  // namespace

Conjugator conj_to_rotation(const MatMod& T) {
  const auto p = T.modulus();
  if (p % 2 == 0) throw Error(ErrorCode::EvenModulus, "p = 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (T.trace() != 0) throw Error(ErrorCode::BadTrace, T.to_string() + " has non-zero trace");

  Conjugator out{1, MatMod::identity(p)};
  if (p % 4 == 3) {
    // basis (v, Tv) represents T by S; flip the second vector when the determinant
    // is a non-square, then rescale both vectors
    const Vec2 v{1, 0};
    Vec2 w = T.apply(v);
    auto det = mod_reduce(w[1], p);
    if (sqrt_mod(det, p) < 0) {
      out.sign = -1;
      w = {mod_reduce(-w[0], p), mod_reduce(-w[1], p)};
      det = mod_reduce(-det, p);
    }
    const auto lambda = mod_inverse(sqrt_mod(det, p), p);
    const MatMod M(p, lambda, lambda * w[0], 0, lambda * w[1]);
    out.B = M.inverse();
  } else {
    // diagonalize T and S with eigenvalues alpha, -alpha and compose the base changes
    const auto alpha = sqrt_mod(-1, p);
    auto eigenbasis = [&](const MatMod& X) {
      const auto v = kernel_vector(p, X.a() - alpha, X.b(), X.c(), X.d() - alpha);
      const auto w = kernel_vector(p, X.a() + alpha, X.b(), X.c(), X.d() + alpha);
      return unimodular_columns(p, v, w);
    };
    const auto P = eigenbasis(T);
    const auto Q = eigenbasis(MatMod::S(p));
    out.B = Q * P.inverse();
  }

  const auto target = out.sign > 0 ? MatMod::S(p) : MatMod::S(p).inverse();
  if (out.B * T * out.B.inverse() != target) throw std::logic_error("conjugator check failed");
  return out;
}

Alignment find_alignment(std::int64_t p, const Vec2& P, const Vec2& Q) {
  if (p % 2 == 0) throw Error(ErrorCode::EvenModulus, "p = 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const Vec2 P0{mod_reduce(P[0], p), mod_reduce(P[1], p)};
  const Vec2 Q0{mod_reduce(Q[0], p), mod_reduce(Q[1], p)};
  if (mod_reduce(P0[0] * Q0[1] - P0[1] * Q0[0], p) == 0)
    throw Error(ErrorCode::Dependent, "P and Q are linearly dependent");

  // N has first column P and determinant 1, so M = N^-1 sends P to e1
  const MatMod N = P0[0] != 0 ? MatMod(p, P0[0], 0, P0[1], mod_inverse(P0[0], p))
                              : MatMod(p, 0, -mod_inverse(P0[1], p), P0[1], 0);
  const MatMod M = N.inverse();
  const auto [u, v] = M.apply(Q0);
  // trace-0, determinant-1 matrix with first column (u, v)
  const auto w = mod_reduce(-(1 + u * u) % p * mod_inverse(v, p), p);
  const MatMod S2(p, u, w, v, -u);
  const auto S1 = M.inverse() * S2 * M;  // S1 P == Q

  const auto conj = conj_to_rotation(S1);
  const auto BP = conj.B.apply(P0);
  const auto BQ = conj.B.apply(Q0);
  return {conj.B, conj.sign > 0 ? BP : BQ, conj.sign};
}

bool in_gamma_uu(const MatZ& A) {
  const auto r = MatMod::reduce(A, 2);
  return r == MatMod::identity(2) || r == MatMod::S(2);
}

}  // namespace veech
