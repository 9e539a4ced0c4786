#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "veech/sl2.hpp"

namespace veech {

using Vec2 = std::array<std::int64_t, 2>;

std::int64_t mod_reduce(std::int64_t x, std::int64_t m);
/// Throws Error(NotInvertible) when gcd(x, m) != 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m);
bool is_prime(std::int64_t n);

/// An element of SL2(Z/m), entries kept in [0, m).
class MatMod {
 public:
  /// Throws Error(BadModulus) for m < 2 and Error(BadDet) unless ad - bc == 1 mod m.
  MatMod(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static MatMod identity(std::int64_t m) { return {m, 1, 0, 0, 1}; }
  static MatMod S(std::int64_t m) { return {m, 0, -1, 1, 0}; }
  static MatMod T(std::int64_t m) { return {m, 1, 1, 0, 1}; }
  static MatMod reduce(const MatZ& A, std::int64_t m) { return {m, A.a, A.b, A.c, A.d}; }

  std::int64_t modulus() const { return m_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t trace() const { return mod_reduce(a_ + d_, m_); }

  MatMod inverse() const { return {m_, d_, -b_, -c_, a_}; }
  MatMod negate() const { return {m_, -a_, -b_, -c_, -d_}; }
  MatMod reduce_to(std::int64_t divisor) const;
  Vec2 apply(const Vec2& v) const;
  std::string to_string() const;

  friend MatMod operator*(const MatMod& x, const MatMod& y);
  friend bool operator==(const MatMod&, const MatMod&) = default;
  friend auto operator<=>(const MatMod&, const MatMod&) = default;

 private:
  std::int64_t m_, a_, b_, c_, d_;
};

/// m^3 * prod over primes p | m of (1 - 1/p^2).
std::uint64_t sl2_group_order(std::int64_t m);
/// All of SL2(Z/m), lexicographic in (a, b, c, d).
std::vector<MatMod> sl2_enumerate(std::int64_t m);

/// Four branch points (p,q), (-q,p), (-p,-q), (q,-p) in (Z/n)^2.
class TorsionConfig {
 public:
  /// Throws Error(InvalidConfig) for n < 3 or (p, q) == (0, 0) mod n.
  TorsionConfig(std::int64_t n, std::int64_t p, std::int64_t q);

  std::int64_t n() const { return n_; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  /// P0..P3, each the rotation of the previous by S.
  std::array<Vec2, 4> points() const;
  /// Number of times (a, b) occurs among the four points.
  int multiplicity(std::int64_t a, std::int64_t b) const;

 private:
  std::int64_t n_, p_, q_;
};

/// p^2 + q^2 is a unit mod n.
bool general_position(const TorsionConfig& cfg);

/// Every element of SL2(Z/n) mapping the branch multiset to itself.
std::vector<MatMod> stab_of_config(const TorsionConfig& cfg);

struct FiniteAction {
  CosetAction action;
  std::int64_t modulus;
};

/// Membership in {A mod 2n : A = +-I or +-S mod n, and A = I or S mod 2}.
bool in_predicted_group(const MatMod& A, std::int64_t n);

/// Right-coset action of S and T on SL2(Z/2n) modulo the predicted subgroup.
/// Throws Error(NotOdd) or Error(NotGeneralPosition).
FiniteAction predicted_veech_action(const TorsionConfig& cfg);

/// True iff a base-preserving bijection intertwines both generator pairs.
bool pointed_equivalent(const CosetAction& a1, const CosetAction& a2);

struct Conjugator {
  int sign;  // B * T * B^-1 == S^sign
  MatMod B;
};

/// Conjugates a trace-0 element of SL2(F_p) to S or S^-1.
/// Throws Error with EvenModulus, NotPrime, BadTrace or BadDet.
Conjugator conj_to_rotation(const MatMod& T);

struct Alignment {
  MatMod B;
  Vec2 aligned;  // R with {B P, B Q} == {R, S R}
  int sign;      // +1 when R == B P, -1 when R == B Q
};

/// B in SL2(F_p) carrying the pair {P, Q} onto an orbit segment {R, S R}.
/// Throws Error(Dependent) if det(P | Q) == 0 mod p.
Alignment find_alignment(std::int64_t p, const Vec2& P, const Vec2& Q);

/// A = I or A = S mod 2.
bool in_gamma_uu(const MatZ& A);

}  // namespace veech
