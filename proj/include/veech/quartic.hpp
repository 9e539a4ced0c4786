#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "veech/error.hpp"

namespace veech {

using Rational = boost::multiprecision::cpp_rational;

// ---- coefficient rings -----------------------------------------------------
// Each ring provides from(Rational), +, -, *, ==, is_zero() and to_string().

struct QRing {
  Rational v;
  static QRing from(const Rational& x) { return {x}; }
  bool is_zero() const { return v == 0; }
  std::string to_string() const { return v.str(); }
  friend QRing operator+(const QRing& x, const QRing& y) { return {x.v + y.v}; }
  friend QRing operator-(const QRing& x, const QRing& y) { return {x.v - y.v}; }
  friend QRing operator*(const QRing& x, const QRing& y) { return {x.v * y.v}; }
  friend bool operator==(const QRing&, const QRing&) = default;
};

/// Q(i).
struct GaussRing {
  Rational re, im;
  static GaussRing from(const Rational& x) { return {x, 0}; }
  static GaussRing i() { return {0, 1}; }
  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const;
  friend GaussRing operator+(const GaussRing& x, const GaussRing& y) { return {x.re + y.re, x.im + y.im}; }
  friend GaussRing operator-(const GaussRing& x, const GaussRing& y) { return {x.re - y.re, x.im - y.im}; }
  friend GaussRing operator*(const GaussRing& x, const GaussRing& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussRing&, const GaussRing&) = default;
};

/// Q[t]/(t^4 - 8); t is a fourth root of 8. A field, since t^4 - 8 is Eisenstein at 2.
struct Root8Ring {
  std::array<Rational, 4> c{};  // c[k] * t^k
  static Root8Ring from(const Rational& x) { return {{x, 0, 0, 0}}; }
  static Root8Ring t() { return {{0, 1, 0, 0}}; }
  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  std::string to_string() const;
  friend Root8Ring operator+(const Root8Ring& x, const Root8Ring& y);
  friend Root8Ring operator-(const Root8Ring& x, const Root8Ring& y);
  friend Root8Ring operator*(const Root8Ring& x, const Root8Ring& y);
  friend bool operator==(const Root8Ring&, const Root8Ring&) = default;
};

// ---- forms -----------------------------------------------------------------

using Monomial = std::array<int, 3>;  // exponents of x, y, z

template <class R>
using Mat3 = std::array<std::array<R, 3>, 3>;

/// A ternary form, zero coefficients never stored.
template <class R>
class Form {
 public:
  Form() = default;

  const std::map<Monomial, R>& terms() const { return terms_; }
  R coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R::from(0) : it->second;
  }
  void add(const Monomial& m, const R& c) {
    auto it = terms_.find(m);
    R v = it == terms_.end() ? c : it->second + c;
    if (v.is_zero()) {
      if (it != terms_.end()) terms_.erase(it);
    } else {
      terms_.insert_or_assign(m, v);
    }
  }
  /// Total degree of every term equals d.
  bool homogeneous_of_degree(int d) const {
    for (const auto& [m, c] : terms_)
      if (m[0] + m[1] + m[2] != d) return false;
    return true;
  }
  Form scaled(const R& s) const {
    Form out;
    for (const auto& [m, c] : terms_) out.add(m, c * s);
    return out;
  }

  friend Form operator+(const Form& f, const Form& g) {
    Form out = f;
    for (const auto& [m, c] : g.terms_) out.add(m, c);
    return out;
  }
  friend Form operator*(const Form& f, const Form& g) {
    Form out;
    for (const auto& [m1, c1] : f.terms_)
      for (const auto& [m2, c2] : g.terms_) out.add({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    return out;
  }
  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::map<Monomial, R> terms_;
};

/// f and g agree up to a non-zero scalar (cross-multiplication, no division).
template <class R>
bool proportional(const Form<R>& f, const Form<R>& g) {
  if (f.terms().size() != g.terms().size() || f.terms().empty()) return f.terms().empty() && g.terms().empty();
  const auto& [m0, f0] = *f.terms().begin();
  const R g0 = g.coeff(m0);
  if (g0.is_zero()) return false;
  for (const auto& [m, c] : f.terms())
    if (!(c * g0 == g.coeff(m) * f0)) return false;
  return true;
}

template <class R>
R determinant(const Mat3<R>& M) {
  auto minor = [&](int r1, int r2, int c1, int c2) { return M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1]; };
  return M[0][0] * minor(1, 2, 1, 2) - M[0][1] * minor(1, 2, 0, 2) + M[0][2] * minor(1, 2, 0, 1);
}

template <class R>
Mat3<R> operator*(const Mat3<R>& M, const Mat3<R>& N) {
  Mat3<R> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      R s = R::from(0);
      for (int k = 0; k < 3; ++k) s = s + M[i][k] * N[k][j];
      out[i][j] = s;
    }
  return out;
}

/// v -> f(M v), expanded. Throws Error(NotInvertible) if det M == 0.
template <class R>
Form<R> transform_quartic(const Form<R>& f, const Mat3<R>& M) {
  if (determinant(M).is_zero()) throw Error(ErrorCode::NotInvertible, "transformation matrix is singular");
  // row k of M is the linear form substituted for variable k
  std::array<std::vector<Form<R>>, 3> powers;
  int max_deg = 0;
  for (const auto& [m, c] : f.terms()) max_deg = std::max({max_deg, m[0], m[1], m[2]});
  for (int k = 0; k < 3; ++k) {
    Form<R> linear;
    for (int j = 0; j < 3; ++j) {
      Monomial e{0, 0, 0};
      e[j] = 1;
      linear.add(e, M[k][j]);
    }
    Form<R> one;
    one.add({0, 0, 0}, R::from(1));
    powers[k].push_back(one);
    for (int p = 1; p <= max_deg; ++p) powers[k].push_back(powers[k].back() * linear);
  }
  Form<R> out;
  for (const auto& [m, c] : f.terms()) {
    Form<R> constant;
    constant.add({0, 0, 0}, c);
    out = out + constant * powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]];
  }
  return out;
}

// ---- the family C_abc ------------------------------------------------------

struct QuarticParams {
  Rational a, b, c;
  friend bool operator==(const QuarticParams&, const QuarticParams&) = default;
  friend auto operator<=>(const QuarticParams& x, const QuarticParams& y) {
    if (x.a != y.a) return x.a < y.a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.b != y.b) return x.b < y.b ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.c != y.c) return x.c < y.c ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// x^4 + y^4 + z^4 + 2a x^2y^2 + 2b x^2z^2 + 2c y^2z^2.
template <class R>
Form<R> quartic_form(const QuarticParams& p) {
  Form<R> f;
  f.add({4, 0, 0}, R::from(1));
  f.add({0, 4, 0}, R::from(1));
  f.add({0, 0, 4}, R::from(1));
  f.add({2, 2, 0}, R::from(2 * p.a));
  f.add({2, 0, 2}, R::from(2 * p.b));
  f.add({0, 2, 2}, R::from(2 * p.c));
  return f;
}

/// a^2 + b^2 + c^2 - 2abc - 1.
Rational criterion_polynomial(const QuarticParams& p);
/// a, b or c is +-1, or the criterion polynomial vanishes.
bool is_singular(const QuarticParams& p);

using ProjPoint = std::array<std::int64_t, 3>;

/// Points of P^2(F_q), normalized with first non-zero coordinate 1, where f and its
/// partials all vanish. Throws Error(BadModulus) unless q is an odd prime not dividing
/// any denominator of a, b, c.
std::vector<ProjPoint> singular_points_mod_q(const QuarticParams& p, std::int64_t q);

/// Permutation of the three slots plus a sign vector with product +1:
/// (g . p)_k = sign[k] * p_{perm[k]}.
class ParamSymmetry {
 public:
  /// Throws Error(InvalidConfig) unless perm is a permutation and the signs multiply to +1.
  ParamSymmetry(std::array<int, 3> perm, std::array<int, 3> sign);
  static ParamSymmetry identity() { return {{0, 1, 2}, {1, 1, 1}}; }

  const std::array<int, 3>& perm() const { return perm_; }
  const std::array<int, 3>& sign() const { return sign_; }
  QuarticParams apply(const QuarticParams& p) const;
  int order() const;

  /// (g * h) . p == g . (h . p)
  friend ParamSymmetry operator*(const ParamSymmetry& g, const ParamSymmetry& h);
  friend bool operator==(const ParamSymmetry&, const ParamSymmetry&) = default;
  friend auto operator<=>(const ParamSymmetry&, const ParamSymmetry&) = default;

 private:
  std::array<int, 3> perm_, sign_;
};

/// Closure of the given generators under composition.
std::vector<ParamSymmetry> generate_group(const std::vector<ParamSymmetry>& gens);
/// Slot permutations and s: (a, b, c) -> (-a, -b, c).
std::vector<ParamSymmetry> param_group_L();
/// The a <-> b swap and the sign changes.
std::vector<ParamSymmetry> subgroup_L_H();
/// Counts of elements of order 1, 2, 3, 4.
std::array<int, 4> order_profile(const std::vector<ParamSymmetry>& group);

std::set<QuarticParams> orbit_under(const std::vector<ParamSymmetry>& group, const QuarticParams& p);
inline std::set<QuarticParams> l_orbit(const QuarticParams& p) { return orbit_under(param_group_L(), p); }

/// diag(v, r, u) and the y <-> z anti-diagonal versions, entries powers of i.
std::vector<Mat3<GaussRing>> alpha_commuting_matrices();

enum class LambdaDirection { LambdaToA, AToLambda };
/// a = (lambda + 1) / (lambda - 1) and back (the same involution).
/// Throws Error(ExcludedValue) for lambda in {0, 1} or a in {1, -1}.
Rational lambda_a_convert(const Rational& value, LambdaDirection dir);
/// {l, 1/l, 1-l, 1-1/l, l/(l-1), 1/(1-l)}; throws Error(ExcludedValue) for l in {0, 1}.
std::set<Rational> legendre_orbit(const Rational& lambda);

/// Parses "3", "-2/5".
Rational parse_rational(const std::string& s);

}  // namespace veech
