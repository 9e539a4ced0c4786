#include <doctest.h>

#include <random>

#include "veech/quartic.hpp"

using namespace veech;

namespace {

template <class R>
R evaluate(const Form<R>& f, const std::array<R, 3>& v) {
  R s = R::from(0);
  for (const auto& [m, c] : f.terms()) {
    R t = c;
    for (int k = 0; k < 3; ++k)
      for (int e = 0; e < m[k]; ++e) t = t * v[k];
    s = s + t;
  }
  return s;
}

template <class R>
Form<R> derivative(const Form<R>& f, int var) {
  Form<R> out;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    auto e = m;
    --e[var];
    out.add(e, c * R::from(m[var]));
  }
  return out;
}

template <class R>
bool singular_at(const Form<R>& f, const std::array<R, 3>& v) {
  if (!evaluate(f, v).is_zero()) return false;
  for (int k = 0; k < 3; ++k)
    if (!evaluate(derivative(f, k), v).is_zero()) return false;
  return true;
}

Mat3<QRing> rational_matrix(const std::array<int, 9>& e) {
  Mat3<QRing> M;
  for (int k = 0; k < 9; ++k) M[k / 3][k % 3] = QRing::from(e[k]);
  return M;
}

QuarticParams params(int a, int b, int c) { return {a, b, c}; }

}  // namespace

TEST_SUITE("quartic") {

TEST_CASE("coefficient rings") {
  CHECK(GaussRing::i() * GaussRing::i() == GaussRing::from(-1));
  const auto t = Root8Ring::t();
  CHECK(t * t * t * t == Root8Ring::from(8));
  CHECK((t * t).to_string() == "t^2");
  CHECK((GaussRing::from(Rational(1, 2)) - GaussRing::i()).to_string() == "1/2 - i");
  CHECK(parse_rational("-2/5") == Rational(-2, 5));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/"));
}

TEST_CASE("singularity criterion") {
  CHECK_FALSE(is_singular(params(0, 0, 0)));
  CHECK(criterion_polynomial(params(0, 0, 0)) == -1);
  CHECK(is_singular(params(1, 2, 3)));
  CHECK(is_singular(params(7, 2, 2)));
  CHECK(criterion_polynomial(params(7, 2, 2)) == 0);
  CHECK(is_singular({Rational(1, 2), -1, Rational(5, 3)}));
  CHECK_FALSE(is_singular(params(2, 3, 5)));
}

TEST_CASE("explicit singular points over Q(i)") {
  const auto i = GaussRing::i();
  const auto one = GaussRing::from(1), zero = GaussRing::from(0);
  // (1 : i : 0) whenever a = 1
  for (int b : {-3, 0, 2, 5})
    for (int c : {-1, 4}) CHECK(singular_at(quartic_form<GaussRing>(params(1, b, c)), {one, i, zero}));
  // (1 : 1 : 2i) on the criterion surface
  CHECK(singular_at(quartic_form<GaussRing>(params(7, 2, 2)), {one, one, GaussRing::from(2) * i}));
  CHECK_FALSE(singular_at(quartic_form<GaussRing>(params(0, 0, 0)), {one, i, zero}));
}

TEST_CASE("singular points over finite fields") {
  CHECK(singular_points_mod_q(params(0, 0, 0), 5).empty());
  // from an independent brute-force sweep
  CHECK(singular_points_mod_q(params(1, 2, 3), 13) == std::vector<ProjPoint>{{1, 5, 0}, {1, 8, 0}});
  CHECK(singular_points_mod_q(params(7, 2, 2), 13) ==
        std::vector<ProjPoint>{{1, 1, 3}, {1, 1, 10}, {1, 12, 3}, {1, 12, 10}});
  for (std::int64_t q : {2, 9, 1, -3}) CHECK_THROWS_AS(singular_points_mod_q(params(0, 0, 0), q), Error);
  CHECK_THROWS_AS(singular_points_mod_q({Rational(1, 13), 0, 0}, 13), Error);
  CHECK(singular_points_mod_q({Rational(1, 2), 0, 0}, 13).empty());
}

TEST_CASE("finite-field sanity sweep") {
  // a smooth curve over Q can only acquire a singular point mod q if q divides the
  // reduced product (a^2-1)(b^2-1)(c^2-1)(a^2+b^2+c^2-2abc-1)
  std::mt19937_64 rng(200);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  int flagged = 0, checked = 0;
  for (int k = 0; k < 400; ++k) {
    const QuarticParams p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (is_singular(p)) continue;
    const Rational prod = (p.a * p.a - 1) * (p.b * p.b - 1) * (p.c * p.c - 1) * criterion_polynomial(p);
    for (std::int64_t q : {11, 13}) {
      const auto num_mod = boost::multiprecision::numerator(prod) % q;
      if (num_mod == 0) {
        ++flagged;
        continue;
      }
      ++checked;
      CHECK(singular_points_mod_q(p, q).empty());
    }
  }
  CHECK(checked > 300);
  MESSAGE("flagged (q divides the reduced product): " << flagged);
}

TEST_CASE("coordinate transforms") {
  const auto f = quartic_form<QRing>(params(2, 3, 5));
  const auto I = rational_matrix({1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(transform_quartic(f, I) == f);
  CHECK(transform_quartic(f, I).homogeneous_of_degree(4));
  CHECK(f.terms().size() == 6);
  CHECK_THROWS_AS(transform_quartic(f, rational_matrix({1, 2, 3, 2, 4, 6, 0, 0, 1})), Error);

  // f_030(x + z, t y, x - z) = 8 f_000 in Q[t]/(t^4 - 8)
  const auto one = Root8Ring::from(1), zero = Root8Ring::from(0);
  const Mat3<Root8Ring> M{{{one, zero, one}, {zero, Root8Ring::t(), zero}, {one, zero, Root8Ring::from(-1)}}};
  const auto g = transform_quartic(quartic_form<Root8Ring>(params(0, 3, 0)), M);
  CHECK(g == quartic_form<Root8Ring>(params(0, 0, 0)).scaled(Root8Ring::from(8)));
  CHECK(proportional(g, quartic_form<Root8Ring>(params(0, 0, 0))));
  CHECK_FALSE(proportional(g, quartic_form<Root8Ring>(params(0, 3, 0))));
}

TEST_CASE("transforms compose") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(-3, 3);
  const auto f = quartic_form<QRing>({Rational(1, 3), -2, 5});
  for (int k = 0; k < 10; ++k) {
    Mat3<QRing> M, N;
    for (auto& row : M)
      for (auto& x : row) x = QRing::from(e(rng));
    for (auto& row : N)
      for (auto& x : row) x = QRing::from(e(rng));
    if (determinant(M).is_zero() || determinant(N).is_zero()) continue;
    CHECK(transform_quartic(transform_quartic(f, M), N) == transform_quartic(f, M * N));
  }
}

TEST_CASE("diagonal fourth roots of unity") {
  const auto units = std::array{GaussRing::from(1), GaussRing::i(), GaussRing::from(-1),
                                GaussRing::from(0) - GaussRing::i()};
  const auto zero = GaussRing::from(0);
  const QuarticParams p{2, 3, 5};
  for (const auto& v : units)
    for (const auto& r : units)
      for (const auto& u : units) {
        const Mat3<GaussRing> D{{{v, zero, zero}, {zero, r, zero}, {zero, zero, u}}};
        // squares are +-1; (a v^2 r^2, b v^2 u^2, c r^2 u^2)
        auto sq = [](const GaussRing& x) { return (x * x).re; };
        const QuarticParams expect{p.a * sq(v) * sq(r), p.b * sq(v) * sq(u), p.c * sq(r) * sq(u)};
        CHECK(transform_quartic(quartic_form<GaussRing>(p), D) == quartic_form<GaussRing>(expect));
        CHECK(sq(v) * sq(r) * sq(v) * sq(u) * sq(r) * sq(u) == 1);
      }
}

TEST_CASE("the parameter group L") {
  const auto L = param_group_L();
  CHECK(L.size() == 24);
  CHECK(order_profile(L) == std::array<int, 4>{1, 9, 8, 6});
  const ParamSymmetry s({0, 1, 2}, {-1, -1, 1});
  CHECK(s * s == ParamSymmetry::identity());
  CHECK_THROWS_AS(ParamSymmetry({0, 1, 2}, {-1, 1, 1}), Error);
  CHECK_THROWS_AS(ParamSymmetry({0, 0, 2}, {1, 1, 1}), Error);

  CHECK(l_orbit(params(0, 0, 0)).size() == 1);
  CHECK(l_orbit(params(2, 3, 5)).size() == 24);
  CHECK(l_orbit(params(2, 2, 2)).size() == 4);

  // the criterion is L-invariant
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  for (int k = 0; k < 50; ++k) {
    const QuarticParams p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    for (const auto& g : L) {
      CHECK(is_singular(g.apply(p)) == is_singular(p));
      CHECK(criterion_polynomial(g.apply(p)) == criterion_polynomial(p));
    }
  }
  // action property
  const QuarticParams p{2, 3, 5};
  for (const auto& g : L)
    for (const auto& h : L) CHECK((g * h).apply(p) == g.apply(h.apply(p)));
}

TEST_CASE("the subgroup L_H") {
  const auto L = param_group_L();
  const auto LH = subgroup_L_H();
  CHECK(LH.size() == 8);
  CHECK(L.size() == 3 * LH.size());
  for (const auto& g : LH) CHECK(std::find(L.begin(), L.end(), g) != L.end());
  CHECK(orbit_under(LH, params(2, 3, 5)).size() == 8);
}

TEST_CASE("projective maps commuting with x -> -x realize L_H") {
  const auto mats = alpha_commuting_matrices();
  CHECK(mats.size() == 128);
  const QuarticParams p{2, 3, 5};
  const auto f = quartic_form<GaussRing>(p);
  std::set<QuarticParams> reached;
  for (const auto& M : mats) {
    const auto g = transform_quartic(f, M);
    // leading coefficients are fourth powers of units, hence 1
    REQUIRE(g.coeff({4, 0, 0}) == GaussRing::from(1));
    const auto half = [&](const Monomial& m) {
      const auto c = g.coeff(m);
      REQUIRE(c.im == 0);
      return c.re / 2;
    };
    const QuarticParams image{half({2, 2, 0}), half({2, 0, 2}), half({0, 2, 2})};
    CHECK(g == quartic_form<GaussRing>(image));
    reached.insert(image);
  }
  CHECK(reached == orbit_under(subgroup_L_H(), p));
}

TEST_CASE("Legendre parameter") {
  CHECK(lambda_a_convert(-1, LambdaDirection::LambdaToA) == 0);
  CHECK(lambda_a_convert(2, LambdaDirection::LambdaToA) == 3);
  CHECK(lambda_a_convert(3, LambdaDirection::AToLambda) == 2);
  CHECK_THROWS_AS(lambda_a_convert(1, LambdaDirection::AToLambda), Error);
  CHECK_THROWS_AS(lambda_a_convert(-1, LambdaDirection::AToLambda), Error);
  CHECK_THROWS_AS(lambda_a_convert(0, LambdaDirection::LambdaToA), Error);
  CHECK_THROWS_AS(lambda_a_convert(1, LambdaDirection::LambdaToA), Error);

  std::mt19937_64 rng(100);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  int done = 0;
  while (done < 100) {
    const Rational l(num(rng), den(rng));
    if (l == 0 || l == 1) continue;
    const auto a = lambda_a_convert(l, LambdaDirection::LambdaToA);
    CHECK(lambda_a_convert(a, LambdaDirection::AToLambda) == l);
    ++done;
  }

  CHECK(legendre_orbit(2) == std::set<Rational>{2, Rational(1, 2), -1});
  CHECK(legendre_orbit(-1) == legendre_orbit(2));
  CHECK(legendre_orbit(3) ==
        std::set<Rational>{3, Rational(1, 3), -2, Rational(2, 3), Rational(3, 2), Rational(-1, 2)});
  CHECK_THROWS_AS(legendre_orbit(0), Error);
  CHECK_THROWS_AS(legendre_orbit(1), Error);
}

}  // TEST_SUITE
