#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "veech/torus_covers.hpp"

using namespace veech;

TEST_SUITE("flatsurf") {

TEST_CASE("composition is function composition") {
  // p = (0 1 2), q = (0 1): (p*q)(0) = p(1) = 2
  const Permutation p({1, 2, 0});
  const Permutation q({1, 0, 2});
  CHECK((p * q).images()[0] == 2);
  CHECK((p * q) == Permutation({2, 1, 0}));
  CHECK((q * p) == Permutation({0, 2, 1}));
}

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
  const Permutation c = Permutation::cycle(6);
  CHECK(c.order() == 6);
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.cycles().size() == 1);
  CHECK(Permutation({1, 0, 3, 4, 2}).cycle_type() == std::vector<std::size_t>{2, 3});
  CHECK(Permutation({1, 0, 3, 4, 2}).order() == 6);
}

TEST_CASE("validation") {
  CHECK(check_origami(std::vector<std::uint32_t>{0, 1}, std::vector<std::uint32_t>{0, 1}) == ErrorCode::NotConnected);
  CHECK(check_origami(std::vector<std::uint32_t>{0, 1}, std::vector<std::uint32_t>{0}) == ErrorCode::LengthMismatch);
  CHECK(check_origami(std::vector<std::uint32_t>{0, 0}, std::vector<std::uint32_t>{1, 0}) == ErrorCode::NotBijection);
  try {
    Origami({0, 1}, {0, 1});
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnected);
  }
  CHECK_NOTHROW(build_w());
  CHECK_NOTHROW(build_dp(TorsionConfig(3, 1, 0), Flavor{0, 0}));
}

TEST_CASE("genus and stratum") {
  CHECK(genus(Origami::torus()) == 1);
  CHECK(stratum(Origami::torus()).zero_orders.empty());
  CHECK(stratum(Origami::torus()).genus == 1);

  const auto w = stratum(build_w());
  CHECK(w.genus == 3);
  CHECK(w.zero_orders == std::vector<int>{1, 1, 1, 1});
  CHECK(w.regular_vertices == 0);

  for (const auto& f : all_flavors) {
    const auto s = stratum(build_dp(TorsionConfig(5, 1, 0), f));
    CHECK(s.genus == 3);
    CHECK(s.zero_orders == std::vector<int>{1, 1, 1, 1});
  }

  // 18 squares, 14 commutator cycles: four 2-cycles and ten fixed points
  const auto dp = build_dp(TorsionConfig(3, 1, 0), Flavor{0, 0});
  CHECK(dp.commutator().cycles().size() == 14);
  CHECK(stratum(dp).regular_vertices == 10);
}

TEST_CASE("euler characteristic on random origamis") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const auto o = fixtures::random_origami(1 + k % 12, rng);
    const auto c = static_cast<long>(o.commutator().cycles().size());
    CHECK(2 - 2 * genus(o) == c - static_cast<long>(o.degree()));
    const auto s = stratum(o);
    int sum = 0;
    for (int z : s.zero_orders) sum += z;
    CHECK(sum == 2 * s.genus - 2);
  }
}

TEST_CASE("isomorphism and canonical keys") {
  std::mt19937_64 rng(5);
  const auto w = build_w();
  const Origami cyclic(Permutation::cycle(8), Permutation::identity(8));
  CHECK_FALSE(are_isomorphic(w, cyclic));
  CHECK(canonical_key(w) != canonical_key(Origami::torus()));

  for (int k = 0; k < 100; ++k) {
    const auto o = fixtures::random_origami(2 + k % 9, rng);
    const auto c = fixtures::random_conjugate(o, rng);
    const auto rho = isomorphism(o, c);
    REQUIRE(rho);
    CHECK(o.sigma_x().conjugate_by(*rho) == c.sigma_x());
    CHECK(o.sigma_y().conjugate_by(*rho) == c.sigma_y());
    CHECK(canonical_key(o) == canonical_key(c));
  }

  // keys separate non-isomorphic origamis: compare against the exact test
  std::vector<Origami> pool;
  for (int k = 0; k < 60; ++k) pool.push_back(fixtures::random_origami(4, rng));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK((canonical_key(pool[i]) == canonical_key(pool[j])) == are_isomorphic(pool[i], pool[j]));
}

TEST_CASE("the two mixed flavors of D(3,1,0) are not isomorphic origamis") {
  // regression value from the exhaustive relabeling search
  const TorsionConfig cfg(3, 1, 0);
  CHECK_FALSE(are_isomorphic(build_dp(cfg, Flavor{1, 0}), build_dp(cfg, Flavor{0, 1})));
}

TEST_CASE("translations") {
  CHECK(translations(Origami::torus()).size() == 1);

  const auto t = translations(build_w());
  REQUIRE(t.size() == 8);
  int involutions = 0;
  for (const auto& g : t) involutions += g.order() == 2;
  CHECK(involutions == 1);
  // closed under products and inverses
  std::set<Permutation> group(t.begin(), t.end());
  for (const auto& g : t) {
    CHECK(group.count(g.inverse()) == 1);
    for (const auto& h : t) CHECK(group.count(g * h) == 1);
  }

  CHECK(translations(build_dp(TorsionConfig(3, 1, 0), Flavor{0, 0})).size() == 2);
}

TEST_CASE("minus-one lifts") {
  const auto torus_lifts = minus_one_lifts(Origami::torus());
  REQUIRE(torus_lifts.size() == 1);
  CHECK(torus_lifts[0].fixed_centers == 1);
  CHECK(torus_lifts[0].fixed_vertices == 1);
  CHECK(torus_lifts[0].fixed_vertical_edge_midpoints == 1);
  CHECK(torus_lifts[0].fixed_horizontal_edge_midpoints == 1);
  CHECK(torus_lifts[0].total_fixed == 4);

  const auto w = build_w();
  const auto lifts = minus_one_lifts(w);
  REQUIRE(lifts.size() == 8);
  int vertex_only = 0, involutions = 0;
  for (const auto& l : lifts) {
    CHECK(l.total_fixed == 4);
    vertex_only += l.fixed_vertices == 4;
    if (l.is_involution()) {
      ++involutions;
      CHECK(involution_quotient_genus(w, l) == 1);
    }
  }
  CHECK(vertex_only == 2);
  CHECK(involutions == 6);

  const auto dp = build_dp(TorsionConfig(3, 1, 0), Flavor{0, 0});
  const auto dl = minus_one_lifts(dp);
  REQUIRE(dl.size() == 2);
  CHECK(dl[0].total_fixed == 4);
  CHECK(dl[1].total_fixed == 4);
}

TEST_CASE("lift invariants on every flavor") {
  for (const auto& cfg : {TorsionConfig(3, 1, 0), TorsionConfig(5, 1, 1), TorsionConfig(5, 2, 1)})
    for (const auto& f : all_flavors) {
      const auto o = build_dp(cfg, f);
      const auto lifts = minus_one_lifts(o);
      const auto trans = translations(o);
      std::set<Permutation> tset(trans.begin(), trans.end());
      std::set<Permutation> lset;
      for (const auto& l : lifts) lset.insert(l.rho);
      for (const auto& l : lifts) {
        CHECK(l.rho * o.sigma_x() * l.rho.inverse() == o.sigma_x().inverse());
        CHECK(l.rho * o.sigma_y() * l.rho.inverse() == o.sigma_y().inverse());
        CHECK(tset.count(l.rho * l.rho) == 1);
        CHECK(l.total_fixed == l.fixed_centers + l.fixed_vertices + l.fixed_horizontal_edge_midpoints +
                                   l.fixed_vertical_edge_midpoints);
        if (l.is_involution()) {
          CHECK((l.total_fixed == 0 || l.total_fixed == 4 || l.total_fixed == 8));
          const auto g = involution_quotient_genus(o, l);
          REQUIRE(g);
          CHECK(static_cast<int>(l.total_fixed) == 8 - 4 * *g);
        }
        // a single translation coset
        std::set<Permutation> coset;
        for (const auto& t : trans) coset.insert(l.rho * t);
        CHECK(coset == lset);
      }
    }
}

TEST_CASE("quotients by translations") {
  const auto w = build_w();
  const auto t = translations(w);
  std::vector<Permutation> center{Permutation::identity(8)};
  for (const auto& g : t)
    if (g.order() == 2) center.push_back(g);
  const auto half = quotient_by_translations(w, center);
  CHECK(half.degree() == 4);
  CHECK(genus(half) == 1);

  const auto full = quotient_by_translations(w, t);
  CHECK(full.degree() == 1);
  CHECK(genus(full) == 1);

  const auto same = quotient_by_translations(Origami::torus(), {Permutation::identity(1)});
  CHECK(fixtures::identical(same, Origami::torus()));

  // a non-identity element with a fixed square
  const Origami three(Permutation::cycle(3), Permutation::identity(3));
  try {
    quotient_by_translations(three, {Permutation::identity(3), Permutation({0, 2, 1})});
    FAIL("expected NotFreeAction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFreeAction);
  }
}

}  // TEST_SUITE
