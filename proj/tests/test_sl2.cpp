#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "veech/modular.hpp"
#include "veech/torus_covers.hpp"

using namespace veech;

namespace {

Origami apply_letters(const std::vector<Letter>& word, Origami o, int times) {
  for (int k = 0; k < times; ++k)
    for (auto it = word.rbegin(); it != word.rend(); ++it) o = act_generator(*it, o);
  return o;
}

}  // namespace

TEST_SUITE("sl2") {

TEST_CASE("generator action basics") {
  CHECK(fixtures::identical(act_generator(Letter::T, Origami::torus()), Origami::torus()));
  CHECK(are_isomorphic(act_generator(Letter::T, build_w()), build_w()));
  CHECK(are_isomorphic(act_generator(Letter::S, build_w()), build_w()));

  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const auto o = fixtures::random_origami(1 + k % 10, rng);
    CHECK(fixtures::identical(apply_letters({Letter::S}, o, 4), o));
    CHECK(fixtures::identical(act_generator(Letter::SInv, act_generator(Letter::S, o)), o));
    CHECK(fixtures::identical(act_generator(Letter::TInv, act_generator(Letter::T, o)), o));
    // S^2 is the -I action (sx^-1, sy^-1)
    const auto s2 = apply_letters({Letter::S}, o, 2);
    CHECK(s2.sigma_x() == o.sigma_x().inverse());
    CHECK(s2.sigma_y() == o.sigma_y().inverse());
    for (auto g : {Letter::S, Letter::SInv, Letter::T, Letter::TInv}) {
      const auto x = act_generator(g, o);
      CHECK(x.degree() == o.degree());
      CHECK(stratum(x) == stratum(o));
    }
  }
}

TEST_CASE("(ST)^6 and (ST)^3 S^-2 act by relabeling") {
  // Exact on isomorphism classes (and hence on every coset action); on raw
  // permutation pairs these words act by a non-trivial inner relabeling.
  std::mt19937_64 rng(8);
  int exact = 0;
  for (int k = 0; k < 40; ++k) {
    const auto o = fixtures::random_origami(3 + k % 8, rng);
    const auto st6 = apply_letters({Letter::S, Letter::T}, o, 6);
    CHECK(are_isomorphic(st6, o));
    CHECK(are_isomorphic(apply_letters({Letter::S, Letter::T}, o, 3), apply_letters({Letter::S}, o, 2)));
    exact += fixtures::identical(st6, o);
  }
  CHECK(exact < 40);
}

TEST_CASE("orbits") {
  CHECK(orbit(Origami::torus()).size() == 1);
  const auto w = orbit(build_w());
  CHECK(w.size() == 1);
  CHECK(w.s_edge == std::vector<std::uint32_t>{0});
  CHECK(w.t_edge == std::vector<std::uint32_t>{0});

  const auto dp = build_dp(TorsionConfig(3, 1, 0), Flavor{0, 0});
  const auto g = orbit(dp);
  CHECK(g.size() == 18);
  CHECK(std::set<std::string>(g.keys.begin(), g.keys.end()).size() == 18);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(canonical_key(g.representatives[i]) == g.keys[i]);

  std::mt19937_64 rng(21);
  const auto other = orbit(fixtures::random_conjugate(dp, rng));
  CHECK(other.size() == 18);
  CHECK(std::set<std::string>(other.keys.begin(), other.keys.end()) ==
        std::set<std::string>(g.keys.begin(), g.keys.end()));
  CHECK(pointed_equivalent(other.action(), g.action()));

  CHECK(veech_action(build_dp(TorsionConfig(5, 1, 1), dp_flavor(TorsionConfig(5, 1, 1)))).size() == 90);
}

TEST_CASE("relations hold exactly on coset actions") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto a = veech_action(fixtures::random_origami(2 + k % 6, rng));
    CHECK(a.is_transitive());
    CHECK(a.satisfies_relations());
  }
  for (const auto& f : all_flavors) CHECK(veech_action(build_dp(TorsionConfig(5, 1, 1), f)).satisfies_relations());
}

TEST_CASE("decompose_word") {
  CHECK(decompose_word(MatZ::identity()).empty());
  CHECK(decompose_word(MatZ::T().power(3)).letters() == std::vector<std::string>{"T", "T", "T"});
  const MatZ A(2, 1, 1, 1);
  const auto w = decompose_word(A);
  CHECK(w.product() == A);
  CHECK(w.to_string() == "T^2 S T");
  CHECK(decompose_word(MatZ::minus_identity()).product() == MatZ::minus_identity());
  CHECK(decompose_word(MatZ::S()).product() == MatZ::S());

  std::mt19937_64 rng(1000);
  for (int k = 0; k < 1000; ++k) {
    const auto M = fixtures::random_sl2(1'000'000, rng);
    CHECK(decompose_word(M).product() == M);
  }
}

TEST_CASE("matrix arithmetic guards") {
  CHECK_THROWS_AS(MatZ(1, 1, 1, 1), Error);
  const MatZ big(1, 4'000'000'000'000'000'000LL, 0, 1);
  CHECK_THROWS_AS(big * big * big, Error);
  CHECK(MatZ::S().power(4) == MatZ::identity());
  CHECK(MatZ::T().power(-2) == MatZ(1, -2, 0, 1));
}

TEST_CASE("generators and membership") {
  const auto torus_gens = veech_generators(veech_action(Origami::torus()));
  CHECK(std::find(torus_gens.begin(), torus_gens.end(), MatZ::S()) != torus_gens.end());
  CHECK(std::find(torus_gens.begin(), torus_gens.end(), MatZ::T()) != torus_gens.end());

  const auto wa = veech_action(build_w());
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) CHECK(veech_contains(wa, fixtures::random_sl2(1000, rng)));

  const auto a = veech_action(build_dp(TorsionConfig(3, 1, 0), Flavor{0, 0}));
  CHECK_FALSE(veech_contains(a, MatZ::T()));
  CHECK(veech_contains(a, MatZ::minus_identity()));
  CHECK(veech_contains(a, MatZ::S()));
  for (const auto& M : veech_generators(a)) {
    CHECK(veech_contains(a, M));
    CHECK(in_predicted_group(MatMod::reduce(M, 6), 3));
    CHECK(in_gamma_uu(M));
  }
}

TEST_CASE("the coset action is a homomorphism") {
  const auto a = veech_action(build_dp(TorsionConfig(5, 1, 1), Flavor{1, 0}));
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) {
    const auto A = fixtures::random_sl2(50, rng);
    const auto B = fixtures::random_sl2(50, rng);
    for (std::uint32_t node : {0u, 7u, 33u}) CHECK(a.apply(A * B, node) == a.apply(B, a.apply(A, node)));
  }
}

}  // TEST_SUITE
