#include "doctest.h"

#include "braceforge/gamma.hpp"
#include "braceforge/group.hpp"
#include "braceforge/reference.hpp"
#include "braceforge/rng.hpp"
#include "braceforge/rota_baxter.hpp"

using namespace braceforge;

namespace {

GroupMap power_map(const GroupPtr& g, long long e) {
  GroupMap m{g, g, std::vector<Elem>(g->order())};
  for (Elem x = 0; x < g->order(); ++x) m.images[x] = g->pow(x, e);
  return m;
}

GroupMap constant_one(const GroupPtr& g) {
  return {g, g, std::vector<Elem>(g->order(), 0)};
}

} // namespace

TEST_SUITE_BEGIN("gamma");

TEST_CASE("trivial gamma: identity actions, circle equals dot") {
  auto h = make_heisenberg(3);
  GammaFunction gamma = gamma_from_inner_rep(h, constant_one(h));
  for (Elem g = 0; g < 27; ++g)
    for (Elem t = 0; t < 27; ++t) CHECK(gamma.action[g][t] == t);
  CHECK(verify_gamma(gamma).holds);
  CHECK(circle_group(gamma)->table() == h->table());
}

TEST_CASE("conjugation powers give gamma functions on the Heisenberg group") {
  for (unsigned p : {3u, 5u}) {
    auto h = make_heisenberg(p);
    for (unsigned alpha = 0; alpha < p; ++alpha) {
      GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, alpha));
      CHECK(verify_gamma(gamma).holds);
    }
  }
}

TEST_CASE("central recodings of the representative leave gamma unchanged") {
  auto h = make_heisenberg(3);
  SplitMix64 rng(11);
  GroupMap c = power_map(h, 2);
  GroupMap recoded = c;
  for (Elem x = 0; x < 27; ++x)
    recoded.images[x] = h->mul(static_cast<Elem>(rng.below(3)), c.images[x]); // central k-powers
  GammaFunction g1 = gamma_from_inner_rep(h, c);
  GammaFunction g2 = gamma_from_inner_rep(h, recoded);
  CHECK(g1.action == g2.action);
}

TEST_CASE("a corrupted action row fails verification with a checkable witness") {
  auto h = make_heisenberg(3);
  GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, 1));
  // replace action[u] by the identity permutation: still an automorphism, but
  // the functional equation must now fail somewhere
  const Elem u = 9;
  for (Elem t = 0; t < 27; ++t) gamma.action[u][t] = t;
  const PairVerdict v = verify_gamma(gamma);
  REQUIRE_FALSE(v.holds);
  // the reported pair really violates the equation
  const FiniteGroup& hh = *h;
  const Elem lhs = hh.mul(v.g, gamma.action[v.g][v.h]);
  bool equal = true;
  for (Elem t = 0; t < 27; ++t)
    equal = equal && gamma.action[lhs][t] == gamma.action[v.g][gamma.action[v.h][t]];
  CHECK_FALSE(equal);
  // and it is the first such pair
  const PairVerdict ref = ref::gamma_equation(gamma);
  CHECK(ref.g == v.g);
  CHECK(ref.h == v.h);
}

TEST_CASE("verify_gamma rejects non-automorphism rows") {
  auto h = make_heisenberg(3);
  GammaFunction gamma = gamma_from_inner_rep(h, constant_one(h));
  std::swap(gamma.action[5][0], gamma.action[5][1]); // no longer multiplicative
  CHECK_THROWS_AS(verify_gamma(gamma), Error);
}

TEST_CASE("alpha-family circle operation is g h [g,h]^alpha") {
  for (unsigned p : {3u, 5u}) {
    auto h = make_heisenberg(p);
    for (unsigned alpha = 0; alpha < p; ++alpha) {
      GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, alpha));
      REQUIRE(verify_gamma(gamma).holds);
      auto circle = circle_group(gamma);
      for (Elem g = 0; g < h->order(); ++g)
        for (Elem x = 0; x < h->order(); ++x)
          CHECK(circle->mul(g, x) == h->mul(h->mul(g, x), h->pow(h->comm(g, x), alpha)));
    }
  }
}

TEST_CASE("circle group is abelian exactly at alpha = -1/2") {
  for (unsigned p : {3u, 5u, 7u}) {
    const unsigned critical = (p - 1) / 2; // -1/2 mod p
    for (unsigned alpha = 0; alpha < p; ++alpha) {
      auto h = make_heisenberg(p);
      GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, alpha));
      REQUIRE(verify_gamma(gamma).holds);
      CHECK(circle_group(gamma)->is_abelian() == (alpha == critical));
    }
  }
}

TEST_CASE("alpha-family powers and inverses agree between dot and circle") {
  const unsigned p = 5;
  auto h = make_heisenberg(p);
  GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, 3));
  REQUIRE(verify_gamma(gamma).holds);
  auto circle = circle_group(gamma);
  for (Elem g = 0; g < h->order(); ++g) {
    CHECK(circle->inv(g) == h->inv(g));
    Elem dot_pow = 0, circ_pow = 0;
    for (int e = 0; e < 6; ++e) {
      CHECK(dot_pow == circ_pow);
      dot_pow = h->mul(dot_pow, g);
      circ_pow = circle->mul(circ_pow, g);
    }
  }
}

TEST_CASE("functional equation restates as multiplicativity over the circle") {
  auto h = make_heisenberg(3);
  GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, 2));
  REQUIRE(verify_gamma(gamma).holds);
  auto circle = circle_group(gamma);
  for (Elem g = 0; g < 27; ++g)
    for (Elem x = 0; x < 27; ++x) {
      const Elem gh = circle->mul(g, x);
      for (Elem t = 0; t < 27; ++t)
        CHECK(gamma.action[gh][t] == gamma.action[g][gamma.action[x][t]]);
    }
}

TEST_CASE("skew-brace verdicts") {
  auto z4 = make_abelian({4});
  CHECK(verify_skew_brace(*z4, *z4).holds); // trivial brace

  // C4 with the Klein table on the same indices is a genuine brace
  auto klein = make_abelian({2, 2});
  CHECK(verify_skew_brace(*z4, *klein).holds);

  // relabeling C4 by the transposition 1<->2 breaks the identity
  const std::vector<Elem> perm{0, 2, 1, 3};
  std::vector<std::vector<Elem>> relab(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) relab[a][b] = perm[(perm[a] + perm[b]) % 4];
  auto twisted = build_group(relab);
  const TripleVerdict v = verify_skew_brace(*z4, *twisted);
  REQUIRE_FALSE(v.holds);
  CHECK(v.g == 2);
  CHECK(v.h == 1);
  CHECK(v.k == 1);
  const TripleVerdict rv = ref::skew_brace(*z4, *twisted);
  CHECK(rv.g == v.g);
  CHECK(rv.h == v.h);
  CHECK(rv.k == v.k);

  auto z2 = make_abelian({2});
  CHECK_THROWS_AS(verify_skew_brace(*z4, *z2), Error);
}

TEST_CASE("inner_image_check accepts inner-built gammas") {
  auto h = make_heisenberg(3);
  GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, 1));
  REQUIRE(verify_gamma(gamma).holds);
  const InnerCheck inner = inner_image_check(gamma);
  CHECK(inner.all_inner);
  // returned representatives really conjugate to the actions
  for (Elem g = 0; g < 27; ++g)
    for (Elem t = 0; t < 27; ++t) CHECK(gamma.action[g][t] == h->conj(inner.reps[g], t));
}

TEST_CASE("gamma_of_brace round-trips circle_group") {
  auto h = make_heisenberg(3);
  for (unsigned alpha : {0u, 1u, 2u}) {
    GammaFunction gamma = gamma_from_inner_rep(h, power_map(h, alpha));
    REQUIRE(verify_gamma(gamma).holds);
    auto circle = circle_group(gamma);
    GammaFunction back = gamma_of_brace(h, circle);
    CHECK(back.action == gamma.action);
    CHECK(back.verified);
  }
}

TEST_CASE("gamma_of_brace round-trips every enumerated operator brace") {
  // small-order property sweep: dot with the circle of each operator
  for (const auto& g : {make_abelian({2, 2}),
                        semidirect_product(make_abelian({2}), make_abelian({3}),
                                           {{0, 1, 2}, {0, 2, 1}})}) {
    for (auto& b : enumerate_rb(g)) {
      GammaFunction gamma = gamma_of_rb(b);
      auto circle = circle_group(gamma);
      GammaFunction back = gamma_of_brace(g, circle);
      CHECK(back.action == gamma.action);
    }
  }
}

TEST_CASE("gamma_of_brace rejects non-braces") {
  auto z4 = make_abelian({4});
  const std::vector<Elem> perm{0, 2, 1, 3};
  std::vector<std::vector<Elem>> relab(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) relab[a][b] = perm[(perm[a] + perm[b]) % 4];
  auto twisted = build_group(relab);
  try {
    gamma_of_brace(z4, twisted);
    FAIL("expected NotASkewBrace");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_skew_brace);
  }
}

TEST_SUITE_END();
