#include "doctest.h"

#include "braceforge/group.hpp"

using namespace braceforge;

namespace {

// Independent model of the Heisenberg group: upper unitriangular 3x3 matrices
// over F_p, [[1,a,c],[0,1,b],[0,0,1]]. The normal form u^i v^j k^q maps to
// a = i, b = j, c = q + i*j, and matrix multiplication gives
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
struct TriMat {
  unsigned a, b, c;
};

TriMat mat_of_index(unsigned p, Elem g) {
  const unsigned q = g % p, j = (g / p) % p, i = g / (p * p);
  return {i, j, (q + i * j) % p};
}

Elem index_of_mat(unsigned p, TriMat m) {
  const unsigned q = (m.c + p * p - (m.a * m.b) % p) % p;
  return static_cast<Elem>((std::size_t(m.a) * p + m.b) * p + q);
}

TriMat mat_mul(unsigned p, TriMat x, TriMat y) {
  return {(x.a + y.a) % p, (x.b + y.b) % p, (x.c + y.c + x.a * y.b) % p};
}

GroupPtr s3() {
  // C2 acting on C3 by inversion
  return semidirect_product(make_abelian({2}), make_abelian({3}),
                            {{0, 1, 2}, {0, 2, 1}});
}

} // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("build_group accepts the trivial group and Z/2") {
  auto t = build_group({{0}});
  CHECK(t->order() == 1);
  auto z2 = build_group({{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
  CHECK(z2->inv(1) == 1);
}

TEST_CASE("build_group rejects a non-Latin order-2 table") {
  CHECK_THROWS_WITH_AS(build_group({{0, 1}, {1, 1}}), "row 1 is not a permutation", Error);
  try {
    build_group({{0, 1}, {1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_latin_square);
  }
}

TEST_CASE("build_group rejects a loop that is not associative") {
  // a Latin square with two-sided identity but 1*1 = 0, impossible in a group
  // of order 5
  const std::vector<std::vector<Elem>> loop{{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 3, 4, 0, 1},
                                            {3, 4, 1, 2, 0},
                                            {4, 2, 0, 1, 3}};
  try {
    build_group(loop);
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_associative);
    CHECK(std::string(e.what()).find("triple") != std::string::npos);
  }
}

TEST_CASE("build_group relocates the identity to index 0") {
  // C3 written with identity at index 2
  const std::vector<std::vector<Elem>> shifted{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = build_group(shifted, {"a", "a^2", "1"});
  CHECK(g->mul(0, 1) == 1);
  CHECK(g->mul(1, 0) == 1);
  CHECK(g->name_of(0) == "1");
  for (Elem a = 0; a < 3; ++a) CHECK(g->mul(0, a) == a);
}

TEST_CASE("make_abelian: elementary abelian of order 9, cyclic 2 and 4") {
  auto s = make_abelian({3, 3});
  CHECK(s->order() == 9);
  for (Elem x = 1; x < 9; ++x) CHECK(s->elem_order(x) == 3);
  auto z2 = make_abelian({2});
  CHECK(z2->order() == 2);
  auto z4 = make_abelian({4});
  CHECK(z4->order() == 4);
  CHECK(z4->elem_order(1) == 4);
  CHECK(z4->is_abelian());
  z4->validate(); // by-construction tables still pass the full check
}

TEST_CASE("make_abelian rejects an empty factor list") {
  try {
    make_abelian({});
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_parameters);
  }
}

TEST_CASE("make_abelian respects the order cap") {
  const std::size_t keep = order_cap();
  set_order_cap(8);
  CHECK_THROWS_AS(make_abelian({3, 3}), Error);
  try {
    make_abelian({3, 3});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_overflow);
  }
  set_order_cap(keep);
}

TEST_CASE("heisenberg: order, center, commutator and squaring") {
  auto h = make_heisenberg(3);
  CHECK(h->order() == 27);
  const Elem u = 9, v = 3, k = 1;
  CHECK(commutator(*h, u, v) == k);
  CHECK(commutator(*h, v, u) == h->pow(k, 2)); // inverse of [u,v]
  for (Elem g = 0; g < 27; ++g) CHECK(commutator(*h, g, g) == 0);
  auto z = center(h);
  CHECK(z.members == std::vector<Elem>{0, 1, 2});
  // (1,1,0)^2 = (2,2,-1)
  const Elem uv = h->mul(u, v);
  CHECK(h->mul(uv, uv) == (Elem)((2 * 3 + 2) * 3 + 2));
  CHECK_THROWS_AS(make_heisenberg(2), Error);
  CHECK_THROWS_AS(make_heisenberg(9), Error);
  h->validate();
}

TEST_CASE("heisenberg table matches the unitriangular matrix model") {
  for (unsigned p : {3u, 5u}) {
    auto h = make_heisenberg(p);
    const std::size_t n = h->order();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem via_mat = index_of_mat(p, mat_mul(p, mat_of_index(p, a), mat_of_index(p, b)));
        REQUIRE(h->mul(a, b) == via_mat);
      }
  }
}

TEST_CASE("heisenberg: u^i v^j u^m v^n = u^{i+m} v^{j+n} k^{-jm}") {
  const unsigned p = 5;
  auto h = make_heisenberg(p);
  auto elem = [&](unsigned i, unsigned j, unsigned q) {
    return static_cast<Elem>((std::size_t(i) * p + j) * p + q);
  };
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j)
      for (unsigned m = 0; m < p; ++m)
        for (unsigned n = 0; n < p; ++n)
          CHECK(h->mul(elem(i, j, 0), elem(m, n, 0)) ==
                elem((i + m) % p, (j + n) % p, (p * p - j * m % p) % p));
}

TEST_CASE("direct products") {
  auto h = make_heisenberg(3);
  auto t = build_group({{0}});
  auto th = direct_product(t, h);
  CHECK(th->table() == h->table());
  auto klein = direct_product(make_abelian({2}), make_abelian({2}));
  CHECK(klein->order() == 4);
  int order2 = 0;
  for (Elem x = 1; x < 4; ++x)
    if (klein->elem_order(x) == 2) ++order2;
  CHECK(order2 == 3);
  auto g = direct_product(make_abelian({3, 3}), h);
  CHECK(g->order() == 243);
}

TEST_CASE("semidirect product with trivial action equals the direct product") {
  auto a = make_abelian({2});
  auto b = make_abelian({3});
  std::vector<std::vector<Elem>> trivial{{0, 1, 2}, {0, 1, 2}};
  CHECK(semidirect_product(a, b, trivial)->table() == direct_product(a, b)->table());
}

TEST_CASE("semidirect product rejects bad actions") {
  auto a = make_abelian({2});
  auto b = make_abelian({3});
  try {
    semidirect_product(a, b, {{0, 1, 2}, {0, 1, 1}});
    FAIL("expected ActionNotAutomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::action_not_automorphism);
  }
  auto c4 = make_abelian({4});
  try {
    // action[1]^2 is the identity but action[2] is the inversion
    semidirect_product(c4, b, {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}, {0, 1, 2}});
    FAIL("expected ActionNotHomomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::action_not_homomorphism);
  }
}

TEST_CASE("center of S3 is trivial; abelian groups are their own center") {
  auto g = s3();
  CHECK(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
  CHECK(center(g).members == std::vector<Elem>{0});
  auto s = make_abelian({3, 3});
  CHECK(center(s).size() == 9);
  g->validate();
}

TEST_CASE("derived subgroups") {
  auto h = make_heisenberg(3);
  CHECK(derived_subgroup(h).members == std::vector<Elem>{0, 1, 2});
  CHECK(derived_subgroup(make_abelian({4})).members == std::vector<Elem>{0});
  CHECK(derived_subgroup(s3()).size() == 3);
}

TEST_CASE("subgroup_generated") {
  auto h = make_heisenberg(3);
  CHECK(subgroup_generated(h, {}).members == std::vector<Elem>{0});
  CHECK(subgroup_generated(h, {9, 3}).size() == 27);
  CHECK(subgroup_generated(h, {1}).members == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("inner automorphisms") {
  auto h = make_heisenberg(3);
  const Elem u = 9, v = 3, k = 1;
  auto id = inner_automorphism(h, 0);
  for (Elem t = 0; t < 27; ++t) CHECK(id(t) == t);
  // u v u^-1 = v k
  CHECK(inner_automorphism(h, u)(v) == h->mul(v, k));
  auto central = inner_automorphism(h, k);
  for (Elem t = 0; t < 27; ++t) CHECK(central(t) == t);
}

TEST_CASE("inner automorphisms compose like the group") {
  auto g = s3();
  const std::size_t n = g->order();
  for (Elem a = 0; a < n; ++a) {
    const bool is_central = center(g).contains(a);
    bool is_identity = true;
    auto ia = inner_automorphism(g, a);
    for (Elem t = 0; t < n; ++t) is_identity = is_identity && ia(t) == t;
    CHECK(is_identity == is_central);
    for (Elem b = 0; b < n; ++b) {
      auto ib = inner_automorphism(g, b);
      auto iab = inner_automorphism(g, g->mul(a, b));
      for (Elem t = 0; t < n; ++t) CHECK(iab(t) == ia(ib(t)));
    }
  }
}

TEST_CASE("pow and element orders") {
  auto h = make_heisenberg(5);
  for (Elem g = 0; g < h->order(); g += 7) {
    Elem acc = 0;
    for (int e = 0; e < 12; ++e) {
      CHECK(h->pow(g, e) == acc);
      acc = h->mul(acc, g);
    }
    CHECK(h->pow(g, -1) == h->inv(g));
    if (g != 0) CHECK(h->elem_order(g) == 5); // odd p: exponent p
  }
}

TEST_CASE("subgroup_as_group repackages the center of H3 as C3") {
  auto h = make_heisenberg(3);
  auto view = subgroup_as_group(center(h));
  CHECK(view.group->order() == 3);
  CHECK(view.group->mul(1, 2) == 0);
  CHECK(view.to_parent[2] == 2);
  CHECK(view.from_parent[1] == 1);
  auto bad = Subgroup{h, {0, 1}}; // not closed: 1*1 = 2 missing
  CHECK_THROWS_AS(subgroup_as_group(bad), Error);
}

TEST_SUITE_END();
