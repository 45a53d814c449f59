#include "doctest.h"

#include "braceforge/gallery.hpp"
#include "braceforge/rng.hpp"

using namespace braceforge;

namespace {

Elem heis(unsigned p, unsigned i, unsigned j, unsigned q) {
  return static_cast<Elem>((std::size_t(i % p) * p + j % p) * p + q % p);
}

} // namespace

TEST_SUITE_BEGIN("gallery");

TEST_CASE("alpha = 0 degenerates to the trivial data") {
  const AlphaFamilyInstance inst = build_alpha_family(3, 0);
  CHECK(inst.splits);
  for (Elem v : inst.kappa.values) CHECK(v == 0);
  CHECK(inst.circle->table() == inst.heisenberg->table());
  const RotaBaxterOperator b = rb_formula_alpha(3, 0);
  CHECK(b.images == std::vector<Elem>(27, 0));
}

TEST_CASE("split flags match the residue arithmetic of -1/2") {
  CHECK_FALSE(build_alpha_family(3, 1).splits);
  CHECK(build_alpha_family(3, 0).splits);
  CHECK(build_alpha_family(3, 2).splits);
  CHECK_FALSE(build_alpha_family(5, 2).splits);
  CHECK(build_alpha_family(5, 1).splits);
  CHECK_FALSE(build_alpha_family(7, 3).splits);
}

TEST_CASE("kappa exponent is well defined on residue representatives") {
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned alpha = 0; alpha < p; ++alpha) {
      const unsigned long long lifted = alpha + p;
      const unsigned via_lift = static_cast<unsigned>(lifted * (lifted + 1) / 2 % p);
      CHECK(alpha_kappa_exponent(p, alpha) == via_lift);
    }
}

TEST_CASE("kappa at p=5, alpha=1 is the inverse commutator") {
  const AlphaFamilyInstance inst = build_alpha_family(5, 1);
  CHECK(alpha_kappa_exponent(5, 1) == 1);
  const FiniteGroup& h = *inst.heisenberg;
  for (Elem g = 0; g < h.order(); g += 3)
    for (Elem x = 0; x < h.order(); x += 3)
      CHECK(inst.center_coeff->to_parent[inst.kappa.at(g, x)] == h.inv(h.comm(g, x)));
}

TEST_CASE("circle commutators equal dot commutators to the power 1+2a") {
  for (unsigned p : {3u, 5u}) {
    for (unsigned alpha = 0; alpha < p; ++alpha) {
      const AlphaFamilyInstance inst = build_alpha_family(p, alpha);
      const FiniteGroup& h = *inst.heisenberg;
      const FiniteGroup& c = *inst.circle;
      for (Elem g = 0; g < h.order(); ++g)
        for (Elem x = 0; x < h.order(); ++x) {
          const Elem circ_comm = c.mul(c.mul(c.mul(g, x), c.inv(g)), c.inv(x));
          CHECK(circ_comm == h.pow(h.comm(g, x), (1 + 2 * alpha) % p));
        }
      CHECK(inst.k_tilde == h.pow(heis(p, 0, 0, 1), (1 + 2 * alpha) % p));
    }
  }
}

TEST_CASE("closed-form operator: boundary alphas give the constant and inversion maps") {
  for (unsigned p : {3u, 5u}) {
    const RotaBaxterOperator zero = rb_formula_alpha(p, 0);
    CHECK(zero.images == std::vector<Elem>(p * p * p, 0));
    const RotaBaxterOperator inv = rb_formula_alpha(p, p - 1);
    auto h = inv.group;
    for (Elem g = 0; g < h->order(); ++g) CHECK(inv.images[g] == h->inv(g));
  }
}

TEST_CASE("closed-form operator at p=3, alpha=2 is the squaring map") {
  const RotaBaxterOperator b = rb_formula_alpha(3, 2);
  auto h = b.group;
  for (Elem g = 0; g < 27; ++g) CHECK(b.images[g] == h->mul(g, g));
  // and in coordinates: u^{2i} v^{2j} k^{2r-ij}
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      for (unsigned r = 0; r < 3; ++r)
        CHECK(b.images[heis(3, i, j, r)] == heis(3, 2 * i, 2 * j, 2 * r + 3 - i * j % 3));
}

TEST_CASE("closed-form operator at alpha = 1 has gamma(g) = conj(g)") {
  const RotaBaxterOperator b = rb_formula_alpha(5, 1);
  const GammaFunction gamma = gamma_of_rb(b);
  auto h = b.group;
  for (Elem g = 0; g < h->order(); ++g)
    for (Elem t = 0; t < h->order(); ++t) CHECK(gamma.action[g][t] == h->conj(g, t));
}

TEST_CASE("brace of the closed-form operator has the twisted commutator") {
  const RotaBaxterOperator b = rb_formula_alpha(3, 2);
  const SkewBrace brace = brace_of_rb(b);
  const FiniteGroup& c = *brace.circle;
  const Elem u = heis(3, 1, 0, 0), v = heis(3, 0, 1, 0);
  const Elem comm = c.mul(c.mul(c.mul(u, v), c.inv(u)), c.inv(v));
  CHECK(comm == heis(3, 0, 0, (1 + 2 * 2) % 3));
}

TEST_CASE("rb_formula_alpha refuses the critical residue") {
  CHECK_THROWS_AS(rb_formula_alpha(3, 1), Error);
  CHECK_THROWS_AS(rb_formula_alpha(5, 2), Error);
  try {
    rb_formula_alpha(7, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::alpha_is_minus_half);
  }
}

TEST_CASE("normal_form_switch") {
  CHECK(normal_form_switch(5, 1, 0, 0, 0) == std::array<unsigned, 3>{0, 0, 0});
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j)
      CHECK(normal_form_switch(5, 1, i, j, i * j % 5)[2] == 0); // r = ij*alpha => q = 0
  CHECK(normal_form_switch(5, 1, 1, 1, 4) == std::array<unsigned, 3>{1, 1, 1});
  CHECK_THROWS_AS(normal_form_switch(3, 1, 0, 0, 1), Error);
}

TEST_CASE("normal_form_switch matches the circle normal form") {
  for (unsigned alpha : {1u, 3u}) {
    const AlphaFamilyInstance inst = build_alpha_family(5, alpha);
    const FiniteGroup& c = *inst.circle;
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = 0; j < 5; ++j)
        for (unsigned r = 0; r < 5; ++r) {
          const auto [ii, jj, q] = normal_form_switch(5, alpha, i, j, r);
          // u^i o v^j o ktilde^q computed with circle operations
          Elem acc = c.mul(c.pow(heis(5, 1, 0, 0), ii), c.pow(heis(5, 0, 1, 0), jj));
          acc = c.mul(acc, c.pow(inst.k_tilde, q));
          CHECK(acc == heis(5, i, j, r));
        }
  }
}

TEST_CASE("three split certificates agree across the family") {
  for (unsigned p : {3u, 5u}) {
    for (unsigned alpha = 0; alpha < p; ++alpha) {
      const AlphaFamilyInstance inst = build_alpha_family(p, alpha);
      const CoboundarySolve solve = solve_coboundary(inst.kappa);
      CHECK(solve.solvable == inst.splits);
      const CentralExtension e = build_central_extension(inst.kappa);
      const Elem u = heis(p, 1, 0, 0), v = heis(p, 0, 1, 0);
      const ComplementSearch comp = find_complement(e, {u, v});
      CHECK(comp.found == inst.splits);
      CHECK(comp.candidates <= std::uint64_t(p) * p);
      const Obstruction obs = derived_intersection_obstruction(e);
      CHECK(obs.nontrivial == !inst.splits);
      if (obs.nontrivial) CHECK(inst.center_coeff->to_parent[obs.witness] == heis(p, 0, 0, 1));
      if (inst.splits) {
        // the closed-form sigma certifies kappa and its section splits E
        const Coboundary sigma = alpha_sigma_closed_form(inst);
        CHECK(sigma.certifies(inst.kappa));
        const GroupMap section = alpha_splitting_section(inst, e);
        CHECK(section.is_homomorphism());
        const TwoCocycle split = extract_cocycle_from_section(e, section);
        for (Elem val : split.values) CHECK(val == 0);
      }
    }
  }
}

TEST_CASE("standard-section commutators in the extension follow the twisted powers") {
  const unsigned p = 5, alpha = 1;
  const AlphaFamilyInstance inst = build_alpha_family(p, alpha);
  const CentralExtension e = build_central_extension(inst.kappa);
  const FiniteGroup& h = *inst.heisenberg;
  const std::size_t n = h.order();
  // [(1,g),(1,h)] = ([g,h]^{-a(a+1)}, [g,h]^{1+2a}); section elements have
  // extension index equal to their base index
  for (Elem g = 0; g < n; g += 2)
    for (Elem x = 0; x < n; x += 2) {
      const Elem base_comm = h.comm(g, x);
      const Elem qpart = h.pow(base_comm, -static_cast<long long>(alpha * (alpha + 1)));
      const Elem gpart = h.pow(base_comm, (1 + 2 * alpha) % p);
      const Elem expected =
          static_cast<Elem>(std::size_t(inst.center_coeff->from_parent[qpart]) * n + gpart);
      CHECK(e.total->comm(g, x) == expected);
    }
}

TEST_CASE("the p^5 extension has [(1,x),(1,y)] = (k,1)") {
  const P5Instance inst = build_p5_example(3);
  const CentralExtension e = build_central_extension(inst.kappa);
  const Elem x = 81, y = 27; // x = (x,1_H), y = (y,1_H) in the product indexing
  const Elem k_local = inst.center_coeff->from_parent[1];
  CHECK(e.total->comm(x, y) == static_cast<Elem>(std::size_t(k_local) * 243));
}

TEST_CASE("solver sigma differs from the closed form by a circle morphism") {
  const AlphaFamilyInstance inst = build_alpha_family(5, 1);
  const CoboundarySolve solve = solve_coboundary(inst.kappa);
  REQUIRE(solve.solvable);
  const Coboundary closed = alpha_sigma_closed_form(inst);
  const CoefficientGroup& q = *inst.center_coeff;
  const FiniteGroup& c = *inst.circle;
  std::vector<Elem> diff(c.order());
  for (Elem g = 0; g < c.order(); ++g)
    diff[g] = q.local_mul(solve.sigma.sigma[g], q.local_inv(closed.sigma[g]));
  for (Elem g = 0; g < c.order(); ++g)
    for (Elem x = 0; x < c.order(); ++x)
      CHECK(diff[c.mul(g, x)] == q.local_mul(diff[g], diff[x]));
}

TEST_CASE("reconstruction agrees with the closed form up to a central morphism") {
  for (unsigned p : {3u, 5u}) {
    for (unsigned alpha = 0; alpha < p; ++alpha) {
      if ((1 + 2 * alpha) % p == 0) continue;
      const AlphaFamilyInstance inst = build_alpha_family(p, alpha);
      const CoboundarySolve solve = solve_coboundary(inst.kappa);
      REQUIRE(solve.solvable);
      RotaBaxterOperator rebuilt = reconstruct_rb(inst.heisenberg, inst.gamma, inst.rep, solve.sigma);
      CHECK(rebuilt.verified);
      // the rebuilt operator reproduces the gamma function exactly
      GammaFunction back = gamma_of_rb(rebuilt);
      CHECK(back.action == inst.gamma.action);
      RotaBaxterOperator closed = rb_formula_alpha(p, alpha);
      const SameGammaResult same = same_gamma_witness(closed, rebuilt);
      CHECK(same.same);
      if (alpha == 0) CHECK(rebuilt.images == std::vector<Elem>(inst.heisenberg->order(), 0));
      if (alpha == p - 1) {
        for (Elem g = 0; g < inst.heisenberg->order(); ++g)
          CHECK(rebuilt.images[g] == inst.heisenberg->inv(g));
      }
    }
  }
}

TEST_CASE("order-p^5 example at p=3") {
  const P5Instance inst = build_p5_example(3);
  CHECK(inst.product->order() == 243);
  CHECK(inst.center_coeff->size() == 27);
  CHECK(inst.gamma.verified);

  const std::size_t nh = 27;
  // kappa(x y, x) = k^{-1}
  const Elem xy = static_cast<Elem>((1 * 3 + 1) * nh); // x^1 y^1, trivial H part
  const Elem x = static_cast<Elem>((1 * 3 + 0) * nh);
  CHECK(inst.center_coeff->to_parent[inst.kappa.at(xy, x)] == 2); // k^2 = k^{-1}

  // j = 0 rows have identity coefficients
  for (Elem hpart = 0; hpart < nh; hpart += 5)
    for (Elem other = 0; other < 243; other += 7)
      CHECK(inst.kappa.at(static_cast<Elem>(2 * 3 * nh + hpart), other) == 0); // g = x^2 c

  // the C-images respect C(G) <= H and C(H) <= K
  for (Elem g = 0; g < 243; ++g) {
    CHECK(inst.rep.images[g] < nh); // inside 1_S x H
    if (g < nh) CHECK(inst.rep.images[g] == 0);
  }
}

TEST_CASE("order-p^5 example: nontrivial class, transported class, obstruction") {
  const P5Instance inst = build_p5_example(3);

  const CoboundarySolve solve = solve_coboundary(inst.kappa);
  CHECK_FALSE(solve.solvable);

  const TransportedCocycle moved =
      transport_cocycle(inst.kappa, inst.s_in_circle, inst.project_to_k);
  CHECK(moved.cocycle.base->order() == 9);
  // kappa'(x^i y^j, x^m y^n) = k^{-jm}
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) {
      const unsigned j = a % 3, m = b / 3;
      CHECK(inst.k_coeff->to_parent[moved.cocycle.at(a, b)] == (3 - j * m % 3) % 3);
    }
  CHECK_FALSE(solve_coboundary(moved.cocycle).solvable);

  const CentralExtension e = build_central_extension(inst.kappa);
  CHECK(e.total->order() == 6561);
  const Obstruction obs = derived_intersection_obstruction(e);
  REQUIRE(obs.nontrivial);
  CHECK(inst.center_coeff->to_parent[obs.witness] == 1); // the element k of K <= Z(G)
}

TEST_CASE("gamma of the p^5 example is independent of the lift") {
  const P5Instance inst = build_p5_example(3);
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    GroupMap lift = inst.rep;
    for (Elem g = 0; g < 243; ++g) {
      const Elem z = inst.center_coeff->to_parent[static_cast<Elem>(rng.below(27))];
      lift.images[g] = inst.product->mul(z, lift.images[g]);
    }
    GammaFunction gamma2 = gamma_from_inner_rep(inst.product, lift);
    CHECK(gamma2.action == inst.gamma.action);
  }
}

TEST_CASE("non-inner example on C4 x D4") {
  const NonInnerInstance inst = build_noninner_c4_d4();
  CHECK(inst.brace.dot->order() == 32);
  CHECK(verify_skew_brace(*inst.brace.dot, *inst.brace.circle).holds);
  REQUIRE_FALSE(inst.inner.all_inner);
  CHECK(inst.inner.witness == 8); // (a, 1), the first element with psi(a) outside Inn(D4)

  // gamma(a,b)(a',b') = (a', b'^{psi(a)}) and is non-inner for every b
  const FiniteGroup& dot = *inst.brace.dot;
  for (Elem g = 8; g < 16; ++g) { // all (a, b) with a = a^1
    bool some_conj = false;
    for (Elem c = 0; c < 32 && !some_conj; ++c) {
      bool match = true;
      for (Elem t = 0; t < 32 && match; ++t)
        match = inst.brace.gamma.action[g][t] == dot.conj(c, t);
      some_conj = match;
    }
    CHECK_FALSE(some_conj);
  }
}

TEST_CASE("non-inner example on V x| scalars") {
  const NonInnerInstance inst = build_noninner_vhq(7, 3);
  CHECK(inst.brace.dot->order() == 441);
  REQUIRE_FALSE(inst.inner.all_inner);
  const NonInnerInstance explicit_c = build_noninner_vhq(7, 3, 2);
  CHECK(explicit_c.inner.witness == inst.inner.witness);

  CHECK_THROWS_AS(build_noninner_vhq(7, 5), Error); // 5 does not divide 6
  CHECK_THROWS_AS(build_noninner_vhq(2, 2), Error);
  CHECK_THROWS_AS(build_noninner_vhq(7, 3, 3), Error); // 3^3 = 27 != 1 mod 7
}

TEST_CASE("the degenerate control: trivial action gives an all-inner gamma") {
  auto a = make_abelian({4});
  auto b = make_dihedral8();
  std::vector<std::vector<Elem>> trivial(4, std::vector<Elem>(8));
  for (auto& row : trivial)
    for (Elem t = 0; t < 8; ++t) row[t] = t;
  auto dot = direct_product(a, b);
  auto circle = semidirect_product(a, b, trivial);
  CHECK(dot->table() == circle->table());
  GammaFunction gamma = gamma_of_brace(dot, circle);
  for (Elem g = 0; g < 32; ++g)
    for (Elem t = 0; t < 32; ++t) CHECK(gamma.action[g][t] == t);
  CHECK(inner_image_check(gamma).all_inner);
}

TEST_SUITE_END();
