#include "braceforge/gallery.hpp"

namespace braceforge {

namespace {

unsigned mod_pow(unsigned base, unsigned exp, unsigned p) {
  unsigned long long acc = 1, b = base % p;
  while (exp) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<unsigned>(acc);
}

unsigned mod_inv(unsigned x, unsigned p) { return mod_pow(x % p, p - 2, p); }

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

unsigned alpha_kappa_exponent(unsigned p, unsigned alpha) {
  // alpha(alpha+1)/2 is an integer; reduce afterwards
  const unsigned long long e = static_cast<unsigned long long>(alpha) * (alpha + 1) / 2;
  return static_cast<unsigned>(e % p);
}

AlphaFamilyInstance build_alpha_family(unsigned p, unsigned alpha) {
  AlphaFamilyInstance inst;
  inst.p = p;
  inst.alpha = alpha % p;
  inst.heisenberg = make_heisenberg(p);
  const FiniteGroup& h = *inst.heisenberg;
  const std::size_t n = h.order();

  inst.rep = GroupMap{inst.heisenberg, inst.heisenberg, std::vector<Elem>(n)};
  for (Elem g = 0; g < n; ++g) inst.rep.images[g] = h.pow(g, inst.alpha);

  inst.gamma = gamma_from_inner_rep(inst.heisenberg, inst.rep);
  const PairVerdict gv = verify_gamma(inst.gamma);
  if (!gv.holds)
    fail(Errc::theorem_violation, "alpha-family gamma fails its functional equation");
  inst.circle = circle_group(inst.gamma);

  inst.center_coeff = make_coefficient_group(center(inst.heisenberg));
  inst.kappa = extract_kappa(inst.heisenberg, inst.gamma, inst.rep, inst.center_coeff, inst.circle);

  // closed form kappa(g,h) = [g,h]^{-(alpha^2+alpha)/2}, entrywise
  const unsigned e = alpha_kappa_exponent(p, inst.alpha);
  for (Elem g = 0; g < n; ++g)
    for (Elem x = 0; x < n; ++x) {
      const Elem expect = h.pow(h.comm(g, x), -static_cast<long long>(e));
      if (inst.center_coeff->to_parent[inst.kappa.at(g, x)] != expect)
        fail(Errc::theorem_violation, "alpha-family cocycle misses its closed form");
    }

  inst.splits = (1 + 2 * inst.alpha) % p != 0;
  inst.k_tilde = h.pow(1 /* k */, (1 + 2 * inst.alpha) % p);
  return inst;
}

std::array<unsigned, 3> normal_form_switch(unsigned p, unsigned alpha, unsigned i, unsigned j,
                                           unsigned r) {
  if ((1 + 2 * alpha) % p == 0)
    fail(Errc::alpha_is_minus_half, "1 + 2*alpha vanishes mod " + std::to_string(p));
  const unsigned inv = mod_inv((1 + 2 * alpha) % p, p);
  const unsigned ija = static_cast<unsigned>((static_cast<unsigned long long>(i) * j % p) * alpha % p);
  const unsigned q = static_cast<unsigned>((static_cast<unsigned long long>((r + p - ija) % p) * inv) % p);
  return {i % p, j % p, q};
}

std::array<unsigned, 3> circle_coords(unsigned p, unsigned alpha, Elem g) {
  const unsigned r = g % p;
  const unsigned j = (g / p) % p;
  const unsigned i = g / (p * p);
  return normal_form_switch(p, alpha, i, j, r);
}

RotaBaxterOperator rb_formula_alpha(unsigned p, unsigned alpha) {
  if ((1 + 2 * alpha) % p == 0)
    fail(Errc::alpha_is_minus_half, "1 + 2*alpha vanishes mod " + std::to_string(p));
  GroupPtr h = make_heisenberg(p);
  const unsigned inv = mod_inv((1 + 2 * alpha) % p, p);
  const unsigned a2 = static_cast<unsigned>(static_cast<unsigned long long>(alpha) * alpha % p);
  RotaBaxterOperator b{h, std::vector<Elem>(h->order()), false};
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j)
      for (unsigned r = 0; r < p; ++r) {
        const unsigned ija = static_cast<unsigned>(static_cast<unsigned long long>(i) * j % p * alpha % p);
        const unsigned t =
            static_cast<unsigned>(static_cast<unsigned long long>(a2) * ((r + p - ija) % p) % p * inv % p);
        const unsigned bi = static_cast<unsigned>(static_cast<unsigned long long>(i) * alpha % p);
        const unsigned bj = static_cast<unsigned>(static_cast<unsigned long long>(j) * alpha % p);
        b.images[(std::size_t(i) * p + j) * p + r] = static_cast<Elem>((std::size_t(bi) * p + bj) * p + t);
      }
  const PairVerdict v = verify_rb(b);
  if (!v.holds)
    fail(Errc::theorem_violation, "the closed-form operator fails the Rota-Baxter identity");
  return b;
}

Coboundary alpha_sigma_closed_form(const AlphaFamilyInstance& inst) {
  const unsigned p = inst.p;
  const unsigned e = alpha_kappa_exponent(p, inst.alpha);
  Coboundary out{inst.kappa.base, inst.center_coeff, std::vector<Elem>(inst.heisenberg->order())};
  for (Elem g = 0; g < inst.heisenberg->order(); ++g) {
    const auto [i, j, q] = circle_coords(p, inst.alpha, g);
    const unsigned t = static_cast<unsigned>(
        static_cast<unsigned long long>(e) * ((2 * q + static_cast<unsigned long long>(i) * j) % p) % p);
    out.sigma[g] = static_cast<Elem>((p - t) % p); // k^{-e(2q+ij)}
  }
  return out;
}

GroupMap alpha_splitting_section(const AlphaFamilyInstance& inst, const CentralExtension& e) {
  const Coboundary sigma = alpha_sigma_closed_form(inst);
  GroupMap s{e.base, e.total, std::vector<Elem>(e.base->order())};
  for (Elem g = 0; g < e.base->order(); ++g)
    s.images[g] = static_cast<Elem>(std::size_t(sigma.sigma[g]) * e.base->order() + g);
  return s;
}

P5Instance build_p5_example(unsigned p) {
  P5Instance inst;
  inst.p = p;
  inst.s = make_abelian({p, p});
  inst.h = make_heisenberg(p);
  inst.product = direct_product(inst.s, inst.h);
  const FiniteGroup& g = *inst.product;
  const std::size_t nh = inst.h->order();
  const std::size_t n = g.order();

  // C(x^i y^j c) = u^i v^j for every c in H
  inst.rep = GroupMap{inst.product, inst.product, std::vector<Elem>(n)};
  for (Elem x = 0; x < n; ++x) {
    const Elem sIdx = static_cast<Elem>(x / nh);
    const unsigned i = sIdx / p, j = sIdx % p;
    inst.rep.images[x] = static_cast<Elem>((std::size_t(i) * p + j) * p); // (1_S, u^i v^j)
  }

  inst.gamma = gamma_from_inner_rep(inst.product, inst.rep);
  const PairVerdict gv = verify_gamma(inst.gamma);
  if (!gv.holds) fail(Errc::theorem_violation, "p^5 gamma fails its functional equation");
  inst.circle = circle_group(inst.gamma);

  const Subgroup z = center(inst.product);
  inst.center_coeff = make_coefficient_group(z);
  inst.kappa = extract_kappa(inst.product, inst.gamma, inst.rep, inst.center_coeff, inst.circle);

  // closed form kappa = k^{-jm}: the K-component sits at parent index q < p
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const unsigned j = static_cast<unsigned>((x / nh) % p);
      const unsigned m = static_cast<unsigned>((y / nh) / p);
      const Elem expect = static_cast<Elem>((p - j * m % p) % p); // parent index of k^{-jm}
      if (inst.center_coeff->to_parent[inst.kappa.at(x, y)] != expect)
        fail(Errc::theorem_violation, "p^5 cocycle misses its closed form");
    }

  // S x 1 is a subgroup of the circle group on which both operations agree
  inst.s_in_circle = Subgroup{inst.circle, {}};
  for (Elem sIdx = 0; sIdx < inst.s->order(); ++sIdx)
    inst.s_in_circle.members.push_back(static_cast<Elem>(std::size_t(sIdx) * nh));
  for (Elem a : inst.s_in_circle.members)
    for (Elem b : inst.s_in_circle.members)
      if (inst.circle->mul(a, b) != g.mul(a, b))
        fail(Errc::theorem_violation, "dot and circle disagree on S");

  {
    std::vector<Elem> kmem(p);
    for (unsigned q = 0; q < p; ++q) kmem[q] = q; // (1_S, k^q) has product index q
    inst.k_coeff = make_coefficient_group(Subgroup{inst.product, std::move(kmem)});
  }

  inst.project_to_k = CoeffMorphism{inst.center_coeff, inst.k_coeff,
                                    std::vector<Elem>(inst.center_coeff->size())};
  for (Elem z2 = 0; z2 < inst.center_coeff->size(); ++z2) {
    const Elem parent = inst.center_coeff->to_parent[z2];
    const Elem kpart = static_cast<Elem>(parent % nh); // in K, so < p
    inst.project_to_k.images[z2] = inst.k_coeff->from_parent[kpart];
  }
  return inst;
}

GroupPtr make_dihedral8() {
  // indices: 0..3 = r^i, 4..7 = r^i s
  std::vector<std::vector<Elem>> tab(8, std::vector<Elem>(8));
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) {
      tab[i][j] = (i + j) % 4;
      tab[i][4 + j] = 4 + (i + j) % 4;
      tab[4 + i][j] = 4 + (i + 4 - j) % 4;
      tab[4 + i][4 + j] = (i + 4 - j) % 4;
    }
  std::vector<std::string> names{"1", "r", "r^2", "r^3", "s", "r s", "r^2 s", "r^3 s"};
  return build_group(tab, std::move(names));
}

NonInnerInstance build_noninner_c4_d4() {
  NonInnerInstance inst;
  inst.kind = "c4_d4";
  GroupPtr a = make_abelian({4});
  GroupPtr b = make_dihedral8();

  // phi: r -> r, s -> r s generates a cyclic group of order 4 in Aut(D4)
  std::vector<Elem> phi(8);
  for (unsigned i = 0; i < 4; ++i) {
    phi[i] = i;
    phi[4 + i] = 4 + (i + 1) % 4;
  }
  std::vector<std::vector<Elem>> action(4);
  action[0].resize(8);
  for (Elem t = 0; t < 8; ++t) action[0][t] = t;
  for (unsigned e = 1; e < 4; ++e) {
    action[e].resize(8);
    for (Elem t = 0; t < 8; ++t) action[e][t] = phi[action[e - 1][t]];
  }

  GroupPtr dot = direct_product(a, b);
  GroupPtr circle = semidirect_product(a, b, action);
  GammaFunction gamma = gamma_of_brace(dot, circle);
  inst.inner = inner_image_check(gamma);
  inst.brace = SkewBrace{std::move(dot), std::move(circle), std::move(gamma)};
  return inst;
}

NonInnerInstance build_noninner_vhq(unsigned p, unsigned q, unsigned c) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || (p - 1) % q != 0)
    fail(Errc::bad_parameters, "need primes with q dividing p-1 and p odd");
  if (c == 0) {
    for (unsigned cand = 2; cand < p; ++cand)
      if (mod_pow(cand, q, p) == 1) {
        c = cand;
        break;
      }
  }
  if (c < 2 || mod_pow(c, q, p) != 1)
    fail(Errc::bad_parameters, "no scalar of multiplicative order " + std::to_string(q) +
                                   " mod " + std::to_string(p));

  GroupPtr v = make_abelian({p, p});
  GroupPtr hq = make_abelian({q});

  // mu = c*I and nu = diag(c,1) acting on V; powers of c drive both
  auto diag_action = [&](bool both) {
    std::vector<std::vector<Elem>> action(q, std::vector<Elem>(v->order()));
    for (unsigned t = 0; t < q; ++t) {
      const unsigned ct = mod_pow(c, t, p);
      for (unsigned e1 = 0; e1 < p; ++e1)
        for (unsigned e2 = 0; e2 < p; ++e2) {
          const unsigned f1 = static_cast<unsigned>(static_cast<unsigned long long>(ct) * e1 % p);
          const unsigned f2 =
              both ? static_cast<unsigned>(static_cast<unsigned long long>(ct) * e2 % p) : e2;
          action[t][e1 * p + e2] = static_cast<Elem>(f1 * p + f2);
        }
    }
    return action;
  };

  GroupPtr b = semidirect_product(hq, v, diag_action(true)); // V x| <mu>
  const std::size_t nv = v->order();

  // psi(a^t): (h, w) -> (h, nu^t(w))
  const auto nu = diag_action(false);
  std::vector<std::vector<Elem>> psi(q, std::vector<Elem>(b->order()));
  for (unsigned t = 0; t < q; ++t)
    for (Elem x = 0; x < b->order(); ++x) {
      const Elem h = static_cast<Elem>(x / nv);
      const Elem w = static_cast<Elem>(x % nv);
      psi[t][x] = static_cast<Elem>(std::size_t(h) * nv + nu[t][w]);
    }

  GroupPtr a = make_abelian({q});
  GroupPtr dot = direct_product(a, b);
  GroupPtr circle = semidirect_product(a, b, psi);
  GammaFunction gamma = gamma_of_brace(dot, circle);

  NonInnerInstance inst;
  inst.kind = "v_h_q";
  inst.inner = inner_image_check(gamma);
  inst.brace = SkewBrace{std::move(dot), std::move(circle), std::move(gamma)};
  return inst;
}

} // namespace braceforge
