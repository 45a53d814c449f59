#include "braceforge/rota_baxter.hpp"

#include "braceforge/scan.hpp"

namespace braceforge {

PairVerdict verify_rb(RotaBaxterOperator& b) {
  const FiniteGroup& g = *b.group;
  const std::size_t n = g.order();
  if (b.images.size() != n) fail(Errc::dimension_mismatch, "operator not total");
  const std::uint64_t viol = scan::first_hit(std::uint64_t(n) * n, [&](std::uint64_t i) {
    const Elem y = static_cast<Elem>(i % n);
    const Elem x = static_cast<Elem>(i / n);
    const Elem bx = b.images[x];
    const Elem arg = g.mul(x, g.conj(bx, y));
    return b.images[arg] != g.mul(bx, b.images[y]);
  });
  if (viol != scan::npos) {
    b.verified = false;
    return {false, static_cast<Elem>(viol / n), static_cast<Elem>(viol % n)};
  }
  b.verified = true;
  return {};
}

GammaFunction gamma_of_rb(const RotaBaxterOperator& b) {
  if (!b.verified) fail(Errc::not_rota_baxter, "operator not verified; run verify_rb first");
  GroupMap c{b.group, b.group, b.images};
  GammaFunction gamma = gamma_from_inner_rep(b.group, c);
  const PairVerdict v = verify_gamma(gamma);
  if (!v.holds)
    fail(Errc::not_rota_baxter, "gamma equation fails at (" + std::to_string(v.g) + "," +
                                    std::to_string(v.h) + ")");
  return gamma;
}

SkewBrace brace_of_rb(const RotaBaxterOperator& b) {
  GammaFunction gamma = gamma_of_rb(b);
  GroupPtr circle = circle_group(gamma);
  const TripleVerdict v = verify_skew_brace(*b.group, *circle);
  if (!v.holds)
    fail(Errc::not_rota_baxter, "induced operation fails the skew-brace identity");
  return {b.group, std::move(circle), std::move(gamma)};
}

namespace {

// partial-assignment consistency: every fully determined instance of the
// identity must hold; images[x] = npos_elem marks unassigned
bool consistent_after(const FiniteGroup& g, const std::vector<Elem>& images, Elem last) {
  const Elem n = static_cast<Elem>(g.order());
  for (Elem x = 0; x <= last; ++x) {
    if (images[x] == npos_elem) continue;
    const Elem bx = images[x];
    for (Elem y = 0; y <= last; ++y) {
      if (images[y] == npos_elem) continue;
      const Elem arg = g.mul(x, g.conj(bx, y));
      if (arg >= n || images[arg] == npos_elem) continue;
      if (x != last && y != last && arg != last) continue; // already checked earlier
      if (images[arg] != g.mul(bx, images[y])) return false;
    }
  }
  return true;
}

void enumerate_rec(const GroupPtr& g, std::vector<Elem>& images, Elem depth,
                   std::vector<RotaBaxterOperator>& out) {
  const std::size_t n = g->order();
  if (depth == n) {
    RotaBaxterOperator b{g, images, false};
    const PairVerdict v = verify_rb(b);
    if (v.holds) out.push_back(std::move(b));
    return;
  }
  for (Elem y = 0; y < n; ++y) {
    images[depth] = y;
    if (consistent_after(*g, images, depth)) enumerate_rec(g, images, depth + 1, out);
  }
  images[depth] = npos_elem;
}

} // namespace

std::vector<RotaBaxterOperator> enumerate_rb(const GroupPtr& g, std::uint64_t cap) {
  const std::size_t n = g->order();
  double candidates = 1.0;
  for (std::size_t i = 0; i < n; ++i) candidates *= static_cast<double>(n);
  if (candidates > static_cast<double>(cap))
    fail(Errc::too_large, "|G|^|G| exceeds the enumeration cap");
  std::vector<RotaBaxterOperator> out;
  std::vector<Elem> images(n, npos_elem);
  images[0] = 0; // forced by g = h = 1 in the identity
  if (n == 1) {
    RotaBaxterOperator b{g, images, true};
    out.push_back(std::move(b));
    return out;
  }
  enumerate_rec(g, images, 1, out);
  return out;
}

SameGammaResult same_gamma_witness(const RotaBaxterOperator& b1, const RotaBaxterOperator& b2) {
  if (!b1.verified || !b2.verified)
    fail(Errc::not_rota_baxter, "same_gamma_witness needs verified operators");
  const FiniteGroup& g = *b1.group;
  const std::size_t n = g.order();
  const Subgroup z = center(b1.group);

  // equal conjugation actions <=> B2(g) B1(g)^-1 central
  std::vector<Elem> zeta(n);
  for (Elem x = 0; x < n; ++x) {
    const Elem q = g.mul(b2.images[x], g.inv(b1.images[x]));
    if (!z.contains(q)) return {false, x, {}};
    zeta[x] = q;
  }

  // zeta must be a morphism (G,o) -> Z(G) for the circle of B1, where
  // x o y = x . B1(x) y B1(x)^-1
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem circ = g.mul(x, g.conj(b1.images[x], y));
      if (zeta[circ] != g.mul(zeta[x], zeta[y]))
        fail(Errc::theorem_violation,
             "central quotient of equal-gamma operators is not a morphism at (" +
                 std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return {true, 0, GroupMap{b1.group, b1.group, std::move(zeta)}};
}

RotaBaxterOperator rb_from_centerless(const GroupPtr& g, const GammaFunction& gamma) {
  if (!gamma.verified) fail(Errc::not_automorphism, "gamma not verified");
  const Subgroup z = center(g);
  if (z.size() != 1) fail(Errc::center_not_trivial, "centre has order " + std::to_string(z.size()));
  const InnerCheck inner = inner_image_check(gamma);
  if (!inner.all_inner)
    fail(Errc::gamma_not_inner, "gamma(" + std::to_string(inner.witness) + ") is not inner");
  RotaBaxterOperator b{g, inner.reps, false};
  const PairVerdict v = verify_rb(b);
  if (!v.holds)
    fail(Errc::theorem_violation, "lift through trivial centre fails the Rota-Baxter check at (" +
                                      std::to_string(v.g) + "," + std::to_string(v.h) + ")");
  return b;
}

} // namespace braceforge
