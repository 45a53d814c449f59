#include "braceforge/gamma.hpp"

#include "braceforge/scan.hpp"

namespace braceforge {

GammaFunction gamma_from_inner_rep(const GroupPtr& g, const GroupMap& c) {
  const std::size_t n = g->order();
  if (c.images.size() != n) fail(Errc::dimension_mismatch, "representative map not total");
  GammaFunction gamma{g, std::vector<std::vector<Elem>>(n), false};
  for (Elem x = 0; x < n; ++x) {
    auto& row = gamma.action[x];
    row.resize(n);
    const Elem cg = c.images[x];
    for (Elem t = 0; t < n; ++t) row[t] = g->conj(cg, t);
  }
  return gamma;
}

namespace {

// First g whose action row is not an automorphism of (G,.), npos if none.
// Multiplicativity only needs checking against a generating set: f(a x) =
// f(a) f(x) for all generators a forces f(1) = 1 (take x = 1) and then
// multiplicativity on arbitrary words by induction.
std::uint64_t automorphism_violation(const GammaFunction& gamma) {
  const FiniteGroup& g = *gamma.group;
  const std::size_t n = g.order();
  const std::vector<Elem> gens = small_generating_set(g);
  return scan::first_hit(n, [&](std::uint64_t x) {
    const auto& f = gamma.action[x];
    if (f.size() != n) return true;
    std::vector<bool> seen(n, false);
    for (Elem t = 0; t < n; ++t) {
      if (f[t] >= n || seen[f[t]]) return true;
      seen[f[t]] = true;
    }
    for (Elem a : gens) {
      const Elem* row_a = g.table().data() + std::size_t(a) * n;
      for (Elem b = 0; b < n; ++b)
        if (f[row_a[b]] != g.mul(f[a], f[b])) return true;
    }
    return false;
  });
}

} // namespace

PairVerdict verify_gamma(GammaFunction& gamma) {
  const FiniteGroup& g = *gamma.group;
  const std::size_t n = g.order();
  const std::uint64_t bad = automorphism_violation(gamma);
  if (bad != scan::npos)
    fail(Errc::not_automorphism,
         "action[" + std::to_string(bad) + "] is not an automorphism");

  const std::uint64_t viol = scan::first_hit_rows(n, [&](std::uint64_t x) {
    const auto& fx = gamma.action[x];
    for (Elem y = 0; y < n; ++y) {
      const Elem lhs = g.mul(static_cast<Elem>(x), fx[y]); // x o y
      const Elem* fl = gamma.action[lhs].data();
      const Elem* fy = gamma.action[y].data();
      for (std::size_t t = 0; t < n; ++t)
        if (fl[t] != fx[fy[t]]) return x * n + y;
    }
    return scan::npos;
  });
  if (viol != scan::npos) {
    gamma.verified = false;
    return {false, static_cast<Elem>(viol / n), static_cast<Elem>(viol % n)};
  }
  gamma.verified = true;
  return {};
}

GroupPtr circle_group(const GammaFunction& gamma) {
  if (!gamma.verified) fail(Errc::not_automorphism, "gamma not verified; run verify_gamma first");
  const FiniteGroup& g = *gamma.group;
  const std::size_t n = g.order();
  std::vector<Elem> flat(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) flat[std::size_t(x) * n + y] = g.mul(x, gamma.action[x][y]);
  std::vector<std::string> names(
      g.has_names() ? g.names() : std::vector<std::string>{});
  auto out = std::make_shared<FiniteGroup>(
      FiniteGroup::unchecked(n, std::move(flat), std::move(names)));
  out->validate();
  return out;
}

TripleVerdict verify_skew_brace(const FiniteGroup& dot, const FiniteGroup& circle) {
  const std::size_t n = dot.order();
  if (circle.order() != n) fail(Errc::shape_mismatch, "orders differ");
  const Elem* dt = dot.table().data();
  const Elem* ct = circle.table().data();
  const std::uint64_t viol = scan::first_hit_rows(n, [&](std::uint64_t g) {
    const Elem* circ_g = ct + g * n;
    const Elem ginv = dot.inv(static_cast<Elem>(g));
    for (std::size_t h = 0; h < n; ++h) {
      const Elem* dot_h = dt + h * n;
      const Elem* left = dt + std::size_t(dt[std::size_t(circ_g[h]) * n + ginv]) * n;
      for (std::size_t k = 0; k < n; ++k)
        if (circ_g[dot_h[k]] != left[circ_g[k]]) return (g * n + h) * n + k;
    }
    return scan::npos;
  });
  if (viol == scan::npos) return {};
  return {false, static_cast<Elem>(viol / (std::uint64_t(n) * n)),
          static_cast<Elem>((viol / n) % n), static_cast<Elem>(viol % n)};
}

InnerCheck inner_image_check(const GammaFunction& gamma) {
  const FiniteGroup& g = *gamma.group;
  const std::size_t n = g.order();
  std::vector<Elem> reps(n, npos_elem);
  const std::uint64_t bad = scan::first_hit(n, [&](std::uint64_t xi) {
    const auto& f = gamma.action[xi];
    for (Elem c = 0; c < n; ++c) {
      bool match = true;
      for (Elem t = 0; t < n && match; ++t) match = f[t] == g.conj(c, t);
      if (match) {
        reps[xi] = c;
        return false;
      }
    }
    return true;
  });
  if (bad != scan::npos) return {false, static_cast<Elem>(bad), {}};
  return {true, 0, std::move(reps)};
}

GammaFunction gamma_of_brace(const GroupPtr& dot, const GroupPtr& circle) {
  const TripleVerdict brace = verify_skew_brace(*dot, *circle);
  if (!brace.holds)
    fail(Errc::not_a_skew_brace, "skew-brace identity fails at (" + std::to_string(brace.g) +
                                     "," + std::to_string(brace.h) + "," + std::to_string(brace.k) +
                                     ")");
  const std::size_t n = dot->order();
  GammaFunction gamma{dot, std::vector<std::vector<Elem>>(n), false};
  for (Elem x = 0; x < n; ++x) {
    auto& row = gamma.action[x];
    row.resize(n);
    const Elem xinv = dot->inv(x);
    for (Elem y = 0; y < n; ++y) row[y] = dot->mul(xinv, circle->mul(x, y));
  }
  const PairVerdict v = verify_gamma(gamma);
  if (!v.holds)
    fail(Errc::not_a_skew_brace, "extracted map fails the gamma equation at (" +
                                     std::to_string(v.g) + "," + std::to_string(v.h) + ")");
  return gamma;
}

} // namespace braceforge
