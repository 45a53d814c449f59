#include "braceforge/reference.hpp"

namespace braceforge::ref {

TripleVerdict associativity(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return {false, a, b, c};
  return {};
}

bool latin_square(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n);
  for (Elem r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem c = 0; c < n; ++c) {
      const Elem v = g.mul(r, c);
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
  }
  for (Elem c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elem r = 0; r < n; ++r) {
      const Elem v = g.mul(r, c);
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

PairVerdict gamma_equation(const GammaFunction& gamma) {
  const FiniteGroup& g = *gamma.group;
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem lhs = g.mul(x, gamma.action[x][y]);
      for (Elem t = 0; t < n; ++t)
        if (gamma.action[lhs][t] != gamma.action[x][gamma.action[y][t]]) return {false, x, y};
    }
  return {};
}

TripleVerdict skew_brace(const FiniteGroup& dot, const FiniteGroup& circle) {
  const std::size_t n = dot.order();
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      for (Elem k = 0; k < n; ++k) {
        const Elem lhs = circle.mul(g, dot.mul(h, k));
        const Elem rhs = dot.mul(dot.mul(circle.mul(g, h), dot.inv(g)), circle.mul(g, k));
        if (lhs != rhs) return {false, g, h, k};
      }
  return {};
}

PairVerdict rota_baxter(const FiniteGroup& g, const std::vector<Elem>& images) {
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem bx = images[x];
      if (images[g.mul(x, g.conj(bx, y))] != g.mul(bx, images[y])) return {false, x, y};
    }
  return {};
}

TripleVerdict cocycle(const TwoCocycle& theta) {
  const FiniteGroup& g = *theta.base;
  const CoefficientGroup& q = *theta.coeff;
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = q.local_mul(theta.at(b, c), theta.at(a, g.mul(b, c)));
        const Elem rhs = q.local_mul(theta.at(g.mul(a, b), c), theta.at(a, b));
        if (lhs != rhs) return {false, a, b, c};
      }
  return {};
}

InnerCheck inner_image(const GammaFunction& gamma) {
  const FiniteGroup& g = *gamma.group;
  const std::size_t n = g.order();
  InnerCheck out;
  out.reps.assign(n, npos_elem);
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem c = 0; c < n && !found; ++c) {
      bool match = true;
      for (Elem t = 0; t < n && match; ++t) match = gamma.action[x][t] == g.conj(c, t);
      if (match) {
        out.reps[x] = c;
        found = true;
      }
    }
    if (!found) return {false, x, {}};
  }
  return out;
}

std::vector<Elem> center_members(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> out;
  for (Elem z = 0; z < n; ++z) {
    bool central = true;
    for (Elem x = 0; x < n && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

} // namespace braceforge::ref
