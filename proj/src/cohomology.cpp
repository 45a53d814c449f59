#include "braceforge/cohomology.hpp"

#include <algorithm>
#include <atomic>

#include "braceforge/scan.hpp"

namespace braceforge {

namespace {

std::string pair_str(Elem a, Elem b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

// ---- coefficient groups ---------------------------------------------------

std::vector<std::uint8_t> CoefficientGroup::coords(Elem local) const {
  std::vector<std::uint8_t> out(rank, 0);
  for (unsigned i = rank; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(local % prime);
    local /= prime;
  }
  return out;
}

CoeffPtr make_coefficient_group(const Subgroup& s) {
  auto cg = std::make_shared<CoefficientGroup>();
  cg->parent = s.parent;
  cg->members = s.members;
  const std::size_t m = s.members.size();
  const FiniteGroup& par = *s.parent;

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (par.mul(s.members[i], s.members[j]) != par.mul(s.members[j], s.members[i]))
        fail(Errc::center_not_elementary_abelian, "coefficient subgroup is not abelian");

  if (m == 1) {
    cg->prime = 0;
    cg->rank = 0;
    cg->group = make_abelian({1});
    cg->to_parent = {s.members[0]};
    cg->from_parent.assign(par.order(), npos_elem);
    cg->from_parent[s.members[0]] = 0;
    return cg;
  }

  const unsigned p = par.elem_order(s.members[1]);
  {
    unsigned d = 2;
    bool prime = p >= 2;
    for (; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime)
      fail(Errc::center_not_elementary_abelian,
           "element order " + std::to_string(p) + " is not prime");
  }
  for (Elem x : s.members)
    if (x != 0 && par.pow(x, p) != 0)
      fail(Errc::center_not_elementary_abelian,
           "element " + std::to_string(x) + " has order not dividing " + std::to_string(p));

  // greedy basis over the sorted member list; span carries parent indices
  std::vector<Elem> span{0};
  std::vector<Elem> basis;
  for (Elem x : s.members) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    basis.push_back(x);
    std::vector<Elem> grown = span;
    for (unsigned t = 1; t < p; ++t) {
      const Elem xt = par.pow(x, t);
      for (Elem e : span) grown.push_back(par.mul(e, xt));
    }
    span = std::move(grown);
  }
  std::size_t expect = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) expect *= p;
  if (expect != m)
    fail(Errc::center_not_elementary_abelian,
         "order " + std::to_string(m) + " is not a power of " + std::to_string(p));

  cg->prime = p;
  cg->rank = static_cast<unsigned>(basis.size());
  cg->basis = basis;
  cg->group = make_abelian(std::vector<unsigned>(cg->rank, p));
  cg->to_parent.assign(m, 0);
  for (Elem local = 0; local < m; ++local) {
    Elem acc = 0;
    Elem rem = local;
    for (unsigned i = cg->rank; i-- > 0;) {
      const unsigned digit = rem % p;
      rem /= p;
      if (digit) acc = par.mul(par.pow(basis[i], digit), acc);
    }
    cg->to_parent[local] = acc;
  }
  cg->from_parent.assign(par.order(), npos_elem);
  for (Elem local = 0; local < m; ++local) {
    if (cg->from_parent[cg->to_parent[local]] != npos_elem)
      fail(Errc::center_not_elementary_abelian, "basis does not span freely");
    cg->from_parent[cg->to_parent[local]] = local;
  }
  for (Elem x : s.members)
    if (cg->from_parent[x] == npos_elem)
      fail(Errc::center_not_elementary_abelian, "basis does not span the subgroup");
  return cg;
}

CoeffPtr make_abstract_coefficient_group(unsigned prime, unsigned rank) {
  if (rank == 0) {
    auto one = make_abelian({1});
    return make_coefficient_group(Subgroup{one, {0}});
  }
  auto g = make_abelian(std::vector<unsigned>(rank, prime));
  std::vector<Elem> all(g->order());
  for (Elem x = 0; x < g->order(); ++x) all[x] = x;
  return make_coefficient_group(Subgroup{g, std::move(all)});
}

// ---- cocycles --------------------------------------------------------------

bool TwoCocycle::is_normalized() const {
  const std::size_t n = base->order();
  for (Elem a = 0; a < n; ++a)
    if (at(0, a) != 0 || at(a, 0) != 0) return false;
  return true;
}

TripleVerdict check_cocycle(const TwoCocycle& theta) {
  const FiniteGroup& g = *theta.base;
  const std::size_t n = g.order();
  const Elem* qt = theta.coeff->group->table().data();
  const std::size_t nq = theta.coeff->size();
  const Elem* gt = g.table().data();
  const Elem* tv = theta.values.data();
  const std::uint64_t viol = scan::first_hit_rows(n, [&](std::uint64_t a) {
    const Elem* th_a = tv + a * n;
    const Elem* g_a = gt + a * n;
    for (std::size_t b = 0; b < n; ++b) {
      const Elem* th_b = tv + b * n;
      const Elem* g_b = gt + b * n;
      const Elem* th_ab = tv + std::size_t(g_a[b]) * n;
      const Elem ab_val = th_a[b];
      for (std::size_t c = 0; c < n; ++c) {
        const Elem lhs = qt[std::size_t(th_b[c]) * nq + th_a[g_b[c]]];
        const Elem rhs = qt[std::size_t(th_ab[c]) * nq + ab_val];
        if (lhs != rhs) return (a * n + b) * n + c;
      }
    }
    return scan::npos;
  });
  if (viol == scan::npos) return {};
  return {false, static_cast<Elem>(viol / (std::uint64_t(n) * n)),
          static_cast<Elem>((viol / n) % n), static_cast<Elem>(viol % n)};
}

TwoCocycle cocycle_quotient(const TwoCocycle& a, const TwoCocycle& b) {
  if (a.base != b.base || a.coeff != b.coeff)
    fail(Errc::shape_mismatch, "cocycles live over different data");
  TwoCocycle out{a.base, a.coeff, std::vector<Elem>(a.values.size())};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values[i] = a.coeff->local_mul(a.values[i], a.coeff->local_inv(b.values[i]));
  return out;
}

TwoCocycle extract_kappa(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                         const CoeffPtr& coeff) {
  return extract_kappa(g, gamma, c, coeff, circle_group(gamma));
}

TwoCocycle extract_kappa(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                         const CoeffPtr& coeff, const GroupPtr& circle) {
  if (!gamma.verified) fail(Errc::not_automorphism, "gamma not verified");
  const std::size_t n = g->order();
  if (c.images.size() != n) fail(Errc::dimension_mismatch, "representative map not total");

  // conj(C(g)) must be exactly gamma(g)
  const std::uint64_t bad = scan::first_hit(n, [&](std::uint64_t x) {
    const Elem cg = c.images[x];
    const auto& row = gamma.action[x];
    for (Elem t = 0; t < n; ++t)
      if (row[t] != g->conj(cg, t)) return true;
    return false;
  });
  if (bad != scan::npos)
    fail(Errc::rep_mismatch,
         "conjugation by C(" + std::to_string(bad) + ") differs from gamma(" +
             std::to_string(bad) + ")");

  TwoCocycle kappa{circle, coeff, std::vector<Elem>(n * n)};
  std::atomic<std::uint64_t> noncentral{scan::npos};
  scan::for_each(n, [&](std::uint64_t x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem prod = g->mul(c.images[x], c.images[y]);
      const Elem val = g->mul(prod, g->inv(c.images[circle->mul(static_cast<Elem>(x), y)]));
      const Elem local = coeff->from_parent[val];
      if (local == npos_elem) {
        std::uint64_t enc = x * n + y;
        std::uint64_t cur = noncentral.load();
        while (enc < cur && !noncentral.compare_exchange_weak(cur, enc)) {
        }
        return;
      }
      kappa.values[x * n + y] = local;
    }
  });
  if (noncentral.load() != scan::npos) {
    const std::uint64_t enc = noncentral.load();
    fail(Errc::value_not_central,
         "cocycle value outside the coefficient subgroup at " +
             pair_str(static_cast<Elem>(enc / n), static_cast<Elem>(enc % n)));
  }
  const TripleVerdict v = check_cocycle(kappa);
  if (!v.holds)
    fail(Errc::theorem_violation, "extracted kappa fails the cocycle identity at (" +
                                      std::to_string(v.g) + "," + std::to_string(v.h) + "," +
                                      std::to_string(v.k) + ")");
  return kappa;
}

// ---- coboundary solving -----------------------------------------------------

bool Coboundary::certifies(const TwoCocycle& kappa, Elem* bad_g, Elem* bad_h) const {
  const FiniteGroup& g = *base;
  const CoefficientGroup& q = *coeff;
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem want = q.local_mul(q.local_mul(q.local_inv(sigma[x]), q.local_inv(sigma[y])),
                                    sigma[g.mul(x, y)]);
      if (kappa.at(x, y) != want) {
        if (bad_g) *bad_g = x;
        if (bad_h) *bad_h = y;
        return false;
      }
    }
  return true;
}

CoboundarySolve solve_coboundary(const TwoCocycle& kappa) {
  const FiniteGroup& g = *kappa.base;
  const CoefficientGroup& q = *kappa.coeff;
  const std::size_t n = g.order();
  CoboundarySolve out;

  if (q.rank == 0) {
    out.solvable = true;
    out.sigma = Coboundary{kappa.base, kappa.coeff, std::vector<Elem>(n, 0)};
    return out;
  }

  const unsigned p = q.prime;
  const unsigned rank = q.rank;

  // -sigma(g) - sigma(h) + sigma(g*h) = kappa(g,h), coordinatewise; the
  // coefficient pattern is shared across coordinates, so one elimination with
  // rank right-hand-side columns solves all of them
  auto row_of = [&](std::uint64_t r, fp::SparseRow& row, std::vector<fp::Val>& rhs) {
    const Elem y = static_cast<Elem>(r % n);
    const Elem x = static_cast<Elem>(r / n);
    const Elem xy = g.mul(x, y);
    row.entries.clear();
    auto add = [&](Elem col, unsigned v) {
      for (auto& e : row.entries)
        if (e.first == col) {
          e.second = static_cast<fp::Val>((e.second + v) % p);
          return;
        }
      row.entries.emplace_back(col, static_cast<fp::Val>(v % p));
    };
    add(xy, 1);
    add(x, p - 1);
    add(y, p - 1);
    std::erase_if(row.entries, [](const auto& e) { return e.second == 0; });
    const auto digits = q.coords(kappa.at(x, y));
    rhs.assign(digits.begin(), digits.end());
  };

  fp::RowReducer red(p, static_cast<fp::Col>(n), rank);
  fp::SparseRow row;
  std::vector<fp::Val> rhs;
  const std::uint64_t total = std::uint64_t(n) * n;
  for (std::uint64_t r = 0; r < total; ++r) {
    row_of(r, row, rhs);
    if (!red.add_row(row, rhs.data())) {
      out.solvable = false;
      out.row_g = static_cast<Elem>(r / n);
      out.row_h = static_cast<Elem>(r % n);
      out.certificate = red.certificate([&](std::uint32_t src, fp::SparseRow& rr, std::vector<fp::Val>& rrhs) {
        row_of(src, rr, rrhs);
      });
      return out;
    }
  }

  const std::vector<fp::Val> x = red.solution();
  out.solvable = true;
  out.sigma = Coboundary{kappa.base, kappa.coeff, std::vector<Elem>(n, 0)};
  for (std::size_t e = 0; e < n; ++e) {
    Elem local = 0;
    for (unsigned t = 0; t < rank; ++t) local = local * p + x[e * rank + t];
    out.sigma.sigma[e] = local;
  }
  return out;
}

// ---- central extensions -----------------------------------------------------

CentralExtension build_central_extension(const TwoCocycle& kappa, bool verify) {
  const TripleVerdict cv = check_cocycle(kappa);
  if (!cv.holds)
    fail(Errc::not_associative, "cocycle identity fails at (" + std::to_string(cv.g) + "," +
                                    std::to_string(cv.h) + "," + std::to_string(cv.k) + ")");
  if (!kappa.is_normalized())
    fail(Errc::cocycle_not_normalized, "theta(1,a) or theta(a,1) differs from 1");

  const FiniteGroup& g = *kappa.base;
  const CoefficientGroup& q = *kappa.coeff;
  const std::size_t ng = g.order();
  const std::size_t nq = q.size();
  const std::size_t ne = ng * nq;
  if (ne > order_cap()) fail(Errc::order_overflow, "extension order exceeds cap");

  std::vector<Elem> flat(ne * ne);
  const Elem* qt = q.group->table().data();
  const Elem* gt = g.table().data();
  const Elem* kv = kappa.values.data();
  scan::for_each(ne, [&](std::uint64_t rowi) {
    const std::size_t g1 = rowi % ng;
    const std::size_t q1 = rowi / ng;
    const Elem* g_row = gt + g1 * ng;
    const Elem* k_row = kv + g1 * ng;
    const Elem* q_row = qt + q1 * nq;
    Elem* dst = flat.data() + rowi * ne;
    for (std::size_t q2 = 0; q2 < nq; ++q2) {
      const Elem* qq_row = qt + std::size_t(q_row[q2]) * nq;
      for (std::size_t g2 = 0; g2 < ng; ++g2)
        dst[q2 * ng + g2] = static_cast<Elem>(std::size_t(qq_row[k_row[g2]]) * ng + g_row[g2]);
    }
  });

  std::vector<std::string> names;
  if (g.has_names() || q.parent->has_names()) {
    names.resize(ne);
    for (std::size_t qq = 0; qq < nq; ++qq)
      for (std::size_t gg = 0; gg < ng; ++gg)
        names[qq * ng + gg] = "(" + q.parent->name_of(q.to_parent[qq]) + ", " +
                              g.name_of(static_cast<Elem>(gg)) + ")";
  }

  auto total = std::make_shared<FiniteGroup>(
      FiniteGroup::unchecked(ne, std::move(flat), std::move(names)));
  // associativity follows from the verified cocycle identity
  total->validate(verify);

  CentralExtension e;
  e.total = total;
  e.base = kappa.base;
  e.coeff = kappa.coeff;
  e.cocycle = kappa;
  e.standard_section = GroupMap{kappa.base, total, {}};
  e.standard_section.images.resize(ng);
  for (Elem x = 0; x < ng; ++x) e.standard_section.images[x] = x;

  // Q x 1 must be central
  for (std::size_t qq = 0; qq < nq; ++qq) {
    const Elem z = static_cast<Elem>(qq * ng);
    for (Elem x = 0; x < ne; ++x)
      if (total->mul(z, x) != total->mul(x, z))
        fail(Errc::theorem_violation, "coefficient copy not central in the extension");
  }
  // round-trip: s(a) s(b) s(ab)^-1 must reproduce the defining cocycle
  for (Elem a = 0; a < ng; ++a)
    for (Elem b = 0; b < ng; ++b) {
      const Elem prod = total->mul(a, b);
      const Elem val = total->mul(prod, total->inv(g.mul(a, b)));
      if (val != static_cast<Elem>(std::size_t(kappa.at(a, b)) * ng))
        fail(Errc::theorem_violation, "standard-section cocycle differs from the defining one");
    }
  return e;
}

TwoCocycle extract_cocycle_from_section(const CentralExtension& e, const GroupMap& s) {
  const FiniteGroup& total = *e.total;
  const std::size_t ng = e.base->order();
  if (s.images.size() != ng) fail(Errc::dimension_mismatch, "section not total");
  for (Elem x = 0; x < ng; ++x)
    if (e.project(s.images[x]) != x)
      fail(Errc::not_a_section, "projection of s(" + std::to_string(x) + ") is not " +
                                    std::to_string(x));
  TwoCocycle theta{e.base, e.coeff, std::vector<Elem>(ng * ng)};
  for (Elem a = 0; a < ng; ++a)
    for (Elem b = 0; b < ng; ++b) {
      const Elem prod = total.mul(s.images[a], s.images[b]);
      const Elem val = total.mul(prod, total.inv(s.images[e.base->mul(a, b)]));
      // lies in Q x 1 because the projection is a morphism
      if (val % ng != 0)
        fail(Errc::not_a_section, "section defect escapes the kernel at " + pair_str(a, b));
      theta.values[std::size_t(a) * ng + b] = static_cast<Elem>(val / ng);
    }
  const TripleVerdict v = check_cocycle(theta);
  if (!v.holds)
    fail(Errc::theorem_violation, "section cocycle fails the cocycle identity");
  return theta;
}

ComplementSearch find_complement(const CentralExtension& e,
                                 const std::vector<Elem>& base_generators, std::uint64_t cap) {
  const std::size_t ng = e.base->order();
  const std::size_t nq = e.coeff->size();
  const FiniteGroup& total = *e.total;

  // No generation requirement on base_generators: when they fail to generate
  // the base no lift tuple can close to order |base| with trivial kernel, so
  // the search soundly reports none; "found" results are always genuine.
  const std::size_t k = base_generators.size();
  double cand = 1.0;
  for (std::size_t i = 0; i < k; ++i) cand *= static_cast<double>(nq);
  if (cand > static_cast<double>(cap)) fail(Errc::too_large, "|Q|^#gens exceeds the cap");
  const std::uint64_t tuples = static_cast<std::uint64_t>(cand);

  ComplementSearch out;
  std::vector<Elem> lift(k);
  std::vector<char> in(total.order());
  std::vector<Elem> queue;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    ++out.candidates;
    std::uint64_t rem = t;
    for (std::size_t i = k; i-- > 0;) {
      const Elem qi = static_cast<Elem>(rem % nq);
      rem /= nq;
      lift[i] = static_cast<Elem>(std::size_t(qi) * ng + base_generators[i]);
    }
    // closure under right multiplication; abort on kernel hits or overgrowth
    std::fill(in.begin(), in.end(), 0);
    queue.clear();
    queue.push_back(0);
    in[0] = 1;
    bool ok = true;
    for (Elem x : lift)
      if (!in[x]) {
        if (x % ng == 0 && x != 0) {
          ok = false;
          break;
        }
        in[x] = 1;
        queue.push_back(x);
      }
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      for (Elem s : lift) {
        const Elem y = total.mul(queue[head], s);
        if (in[y]) continue;
        if (y % ng == 0 && y != 0) {
          ok = false;
          break;
        }
        in[y] = 1;
        queue.push_back(y);
        if (queue.size() > ng) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || queue.size() != ng) continue;

    out.found = true;
    out.complement.assign(queue.begin(), queue.end());
    std::sort(out.complement.begin(), out.complement.end());
    out.section = GroupMap{e.base, e.total, std::vector<Elem>(ng)};
    for (Elem m : out.complement) out.section.images[m % ng] = m;
    if (!out.section.is_homomorphism())
      fail(Errc::theorem_violation, "complement section is not a morphism");
    return out;
  }
  return out;
}

Obstruction derived_intersection_obstruction(const CentralExtension& e) {
  const FiniteGroup& total = *e.total;
  const std::size_t ng = e.base->order();
  // Q is central, so every commutator equals one of standard-section elements
  std::vector<std::atomic<char>> hit(total.order());
  scan::for_each(ng, [&](std::uint64_t a) {
    for (Elem b = 0; b < ng; ++b)
      hit[total.comm(static_cast<Elem>(a), b)].store(1, std::memory_order_relaxed);
  });
  std::vector<Elem> gens;
  for (std::size_t x = 1; x < total.order(); ++x)
    if (hit[x].load(std::memory_order_relaxed)) gens.push_back(static_cast<Elem>(x));
  const Subgroup derived = subgroup_generated(e.total, gens);
  for (Elem m : derived.members)
    if (m != 0 && m % ng == 0) return {true, static_cast<Elem>(m / ng)};
  return {};
}

TransportedCocycle transport_cocycle(const TwoCocycle& kappa, const Subgroup& sub,
                                     const CoeffMorphism& morphism) {
  if (sub.parent != kappa.base) fail(Errc::not_a_subgroup, "subgroup is not over the cocycle base");
  if (morphism.source != kappa.coeff)
    fail(Errc::shape_mismatch, "morphism source differs from the cocycle coefficients");
  const std::size_t nq = morphism.source->size();
  if (morphism.images.size() != nq) fail(Errc::dimension_mismatch, "morphism not total");
  for (Elem a = 0; a < nq; ++a)
    for (Elem b = 0; b < nq; ++b)
      if (morphism.images[morphism.source->local_mul(a, b)] !=
          morphism.target->local_mul(morphism.images[a], morphism.images[b]))
        fail(Errc::not_a_homomorphism, "coefficient map fails at " + pair_str(a, b));

  TransportedCocycle out;
  out.base_view = subgroup_as_group(sub); // throws NotASubgroup when not closed
  const std::size_t m = sub.members.size();
  out.cocycle = TwoCocycle{out.base_view.group, morphism.target, std::vector<Elem>(m * m)};
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      out.cocycle.values[std::size_t(i) * m + j] =
          morphism.images[kappa.at(sub.members[i], sub.members[j])];
  const TripleVerdict v = check_cocycle(out.cocycle);
  if (!v.holds) fail(Errc::theorem_violation, "transported cocycle fails the cocycle identity");
  return out;
}

RotaBaxterOperator reconstruct_rb(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                                  const Coboundary& sigma) {
  const GroupPtr circle = circle_group(gamma);
  const TwoCocycle kappa = extract_kappa(g, gamma, c, sigma.coeff, circle);
  return reconstruct_rb(g, gamma, c, sigma, circle, kappa);
}

RotaBaxterOperator reconstruct_rb(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                                  const Coboundary& sigma, const GroupPtr& circle,
                                  const TwoCocycle& kappa) {
  if (!gamma.verified) fail(Errc::not_automorphism, "gamma not verified");
  Elem bg = 0, bh = 0;
  if (sigma.base != circle && sigma.base->table() != circle->table())
    fail(Errc::shape_mismatch, "coboundary lives over a different circle group");
  if (sigma.coeff != kappa.coeff)
    fail(Errc::shape_mismatch, "coboundary and cocycle use different coefficients");
  if (!sigma.certifies(kappa, &bg, &bh))
    fail(Errc::sigma_does_not_certify, "sigma fails to certify kappa at " + pair_str(bg, bh));

  const std::size_t n = g->order();
  RotaBaxterOperator b{g, std::vector<Elem>(n), false};
  for (Elem x = 0; x < n; ++x)
    b.images[x] = g->mul(sigma.coeff->to_parent[sigma.sigma[x]], c.images[x]);
  const PairVerdict v = verify_rb(b);
  if (!v.holds)
    fail(Errc::reconstruction_failed_rb_check,
         "reconstructed operator fails the Rota-Baxter identity at " + pair_str(v.g, v.h));
  return b;
}

} // namespace braceforge
