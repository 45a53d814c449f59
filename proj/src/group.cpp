#include "braceforge/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

#include "braceforge/scan.hpp"

namespace braceforge {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("BRACEFORGE_ORDER_CAP")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t(1) << 16;
}

std::size_t& cap_slot() {
  static std::size_t cap = initial_cap();
  return cap;
}

std::string idx3(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

std::size_t order_cap() { return cap_slot(); }
void set_order_cap(std::size_t cap) { cap_slot() = cap; }

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_associative: return "NotAssociative";
    case Errc::not_latin_square: return "NotLatinSquare";
    case Errc::no_identity: return "NoIdentity";
    case Errc::order_overflow: return "OrderOverflow";
    case Errc::not_odd_prime: return "NotOddPrime";
    case Errc::action_not_automorphism: return "ActionNotAutomorphism";
    case Errc::action_not_homomorphism: return "ActionNotHomomorphism";
    case Errc::not_automorphism: return "NotAutomorphism";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_a_skew_brace: return "NotASkewBrace";
    case Errc::not_rota_baxter: return "NotRotaBaxter";
    case Errc::center_not_trivial: return "CenterNotTrivial";
    case Errc::gamma_not_inner: return "GammaNotInner";
    case Errc::too_large: return "TooLarge";
    case Errc::theorem_violation: return "TheoremViolation";
    case Errc::rep_mismatch: return "RepMismatch";
    case Errc::center_not_elementary_abelian: return "CenterNotElementaryAbelian";
    case Errc::value_not_central: return "ValueNotCentral";
    case Errc::not_a_section: return "NotASection";
    case Errc::not_a_subgroup: return "NotASubgroup";
    case Errc::not_a_homomorphism: return "NotAHomomorphism";
    case Errc::cocycle_not_normalized: return "CocycleNotNormalized";
    case Errc::sigma_does_not_certify: return "SigmaDoesNotCertify";
    case Errc::reconstruction_failed_rb_check: return "ReconstructionFailedRBCheck";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_prime: return "NotPrime";
    case Errc::alpha_is_minus_half: return "AlphaIsMinusHalf";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::schema_error: return "SchemaError";
  }
  return "Unknown";
}

bool errc_is_math_verdict(Errc code) {
  switch (code) {
    case Errc::not_associative:
    case Errc::not_latin_square:
    case Errc::no_identity:
    case Errc::action_not_automorphism:
    case Errc::action_not_homomorphism:
    case Errc::not_automorphism:
    case Errc::not_a_skew_brace:
    case Errc::not_rota_baxter:
    case Errc::center_not_trivial:
    case Errc::gamma_not_inner:
    case Errc::rep_mismatch:
    case Errc::center_not_elementary_abelian:
    case Errc::value_not_central:
    case Errc::not_a_section:
    case Errc::not_a_subgroup:
    case Errc::not_a_homomorphism:
    case Errc::cocycle_not_normalized:
    case Errc::sigma_does_not_certify:
      return true;
    default:
      return false;
  }
}

// ---- FiniteGroup --------------------------------------------------------

FiniteGroup FiniteGroup::unchecked(std::size_t n, std::vector<Elem> flat_table,
                                   std::vector<std::string> names) {
  FiniteGroup g;
  g.n_ = n;
  g.tab_ = std::move(flat_table);
  g.names_ = std::move(names);
  g.compute_inverses();
  return g;
}

void FiniteGroup::compute_inverses() {
  inv_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
  }
}

Elem FiniteGroup::pow(Elem g, long long e) const {
  if (e < 0) {
    g = inv_[g];
    e = -e;
  }
  Elem acc = 0;
  Elem base = g;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

unsigned FiniteGroup::elem_order(Elem g) const {
  unsigned m = 1;
  Elem x = g;
  while (x != 0) {
    x = mul(x, g);
    ++m;
  }
  return m;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::name_of(Elem g) const {
  if (g < names_.size() && !names_[g].empty()) return names_[g];
  return "g" + std::to_string(g);
}

namespace {

// lexicographically first row that is not a permutation (rows then columns;
// column failures reported as n + col)
std::uint64_t latin_violation(const std::vector<Elem>& tab, std::size_t n) {
  std::atomic<std::uint64_t> bad{scan::npos};
  scan::for_each(n, [&](std::uint64_t r) {
    std::vector<bool> seen(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      const Elem v = tab[r * n + c];
      if (v >= n || seen[v]) {
        std::uint64_t cur = bad.load();
        while (r < cur && !bad.compare_exchange_weak(cur, r)) {
        }
        return;
      }
      seen[v] = true;
    }
  });
  if (bad.load() != scan::npos) return bad.load();
  scan::for_each(n, [&](std::uint64_t c) {
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      const Elem v = tab[r * n + c];
      if (v >= n || seen[v]) {
        std::uint64_t enc = n + c;
        std::uint64_t cur = bad.load();
        while (enc < cur && !bad.compare_exchange_weak(cur, enc)) {
        }
        return;
      }
      seen[v] = true;
    }
  });
  return bad.load();
}

std::uint64_t assoc_violation(const std::vector<Elem>& tab, std::size_t n) {
  const Elem* t = tab.data();
  return scan::first_hit_rows(n, [&](std::uint64_t a) {
    const Elem* row_a = t + a * n;
    for (std::size_t b = 0; b < n; ++b) {
      const Elem* row_ab = t + std::size_t(row_a[b]) * n;
      const Elem* row_b = t + b * n;
      for (std::size_t c = 0; c < n; ++c)
        if (row_ab[c] != row_a[row_b[c]]) return (a * n + b) * n + c;
    }
    return scan::npos;
  });
}

} // namespace

void FiniteGroup::validate(bool check_assoc) const {
  const std::uint64_t latin = latin_violation(tab_, n_);
  if (latin != scan::npos) {
    if (latin < n_)
      fail(Errc::not_latin_square, "row " + std::to_string(latin) + " is not a permutation");
    fail(Errc::not_latin_square, "column " + std::to_string(latin - n_) + " is not a permutation");
  }
  for (Elem a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      fail(Errc::no_identity, "index 0 is not a two-sided identity at element " + std::to_string(a));
  }
  if (!check_assoc) return;
  const std::uint64_t viol = assoc_violation(tab_, n_);
  if (viol != scan::npos) {
    const Elem c = static_cast<Elem>(viol % n_);
    const Elem b = static_cast<Elem>((viol / n_) % n_);
    const Elem a = static_cast<Elem>(viol / (std::uint64_t(n_) * n_));
    fail(Errc::not_associative, "associativity fails at triple " + idx3(a, b, c));
  }
}

// ---- constructors -------------------------------------------------------

GroupPtr build_group(const std::vector<std::vector<Elem>>& table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) fail(Errc::no_identity, "empty table");
  std::vector<Elem> flat(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      fail(Errc::not_latin_square, "row " + std::to_string(r) + " has wrong length");
    std::copy(table[r].begin(), table[r].end(), flat.begin() + r * n);
  }

  const std::uint64_t latin = latin_violation(flat, n);
  if (latin != scan::npos) {
    if (latin < n)
      fail(Errc::not_latin_square, "row " + std::to_string(latin) + " is not a permutation");
    fail(Errc::not_latin_square, "column " + std::to_string(latin - n) + " is not a permutation");
  }

  Elem identity = npos_elem;
  for (Elem e = 0; e < n && identity == npos_elem; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      ok = flat[std::size_t(e) * n + a] == a && flat[std::size_t(a) * n + e] == a;
    if (ok) identity = e;
  }
  if (identity == npos_elem) fail(Errc::no_identity, "no two-sided identity element");

  const std::uint64_t viol = assoc_violation(flat, n);
  if (viol != scan::npos) {
    const Elem c = static_cast<Elem>(viol % n);
    const Elem b = static_cast<Elem>((viol / n) % n);
    const Elem a = static_cast<Elem>(viol / (std::uint64_t(n) * n));
    fail(Errc::not_associative, "associativity fails at triple " + idx3(a, b, c));
  }

  if (identity != 0) {
    // conjugate the table with the transposition 0 <-> identity
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[identity]);
    std::vector<Elem> relab(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        relab[std::size_t(perm[a]) * n + perm[b]] = perm[flat[std::size_t(a) * n + b]];
    flat = std::move(relab);
    if (!names.empty()) {
      std::vector<std::string> renamed(n);
      for (Elem a = 0; a < n; ++a) renamed[perm[a]] = names[a];
      names = std::move(renamed);
    }
  }

  return std::make_shared<FiniteGroup>(FiniteGroup::unchecked(n, std::move(flat), std::move(names)));
}

GroupPtr make_abelian(const std::vector<unsigned>& invariant_factors, bool verify) {
  if (invariant_factors.empty()) fail(Errc::bad_parameters, "empty factor list");
  std::size_t n = 1;
  for (unsigned f : invariant_factors) {
    if (f < 1) fail(Errc::bad_parameters, "factor < 1");
    n *= f;
    if (n > order_cap())
      fail(Errc::order_overflow,
           "order exceeds cap " + std::to_string(order_cap()));
  }
  const std::size_t k = invariant_factors.size();
  std::vector<Elem> flat(n * n);
  std::vector<unsigned> da(k), db(k);
  for (Elem a = 0; a < n; ++a) {
    // decode a once
    {
      Elem t = a;
      for (std::size_t i = k; i-- > 0;) {
        da[i] = t % invariant_factors[i];
        t /= invariant_factors[i];
      }
    }
    for (Elem b = 0; b < n; ++b) {
      Elem t = b;
      for (std::size_t i = k; i-- > 0;) {
        db[i] = t % invariant_factors[i];
        t /= invariant_factors[i];
      }
      Elem s = 0;
      for (std::size_t i = 0; i < k; ++i)
        s = s * invariant_factors[i] + (da[i] + db[i]) % invariant_factors[i];
      flat[std::size_t(a) * n + b] = s;
    }
  }
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    Elem t = a;
    std::string s;
    for (std::size_t i = k; i-- > 0;) {
      da[i] = t % invariant_factors[i];
      t /= invariant_factors[i];
    }
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(da[i]);
    names[a] = k == 1 ? s : "(" + s + ")";
  }
  auto g = std::make_shared<FiniteGroup>(FiniteGroup::unchecked(n, std::move(flat), std::move(names)));
  if (verify) g->validate();
  return g;
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

GroupPtr make_heisenberg(unsigned p, bool verify) {
  if (p == 2 || !is_prime(p))
    fail(Errc::not_odd_prime, std::to_string(p) + " is not an odd prime");
  const std::size_t n = std::size_t(p) * p * p;
  if (n > order_cap()) fail(Errc::order_overflow, "order exceeds cap");
  std::vector<Elem> flat(n * n);
  for (unsigned i1 = 0; i1 < p; ++i1)
    for (unsigned j1 = 0; j1 < p; ++j1)
      for (unsigned q1 = 0; q1 < p; ++q1) {
        const std::size_t a = (std::size_t(i1) * p + j1) * p + q1;
        for (unsigned i2 = 0; i2 < p; ++i2)
          for (unsigned j2 = 0; j2 < p; ++j2)
            for (unsigned q2 = 0; q2 < p; ++q2) {
              const std::size_t b = (std::size_t(i2) * p + j2) * p + q2;
              const unsigned i = (i1 + i2) % p;
              const unsigned j = (j1 + j2) % p;
              const unsigned q = (q1 + q2 + p * p - (j1 * i2) % p) % p;
              flat[a * n + b] = static_cast<Elem>((std::size_t(i) * p + j) * p + q);
            }
      }
  std::vector<std::string> names(n);
  for (unsigned i = 0; i < p; ++i)
    for (unsigned j = 0; j < p; ++j)
      for (unsigned q = 0; q < p; ++q) {
        std::string s;
        auto app = [&](const char* sym, unsigned e) {
          if (!e) return;
          if (!s.empty()) s += " ";
          s += sym;
          if (e > 1) s += "^" + std::to_string(e);
        };
        app("u", i);
        app("v", j);
        app("k", q);
        names[(std::size_t(i) * p + j) * p + q] = s.empty() ? "1" : s;
      }
  auto g = std::make_shared<FiniteGroup>(FiniteGroup::unchecked(n, std::move(flat), std::move(names)));
  if (verify) g->validate();
  return g;
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, bool verify) {
  const std::size_t ng = g->order(), nh = h->order();
  if (ng * nh > order_cap()) fail(Errc::order_overflow, "order exceeds cap");
  const std::size_t n = ng * nh;
  std::vector<Elem> flat(n * n);
  for (Elem a1 = 0; a1 < ng; ++a1)
    for (Elem b1 = 0; b1 < nh; ++b1) {
      const std::size_t row = std::size_t(a1) * nh + b1;
      for (Elem a2 = 0; a2 < ng; ++a2)
        for (Elem b2 = 0; b2 < nh; ++b2)
          flat[row * n + std::size_t(a2) * nh + b2] =
              static_cast<Elem>(std::size_t(g->mul(a1, a2)) * nh + h->mul(b1, b2));
    }
  std::vector<std::string> names;
  if (g->has_names() || h->has_names()) {
    names.resize(n);
    for (Elem a = 0; a < ng; ++a)
      for (Elem b = 0; b < nh; ++b)
        names[std::size_t(a) * nh + b] = "(" + g->name_of(a) + ", " + h->name_of(b) + ")";
  }
  auto out = std::make_shared<FiniteGroup>(FiniteGroup::unchecked(n, std::move(flat), std::move(names)));
  if (verify) out->validate();
  return out;
}

GroupPtr semidirect_product(const GroupPtr& a, const GroupPtr& b,
                            const std::vector<std::vector<Elem>>& action, bool verify) {
  const std::size_t na = a->order(), nb = b->order();
  if (action.size() != na) fail(Errc::dimension_mismatch, "action array length != |A|");
  for (Elem x = 0; x < na; ++x) {
    const auto& f = action[x];
    if (f.size() != nb)
      fail(Errc::action_not_automorphism, "action[" + std::to_string(x) + "] has wrong length");
    std::vector<bool> seen(nb, false);
    for (Elem t = 0; t < nb; ++t) {
      if (f[t] >= nb || seen[f[t]])
        fail(Errc::action_not_automorphism,
             "action[" + std::to_string(x) + "] is not a bijection");
      seen[f[t]] = true;
    }
    for (Elem s = 0; s < nb; ++s)
      for (Elem t = 0; t < nb; ++t)
        if (f[b->mul(s, t)] != b->mul(f[s], f[t]))
          fail(Errc::action_not_automorphism,
               "action[" + std::to_string(x) + "] is not multiplicative at (" +
                   std::to_string(s) + "," + std::to_string(t) + ")");
  }
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < na; ++y) {
      const auto& fxy = action[a->mul(x, y)];
      for (Elem t = 0; t < nb; ++t)
        if (fxy[t] != action[x][action[y][t]])
          fail(Errc::action_not_homomorphism,
               "action is not a homomorphism at (" + std::to_string(x) + "," +
                   std::to_string(y) + ")");
    }

  if (na * nb > order_cap()) fail(Errc::order_overflow, "order exceeds cap");
  const std::size_t n = na * nb;
  std::vector<Elem> flat(n * n);
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1) {
      const std::size_t row = std::size_t(a1) * nb + b1;
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2)
          flat[row * n + std::size_t(a2) * nb + b2] =
              static_cast<Elem>(std::size_t(a->mul(a1, a2)) * nb + b->mul(b1, action[a1][b2]));
    }
  std::vector<std::string> names;
  if (a->has_names() || b->has_names()) {
    names.resize(n);
    for (Elem x = 0; x < na; ++x)
      for (Elem y = 0; y < nb; ++y)
        names[std::size_t(x) * nb + y] = "(" + a->name_of(x) + ", " + b->name_of(y) + ")";
  }
  auto out = std::make_shared<FiniteGroup>(FiniteGroup::unchecked(n, std::move(flat), std::move(names)));
  if (verify) out->validate();
  return out;
}

// ---- structure ----------------------------------------------------------

bool GroupMap::is_homomorphism() const {
  const std::size_t n = source->order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b])) return false;
  return true;
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup center(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<char> central(n, 0);
  scan::for_each(n, [&](std::uint64_t z) {
    for (Elem x = 0; x < n; ++x)
      if (g->mul(static_cast<Elem>(z), x) != g->mul(x, static_cast<Elem>(z))) return;
    central[z] = 1;
  });
  Subgroup s{g, {}};
  for (Elem z = 0; z < n; ++z)
    if (central[z]) s.members.push_back(z);
  return s;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens) {
  const std::size_t n = g->order();
  std::vector<char> in(n, 0);
  std::vector<Elem> queue{0};
  in[0] = 1;
  for (Elem x : gens)
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  // finite group: the closure under right multiplication by generators is
  // already a subgroup
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem s : gens) {
      const Elem y = g->mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  Subgroup out{g, {}};
  for (Elem x = 0; x < n; ++x)
    if (in[x]) out.members.push_back(x);
  return out;
}

Subgroup derived_subgroup(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<std::atomic<char>> hit(n);
  scan::for_each(n, [&](std::uint64_t a) {
    for (Elem b = 0; b < n; ++b)
      hit[g->comm(static_cast<Elem>(a), b)].store(1, std::memory_order_relaxed);
  });
  std::vector<Elem> gens;
  for (Elem x = 1; x < n; ++x)
    if (hit[x].load(std::memory_order_relaxed)) gens.push_back(x);
  return subgroup_generated(g, gens);
}

GroupMap inner_automorphism(const GroupPtr& g, Elem x) {
  GroupMap m{g, g, std::vector<Elem>(g->order())};
  for (Elem t = 0; t < g->order(); ++t) m.images[t] = g->conj(x, t);
  return m;
}

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> gens;
  std::vector<char> in(n, 0);
  std::vector<Elem> queue{0};
  in[0] = 1;
  std::size_t have = 1;
  for (Elem x = 1; x < n && have < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    // grow the closure with the new generator
    in[x] = 1;
    queue.push_back(x);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Elem s : gens) {
        const Elem y = g.mul(queue[head], s);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    have = queue.size();
  }
  return gens;
}

SubgroupView subgroup_as_group(const Subgroup& s) {
  const std::size_t m = s.members.size();
  const std::size_t np = s.parent->order();
  SubgroupView v;
  v.parent = s.parent;
  v.to_parent = s.members;
  v.from_parent.assign(np, npos_elem);
  for (Elem i = 0; i < m; ++i) v.from_parent[s.members[i]] = i;
  std::vector<Elem> flat(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const Elem prod = s.parent->mul(s.members[i], s.members[j]);
      const Elem loc = v.from_parent[prod];
      if (loc == npos_elem)
        fail(Errc::not_a_subgroup, "member set not closed at (" + std::to_string(s.members[i]) +
                                       "," + std::to_string(s.members[j]) + ")");
      flat[std::size_t(i) * m + j] = loc;
    }
  std::vector<std::string> names;
  if (s.parent->has_names()) {
    names.resize(m);
    for (Elem i = 0; i < m; ++i) names[i] = s.parent->name_of(s.members[i]);
  }
  v.group = std::make_shared<FiniteGroup>(FiniteGroup::unchecked(m, std::move(flat), std::move(names)));
  return v;
}

} // namespace braceforge
