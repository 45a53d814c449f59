#ifndef BRACEFORGE_GROUP_HPP
#define BRACEFORGE_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "braceforge/errors.hpp"

namespace braceforge {

using Elem = std::uint32_t;

// Global bound on group orders produced by constructors, to keep dense tables
// within memory. Default 2^16; override with BRACEFORGE_ORDER_CAP or
// set_order_cap (tests use tiny caps to exercise the overflow paths).
std::size_t order_cap();
void set_order_cap(std::size_t cap);

// A finite group as a dense Cayley table over element indices 0..n-1.
// Invariants established at construction and never mutated afterwards:
//   - the table is a Latin square,
//   - index 0 is the two-sided identity,
//   - multiplication is associative,
//   - inverses are cached.
// Commutator convention throughout the library: [a,b] = a b a^-1 b^-1.
class FiniteGroup {
public:
  std::size_t order() const { return n_; }

  Elem mul(Elem a, Elem b) const { return tab_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  Elem comm(Elem a, Elem b) const { return mul(mul(a, b), inv_[mul(b, a)]); }

  // g^e for any integer e (negative exponents use the cached inverse)
  Elem pow(Elem g, long long e) const;

  // order of the element (smallest m >= 1 with g^m = 1)
  unsigned elem_order(Elem g) const;

  bool is_abelian() const;

  const std::vector<Elem>& table() const { return tab_; }
  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(Elem g) const;

  // Axiom check (Latin square, identity at 0, associativity); throws.
  // Constructors that are associative by construction skip this unless their
  // verify flag is set. check_assoc = false runs only the O(n^2) part, for
  // tables whose associativity is implied by a verified cocycle identity.
  void validate(bool check_assoc = true) const;

  // Unchecked constructor for by-construction tables; callers guarantee the
  // invariants. build_group is the checked entry point.
  static FiniteGroup unchecked(std::size_t n, std::vector<Elem> flat_table,
                               std::vector<std::string> names = {});

private:
  FiniteGroup() = default;
  void compute_inverses();

  std::size_t n_ = 0;
  std::vector<Elem> tab_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Total set-theoretic map between element index sets. No homomorphism
// property is assumed; operations that need one impose it.
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> images;

  Elem operator()(Elem g) const { return images[g]; }
  bool is_homomorphism() const; // exhaustive
};

struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> members; // sorted, contains 0

  std::size_t size() const { return members.size(); }
  bool contains(Elem g) const;
};

// A subgroup repackaged as a standalone FiniteGroup (index = position in the
// sorted member list) plus the translation maps.
struct SubgroupView {
  GroupPtr group;
  GroupPtr parent;
  std::vector<Elem> to_parent;   // local -> parent
  std::vector<Elem> from_parent; // parent -> local, npos_elem where absent
};
inline constexpr Elem npos_elem = ~Elem(0);
SubgroupView subgroup_as_group(const Subgroup& s);

// ---- constructors -------------------------------------------------------

// Validates the table (Latin square, identity, associativity), relocating the
// identity to index 0 if it sits elsewhere. Errors name the offending
// row/triple in the input indexing.
GroupPtr build_group(const std::vector<std::vector<Elem>>& table,
                     std::vector<std::string> names = {});

// Direct sum of cyclic groups; element index is the mixed-radix encoding of
// the exponent tuple (first factor most significant).
GroupPtr make_abelian(const std::vector<unsigned>& invariant_factors, bool verify = false);

// Heisenberg group of order p^3 on normal forms u^i v^j k^q, index
// i*p^2 + j*p + q, with [u,v] = k central:
//   (i1,j1,q1)*(i2,j2,q2) = (i1+i2, j1+j2, q1+q2 - j1*i2) mod p.
GroupPtr make_heisenberg(unsigned p, bool verify = false);

// index = gIdx*|H| + hIdx, componentwise table
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, bool verify = false);

// Pairs (a,b) with (a,b)(a',b') = (a a', b * action[a](b')); validates that
// every action[a] is an automorphism of b and that action is a homomorphism.
GroupPtr semidirect_product(const GroupPtr& a, const GroupPtr& b,
                            const std::vector<std::vector<Elem>>& action,
                            bool verify = false);

// ---- structure ----------------------------------------------------------

Subgroup center(const GroupPtr& g);
inline Elem commutator(const FiniteGroup& g, Elem a, Elem b) { return g.comm(a, b); }
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& gens);
GroupMap inner_automorphism(const GroupPtr& g, Elem x);

// greedy small generating set (first elements that enlarge the closure);
// multiplicativity of a map needs checking only against these
std::vector<Elem> small_generating_set(const FiniteGroup& g);

} // namespace braceforge

#endif
