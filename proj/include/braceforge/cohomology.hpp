#ifndef BRACEFORGE_COHOMOLOGY_HPP
#define BRACEFORGE_COHOMOLOGY_HPP

#include <memory>
#include <vector>

#include "braceforge/fp.hpp"
#include "braceforge/gamma.hpp"
#include "braceforge/group.hpp"
#include "braceforge/rota_baxter.hpp"

namespace braceforge {

// An elementary abelian coefficient group, given as a subgroup of an ambient
// group. Local element indices are the mixed-radix encoding of F_p
// coordinates in the chosen basis, so a coefficient group is reconstructable
// from (prime, rank) alone; the basis records the embedding.
struct CoefficientGroup {
  GroupPtr parent;
  std::vector<Elem> members;   // sorted parent indices
  unsigned prime = 0;          // 0 for the trivial group
  unsigned rank = 0;
  std::vector<Elem> basis;     // parent indices, one per rank
  GroupPtr group;              // standalone copy, order prime^rank
  std::vector<Elem> to_parent; // local -> parent
  std::vector<Elem> from_parent; // parent -> local, npos_elem outside

  std::size_t size() const { return to_parent.size(); }
  Elem local_mul(Elem a, Elem b) const { return group->mul(a, b); }
  Elem local_inv(Elem a) const { return group->inv(a); }
  // F_p coordinates of a local element (length rank)
  std::vector<std::uint8_t> coords(Elem local) const;
};

using CoeffPtr = std::shared_ptr<const CoefficientGroup>;

// throws CenterNotElementaryAbelian when the subgroup is not elementary
// abelian of prime exponent
CoeffPtr make_coefficient_group(const Subgroup& s);

// a free-standing F_p^rank coefficient group embedded in itself; used when a
// cocycle file carries no ambient group
CoeffPtr make_abstract_coefficient_group(unsigned prime, unsigned rank);

// theta: base x base -> Q with trivial action; the cocycle identity is
//   theta(b,c) theta(a, b*c) = theta(a*b, c) theta(a,b).
struct TwoCocycle {
  GroupPtr base;
  CoeffPtr coeff;
  std::vector<Elem> values; // flat |base|^2 of coeff-local indices

  Elem at(Elem a, Elem b) const { return values[std::size_t(a) * base->order() + b]; }
  bool is_normalized() const;
};

TripleVerdict check_cocycle(const TwoCocycle& theta);

// pointwise a . b^-1 in the coefficient group (same base, same coefficients)
TwoCocycle cocycle_quotient(const TwoCocycle& a, const TwoCocycle& b);

// kappa(g,h) = C(g) C(h) C(g o h)^-1, a cocycle of the circle group of gamma
// with central values. Validates conj(C(g)) = gamma(g) for all g.
// The overload without a precomputed circle group builds one itself.
TwoCocycle extract_kappa(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                         const CoeffPtr& coeff);
TwoCocycle extract_kappa(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                         const CoeffPtr& coeff, const GroupPtr& circle);

// sigma: base -> coefficients witnessing kappa(g,h) = sigma(g)^-1 sigma(h)^-1
// sigma(g o h)
struct Coboundary {
  GroupPtr base;
  CoeffPtr coeff;
  std::vector<Elem> sigma; // coeff-local indices

  bool certifies(const TwoCocycle& kappa, Elem* bad_g = nullptr, Elem* bad_h = nullptr) const;
};

struct CoboundarySolve {
  bool solvable = false;
  Coboundary sigma;              // when solvable
  Elem row_g = 0, row_h = 0;     // first inconsistent equation otherwise
  fp::Certificate certificate;   // dual witness of the inconsistency
};

// Writes the coboundary equation additively in coordinates, assembles the
// sparse F_p system over all |base|^2 pairs in lexicographic order, and
// row-reduces. Any solution is returned (free variables zero); solutions
// differ by morphisms base -> Q.
CoboundarySolve solve_coboundary(const TwoCocycle& kappa);

// E = Q x G with (q1,g1)(q2,g2) = (q1 q2 theta(g1,g2), g1 g2); index of
// (q,g) is q*|G| + g, standard section g -> (0,g).
struct CentralExtension {
  GroupPtr total;
  GroupPtr base;
  CoeffPtr coeff;
  TwoCocycle cocycle;
  GroupMap standard_section;

  Elem project(Elem e) const { return static_cast<Elem>(e % base->order()); }
  Elem coeff_part(Elem e) const { return static_cast<Elem>(e / base->order()); }
};

// Requires check_cocycle to hold and the cocycle to be normalized
// (theta(1,a) = theta(a,1) = 1, so that (1,1) is the identity of E).
// Validates the Latin-square property, centrality of Q x 1, and the
// round-trip through the standard section; the full associativity sweep runs
// only with verify = true since the cocycle identity already implies it.
CentralExtension build_central_extension(const TwoCocycle& kappa, bool verify = false);

// theta(a,b) = s(a) s(b) s(ab)^-1 projected into Q; throws NotASection.
TwoCocycle extract_cocycle_from_section(const CentralExtension& e, const GroupMap& s);

struct ComplementSearch {
  bool found = false;
  GroupMap section;              // morphism base -> total when found
  std::vector<Elem> complement;  // image of the section
  std::uint64_t candidates = 0;  // lift tuples tried
};

// Enumerates lifts (q_i, gen_i) of the given base generators over all
// coefficient tuples in mixed-radix order; a tuple wins when it generates a
// subgroup of order |base| meeting Q x 1 trivially. A found section proves
// splitting unconditionally; a none verdict proves non-splitting when the
// generators generate the base (otherwise no tuple can close at order |base|
// at all, and the verdict is only corroborating).
ComplementSearch find_complement(const CentralExtension& e, const std::vector<Elem>& base_generators,
                                 std::uint64_t cap = 1'000'000);

struct Obstruction {
  bool nontrivial = false;
  Elem witness = 0; // coeff-local index of a nonidentity element of Q x 1 in [E,E]
};

// A split central extension satisfies Q cap [E,E] = 1, so a nonidentity
// witness certifies non-splitting independently of the linear solver.
// A trivial intersection is inconclusive.
Obstruction derived_intersection_obstruction(const CentralExtension& e);

struct CoeffMorphism {
  CoeffPtr source;
  CoeffPtr target;
  std::vector<Elem> images; // source-local -> target-local
};

// Restriction to a subgroup of the base combined with a coefficient
// homomorphism; the result lives over the subgroup repackaged as a group.
struct TransportedCocycle {
  TwoCocycle cocycle;
  SubgroupView base_view;
};
TransportedCocycle transport_cocycle(const TwoCocycle& kappa, const Subgroup& sub,
                                     const CoeffMorphism& morphism);

// B(g) = sigma(g) . C(g). Validates that sigma certifies the cocycle of
// (gamma, C) pointwise, then checks the result exhaustively. The overload
// takes the circle group and cocycle already derived from the same inputs.
RotaBaxterOperator reconstruct_rb(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                                  const Coboundary& sigma);
RotaBaxterOperator reconstruct_rb(const GroupPtr& g, const GammaFunction& gamma, const GroupMap& c,
                                  const Coboundary& sigma, const GroupPtr& circle,
                                  const TwoCocycle& kappa);

} // namespace braceforge

#endif
