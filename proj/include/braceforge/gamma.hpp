#ifndef BRACEFORGE_GAMMA_HPP
#define BRACEFORGE_GAMMA_HPP

#include <vector>

#include "braceforge/group.hpp"

namespace braceforge {

// Per-element automorphism action table: action[g] is the image array of the
// automorphism gamma(g) of (G,.). A gamma function satisfies
//   gamma(g . h^{gamma(g)}) = gamma(g) gamma(h)
// and induces the circle operation g o h = g . h^{gamma(g)}. These maps are
// the lambda-maps of the skew-brace literature; the library follows the
// "gamma" name throughout.
struct GammaFunction {
  GroupPtr group;
  std::vector<std::vector<Elem>> action;
  bool verified = false;

  Elem apply(Elem g, Elem h) const { return action[g][h]; }
};

struct PairVerdict {
  bool holds = true;
  Elem g = 0, h = 0; // first violating pair in index order
};

struct TripleVerdict {
  bool holds = true;
  Elem g = 0, h = 0, k = 0;
};

struct SkewBrace {
  GroupPtr dot;
  GroupPtr circle;
  GammaFunction gamma;
};

// action[g] = conjugation by C(g); unverified
GammaFunction gamma_from_inner_rep(const GroupPtr& g, const GroupMap& c);

// Exhaustive check of the functional equation; sets the verified flag.
// Throws NotAutomorphism(g) if some action[g] is not an automorphism.
PairVerdict verify_gamma(GammaFunction& gamma);

// Table of g o h = g . h^{gamma(g)}, validated as a group (the validation is
// a cross-check; the gamma property already guarantees it).
GroupPtr circle_group(const GammaFunction& gamma);

// g o (h . k) = (g o h) . g^{-1} . (g o k), exhaustively
TripleVerdict verify_skew_brace(const FiniteGroup& dot, const FiniteGroup& circle);

struct InnerCheck {
  bool all_inner = true;
  Elem witness = 0;            // first g with gamma(g) not inner
  std::vector<Elem> reps;      // when all inner: x with gamma(g) = conj(x), per g
};
InnerCheck inner_image_check(const GammaFunction& gamma);

// Extracts the unique gamma with circle_group(gamma) = circle:
// action[g](h) = g^{-1} . (g o h). Throws NotASkewBrace.
GammaFunction gamma_of_brace(const GroupPtr& dot, const GroupPtr& circle);

} // namespace braceforge

#endif
