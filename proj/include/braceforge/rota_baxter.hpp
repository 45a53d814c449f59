#ifndef BRACEFORGE_ROTA_BAXTER_HPP
#define BRACEFORGE_ROTA_BAXTER_HPP

#include <cstdint>
#include <vector>

#include "braceforge/gamma.hpp"
#include "braceforge/group.hpp"

namespace braceforge {

// B: G -> G with B(g . B(g) . h . B(g)^-1) = B(g) . B(h). A distinct role
// type over GroupMap so its verified flag cannot be confused with gamma
// verification.
struct RotaBaxterOperator {
  GroupPtr group;
  std::vector<Elem> images;
  bool verified = false;

  Elem operator()(Elem g) const { return images[g]; }
};

// Exhaustive check; first violating pair on failure. Sets the verified flag.
PairVerdict verify_rb(RotaBaxterOperator& b);

// gamma(g) = conjugation by B(g); returned verified. Throws NotRotaBaxter.
GammaFunction gamma_of_rb(const RotaBaxterOperator& b);

// Skew brace with dot = G and circle from gamma_of_rb; re-checked.
SkewBrace brace_of_rb(const RotaBaxterOperator& b);

inline constexpr std::uint64_t enumerate_rb_default_cap = 100'000'000ull;

// All Rota-Baxter operators on G in lexicographic image order. Prunes with
// the forced value B(1) = 1 and incremental pair checks. Throws TooLarge when
// |G|^|G| exceeds the cap.
std::vector<RotaBaxterOperator> enumerate_rb(const GroupPtr& g,
                                             std::uint64_t cap = enumerate_rb_default_cap);

struct SameGammaResult {
  bool same = true;
  Elem witness = 0;   // g with differing conjugation actions, when !same
  GroupMap zeta;      // g -> B2(g) . B1(g)^-1, central-valued morphism, when same
};

// Decides whether two verified operators induce the same gamma function; when
// they do, the quotient zeta is asserted (not merely reported) to be a
// morphism (G,o) -> Z(G), so a violation throws TheoremViolation.
SameGammaResult same_gamma_witness(const RotaBaxterOperator& b1, const RotaBaxterOperator& b2);

// Centreless case: conjugation is injective, so B = iota^-1 . gamma. Throws
// CenterNotTrivial / GammaNotInner.
RotaBaxterOperator rb_from_centerless(const GroupPtr& g, const GammaFunction& gamma);

} // namespace braceforge

#endif
