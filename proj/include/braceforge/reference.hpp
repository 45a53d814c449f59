#ifndef BRACEFORGE_REFERENCE_HPP
#define BRACEFORGE_REFERENCE_HPP

#include "braceforge/cohomology.hpp"
#include "braceforge/gamma.hpp"
#include "braceforge/group.hpp"
#include "braceforge/rota_baxter.hpp"

// Serial reference implementations of the exhaustive checks, written as
// plain early-exit loops with no shared kernel machinery. Tests compare them
// against the parallel production checks, and the benchmark tool measures
// the gap. They must stay independent of scan.hpp.

namespace braceforge::ref {

TripleVerdict associativity(const FiniteGroup& g);
bool latin_square(const FiniteGroup& g);
PairVerdict gamma_equation(const GammaFunction& gamma);    // assumes automorphism rows
TripleVerdict skew_brace(const FiniteGroup& dot, const FiniteGroup& circle);
PairVerdict rota_baxter(const FiniteGroup& g, const std::vector<Elem>& images);
TripleVerdict cocycle(const TwoCocycle& theta);
InnerCheck inner_image(const GammaFunction& gamma);
std::vector<Elem> center_members(const FiniteGroup& g);

} // namespace braceforge::ref

#endif
