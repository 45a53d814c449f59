#ifndef BRACEFORGE_GALLERY_HPP
#define BRACEFORGE_GALLERY_HPP

#include <array>
#include <string>

#include "braceforge/cohomology.hpp"
#include "braceforge/gamma.hpp"
#include "braceforge/group.hpp"
#include "braceforge/rota_baxter.hpp"

// Parameterized constructors for the worked example families: the
// alpha-family of inner gamma functions on the Heisenberg group, the
// order-p^5 product example whose cocycle class is provably nontrivial, and
// the semidirect-product braces whose gamma functions leave the inner
// automorphism group. Each constructor returns all intermediate objects so
// callers can audit every identity.

namespace braceforge {

// gamma(g) = conj(g^alpha) on the Heisenberg group of order p^3; the induced
// circle operation is g o h = g h [g,h]^alpha. The class of the extracted
// cocycle is trivial exactly when 1 + 2*alpha is invertible mod p.
struct AlphaFamilyInstance {
  unsigned p = 0;
  unsigned alpha = 0;
  GroupPtr heisenberg;
  GroupPtr circle;
  GammaFunction gamma;   // verified
  GroupMap rep;          // C(g) = g^alpha
  CoeffPtr center_coeff; // Z(H) = <k>
  TwoCocycle kappa;      // kappa(g,h) = [g,h]^{-(alpha^2+alpha)/2}
  bool splits = false;   // 1 + 2*alpha != 0 mod p
  Elem k_tilde = 0;      // k^{1+2*alpha}, the circle commutator of u and v
};

AlphaFamilyInstance build_alpha_family(unsigned p, unsigned alpha);

// (alpha^2 + alpha)/2 mod p, computed from the integer representative
unsigned alpha_kappa_exponent(unsigned p, unsigned alpha);

// B(u^i v^j k^r) = u^{i a} v^{j a} k^{a^2 (r - i j a)(1+2a)^{-1}};
// throws AlphaIsMinusHalf when 1 + 2*alpha = 0 mod p.
RotaBaxterOperator rb_formula_alpha(unsigned p, unsigned alpha);

// dot coordinates (i,j,r) -> circle coordinates (i,j,q) with
// u^i v^j k^r = u^i o v^j o ktilde^q, q = (r - i j alpha)(1+2alpha)^{-1}
std::array<unsigned, 3> normal_form_switch(unsigned p, unsigned alpha, unsigned i, unsigned j,
                                           unsigned r);

// circle coordinates of a Heisenberg element (inverse of the switch)
std::array<unsigned, 3> circle_coords(unsigned p, unsigned alpha, Elem g);

// sigma(u^i o v^j o ktilde^q) = k^{-((a^2+a)/2)(2q+ij)}: the closed-form
// coboundary certificate read off the splitting section of the extension
Coboundary alpha_sigma_closed_form(const AlphaFamilyInstance& inst);

// the splitting section itself, as a map into the standard extension of kappa
GroupMap alpha_splitting_section(const AlphaFamilyInstance& inst, const CentralExtension& e);

// The order-p^5 example: (G,.) = S x H with S elementary abelian of order
// p^2; the lift C(x^i y^j c) = u^i v^j induces an inner gamma function whose
// cocycle kappa(x^i y^j c, x^m y^n d) = k^{-jm} has nontrivial class.
struct P5Instance {
  unsigned p = 0;
  GroupPtr s;       // elementary abelian p^2
  GroupPtr h;       // Heisenberg p^3
  GroupPtr product; // S x H
  GroupPtr circle;
  GammaFunction gamma; // verified
  GroupMap rep;        // the chosen lift C
  CoeffPtr center_coeff;
  TwoCocycle kappa;
  Subgroup s_in_circle;  // S as a subgroup of the circle group
  CoeffPtr k_coeff;      // K = <k> as coefficients
  CoeffMorphism project_to_k; // Z(G) = S x K -> K
};

P5Instance build_p5_example(unsigned p);

// Skew braces with dot = direct product and circle = semidirect product; the
// gamma function sends (a,b) to (a', b'^{psi(a)}) and is non-inner whenever
// psi(a) is a non-inner automorphism of B.
struct NonInnerInstance {
  std::string kind;
  SkewBrace brace;
  InnerCheck inner; // expected: all_inner = false with a witness
};

// A = C4 acting on D4 by r -> r, s -> rs (a non-inner automorphism); |G| = 32.
NonInnerInstance build_noninner_c4_d4();

// V elementary abelian of order p^2, B = V x| C_q via the scalar c*I, and C_q
// acting on B through the non-scalar diag(c,1); needs q prime, q | p-1.
// c = 0 picks the smallest scalar of multiplicative order q.
NonInnerInstance build_noninner_vhq(unsigned p, unsigned q, unsigned c = 0);

// dihedral group of order 8 on indices r^i (0..3), r^i s (4..7)
GroupPtr make_dihedral8();

} // namespace braceforge

#endif
