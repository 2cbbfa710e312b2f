#pragma once

#include <cstdint>

#include "cartanlift/barratt_eccles.hpp"
#include "cartanlift/resolution.hpp"

namespace cartanlift {

using KTensor = FormalSum<TensorTerm<CycTuple, CycTuple>>;

// Number of increasing adjacent pairs a_i < a_{i+1} in a list of C_r values.
int rising_pairs(const std::vector<int>& vals);

// Entrywise images of a cyclic tuple in S_{2r}: through f, through g, and
// through f followed by right translation by the deck reordering.
ESum f_image(const CycTuple& t);
ESum g_image(const CycTuple& t);
ESum tau_f_image(const CycTuple& t);

/* Prism homotopy between the tau-twisted f-image and the g-image:
   K1(a_0..a_n) = sum_i (-1)^i (f(a_0)tau, ..., f(a_i)tau, g(a_i), ..., g(a_n)). */
ESum homotopy_k1(const CycTuple& t);

/* Homotopy between the g-image and the composition through the shuffle-map
   bottom row: block composition applied entrywise to the contraction homotopy
   of the doubled tuple, with the identity outer coordinate inserted. */
ESum homotopy_k2(const CycTuple& t);

// The bottom-row composite itself (block composition of the diagonal parts).
ESum bottom_row(const CycTuple& t);

/* Homotopy measuring the failure of the resolution map to preserve
   coproducts, as a sum in C(r) (x) C(r):
     e_{2i}   -> sum alpha(s_1..s_j,t_1) (0,s_1,s_1+1,..) (x) (t_1,t_1+1,..)
     e_{2i+1} -> sum -alpha(s_1-1,..,t_1-1) (0,1,s_1,..) (x) (t_1,t_1+1,..)
   over j+k = i+1, extended equivariantly by the diagonal action. */
KTensor homotopy_k3(int r, int n);
KTensor homotopy_k3(const WGen& g);

// Pairing edge into arity 2r: block composition under the identity in two
// slots, applied to each tensor term.
ESum pair_compose(const KTensor& kt);

/* The two sides of the Cartan relator identity at the operad level. */
ESum f_element(const WGen& g);
ESum g_element(const WGen& g);
ESum tau_f_element(const WGen& g);

/* The assembled Cartan relator H with orientation fixed so that
   d H(e_i) + H(d e_i) = tau F(e_i) - G(e_i).  Cached per (p, i); safe for
   concurrent reads after construction. */
const ESum& cartan_relator(std::uint32_t p, int i);
ESum cartan_relator(std::uint32_t p, const WGen& g);

/* The chain-level lift of the Cartan formula's right-hand side. */
Cochain cartan_lift(std::uint32_t p, int i, const Cochain& a, const Cochain& b);

/* The Cartan coboundary: the relator evaluated on a^{(x)p} (x) b^{(x)p}. */
Cochain zeta(std::uint32_t p, int i, const Cochain& a, const Cochain& b);

// Koszul-convention cup product (the degree-0 structure map instance).
Cochain cup(const Cochain& a, const Cochain& b);

}  // namespace cartanlift
