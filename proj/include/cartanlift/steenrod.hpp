#pragma once

#include <cstdint>

#include "cartanlift/barratt_eccles.hpp"
#include "cartanlift/simplicial.hpp"

namespace cartanlift {

/* Chain-level representative of the homology operation in index i at the odd
   prime p: the cup-(p,i) product of p copies of a mod-p cocycle. */
Cochain d_rep(int i, std::uint32_t p, const Cochain& a);

/* The normalization constant (-1)^{n(n-1)m/2} (m!)^n with m = (p-1)/2, as its
   balanced representative mod p; n may be negative (cochain inputs live in
   negative homological degree), in which case (m!)^n is the inverse power. */
long long nu(long long n, std::uint32_t p);

/* Representative of P_s (eps = 0) or beta P_s (eps = 1) on a mod-p cocycle:
   (-1)^s nu(n) applied to the representative in index (2s-n)(p-1)-eps. */
Cochain steenrod_rep(long long s, int eps, std::uint32_t p, const Cochain& a);

}  // namespace cartanlift
