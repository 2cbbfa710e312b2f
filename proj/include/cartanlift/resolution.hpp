#pragma once

#include <string>

#include "cartanlift/formal_sum.hpp"
#include "cartanlift/simplicial.hpp"
#include "cartanlift/tuples.hpp"

namespace cartanlift {

/* Generator rho^k e_n of the minimal free resolution of Z over Z[C_r]. */
struct WGen {
    int r = 0;
    int k = 0;  // 0 <= k < r
    int n = 0;  // degree

    int deg() const { return n; }
    WGen shifted(int by) const { return WGen{r, ((k + by) % r + r) % r, n}; }
    std::string str() const {
        std::string s;
        if (k != 0) s += "rho^" + std::to_string(k) + " ";
        return s + "e_" + std::to_string(n);
    }
    auto operator<=>(const WGen&) const = default;
};

/* d e_{2i+1} = (rho - 1) e_{2i},  d e_{2i+2} = (1 + rho + ... + rho^{r-1}) e_{2i+1},
   extended rho-equivariantly; d e_0 = 0. */
FormalSum<WGen> w_boundary(const WGen& g);

// Counit: 1 on degree 0, else 0.
BigInt w_counit(const WGen& g);

/* Equivariant coproduct of the resolution (diagonal action on the target). */
FormalSum<TensorTerm<WGen, WGen>> w_coproduct(const WGen& g);

/* The equivariant chain map from the resolution into chains on the total
   space of C_r, via the closed formula
     e_{2m}   -> sum (0, s_1, s_1+1, ..., s_m, s_m+1)
     e_{2m+1} -> sum (0, 1, s_1, s_1+1, ..., s_m, s_m+1)
   with entries mod r and degenerate tuples dropped. */
FormalSum<CycTuple> iota(int r, int n);
FormalSum<CycTuple> iota(const WGen& g);

/* Cup-(r,i) product: the structure map applied to the degree-i image of the
   resolution generator in arity r. */
Cochain cup_ri(int r, int i, const std::vector<Cochain>& cs);

}  // namespace cartanlift
