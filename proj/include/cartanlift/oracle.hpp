#pragma once

#include <optional>
#include <string>

#include "cartanlift/cartan.hpp"

namespace cartanlift {

/* Endomorphisms of C(r) (x) C(r) driving the recursive equivariant homotopy:
   eta prepends the identity entry to the left factor; epsilon projects degree
   zero onto its left-normalized part and kills everything above. */
KTensor eta(const TensorTerm<CycTuple, CycTuple>& t);
KTensor eta(const KTensor& x);
KTensor epsilon(const TensorTerm<CycTuple, CycTuple>& t);
KTensor epsilon(const KTensor& x);

// The two chain maps the homotopy connects.
KTensor mu_map(const WGen& g);  // (iota (x) iota) after the coproduct
KTensor nu_map(const WGen& g);  // front-back coproduct after iota

/* Ground truth #1: K(b) = eta (mu - nu - K d)(b) on generators, extended
   equivariantly; memoized per (r, degree). */
const KTensor& recursive_k(int r, int n);
KTensor recursive_k(const WGen& g);

// Cyclic order on C_r: a < b < c for some representatives within one period.
bool cyclic_precedes(int a, int b, int c, int r);

/* Ground truth #2: the closed summand. Returns the tensor term when the
   cyclic-order condition holds, nothing otherwise. */
std::optional<TensorTerm<CycTuple, CycTuple>> theta_q(int flag, const std::vector<int>& s,
                                                      const std::vector<int>& t, int q, int r);
KTensor closed_k(int r, int n);
KTensor closed_k(const WGen& g);

struct CompareReport {
    bool ok = true;
    std::string first_divergence;
};

/* Three-way comparison recursive = closed = direct formula, termwise, for all
   generators and translates up to the given degree. */
CompareReport compare_all(int r, int max_n);

}  // namespace cartanlift
