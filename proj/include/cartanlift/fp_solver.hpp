#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cartanlift/simplicial.hpp"

namespace cartanlift {

/* Row-reduced basis of the mod-p cocycles in each cochain degree; the
   spanning sets used by the verification suites. Deterministic. */
std::vector<Cochain> cocycle_basis(const SimplicialSetBase* host, int degree, std::uint32_t p);

/* Outcome of solving delta x = c over F_p: either a witness cochain or a
   refuting functional y on d-simplices with y.delta = 0 and y(c) != 0. */
struct CoboundaryResult {
    bool solvable = false;
    std::optional<Cochain> witness;
    std::vector<std::uint32_t> refuting_functional;
};

CoboundaryResult is_coboundary(const Cochain& c, std::uint32_t p);

// c1 cohomologous to c2 mod p (their difference bounds).
bool cohomologous(const Cochain& c1, const Cochain& c2, std::uint32_t p);

}  // namespace cartanlift
