#pragma once

#include "nalg/operators.hpp"
#include "nalg/polynomial.hpp"

#include <map>
#include <vector>

namespace nalg {

// r = sum_a r_a rho_1^{a_1} ... rho_m^{a_m} with constant coefficients r_a.
// Exponent vectors are indexed by variables 1..nvars; the zero polynomial is
// the empty map. No factorials in this presentation.
struct TaylorExpansion {
    Flavor flavor;
    int nvars = 0;
    std::map<std::vector<int>, Polynomial> coefficients;

    bool operator==(const TaylorExpansion& o) const {
        return flavor == o.flavor && nvars == o.nvars &&
               coefficients == o.coefficients;
    }
};

// r_0 = r - (dr/dx_k) rho_k/1! + (d^2 r/dx_k^2) rho_k^2/2! - ...; the result
// is annihilated by d/dx_k and the alternating sum terminates by degree.
Polynomial constant_remainder(const Polynomial& r, int var);

// Unique presentation of Proposition styled above, expanding in the highest
// variable first. Every returned coefficient is a constant.
TaylorExpansion taylor_expand(const Polynomial& r);

// Left inverse of taylor_expand; throws if a coefficient is not constant.
Polynomial taylor_reconstruct(const TaylorExpansion& e);

// Expansion r = sum_a r_a mu_{1 a_1} ... mu_{m a_m} for a user-supplied
// operator family. The existence proof is non-constructive; this solves an
// exact linear system per multidegree over the spanning set built from the
// constants bases. With the right-powers family it coincides with
// taylor_expand.
TaylorExpansion generalized_expand(const Polynomial& r, const OperatorFamily& fam);

} // namespace nalg
