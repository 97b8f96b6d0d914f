// The polynomial Poisson algebra with {x,y} = x, {x,z} = 2y, {y,z} = z, and
// the Lie isomorphism Psi between it and the B-family.
//
// Sign convention (fixed by this project and verified exactly in tests): the
// secondary potential is S(v) = -Psi^{-1}(v), so that
//   v = grad S x grad Delta,   v_j = {x_j, S},   dF/dt = {F, S}.
#pragma once

#include "solint/generators.hpp"

namespace solint {

Poly poissonBracket(const Poly& f, const Poly& g);

// Psi maps b^l_{i,k} to B^l_{i,k}. psi requires f in the span of the
// b-generators; psiInverse requires membershipB(v). Both throw
// std::invalid_argument (with the membership witness in the message)
// otherwise.
VField psi(const Poly& f);
Poly psiInverse(const VField& v);

// S(v) = -Psi^{-1}(v); the identity v = gradCross(S, Delta) is re-verified
// at construction.
Poly secondaryPotential(const VField& v);

// {F, S(v)}; equals the derivation action v(F), asserted exactly.
Poly rateOfChange(const Poly& F, const VField& v);

}  // namespace solint
