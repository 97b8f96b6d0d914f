// Lie algebra structure of the B-family in basis coordinates.
//
// bracketInBasis is the authoritative path: the polynomial bracket of the two
// generators is decomposed back over the basis (Delta powers factored out
// first, since B^l_{i,k} = Delta^k B^l_{i,0}). structureConstantsClosed is the
// closed-form fast path; it was re-derived from the component formulas of the
// generators plus the product re-expansion, and falls back to the oracle when
// an argument lies outside the closed form's domain (q = -1 indices).
#pragma once

#include "solint/generators.hpp"

namespace solint {

// delta-grade i + 2k; brackets are additive in it.
int grade(const GenIndex& idx);

// [gen(a), gen(b)] expanded over the B-basis; both indices must be family B.
// Results are cached (antisymmetry and the Delta shift normalize the key).
Expansion bracketInBasis(const GenIndex& a, const GenIndex& b);

// Closed forms for distinguished left arguments:
//   [B^0_{0,0}, B^l_{i,k}] = (l-i)    B^l_{i,k}
//   [B^1_{0,0}, B^l_{i,k}] = (l-2i-1) B^{l+1}_{i,k}
//   [B^-1_{0,0}, B^l_{i,k}] = (l+1)   B^{l-1}_{i,k}
// and the B^-1_{p,0} case via bracketInBasis.
Expansion specialBracket(const GenIndex& a, const GenIndex& b);

struct ClosedBracket {
    Expansion value;
    bool usedFallback = false;
};

// Structure constants from the closed form where defined (q1, q2 >= 0),
// bracketInBasis otherwise; total either way.
ClosedBracket structureConstantsClosed(const GenIndex& a, const GenIndex& b);

}  // namespace solint
