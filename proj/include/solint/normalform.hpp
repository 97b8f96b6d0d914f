// Grade-by-grade normal form of B-family members with a -N linear part.
//
// The homological operator at grade g is ad over the linear part B^1_{0,0},
// which acts diagonally on the basis: [B^1_{0,0}, B^{l-1}_{i,k}] =
// (l-2i-2) B^l_{i,k}, nonzero for 0 <= l <= 2i+1. Every removable term is
// cancelled by one generator coefficient; the kernel of ad_M, spanned by the
// B^{-1}_{i,k}, carries the residual coefficients. Transformations are applied
// as truncated Lie series exp(ad_Y) v = v + [Y,v] + [Y,[Y,v]]/2 + ...
#pragma once

#include "solint/liealg.hpp"
#include "solint/poisson.hpp"

#include <optional>
#include <vector>

namespace solint {

struct NFResult {
    // min{i : b_{i,0} != 0}; empty when no k = 0 coefficient survives.
    std::optional<int> p;
    // (i, k) -> coefficient of B^{-1}_{i,k} in the transformed field.
    std::map<std::pair<int, int>, Rat> coeffs;
    // Removal generators, one per grade that needed work.
    std::vector<std::pair<int, Expansion>> generatorsUsed;
    VField transformedField;  // exactly B^1_{0,0} + sum coeffs * B^{-1}_{i,k}
    Poly invariantI;          // = S(transformedField); exact first integral
    int maxGrade = 0;
    bool linearizable = false;  // all coefficients vanish through maxGrade
    Rat timeScale;              // input linear part was timeScale * B^1_{0,0}
    std::optional<int> rescaledLeadingSign;  // set by rescaleLeading
};

// Preconditions: membershipB(v) and linear part a nonzero multiple of -N
// (the multiple is divided out and recorded). Input terms beyond maxGrade
// are truncated. Throws std::invalid_argument on precondition failure.
NFResult normalize(const VField& v, int maxGrade);

// Builds an NFResult directly from kernel coefficients (i,k) -> b; used for
// fields already in normal form.
NFResult makeNormalForm(const std::map<std::pair<int, int>, Rat>& coeffs, int maxGrade);

// Two-parameter scaling (x,y,z) -> (a x, ca y, c^2 a z) plus time scaling,
// acting on coefficients as b_{i,k} -> b_{i,k} C^{-(g+1)} alpha^{-g} with
// g = i+2k, C = c^2. Rescales b_{p,0} to 1 whenever p is odd or b_{p,0} > 0,
// to -1 otherwise (the even-p obstruction), exactly over the rationals.
NFResult rescaleLeading(const NFResult& nf);

// The secondary Clebsch potential of the normal form; asserts both
// transformedField(I) = 0 and I = secondaryPotential(transformedField).
Poly secondaryInvariant(const NFResult& nf);

struct PlanarHamiltonian {
    // Variables read as (c, Y, Z) in the x/y/z slots: H = Y^2 - cZ + ...
    Poly hamiltonian;
    // Reduced field in (X, Y, Z); X-component identically zero, X appears
    // as the symbolic constant c in the Y-component.
    VField reducedField;
};

// Pushforward of a single-index normal form (all k = 0, b_{p,0} = 1) under
// (X, Y, Z) = (I(x,y,z), y, z). Asserts X' = 0 and the Hamiltonian contract
// (Z', Y') = (-dH/dY, dH/dZ).
PlanarHamiltonian hamiltonianReduce(const NFResult& nf);

// Free coefficients of the cubic family after the solenoidal and
// Delta-invariance constraints; all dependent coefficients are derived.
struct CubicCoeffs {
    Rat b002, b011, a110, b110, b200;                           // quadratic part
    Rat b003, b021, b102, c003, c021, c102, b120, b201, a300, b300;  // cubic part
    std::optional<Rat> a210;  // dependent: -2(b201 + b120); validated when given
};

struct QuarticNF {
    Rat b10, b20, b01, b11, b30;  // coefficients of B^{-1}_{1,0}, B^{-1}_{2,0},
                                  // B^{-1}_{0,1}, B^{-1}_{1,1}, B^{-1}_{3,0}
    Poly invariantI;
    Expansion dExpansion;  // basis expansion of the input field
    VField field;          // the constraint-satisfying cubic field
};

// Closed-form quartic truncated normal form coefficients; cross-validated
// against normalize(field, 3) in the tests and acceptance suite.
QuarticNF quarticClosedForm(const CubicCoeffs& c);

// The constraint-satisfying cubic field built from the free coefficients.
VField buildCubicField(const CubicCoeffs& c);

}  // namespace solint
