// The sl(2) triple N, M, H (and the Euler field E) as vector fields, the
// iterated action of N on powers of z, and the closed-form expansion
// coefficients attached to it:
//
//   N = x d/dy + 2y d/dz,   M = z d/dy + 2y d/dx,
//   H = [M, N] = 2z d/dz - 2x d/dx,   E = x d/dx + y d/dy + z d/dz.
//
// For q = 2s + r (r in {0,1}) the expansions
//   N^q z^i = sum_n eta_n  x^{s-n} y^r      z^{i-s-r-n} Delta^n
//           = sum_n zeta_n x^{s-n} y^{2n+r} z^{i-n-s-r}
// hold, and products N^{q1} z^i * N^{q2} z^j re-expand over the basis
//   N^{2p+|r2-r1|} z^{2p-sigma2+|r2-r1|} * Delta^{s1+s2-p+floor((r1+r2)/2)},
// sigma2 = q1+q2-i-j. The re-expansion coefficients C are obtained from the
// exact upper-triangular linear system in monomial coordinates, which is
// unambiguous in every degenerate case.
#pragma once

#include "solint/linsolve.hpp"
#include "solint/vfield.hpp"

#include <map>
#include <optional>

namespace solint {

const VField& fieldN();
const VField& fieldM();
const VField& fieldH();
const VField& fieldE();

// kappa(l, i) = i!/(i-l)! as a falling-factorial product i(i-1)...(i-l+1);
// kappa(0, .) = 1. Negative l is read as the reciprocal rising product
// 1/((i+1)...(i-l)); nullopt when that denominator hits zero.
std::optional<Rat> kappa(int l, int i);

// N^q z^i by repeated derivation (memoized); the zero polynomial when the
// action annihilates.
Poly nPowZ(unsigned q, unsigned i);

// N applied q times to an arbitrary polynomial.
Poly nPow(unsigned q, Poly f);

// Closed forms of the expansion coefficients; zero when i < q + n - s.
// Requires 0 <= n <= s where q = 2s + r.
Rat etaCoeff(unsigned q, unsigned i, unsigned n);
Rat zetaCoeff(unsigned q, unsigned i, unsigned n);

// Coefficients C_p with
//   N^{q1} z^i * N^{q2} z^j
//     = sum_p C_p N^{2p+|r2-r1|} z^{2p-sigma2+|r2-r1|} Delta^{s1+s2-p+floor((r1+r2)/2)};
// empty when the product vanishes. Exact, memoized.
std::map<int, Rat> reexpandProduct(unsigned q1, unsigned q2, unsigned i, unsigned j);

// N^n applied to f*M as a Lie operator, assembled from the identity
//   ad_N^n(f M) = N^n(f) M - n N^{n-1}(f) H - n(n-1) N^{n-2}(f) N.
// f must be homogeneous.
VField nmExpand(unsigned n, const Poly& f);

// ad_N^n(v) by iterated Lie bracket (test oracle for nmExpand and friends).
VField adNPow(unsigned n, VField v);

}  // namespace solint
