#include "solint/liealg.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace solint {

int grade(const GenIndex& idx) { return idx.grade(); }

namespace {

void requireB(const GenIndex& g) {
    if (g.family != Family::B)
        throw std::invalid_argument("bracket table is defined for family B only, got " + g.str());
    validateIndex(g);
}

// Bracket of B^{q1}_{i1,0} with B^{q2}_{i2,0}, decomposed; k-subscripts only
// shift the output k by k1+k2.
Expansion bracketBase(int q1, int i1, int q2, int i2) {
    static std::map<std::tuple<int, int, int, int>, Expansion> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({q1, i1, q2, i2});
        if (it != cache.end()) return it->second;
    }
    VField w = lieBracket(makeGenerator(Family::B, q1, i1, 0), makeGenerator(Family::B, q2, i2, 0));
    Expansion e = decompose(w);
    if (!e.supportedOnFamily(Family::B))
        throw std::logic_error("bracket of B-generators left the B-span (internal inconsistency)");
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_tuple(q1, i1, q2, i2), e);
    return e;
}

Expansion shiftK(const Expansion& e, int dk) {
    if (dk == 0) return e;
    Expansion r;
    for (const auto& [g, c] : e.coeffs()) r.add(GenIndex{g.family, g.l, g.i, g.k + dk}, c);
    return r;
}

}  // namespace

Expansion bracketInBasis(const GenIndex& a, const GenIndex& b) {
    requireB(a);
    requireB(b);
    // Canonical argument order; antisymmetry flips the sign.
    const int dk = a.k + b.k;
    if (std::tuple(b.l, b.i) < std::tuple(a.l, a.i))
        return shiftK(-bracketBase(b.l, b.i, a.l, a.i), dk);
    return shiftK(bracketBase(a.l, a.i, b.l, b.i), dk);
}

Expansion specialBracket(const GenIndex& a, const GenIndex& b) {
    requireB(a);
    requireB(b);
    Expansion r;
    if (a.i == 0 && a.k == 0) {
        if (a.l == 0) {
            r.add(b, Rat(b.l - b.i));
            return r;
        }
        if (a.l == 1) {
            if (b.l + 1 <= 2 * b.i + 1) r.add(GenIndex{Family::B, b.l + 1, b.i, b.k}, Rat(b.l - 2 * b.i - 1));
            return r;
        }
        if (a.l == -1) {
            if (b.l - 1 >= -1) r.add(GenIndex{Family::B, b.l - 1, b.i, b.k}, Rat(b.l + 1));
            return r;
        }
    }
    if (a.l == -1 && a.k == 0) return bracketInBasis(a, b);
    throw std::invalid_argument(
        "specialBracket: left argument must be B[0,0,0], B[1,0,0], B[-1,0,0] or B[-1,p,0]");
}

namespace {

// C-coefficient lookup: coefficient of the basis element indexed u in the
// re-expansion of N^{a} z^{i} * N^{b} z^{j}; zero when absent.
Rat ccoef(int a, int b, int i, int j, int u) {
    if (a < 0 || b < 0 || i < 0 || j < 0) throw std::logic_error("ccoef: negative argument");
    auto m = reexpandProduct(unsigned(a), unsigned(b), unsigned(i), unsigned(j));
    auto it = m.find(u);
    return it == m.end() ? Rat(0) : it->second;
}

struct TermSpec {
    Rat pre;        // scalar prefactor (zero => term absent)
    int dq1, dq2;   // power shifts: N^{q1+dq1}(z^{i1+1}) * N^{q2+dq2}(z^{i2})
    int kl1, kl2;   // kappa levels: kappa(q1+kl1, 2i1+2), kappa(q2+kl2, 2i2+2)
};

// Scalar constants of the e3 (z-component) and e2 (y-component) expansions of
// B^{q1}_{i1,0} . grad(B^{q2}_{i2,0} component), from the generator component
// formulas and the derivative-commutation identities.
std::vector<TermSpec> e3Terms(int q1, int i1, int q2, int /*i2*/) {
    Rat i1p1(i1 + 1);
    return {
        {Rat(-(2 * i1 - q1 + 1)) * Rat(q2 - 1) * Rat(q2) * Rat(q2 + 1) / i1p1, 2, -2, 2, 0},
        {Rat(-2) * Rat(q2) * Rat(q2 + 1) * Rat(i1 - q1) / i1p1, 1, -1, 1, 0},
        {Rat(q1 + 1) * Rat(q2 + 1) / i1p1, 0, 0, 0, 0},
    };
}

std::vector<TermSpec> e2Terms(int q1, int i1, int q2, int i2) {
    Rat i1p1(i1 + 1);
    return {
        {Rat(2 * i1 - q1 + 1) * Rat(i2 - q2) * Rat(q2) * Rat(q2 + 1) / i1p1, 2, -1, 2, 1},
        {Rat(2) * Rat(i1 - q1) * Rat(q2 + 1) * Rat(i2 - q2) / i1p1, 1, 0, 1, 1},
        {Rat(-(q1 + 1)) * Rat(i2 - q2) / i1p1, 0, 1, 0, 1},
    };
}

// One side of the difference: sum_t pre_t / (kappa kappa) * C_{u, i1+1, i2}^{q1+dq1, q2+dq2}.
Rat sideSum(const std::vector<TermSpec>& terms, int q1, int i1, int q2, int i2, int u,
            bool& ok) {
    Rat total(0);
    for (const auto& t : terms) {
        if (t.pre.isZero()) continue;
        auto k1 = kappa(q1 + t.kl1, 2 * i1 + 2);
        auto k2 = kappa(q2 + t.kl2, 2 * i2 + 2);
        if (!k1 || !k2 || k1->isZero() || k2->isZero()) {
            ok = false;  // nonzero term over a vanishing kappa: outside the formula's domain
            return Rat(0);
        }
        if (q1 + t.dq1 < 0 || q2 + t.dq2 < 0) {
            ok = false;
            return Rat(0);
        }
        total += t.pre / (*k1 * *k2) * ccoef(q1 + t.dq1, q2 + t.dq2, i1 + 1, i2, u);
    }
    return total;
}

}  // namespace

ClosedBracket structureConstantsClosed(const GenIndex& a, const GenIndex& b) {
    requireB(a);
    requireB(b);
    const int q1 = a.l, i1 = a.i, q2 = b.l, i2 = b.i;
    if (q1 < 0 || q2 < 0)  // outside the q = 2s+r, s >= 0 domain of the product re-expansion
        return {bracketInBasis(a, b), true};

    const int s1 = q1 / 2, r1 = q1 % 2;
    const int s2 = q2 / 2, r2 = q2 % 2;
    const int sigma2 = q1 + q2 - i1 - i2;
    const int dr = r1 == r2 ? 0 : 1;
    const int half = (r1 + r2) / 2;
    const int kOut = a.k + b.k;

    Expansion out;
    for (int j = std::max(sigma2 - 1, -1); j <= s1 + s2 + half; ++j) {
        const int lp = 2 * j + dr;
        const int ip = 2 * j - sigma2 + dr;
        const int kp = s1 + s2 + kOut - j + half;
        GenIndex target{Family::B, lp, ip, kp};
        if (!isValidIndex(target)) continue;

        bool ok = true;
        Rat coeff(0);
        if (j >= 0) {
            // z-component route: extraction factor -(l'+1)/((i'+1) kappa(l', 2i'+2)).
            Rat diff = sideSum(e3Terms(q1, i1, q2, i2), q1, i1, q2, i2, j, ok) -
                       sideSum(e3Terms(q2, i2, q1, i1), q2, i2, q1, i1, j, ok);
            if (!ok) return {bracketInBasis(a, b), true};
            auto kex = kappa(lp, 2 * ip + 2);
            if (!kex) return {bracketInBasis(a, b), true};
            coeff = -diff * Rat(ip + 1) * *kex / Rat(lp + 1);
        } else {
            // j = -1 (dr = 1): the z-component of B^{-1} vanishes; use the
            // y-component route, valid whenever sigma2 != 0.
            if (sigma2 == 0) return {bracketInBasis(a, b), true};
            Rat diff = sideSum(e2Terms(q1, i1, q2, i2), q1, i1, q2, i2, j + dr, ok) -
                       sideSum(e2Terms(q2, i2, q1, i1), q2, i2, q1, i1, j + dr, ok);
            if (!ok) return {bracketInBasis(a, b), true};
            auto kex = kappa(lp + 1, 2 * ip + 2);
            if (!kex) return {bracketInBasis(a, b), true};
            coeff = diff * Rat(ip + 1) * *kex / Rat(-sigma2);
        }
        out.add(target, coeff);
    }
    return {out, false};
}

}  // namespace solint
