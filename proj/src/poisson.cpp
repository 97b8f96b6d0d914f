#include "solint/poisson.hpp"

#include "solint/linsolve.hpp"

#include <stdexcept>

namespace solint {

Poly poissonBracket(const Poly& f, const Poly& g) {
    Poly r;
    for (const auto& [a, ca] : f.terms()) {
        const long i = a.ex, j = a.ey, k = a.ez;
        for (const auto& [b, cb] : g.terms()) {
            const long m = b.ex, n = b.ey, p = b.ez;
            const Rat cc = ca * cb;
            long c1 = i * n + j * p - k * n - j * m;
            if (c1 != 0)
                r.add(Monomial{int(i + m), int(n + j - 1), int(k + p)}, cc * Rat(c1));
            long c2 = i * p - k * m;
            if (c2 != 0)
                r.add(Monomial{int(i + m - 1), int(n + j + 1), int(k + p - 1)}, cc * Rat(2 * c2));
        }
    }
    return r;
}

namespace {

// Exact solve of f = sum of b-generators of one grade, in monomial coordinates.
std::optional<std::vector<std::pair<GenIndex, Rat>>> solveBfrakSlice(const Poly& slice, int n) {
    auto gens = bGeneratorsOfGrade(n);
    std::vector<Poly> basis;
    basis.reserve(gens.size());
    for (const auto& g : gens) basis.push_back(makeBfrak(g.l, g.i, g.k));

    std::map<Monomial, std::size_t> rows;
    auto rowOf = [&](const Monomial& m) { return rows.emplace(m, rows.size()).first->second; };
    for (const auto& p : basis)
        for (const auto& [m, c] : p.terms()) rowOf(m);
    for (const auto& [m, c] : slice.terms()) rowOf(m);

    RatMatrix A(rows.size(), std::vector<Rat>(basis.size(), Rat(0)));
    std::vector<Rat> b(rows.size(), Rat(0));
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [m, c] : basis[col].terms()) A[rowOf(m)][col] = c;
    for (const auto& [m, c] : slice.terms()) b[rowOf(m)] = c;

    auto sol = solveExact(std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    std::vector<std::pair<GenIndex, Rat>> out;
    for (std::size_t t = 0; t < gens.size(); ++t)
        if (!(*sol)[t].isZero()) out.emplace_back(gens[t], (*sol)[t]);
    return out;
}

}  // namespace

VField psi(const Poly& f) {
    VField v;
    if (f.isZero()) return v;
    if (!f.coeff(Monomial{}).isZero())
        throw std::invalid_argument("psi: constant term is outside the span of the b-generators");
    for (int d = 1; d <= f.degree(); ++d) {
        Poly slice = f.degreeSlice(d);
        if (slice.isZero()) continue;
        auto sol = solveBfrakSlice(slice, d - 1);
        if (!sol)
            throw std::invalid_argument(
                "psi: degree-" + std::to_string(d) + " part is not in the span of the b-generators");
        for (const auto& [g, c] : *sol) v += makeGenerator(g).scaled(c);
    }
    return v;
}

Poly psiInverse(const VField& v) {
    auto mem = membershipB(v);
    if (!mem)
        throw std::invalid_argument("psiInverse: not a member of the B-family, witness " +
                                    mem.failedCondition + " = " + mem.witness.str());
    Poly f;
    const Expansion e = decompose(v);
    for (const auto& [g, c] : e.coeffs())
        f += makeBfrak(g.l, g.i, g.k).scaled(c);
    return f;
}

Poly secondaryPotential(const VField& v) {
    Poly s = -psiInverse(v);
    if (!(gradCross(s, Poly::delta()) == v))
        throw std::logic_error("secondaryPotential: grad S x grad Delta != v (internal inconsistency)");
    return s;
}

Poly rateOfChange(const Poly& F, const VField& v) {
    Poly r = poissonBracket(F, secondaryPotential(v));
    if (!(r == v.apply(F)))
        throw std::logic_error("rateOfChange: {F, S(v)} != v(F) (internal inconsistency)");
    return r;
}

}  // namespace solint
