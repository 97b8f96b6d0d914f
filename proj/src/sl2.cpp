#include "solint/sl2.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace solint {

namespace {
VField makeN() { return {Poly(), Poly::var(Var::x), Poly::var(Var::y).scaled(Rat(2))}; }
VField makeM() { return {Poly::var(Var::y).scaled(Rat(2)), Poly::var(Var::z), Poly()}; }
VField makeH() {
    return {Poly::var(Var::x).scaled(Rat(-2)), Poly(), Poly::var(Var::z).scaled(Rat(2))};
}
VField makeE() { return {Poly::var(Var::x), Poly::var(Var::y), Poly::var(Var::z)}; }
}  // namespace

const VField& fieldN() { static const VField v = makeN(); return v; }
const VField& fieldM() { static const VField v = makeM(); return v; }
const VField& fieldH() { static const VField v = makeH(); return v; }
const VField& fieldE() { static const VField v = makeE(); return v; }

std::optional<Rat> kappa(int l, int i) {
    if (l >= 0) {
        Rat r(1);
        for (int j = 0; j < l; ++j) r *= Rat(i - j);
        return r;
    }
    Rat d(1);
    for (int j = 1; j <= -l; ++j) {
        if (i + j == 0) return std::nullopt;
        d *= Rat(i + j);
    }
    return d.inv();
}

Poly nPow(unsigned q, Poly f) {
    const VField& n = fieldN();
    for (unsigned t = 0; t < q && !f.isZero(); ++t) f = n.apply(f);
    return f;
}

Poly nPowZ(unsigned q, unsigned i) {
    static std::map<std::pair<unsigned, unsigned>, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, i});
    if (it != cache.end()) return it->second;

    // Extend from the largest cached power of N for this i.
    Poly f = Poly::var(Var::z, int(i));
    unsigned start = 0;
    for (unsigned t = q; t > 0; --t) {
        auto hit = cache.find({t, i});
        if (hit != cache.end()) {
            f = hit->second;
            start = t;
            break;
        }
    }
    for (unsigned t = start; t < q; ++t) {
        f = fieldN().apply(f);
        cache.emplace(std::make_pair(t + 1, i), f);
    }
    cache.emplace(std::make_pair(q, i), f);
    return f;
}

VField adNPow(unsigned n, VField v) {
    const VField& nf = fieldN();
    for (unsigned t = 0; t < n; ++t) v = lieBracket(nf, v);
    return v;
}

Rat etaCoeff(unsigned q, unsigned i, unsigned n) {
    unsigned s = q / 2, r = q % 2;
    if (n > s) throw std::out_of_range("etaCoeff: n out of range (n <= s required)");
    if (i < n + s + r) return Rat(0);  // guard i < q + n - s
    Rat num = pochhammer(Rat(long(s)), Rat(-1), n) *
              pochhammer(Rat(long(i)), Rat(-1), s + n + r) *
              pochhammer(Rat(2L * i - 1), Rat(-2), s) * pow(Rat(2), s + n + r);
    if (n % 2 == 1) num = -num;
    Rat den = factorial(n) * pochhammer(Rat(2L * i - 1), Rat(-2), n);
    return num / den;
}

Rat zetaCoeff(unsigned q, unsigned i, unsigned n) {
    unsigned s = q / 2, r = q % 2;
    if (n > s) throw std::out_of_range("zetaCoeff: n out of range (n <= s required)");
    if (i < n + s + r) return Rat(0);
    Rat num = factorial(i) * factorial(2 * s + r) * pow(Rat(2), 2 * n + r);
    Rat den = factorial(s - n) * factorial(2 * n + r) * factorial(i - n - s - r);
    return num / den;
}

std::map<int, Rat> reexpandProduct(unsigned q1, unsigned q2, unsigned i, unsigned j) {
    static std::map<std::tuple<unsigned, unsigned, unsigned, unsigned>, std::map<int, Rat>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({q1, q2, i, j});
        if (it != cache.end()) return it->second;
    }

    const int s1 = int(q1) / 2, r1 = int(q1) % 2;
    const int s2 = int(q2) / 2, r2 = int(q2) % 2;
    const int sigma2 = int(q1) + int(q2) - int(i) - int(j);
    const int dr = r1 == r2 ? 0 : 1;
    const int half = (r1 + r2) / 2;

    std::map<int, Rat> result;
    Poly lhs = nPowZ(q1, i) * nPowZ(q2, j);
    if (!lhs.isZero()) {
        const int pLo = std::max(sigma2, 0);
        const int pHi = s1 + s2 + half;
        // Basis elements N^{2p+dr} z^{2p-sigma2+dr} Delta^{s1+s2-p+half}, monomial
        // coordinates; solved exactly. The system is square upper-triangular in
        // suitable coordinates with nonzero determinant, so solveExact succeeds.
        std::vector<int> ps;
        std::vector<Poly> basis;
        for (int p = pLo; p <= pHi; ++p) {
            int zExp = 2 * p - sigma2 + dr;
            int dExp = s1 + s2 - p + half;
            if (zExp < 0 || dExp < 0) continue;
            Poly e = nPowZ(unsigned(2 * p + dr), unsigned(zExp));
            if (e.isZero()) continue;
            e = e * Poly::delta().pow(unsigned(dExp));
            ps.push_back(p);
            basis.push_back(e);
        }
        // Collect monomial coordinates.
        std::map<Monomial, std::size_t, MonoOrder> rows;
        auto rowOf = [&](const Monomial& m) {
            return rows.emplace(m, rows.size()).first->second;
        };
        for (const auto& e : basis)
            for (const auto& [m, c] : e.terms()) rowOf(m);
        for (const auto& [m, c] : lhs.terms()) rowOf(m);

        RatMatrix A(rows.size(), std::vector<Rat>(ps.size(), Rat(0)));
        std::vector<Rat> b(rows.size(), Rat(0));
        for (std::size_t col = 0; col < basis.size(); ++col)
            for (const auto& [m, c] : basis[col].terms()) A[rowOf(m)][col] = c;
        for (const auto& [m, c] : lhs.terms()) b[rowOf(m)] = c;

        auto sol = solveExact(std::move(A), std::move(b));
        if (!sol)
            throw std::logic_error("reexpandProduct: re-expansion system not uniquely solvable");
        for (std::size_t t = 0; t < ps.size(); ++t)
            if (!(*sol)[t].isZero()) result.emplace(ps[t], (*sol)[t]);
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_tuple(q1, q2, i, j), result);
    return result;
}

VField nmExpand(unsigned n, const Poly& f) {
    if (!f.isHomogeneous())
        throw std::invalid_argument("nmExpand: f must be homogeneous");
    VField r = nPow(n, f) * fieldM();
    if (n >= 1) r -= (Rat(long(n)) * nPow(n - 1, f)) * fieldH();
    if (n >= 2) r -= (Rat(long(n) * long(n - 1)) * nPow(n - 2, f)) * fieldN();
    return r;
}

}  // namespace solint
