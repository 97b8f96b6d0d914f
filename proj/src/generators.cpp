#include "solint/generators.hpp"

#include <sstream>
#include <stdexcept>

namespace solint {

char familyChar(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
    }
    return '?';
}

std::string GenIndex::str() const {
    std::ostringstream out;
    out << familyChar(family) << "[" << l << "," << i << "," << k << "]";
    return out.str();
}

namespace {
std::string boundsText(const GenIndex& g) {
    switch (g.family) {
        case Family::A: return "family A requires i >= -1 and -2 <= l <= 2i+2";
        case Family::B: return "family B requires i >= 0 and -1 <= l <= 2i+1";
        case Family::C: return "family C requires i >= 0 and 0 <= l <= 2i";
    }
    return "";
}
}  // namespace

bool isValidIndex(const GenIndex& g) {
    if (g.k < 0) return false;
    switch (g.family) {
        case Family::A: return g.i >= -1 && g.l >= -2 && g.l <= 2 * g.i + 2;
        case Family::B: return g.i >= 0 && g.l >= -1 && g.l <= 2 * g.i + 1;
        case Family::C: return g.i >= 0 && g.l >= 0 && g.l <= 2 * g.i;
    }
    return false;
}

void validateIndex(const GenIndex& g) {
    if (!isValidIndex(g))
        throw std::out_of_range("generator index " + g.str() + " out of range: " + boundsText(g));
}

VField makeGenerator(const GenIndex& g) {
    validateIndex(g);
    const Poly dk = Poly::delta().pow(unsigned(g.k));
    switch (g.family) {
        case Family::B: {
            Poly f = Poly::var(Var::z, g.i) * dk;
            VField u = adNPow(unsigned(g.l + 1), f * fieldM());
            return u.scaled(kappa(g.l + 1, 2 * g.i + 2)->inv());
        }
        case Family::A: {
            Poly f = Poly::var(Var::z, g.i + 1) * dk;
            VField u = adNPow(unsigned(g.l + 2), VField{f, Poly(), Poly()});
            // The conventional normalizer kappa(l+2, 2i+2) (2i+2 -> 2 when
            // i = -1) vanishes on the top two levels, where it is frozen at
            // (2i+2)! instead; only the l <= 2i scales are pinned by
            // cross-checks.
            const int w = g.i >= 0 ? 2 * g.i + 2 : 2;
            Rat norm = g.l + 2 > w ? factorial(unsigned(w)) : *kappa(g.l + 2, w);
            return u.scaled(norm.inv());
        }
        case Family::C: {
            Poly f = nPowZ(unsigned(g.l), unsigned(g.i)) * dk;
            return (f.scaled(kappa(g.l, 2 * g.i)->inv())) * fieldE();
        }
    }
    throw std::logic_error("unreachable");
}

Poly makeBfrak(int l, int i, int k) {
    validateIndex(GenIndex{Family::B, l, i, k});
    Poly f = nPowZ(unsigned(l + 1), unsigned(i + 1)) * Poly::delta().pow(unsigned(k));
    return f.scaled(-(Rat(i + 1) * *kappa(l + 1, 2 * i + 2)).inv());
}

std::vector<GenIndex> generatorsOfDegree(int d) {
    std::vector<GenIndex> out;
    if (d < 0) return out;
    // A-family: component degree (i+1) + 2k = d with i >= -1.
    for (int k = 0; d - 1 - 2 * k >= 0; ++k) {
        int i = d - 1 - 2 * k;
        for (int l = -2; l <= 2 * i + 2; ++l) out.push_back({Family::A, l, i, k});
    }
    if (d % 2 == 0)
        for (int l = -2; l <= 0; ++l) out.push_back({Family::A, l, -1, d / 2});
    // B and C: component degree i + 2k + 1 = d.
    for (int k = 0; d - 1 - 2 * k >= 0; ++k) {
        int i = d - 1 - 2 * k;
        for (int l = -1; l <= 2 * i + 1; ++l) out.push_back({Family::B, l, i, k});
        for (int l = 0; l <= 2 * i; ++l) out.push_back({Family::C, l, i, k});
    }
    return out;
}

std::vector<GenIndex> bGeneratorsOfGrade(int n) {
    std::vector<GenIndex> out;
    for (int k = 0; n - 2 * k >= 0; ++k) {
        int i = n - 2 * k;
        for (int l = -1; l <= 2 * i + 1; ++l) out.push_back({Family::B, l, i, k});
    }
    return out;
}

void Expansion::add(const GenIndex& idx, const Rat& c) {
    if (c.isZero()) return;
    auto [it, inserted] = coeffs_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) coeffs_.erase(it);
    }
}

Expansion Expansion::operator-() const {
    Expansion r;
    for (const auto& [g, c] : coeffs_) r.coeffs_.emplace(g, -c);
    return r;
}

Expansion operator+(Expansion a, const Expansion& b) {
    for (const auto& [g, c] : b.coeffs_) a.add(g, c);
    return a;
}

bool Expansion::supportedOnFamily(Family f) const {
    for (const auto& [g, c] : coeffs_)
        if (g.family != f) return false;
    return true;
}

std::string Expansion::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : coeffs_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (a != Rat(1)) out << a.str() << "*";
        out << g.str();
    }
    return out.str();
}

VField reconstruct(const Expansion& e) {
    VField v;
    for (const auto& [g, c] : e.coeffs()) v += makeGenerator(g).scaled(c);
    return v;
}

Membership membershipB(const VField& v) {
    Poly d = divergence(v);
    if (!d.isZero()) return {false, "div", d};
    Poly w = v.apply(Poly::delta());
    if (!w.isZero()) return {false, "v(Delta)", w};
    return {true, "", Poly()};
}

namespace {

// Exact solve of slice = sum over gens, in monomial coordinates (all three
// components stacked). Returns nullopt when the system has no unique solution.
std::optional<Expansion> solveSlice(const VField& slice, const std::vector<GenIndex>& gens) {
    std::map<std::pair<int, Monomial>, std::size_t> rows;  // (component, monomial) -> row
    auto rowOf = [&](int comp, const Monomial& m) {
        auto key = std::make_pair(comp, m);
        auto it = rows.find(key);
        if (it == rows.end()) it = rows.emplace(key, rows.size()).first;
        return it->second;
    };

    std::vector<VField> fields;
    fields.reserve(gens.size());
    for (const auto& g : gens) fields.push_back(makeGenerator(g));

    auto eachTerm = [&](const VField& v, auto&& fn) {
        const Poly* comps[3] = {&v.cx, &v.cy, &v.cz};
        for (int c = 0; c < 3; ++c)
            for (const auto& [m, coef] : comps[c]->terms()) fn(c, m, coef);
    };

    for (const auto& f : fields) eachTerm(f, [&](int c, const Monomial& m, const Rat&) { rowOf(c, m); });
    eachTerm(slice, [&](int c, const Monomial& m, const Rat&) { rowOf(c, m); });

    RatMatrix A(rows.size(), std::vector<Rat>(fields.size(), Rat(0)));
    std::vector<Rat> b(rows.size(), Rat(0));
    for (std::size_t col = 0; col < fields.size(); ++col)
        eachTerm(fields[col], [&](int c, const Monomial& m, const Rat& coef) { A[rowOf(c, m)][col] = coef; });
    eachTerm(slice, [&](int c, const Monomial& m, const Rat& coef) { b[rowOf(c, m)] = coef; });

    auto sol = solveExact(std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    Expansion e;
    for (std::size_t t = 0; t < gens.size(); ++t) e.add(gens[t], (*sol)[t]);
    return e;
}

// B-only path for one grade-n slice of a membership-verified field. The
// Delta-shifted generators B^{c-2k}_{n-2k,k} sharing a class c = l + 2k have
// nested monomial supports, so each class solves independently.
std::optional<Expansion> decomposeBSlice(const VField& slice, int n) {
    Expansion total;
    for (int c = -1; c <= 2 * n + 1; ++c) {
        std::vector<GenIndex> members;
        for (int k = 0; n - 2 * k >= 0; ++k) {
            GenIndex g{Family::B, c - 2 * k, n - 2 * k, k};
            if (isValidIndex(g)) members.push_back(g);
        }
        if (members.empty()) continue;
        // Restrict the slice to the class support (the k = 0 member's Terms).
        VField top = makeGenerator(GenIndex{Family::B, c, n, 0});
        VField part;
        const Poly* tc[3] = {&top.cx, &top.cy, &top.cz};
        const Poly* sc[3] = {&slice.cx, &slice.cy, &slice.cz};
        Poly* pc[3] = {&part.cx, &part.cy, &part.cz};
        for (int comp = 0; comp < 3; ++comp)
            for (const auto& [m, coef] : tc[comp]->terms()) {
                Rat v = sc[comp]->coeff(m);
                if (!v.isZero()) pc[comp]->add(m, v);
            }
        if (part.isZero()) continue;
        auto sol = solveSlice(part, members);
        if (!sol) return std::nullopt;
        total = total + *sol;
    }
    // Leftover terms outside every class support mean the slice is not in B.
    if (!(reconstruct(total) == slice)) return std::nullopt;
    return total;
}

}  // namespace

Expansion decompose(const VField& v) {
    Expansion result;
    if (v.isZero()) return result;
    const bool inB = static_cast<bool>(membershipB(v));
    for (int d = 0; d <= v.degree(); ++d) {
        VField slice = v.degreeSlice(d);
        if (slice.isZero()) continue;
        std::optional<Expansion> e;
        if (inB && d >= 1) e = decomposeBSlice(slice, d - 1);
        if (!e) e = solveSlice(slice, generatorsOfDegree(d));
        if (!e)
            throw std::logic_error(
                "decompose: degree-" + std::to_string(d) +
                " system not uniquely solvable (internal inconsistency)");
        result = result + *e;
    }
    if (!(reconstruct(result) == v))
        throw std::logic_error("decompose: reconstruction mismatch (internal inconsistency)");
    return result;
}

}  // namespace solint
