// The three sl(2)-generated families of vector fields and basis expansions.
//
//   B^l_{i,k} = ad_N^{l+1}(z^i Delta^k M) / kappa(l+1, 2i+2),   -1 <= l <= 2i+1
//   A^l_{i,k} = ad_N^{l+2}(z^{i+1} Delta^k d/dx) / norm,        -2 <= l <= 2i+2
//   C^l_{i,k} = (N^l(z^i) Delta^k / kappa(l, 2i)) E,             0 <= l <= 2i
//
// Family A admits i = -1 (the modules Delta^k d/dx, Delta^k d/dy, Delta^k d/dz
// with l in [-2, 0]); without them the families do not span all vector fields.
// Every polynomial vector field expands uniquely over A u B u C; fields with
// div v = 0 and v(Delta) = 0 expand over B alone.
#pragma once

#include "solint/sl2.hpp"

#include <map>
#include <string>
#include <vector>

namespace solint {

enum class Family { A, B, C };

char familyChar(Family f);

struct GenIndex {
    Family family = Family::B;
    int l = 0;
    int i = 0;
    int k = 0;

    // delta-grade; component degree is grade()+1.
    int grade() const { return i + 2 * k; }

    friend bool operator==(const GenIndex& a, const GenIndex& b) {
        return a.family == b.family && a.l == b.l && a.i == b.i && a.k == b.k;
    }
    friend bool operator<(const GenIndex& a, const GenIndex& b) {
        auto key = [](const GenIndex& g) {
            return std::tuple(g.family, g.grade(), g.l, g.i, g.k);
        };
        return key(a) < key(b);
    }

    std::string str() const;  // e.g. "B[3,5,0]"
};

// Checks the family-specific index bounds; throws std::out_of_range with the
// violated bound otherwise.
void validateIndex(const GenIndex& idx);
bool isValidIndex(const GenIndex& idx);

VField makeGenerator(const GenIndex& idx);
inline VField makeGenerator(Family f, int l, int i, int k) {
    return makeGenerator(GenIndex{f, l, i, k});
}

// Poisson-side generator b^l_{i,k} = -N^{l+1}(z^{i+1}) Delta^k / ((i+1) kappa(l+1, 2i+2)).
Poly makeBfrak(int l, int i, int k);

// All generators whose components are homogeneous of total degree d.
std::vector<GenIndex> generatorsOfDegree(int d);
// The B-family generators of delta-grade n (component degree n+1).
std::vector<GenIndex> bGeneratorsOfGrade(int n);

class Expansion {
public:
    using Map = std::map<GenIndex, Rat>;

    const Map& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    Rat coeff(const GenIndex& idx) const {
        auto it = coeffs_.find(idx);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }
    void add(const GenIndex& idx, const Rat& c);

    Expansion operator-() const;
    friend Expansion operator+(Expansion a, const Expansion& b);
    friend bool operator==(const Expansion& a, const Expansion& b) {
        return a.coeffs_ == b.coeffs_;
    }

    bool supportedOnFamily(Family f) const;

    std::string str() const;

private:
    Map coeffs_;
};

VField reconstruct(const Expansion& e);

// Unique exact expansion of v over A u B u C. Fields passing the membership
// test use a B-only per-grade path; the result is re-verified by exact
// reconstruction either way. Throws std::logic_error on internal
// inconsistency (the families span, so this cannot happen).
Expansion decompose(const VField& v);

struct Membership {
    bool member = false;
    std::string failedCondition;  // "div" or "v(Delta)" when not a member
    Poly witness;                 // the offending nonzero polynomial

    explicit operator bool() const { return member; }
};

// v is in the B-span iff div(v) = 0 and v(Delta) = 0.
Membership membershipB(const VField& v);

}  // namespace solint
