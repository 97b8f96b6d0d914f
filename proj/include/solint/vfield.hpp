// Polynomial vector fields on R^3 and their calculus.
//
// A VField doubles as a first-order differential operator (apply) and as a
// Lie algebra element (lieBracket); the operation, not the type, selects the
// role. Components are the coefficients of d/dx, d/dy, d/dz.
#pragma once

#include "solint/poly.hpp"

#include <string>

namespace solint {

struct VField {
    Poly cx, cy, cz;

    VField() = default;
    VField(Poly a, Poly b, Poly c) : cx(std::move(a)), cy(std::move(b)), cz(std::move(c)) {}

    bool isZero() const { return cx.isZero() && cy.isZero() && cz.isZero(); }
    int degree() const;  // max component degree, -1 for zero

    friend VField operator+(const VField& a, const VField& b) {
        return {a.cx + b.cx, a.cy + b.cy, a.cz + b.cz};
    }
    friend VField operator-(const VField& a, const VField& b) {
        return {a.cx - b.cx, a.cy - b.cy, a.cz - b.cz};
    }
    VField operator-() const { return {-cx, -cy, -cz}; }
    VField& operator+=(const VField& o) { *this = *this + o; return *this; }
    VField& operator-=(const VField& o) { *this = *this - o; return *this; }
    VField scaled(const Rat& c) const { return {cx.scaled(c), cy.scaled(c), cz.scaled(c)}; }
    friend VField operator*(const Poly& f, const VField& v) {
        return {f * v.cx, f * v.cy, f * v.cz};
    }
    friend bool operator==(const VField& a, const VField& b) {
        return a.cx == b.cx && a.cy == b.cy && a.cz == b.cz;
    }

    // Derivation action on a scalar: cx df/dx + cy df/dy + cz df/dz.
    Poly apply(const Poly& f) const;

    // Components of total degree d / of degree <= d.
    VField degreeSlice(int d) const { return {cx.degreeSlice(d), cy.degreeSlice(d), cz.degreeSlice(d)}; }
    VField truncated(int d) const { return {cx.truncated(d), cy.truncated(d), cz.truncated(d)}; }

    std::string str() const;  // canonical "(p1, p2, p3)"
};

// [v,w]_j = v(w_j) - w(v_j).
VField lieBracket(const VField& v, const VField& w);

Poly divergence(const VField& v);
VField curl(const VField& v);
VField gradient(const Poly& f);

// grad f x grad g, orientation (a x b)_1 = a2 b3 - a3 b2.
VField gradCross(const Poly& f, const Poly& g);

// Cross product v x w of polynomial fields.
VField cross(const VField& v, const VField& w);

}  // namespace solint
