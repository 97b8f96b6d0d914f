#include "solint/geometry.hpp"

#include <stdexcept>

namespace solint {

PotentialPair clebschForm(const VField& v) {
    return {Poly::delta(), secondaryPotential(v)};
}

VectorPotential vectorPotentialDelta(const VField& v) {
    Poly s = secondaryPotential(v);
    VField gradDelta{Poly::var(Var::z), Poly::var(Var::y).scaled(Rat(-2)), Poly::var(Var::x)};
    VField phi = s * gradDelta;
    if (!(curl(phi) == v))
        throw std::logic_error("vectorPotentialDelta: curl mismatch (internal inconsistency)");
    return {phi, GaugeClass::deltaForm};
}

VectorPotential vectorPotentialRadial(const VField& v) {
    Poly div = divergence(v);
    if (!div.isZero())
        throw std::invalid_argument("vectorPotentialRadial: field is not solenoidal, div = " + div.str());
    if (!v.degreeSlice(0).isZero())
        throw std::invalid_argument("vectorPotentialRadial: field has a constant part");
    VField X{Poly::var(Var::x), Poly::var(Var::y), Poly::var(Var::z)};
    VField phi;
    for (int d = 1; d <= v.degree(); ++d) {
        VField slice = v.degreeSlice(d);
        if (slice.isZero()) continue;
        phi += cross(slice, X).scaled(Rat(1, d + 2));
    }
    if (!(curl(phi) == v))
        throw std::logic_error("vectorPotentialRadial: curl mismatch (internal inconsistency)");
    return {phi, GaugeClass::radialForm};
}

namespace {
Poly integrate(const Poly& p, Var v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial d = m;
        int e = m.exp(v) + 1;
        if (v == Var::x) d.ex = e;
        if (v == Var::y) d.ey = e;
        if (v == Var::z) d.ez = e;
        r.add(d, c / Rat(e));
    }
    return r;
}
}  // namespace

Poly gaugeDifference(const VectorPotential& p1, const VectorPotential& p2) {
    if (!(curl(p1.field) == curl(p2.field)))
        throw std::invalid_argument("gaugeDifference: potentials have different curls");
    VField d = p2.field - p1.field;
    // Antidifferentiate x, then y, then z; any residue signals a non-gradient.
    Poly f = integrate(d.cx, Var::x);
    Poly ry = d.cy - f.differentiate(Var::y);
    f += integrate(ry, Var::y);
    Poly rz = d.cz - f.differentiate(Var::z);
    f += integrate(rz, Var::z);
    if (!(gradient(f) == d))
        throw std::invalid_argument("gaugeDifference: difference is not a gradient field");
    return f;  // integration introduces no constant term
}

RotationalResult rotationalCheck(const VField& v) {
    VField c = curl(v);
    if (c.isZero()) return {false, Poly()};
    if (!c.cx.isZero()) return {true, c.cx};
    if (!c.cy.isZero()) return {true, c.cy};
    return {true, c.cz};
}

}  // namespace solint
