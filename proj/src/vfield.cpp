#include "solint/vfield.hpp"

#include <algorithm>

namespace solint {

int VField::degree() const {
    return std::max({cx.degree(), cy.degree(), cz.degree()});
}

Poly VField::apply(const Poly& f) const {
    return cx * f.differentiate(Var::x) + cy * f.differentiate(Var::y) +
           cz * f.differentiate(Var::z);
}

std::string VField::str() const {
    return "(" + cx.str() + ", " + cy.str() + ", " + cz.str() + ")";
}

VField lieBracket(const VField& v, const VField& w) {
    return {v.apply(w.cx) - w.apply(v.cx),
            v.apply(w.cy) - w.apply(v.cy),
            v.apply(w.cz) - w.apply(v.cz)};
}

Poly divergence(const VField& v) {
    return v.cx.differentiate(Var::x) + v.cy.differentiate(Var::y) +
           v.cz.differentiate(Var::z);
}

VField curl(const VField& v) {
    return {v.cz.differentiate(Var::y) - v.cy.differentiate(Var::z),
            v.cx.differentiate(Var::z) - v.cz.differentiate(Var::x),
            v.cy.differentiate(Var::x) - v.cx.differentiate(Var::y)};
}

VField gradient(const Poly& f) {
    return {f.differentiate(Var::x), f.differentiate(Var::y), f.differentiate(Var::z)};
}

VField cross(const VField& v, const VField& w) {
    return {v.cy * w.cz - v.cz * w.cy,
            v.cz * w.cx - v.cx * w.cz,
            v.cx * w.cy - v.cy * w.cx};
}

VField gradCross(const Poly& f, const Poly& g) {
    return cross(gradient(f), gradient(g));
}

}  // namespace solint
