#include "solint/serialize.hpp"

namespace solint {

json toJson(const Rat& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

json toJson(const Poly& p) { return p.str(); }

json toJson(const VField& v) {
    return json{{"dx", v.cx.str()}, {"dy", v.cy.str()}, {"dz", v.cz.str()}};
}

json toJson(const Expansion& e) {
    json arr = json::array();
    for (const auto& [g, c] : e.coeffs()) {
        json rec = toJson(c);
        rec["family"] = std::string(1, familyChar(g.family));
        rec["l"] = g.l;
        rec["i"] = g.i;
        rec["k"] = g.k;
        arr.push_back(std::move(rec));
    }
    return arr;
}

json toJson(const NFResult& nf) {
    json coeffs = json::array();
    for (const auto& [ik, b] : nf.coeffs) {
        json rec = toJson(b);
        rec["i"] = ik.first;
        rec["k"] = ik.second;
        coeffs.push_back(std::move(rec));
    }
    json out{{"coeffs", std::move(coeffs)},
             {"invariantI", nf.invariantI.str()},
             {"linearizable", nf.linearizable}};
    if (nf.p) out["p"] = *nf.p;
    else out["p"] = nullptr;
    return out;
}

json toJson(const PotentialPair& p) {
    return json{{"primary", p.primary.str()}, {"secondary", p.secondary.str()}};
}

json toJson(const VectorPotential& p) {
    return json{{"field", toJson(p.field)},
                {"gauge", p.gaugeClass == GaugeClass::deltaForm ? "deltaForm" : "radialForm"}};
}

json toJson(const PlanarHamiltonian& h) {
    json out;
    // The x slot plays the symbolic constant c = X in both members.
    out["hamiltonian"] = h.hamiltonian.str();
    out["reducedField"] = toJson(h.reducedField);
    out["variables"] = {{"x", "c (conserved X)"}, {"y", "Y"}, {"z", "Z"}};
    return out;
}

}  // namespace solint
