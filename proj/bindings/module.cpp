// Python bindings for the main engine operations.

#include "solint/geometry.hpp"
#include "solint/liealg.hpp"
#include "solint/normalform.hpp"
#include "solint/parse.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace solint;

namespace {

Var varFromString(const std::string& s) {
    if (s == "x") return Var::x;
    if (s == "y") return Var::y;
    if (s == "z") return Var::z;
    throw std::invalid_argument("variable must be 'x', 'y' or 'z'");
}

Family familyFromString(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    throw std::invalid_argument("family must be 'A', 'B' or 'C'");
}

py::list expansionToList(const Expansion& e) {
    py::list out;
    for (const auto& [g, c] : e.coeffs()) {
        py::dict rec;
        rec["family"] = std::string(1, familyChar(g.family));
        rec["l"] = g.l;
        rec["i"] = g.i;
        rec["k"] = g.k;
        rec["coeff"] = c;
        out.append(rec);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(solint, m) {
    m.doc() = "Exact engine for completely integrable solenoidal triple-zero vector fields";

    py::class_<Rat>(m, "Rat")
        .def(py::init<long>())
        .def(py::init<long, long>())
        .def(py::init(&Rat::parse))
        .def_property_readonly("num", [](const Rat& r) { return r.num().get_str(); })
        .def_property_readonly("den", [](const Rat& r) { return r.den().get_str(); })
        .def("__str__", &Rat::str)
        .def("__repr__", [](const Rat& r) { return "Rat('" + r.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self);
    py::implicitly_convertible<long, Rat>();
    py::implicitly_convertible<py::str, Rat>();

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parsePoly(text); }))
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "Poly('" + p.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("scaled", &Poly::scaled)
        .def("pow", &Poly::pow)
        .def("degree", &Poly::degree)
        .def("is_zero", &Poly::isZero)
        .def("differentiate",
             [](const Poly& p, const std::string& v) { return p.differentiate(varFromString(v)); })
        .def("eval_at", &Poly::evalAt);

    m.def("delta", &Poly::delta, "The primary invariant Delta = x z - y^2");

    py::class_<VField>(m, "VField")
        .def(py::init([](const std::string& text) { return parseField(text); }))
        .def(py::init<Poly, Poly, Poly>())
        .def_readonly("dx", &VField::cx)
        .def_readonly("dy", &VField::cy)
        .def_readonly("dz", &VField::cz)
        .def("__str__", &VField::str)
        .def("__repr__", [](const VField& v) { return "VField('" + v.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("scaled", &VField::scaled)
        .def("degree", &VField::degree)
        .def("is_zero", &VField::isZero)
        .def("apply", &VField::apply);

    m.def("lie_bracket", &lieBracket);
    m.def("divergence", &divergence);
    m.def("curl", &curl);
    m.def("gradient", &gradient);
    m.def("grad_cross", &gradCross);

    m.def(
        "generator",
        [](const std::string& family, int l, int i, int k) {
            return makeGenerator(familyFromString(family), l, i, k);
        },
        py::arg("family"), py::arg("l"), py::arg("i"), py::arg("k"),
        "The basis generator of the given family");
    m.def("bfrak", &makeBfrak, py::arg("l"), py::arg("i"), py::arg("k"),
          "The Poisson-side generator b^l_{i,k}");

    m.def("decompose", [](const VField& v) { return expansionToList(decompose(v)); });
    m.def("membership", [](const VField& v) {
        auto mem = membershipB(v);
        return py::make_tuple(mem.member, mem.failedCondition, mem.witness);
    });
    m.def("bracket_in_basis", [](int l1, int i1, int k1, int l2, int i2, int k2) {
        return expansionToList(
            bracketInBasis(GenIndex{Family::B, l1, i1, k1}, GenIndex{Family::B, l2, i2, k2}));
    });
    m.def("structure_constants_closed", [](int l1, int i1, int k1, int l2, int i2, int k2) {
        ClosedBracket cb = structureConstantsClosed(GenIndex{Family::B, l1, i1, k1},
                                                    GenIndex{Family::B, l2, i2, k2});
        return py::make_tuple(expansionToList(cb.value), cb.usedFallback);
    });

    m.def("poisson_bracket", &poissonBracket);
    m.def("psi", &psi);
    m.def("psi_inverse", &psiInverse);
    m.def("secondary_potential", &secondaryPotential);
    m.def("rate_of_change", &rateOfChange);

    m.def("clebsch_form", [](const VField& v) {
        PotentialPair p = clebschForm(v);
        return py::make_tuple(p.primary, p.secondary);
    });
    m.def("vector_potential_delta",
          [](const VField& v) { return vectorPotentialDelta(v).field; });
    m.def("vector_potential_radial",
          [](const VField& v) { return vectorPotentialRadial(v).field; });
    m.def("gauge_difference", [](const VField& p1, const VField& p2) {
        return gaugeDifference(VectorPotential{p1, GaugeClass::radialForm},
                               VectorPotential{p2, GaugeClass::deltaForm});
    });
    m.def("rotational_check", [](const VField& v) {
        auto r = rotationalCheck(v);
        return py::make_tuple(r.rotational, r.witness);
    });

    py::class_<NFResult>(m, "NFResult")
        .def_property_readonly("p",
                               [](const NFResult& nf) {
                                   return nf.p ? py::cast(*nf.p) : py::none().cast<py::object>();
                               })
        .def_property_readonly("coeffs",
                               [](const NFResult& nf) {
                                   py::list out;
                                   for (const auto& [ik, b] : nf.coeffs)
                                       out.append(py::make_tuple(ik.first, ik.second, b));
                                   return out;
                               })
        .def_readonly("linearizable", &NFResult::linearizable)
        .def_readonly("invariant_I", &NFResult::invariantI)
        .def_readonly("transformed_field", &NFResult::transformedField)
        .def_readonly("max_grade", &NFResult::maxGrade)
        .def_readonly("time_scale", &NFResult::timeScale);

    m.def("normalize", &normalize, py::arg("field"), py::arg("max_grade") = 6);
    m.def("rescale_leading", &rescaleLeading);
    m.def("secondary_invariant", &secondaryInvariant);
    m.def("hamiltonian_reduce", [](const NFResult& nf) {
        PlanarHamiltonian h = hamiltonianReduce(nf);
        return py::make_tuple(h.hamiltonian, h.reducedField);
    });
    m.def(
        "quartic_closed_form",
        [](const py::dict& frees) {
            CubicCoeffs c;
            std::map<std::string, Rat*> slot{
                {"b002", &c.b002}, {"b011", &c.b011}, {"a110", &c.a110}, {"b110", &c.b110},
                {"b200", &c.b200}, {"b003", &c.b003}, {"b021", &c.b021}, {"b102", &c.b102},
                {"c003", &c.c003}, {"c021", &c.c021}, {"c102", &c.c102}, {"b120", &c.b120},
                {"b201", &c.b201}, {"a300", &c.a300}, {"b300", &c.b300}};
            for (const auto& item : frees) {
                std::string key = py::cast<std::string>(item.first);
                Rat value = py::cast<Rat>(item.second);
                if (key == "a210") {
                    c.a210 = value;
                    continue;
                }
                auto it = slot.find(key);
                if (it == slot.end()) throw std::invalid_argument("unknown coefficient " + key);
                *it->second = value;
            }
            QuarticNF q = quarticClosedForm(c);
            py::dict out;
            out["b10"] = q.b10;
            out["b20"] = q.b20;
            out["b01"] = q.b01;
            out["b11"] = q.b11;
            out["b30"] = q.b30;
            out["invariant_I"] = q.invariantI;
            out["field"] = q.field;
            return out;
        },
        "Quartic truncated normal form coefficients from the free cubic-family coefficients");

    m.def("parse_poly", &parsePoly);
    m.def("parse_field", &parseField);
}
