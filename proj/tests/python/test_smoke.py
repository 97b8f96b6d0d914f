"""Smoke tests of the python module against a few published exact values."""

import pytest

solint = pytest.importorskip("solint")


def test_poly_arithmetic():
    d = solint.delta()
    assert str(d) == "x*z - y^2"
    assert str(d * d) == "x^2*z^2 - 2*x*y^2*z + y^4"
    p = solint.Poly("x + z")
    assert str(p.pow(3)) == "x^3 + 3*x^2*z + 3*x*z^2 + z^3"
    assert str(p.differentiate("x")) == "1"
    assert str(d.eval_at(solint.Rat(2), solint.Rat(1), solint.Rat(3))) == "5"


def test_generators_and_membership():
    minus_n = solint.generator("B", 1, 0, 0)
    assert str(minus_n) == "(0, -x, -2*y)"
    ok, cond, witness = solint.membership(minus_n)
    assert ok

    bad = solint.VField("dx=-3*x*y^2; dy=-3*x*y*z; dz=-3*y^2*z")
    ok, cond, witness = solint.membership(bad)
    assert not ok
    assert cond == "div"
    assert str(witness) == "-3*x*z - 6*y^2"


def test_published_bracket():
    e = solint.bracket_in_basis(6, 8, 3, 2, 5, 2)
    assert len(e) == 5
    first = e[0]
    assert (first["family"], first["l"], first["i"], first["k"]) == ("B", 0, 5, 9)
    assert str(first["coeff"]) == "1152/785213"
    closed, fallback = solint.structure_constants_closed(3, 5, 0, 4, 4, 0)
    assert not fallback
    assert str(closed[0]["coeff"]) == "256/297297"


def test_decompose_round_trip():
    n_field = -solint.generator("B", 1, 0, 0)
    e = solint.decompose(n_field)
    assert len(e) == 1
    assert str(e[0]["coeff"]) == "-1"


def test_poisson():
    x, z = solint.Poly("x"), solint.Poly("z")
    assert str(solint.poisson_bracket(x, z)) == "2*y"
    v = solint.generator("B", 1, 0, 0)
    assert str(solint.secondary_potential(v)) == "x"
    assert str(solint.rate_of_change(z, v)) == "-2*y"


def test_normal_form_pipeline():
    w = solint.VField("dx = 2*y*z; dy = -x + z^2; dz = -2*y")
    nf = solint.normalize(w, max_grade=4)
    assert nf.p == 1
    assert not nf.linearizable
    assert str(nf.invariant_I) == "1/2*z^2 + x"
    H, reduced = solint.hamiltonian_reduce(nf)
    assert str(H) == "1/2*z^3 - x*z + y^2"
    assert str(reduced.dz) == "-2*y"


def test_vector_potentials():
    v = solint.generator("B", 1, 1, 0)
    delta_form = solint.vector_potential_delta(v)
    radial = solint.vector_potential_radial(v)
    assert solint.curl(delta_form) == v
    assert solint.curl(radial) == v
    f = solint.gauge_difference(radial, delta_form)
    assert str(f) == "1/12*x^2*z^2 + 1/12*x*y^2*z - 1/6*y^4"


def test_quartic_closed_form():
    out = solint.quartic_closed_form({"b002": solint.Rat(1)})
    assert str(out["b10"]) == "1"
    assert str(out["b20"]) == "0"
    nf = solint.normalize(out["field"], max_grade=3)
    assert [c[:2] for c in nf.coeffs] == [(1, 0)]
