import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mukai_fm.errors import DegenerateSlope, InvalidModuliVector, MukaiError
from mukai_fm.lattice import (
    Kind,
    MukaiVector,
    Surface,
    canonical_form,
    deg_rel,
    dual,
    from_chern,
    hilbert_index,
    is_isotropic,
    is_primitive,
    moduli_dim,
    mu_rel,
    pairing,
    rk_rel,
    to_chern,
    twist,
    v_squared,
)

from conftest import AB_4, K3_12, V, surfaces, vectors


@pytest.mark.parametrize("v, w, l_sq, expected", [
    ("2,-1,3", "2,-1,3", 12, 0),
    ("1,1,3", "2,1,3", 12, 3),
    ("5,-7,11", "0,0,0", 12, 0),
    ("5,-7,11", "0,0,0", 2, 0),
])
def test_pairing_examples(v, w, l_sq, expected):
    assert pairing(V(v), V(w), Surface(Kind.K3, l_sq)) == expected


def test_v_squared_examples():
    assert v_squared(V("1,1,3"), K3_12) == 6
    assert v_squared(MukaiVector(2, -1, 1 * 3), K3_12) == 0
    assert v_squared(V("0,0,1"), Surface(Kind.ABELIAN, 8)) == 0


def test_surface_validation():
    for bad in (0, -2, 3):
        with pytest.raises(MukaiError):
            Surface(Kind.K3, bad)
    assert Surface("abelian", 4).kind is Kind.ABELIAN


def test_dual_and_twist_examples():
    assert dual(V("3,-1,1")) == V("3,1,1")
    assert dual(V("2,-1,3")) == V("2,1,3")
    assert dual(dual(V("7,5,-2"))) == V("7,5,-2")
    assert twist(V("3,-1,1"), 1, K3_12) == V("3,2,7")
    assert twist(V("1,0,-3"), 1, K3_12) == V("1,1,3")
    assert twist(V("4,-9,2"), 0, K3_12) == V("4,-9,2")


def test_from_chern_examples():
    assert from_chern(1, 1, 4, K3_12) == V("1,1,3")
    assert from_chern(1, 0, 0, K3_12) == V("1,0,1")
    assert from_chern(1, 0, 0, AB_4) == V("1,0,0")


def test_deg_rel_examples():
    g = V("2,1,1")
    assert deg_rel(V("1,1,3"), g) == 1
    assert deg_rel(V("1,1,1"), g) == 1
    assert deg_rel(g, g) == 0
    assert rk_rel(V("3,1,0"), g) == 6
    assert mu_rel(V("3,1,0"), g) == Fraction(-1, 6)
    with pytest.raises(DegenerateSlope):
        mu_rel(V("0,1,0"), g)


def test_primitive_isotropic():
    assert is_primitive(V("2,-1,3")) and is_isotropic(V("2,-1,3"), K3_12)
    assert not is_primitive(V("2,0,2"))
    assert not is_primitive(V("0,0,0")) and is_isotropic(V("0,0,0"), K3_12)


def test_moduli_dim():
    assert moduli_dim(V("1,1,3"), K3_12) == 8
    assert moduli_dim(V("1,1,1"), AB_4) == 4
    assert moduli_dim(V("2,-1,3"), K3_12) == 2
    with pytest.raises(InvalidModuliVector):
        moduli_dim(V("1,0,1"), K3_12)  # <v^2> = -2
    with pytest.raises(InvalidModuliVector):
        moduli_dim(V("2,0,-2"), K3_12)


@pytest.mark.parametrize("v, rep, m, sign", [
    ("3,2,7", "3,-1,1", -1, 1),
    ("-1,-1,-3", "1,1,3", 0, -1),
    ("1,0,1", "1,0,1", 0, 1),
])
def test_canonical_form_examples(v, rep, m, sign):
    assert canonical_form(V(v), K3_12) == (V(rep), m, sign)


def test_canonical_form_zero():
    with pytest.raises(MukaiError):
        canonical_form(V("0,0,0"), K3_12)


def _brute_canonical(v, s, span=60):
    """Scan a window of twists; independent of the candidate search."""
    sign = next((1 if c > 0 else -1) for c in v if c)
    w = sign * v
    best = None
    for m in range(-span, span + 1):
        t = twist(w, m, s)
        key = (abs(t.a), t.a < 0, -t.d, abs(m))
        if best is None or key < best[0]:
            best = (key, t, m)
    return best[1], best[2], sign


@pytest.mark.parametrize("l_sq", [2, 4, 12])
def test_canonical_form_matches_brute_force(l_sq):
    s = Surface(Kind.K3, l_sq)
    for r, d, a in itertools.product(range(-4, 5), range(-6, 7), range(-9, 10)):
        v = MukaiVector(r, d, a)
        if v.is_zero():
            continue
        assert canonical_form(v, s) == _brute_canonical(v, s), v


@pytest.mark.parametrize("v, s, n", [
    ("1,1,3", K3_12, 4),
    ("1,0,1", K3_12, 0),
    ("-1,0,-1", K3_12, 0),
    ("1,0,-3", AB_4, 3),
    ("2,1,1", K3_12, None),
    ("1,0,2", K3_12, None),
])
def test_hilbert_index(v, s, n):
    assert hilbert_index(V(v), s) == n


def test_parse_and_pretty():
    assert MukaiVector.parse(" -3, 0 ,+7") == V("-3,0,7")
    with pytest.raises(ValueError):
        MukaiVector.parse("1,2")
    assert V("3,-1,1").pretty("L̂", "ω̂") == "3-L̂+ω̂"
    assert V("1,1,3").pretty() == "1+L+3ω"
    assert V("0,-2,0").pretty() == "-2L"
    assert V("0,0,0").pretty() == "0"


# -- properties ---------------------------------------------------------------

@given(vectors(), vectors(), surfaces)
def test_pairing_symmetric(v, w, s):
    assert pairing(v, w, s) == pairing(w, v, s)


@given(vectors(), vectors(), vectors(), surfaces)
def test_pairing_bilinear(u, v, w, s):
    assert pairing(u + v, w, s) == pairing(u, w, s) + pairing(v, w, s)


@given(vectors(), vectors(), st.integers(-10**4, 10**4), surfaces)
def test_dual_and_twist_are_isometries(v, w, m, s):
    assert pairing(dual(v), dual(w), s) == pairing(v, w, s)
    assert pairing(twist(v, m, s), twist(w, m, s), s) == pairing(v, w, s)


@given(vectors(10**3), st.integers(-500, 500), st.integers(-500, 500), surfaces)
def test_twist_group_law(v, m, n, s):
    assert twist(twist(v, m, s), n, s) == twist(v, m + n, s)


@given(vectors(), vectors(), st.integers(-1000, 1000), surfaces)
def test_deg_rel_twist_invariant(v, g, m, s):
    assert deg_rel(twist(v, m, s), twist(g, m, s)) == deg_rel(v, g)
    assert deg_rel(v + g, g) == deg_rel(v, g)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-10**9, 10**9), surfaces)
def test_chern_round_trip(rank, c1, c2, s):
    v = from_chern(rank, c1, c2, s)
    assert to_chern(v, s) == (rank, c1, c2)
    assert from_chern(*to_chern(v, s), s) == v


@given(vectors(10**4), surfaces)
def test_canonical_form_properties(v, s):
    if v.is_zero():
        return
    rep, m, sign = canonical_form(v, s)
    assert rep == twist(sign * v, m, s)
    assert canonical_form(rep, s) == (rep, 0, 1)
    assert v_squared(rep, s) == v_squared(v, s)


@given(vectors(10**3), st.integers(-50, 50), st.sampled_from([1, -1]), surfaces)
def test_canonical_form_is_orbit_invariant(v, m, sign, s):
    if v.is_zero():
        return
    assert canonical_form(sign * twist(v, m, s), s)[0] == canonical_form(v, s)[0]
