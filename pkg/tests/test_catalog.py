import math

import pytest

from mukai_fm.catalog import (
    SEARCH_CEILING_ENV,
    enumerate_setups,
    example1_family,
    example2_k3,
    search_theorem_applicable,
)
from mukai_fm.errors import InvalidFamilyParameters, InvalidSetup, ResourceLimit
from mukai_fm.general import TheoremCase, make_setup
from mukai_fm.lattice import canonical_form, v_squared

from conftest import V

EXAMPLE2_TRACE = [
    ("setup", "r0=2,d0=-1,k=3", "d1=1,l=-2,l_sq=12,v0=2,-1,3"),
    ("from_chern", "rank=1,c1=1,c2=4", "1,1,3"),
    ("fm_apply", "1,1,3", "-3,-2,-7"),
    ("theorem_map", "1,1,3", "3,-1,1"),
    ("theorem_case", "1,1,3", "FM"),
    ("reflection", "3,-1,1|1,0,1", "-1,-1,-3"),
    ("reflection+canonical", "-1,-1,-3", "1,1,3"),
    ("hilbert_index", "1,1,3", "4"),
    ("hilbert_index", "1,1,3", "4"),
    ("moduli_dim", "1,1,3", "8"),
    ("moduli_dim", "3,-1,1", "8"),
    ("moduli_dim", "1,1,3", "8"),
]


def test_example1_instances():
    ex = example1_family(2, 1, 1)
    assert ex.v == V("1,1,1") and ex.setup.v0 == V("2,-1,1") and ex.setup.l_sq == 4
    assert (ex.v_sq, ex.p) == (2, 1)
    ex = example1_family(3, 2, 1)
    assert ex.v == V("1,1,2") and ex.setup.v0 == V("3,-2,4") and ex.setup.l_sq == 6
    assert (ex.v_sq, ex.p) == (2, 2)
    assert ex.verdict.case is TheoremCase.FM


@pytest.mark.parametrize("args", [(2, 2, 1), (1, 1, 1), (3, 0, 1), (3, 3, 1), (3, 1, 0)])
def test_example1_rejects(args):
    with pytest.raises(InvalidFamilyParameters):
        example1_family(*args)


def test_example1_sweep():
    for r0 in range(2, 7):
        for s in range(1, 6):
            for n in range(1, s * r0):
                if math.gcd(r0, n) != 1:
                    continue
                ex = example1_family(r0, n, s)
                assert (ex.v_sq, ex.p, ex.verdict.case) == (2 * s, n, TheoremCase.FM)


def test_example2_trace():
    assert [(s.operation, s.input, s.output) for s in example2_k3()] == EXAMPLE2_TRACE


def test_search_examples():
    setup = make_setup(2, -1, 3)
    found = search_theorem_applicable(setup, 3)
    hit = [vd for vd in found if vd.v == V("1,1,3")]
    assert len(hit) == 1 and hit[0].canonical_image == V("3,-1,1")
    assert search_theorem_applicable(setup, 0) == []
    keys = [(v_squared(vd.v, setup.source), *vd.v) for vd in found]
    assert keys == sorted(keys)


def test_search_brute_force_and_isometry():
    setup = make_setup(1, 0, 2)
    found = search_theorem_applicable(setup, 2)
    expected = set()
    rng = range(-2, 3)
    for r in rng:
        for d in rng:
            for a in rng:
                v = V(f"{r},{d},{a}")
                if d * 1 + r * 0 == 1 and math.gcd(r, d, a) == 1 and v_squared(v, setup.source) >= 0:
                    expected.add(v)
    assert {vd.v for vd in found} == expected
    for vd in found:
        if vd.canonical_image is not None:
            assert v_squared(vd.canonical_image, setup.target) == v_squared(vd.v, setup.source)


def test_search_invariant_under_normalization():
    base = make_setup(3, -1, 2)
    for shift in (-1, 1, 2):
        other = base.with_d1(base.d1 + shift * base.r0)
        a = [(vd.v, vd.case, vd.canonical_image) for vd in search_theorem_applicable(base, 4)]
        b = [(vd.v, vd.case, vd.canonical_image) for vd in search_theorem_applicable(other, 4)]
        assert a == b


def test_search_ceiling(monkeypatch):
    setup = make_setup(2, -1, 3)
    with pytest.raises(ResourceLimit):
        search_theorem_applicable(setup, 51)
    monkeypatch.setenv(SEARCH_CEILING_ENV, "2")
    with pytest.raises(ResourceLimit):
        search_theorem_applicable(setup, 3)


def _params(setups):
    return {(s.r0, s.d0, s.k) for s in setups}


def test_enumerate_setups():
    got = _params(enumerate_setups(4, 1))
    assert {(1, 0, 2), (2, 1, 1), (2, -1, 1)} <= got
    assert (2, -1, 3) in _params(enumerate_setups(12, 1))
    assert (3, -2, 1) in _params(enumerate_setups(6, 2))
    for l_sq in (2, 12, 30, 60):
        setups = enumerate_setups(l_sq, 3)
        params = [(s.r0, s.d0, s.k) for s in setups]
        assert len(params) == len(set(params))
        for s in setups:
            assert make_setup(s.r0, s.d0, s.k) == s
            assert s.d0 != 0 or s.r0 == 1
    with pytest.raises(InvalidSetup):
        enumerate_setups(7, 1)
    with pytest.raises(InvalidSetup):
        enumerate_setups(0, 1)
