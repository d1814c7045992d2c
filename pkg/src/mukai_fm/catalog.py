"""Worked example families, brute-force searches and setup enumeration."""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import InvalidFamilyParameters, InvalidSetup, ResourceLimit
from .general import (
    FmSetup,
    TheoremCase,
    TheoremVerdict,
    fm_apply,
    g_vectors,
    make_setup,
    reflection,
    theorem_map,
)
from .lattice import (
    Kind,
    MukaiVector,
    canonical_form,
    from_chern,
    hilbert_index,
    is_primitive,
    moduli_dim,
    pairing,
    v_squared,
)

DEFAULT_SEARCH_CEILING = 50
SEARCH_CEILING_ENV = "MUKAI_FM_SEARCH_CEILING"


def search_ceiling() -> int:
    raw = os.environ.get(SEARCH_CEILING_ENV)
    return int(raw) if raw else DEFAULT_SEARCH_CEILING


@dataclass(frozen=True)
class Example1:
    setup: FmSetup
    v: MukaiVector
    v_sq: int
    p: int
    verdict: TheoremVerdict


def example1_family(r0: int, n: int, s: int, kind=Kind.K3) -> Example1:
    """Rank-one family with ``<v^2> = 2s`` and ``<v, v0^dual> = n``.

    ``d0 = -(r0 - 1)``, ``k = s r0 - n`` and ``v = 1 + c1(L) + ((r0^2-1)s - r0 n) omega``.
    """
    if r0 < 2:
        raise InvalidFamilyParameters(f"r0 must be >= 2, got {r0}")
    if s <= 0:
        raise InvalidFamilyParameters(f"s must be positive, got {s}")
    if not 0 < n < s * r0:
        raise InvalidFamilyParameters(f"need 0 < n < s*r0 = {s * r0}, got n = {n}")
    if math.gcd(r0, n) != 1:
        raise InvalidFamilyParameters(f"gcd(r0, n) = {math.gcd(r0, n)} != 1")
    try:
        setup = make_setup(r0, -(r0 - 1), s * r0 - n, kind=kind)
    except InvalidSetup as exc:
        raise InvalidFamilyParameters(str(exc)) from exc
    v = MukaiVector(1, 1, (r0 * r0 - 1) * s - r0 * n)
    v_sq = v_squared(v, setup.source)
    p = pairing(v, setup.v0_dual, setup.source)
    if v_sq != 2 * s or p != n:
        raise AssertionError(f"family identity broken: <v^2>={v_sq} (want {2 * s}), p={p} (want {n})")
    return Example1(setup, v, v_sq, p, theorem_map(setup, v))


@dataclass(frozen=True)
class Step:
    operation: str
    input: str
    output: str


def example2_k3() -> list[Step]:
    """Replay the K3 example with ``(L^2) = 12`` and ``v0 = 2 - L + 3 omega``.

    ``Hilb^4`` on X goes to ``3 - L^ + omega^`` on Y, and the reflection in
    ``v(O_Y)`` brings it back to a ``Hilb^4`` vector on Y.
    """
    setup = make_setup(2, -1, 3, kind=Kind.K3)
    s = setup.source
    v = from_chern(1, 1, 4, s)
    steps = [
        Step("setup", "r0=2,d0=-1,k=3", f"d1={setup.d1},l={setup.l},l_sq={setup.l_sq},v0={setup.v0}"),
        Step("from_chern", "rank=1,c1=1,c2=4", str(v)),
        Step("fm_apply", str(v), str(fm_apply(setup, v))),
    ]
    verdict = theorem_map(setup, v)
    steps.append(Step("theorem_map", str(v), str(verdict.canonical_image)))
    steps.append(Step("theorem_case", str(v), verdict.case.value))
    o_y = from_chern(1, 0, 0, setup.target)
    reflected = reflection(verdict.canonical_image, o_y, setup.target)
    steps.append(Step("reflection", f"{verdict.canonical_image}|{o_y}", str(reflected)))
    back, _, _ = canonical_form(reflected, setup.target)
    steps.append(Step("reflection+canonical", str(reflected), str(back)))
    steps.append(Step("hilbert_index", str(v), str(hilbert_index(v, s))))
    steps.append(Step("hilbert_index", str(back), str(hilbert_index(back, setup.target))))
    steps.append(Step("moduli_dim", str(v), str(moduli_dim(v, s))))
    steps.append(Step("moduli_dim", str(verdict.canonical_image), str(moduli_dim(verdict.canonical_image, setup.target))))
    steps.append(Step("moduli_dim", str(back), str(moduli_dim(back, setup.target))))
    return steps


def search_theorem_applicable(setup: FmSetup, bound: int, ceiling=None) -> list[TheoremVerdict]:
    """All primitive ``v`` with ``|r|, |d|, |a| <= bound``, ``deg_G1(v) = 1`` and ``<v^2> >= 0``.

    Sorted by ``(<v^2>, r, d, a)``.  Vectors orthogonal to ``v0^dual`` come back
    as ``Inapplicable`` verdicts.
    """
    ceiling = search_ceiling() if ceiling is None else ceiling
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    if bound > ceiling:
        raise ResourceLimit(f"bound {bound} exceeds the search ceiling {ceiling}")
    g1, _ = g_vectors(setup)
    found = []
    span = range(-bound, bound + 1)
    for r in span:
        for d in span:
            if d * g1.r - g1.d * r != 1:
                continue
            for a in span:
                v = MukaiVector(r, d, a)
                if not is_primitive(v) or v_squared(v, setup.source) < 0:
                    continue
                found.append(theorem_map(setup, v))
    found.sort(key=lambda t: (v_squared(t.v, setup.source), t.v.r, t.v.d, t.v.a))
    return found


def enumerate_setups(l_sq: int, d0_bound: int, kind=Kind.K3) -> list[FmSetup]:
    """Every ``(r0, d0, k)`` with ``2 r0 k = l_sq``, coprimality and ``|d0| <= d0_bound``."""
    if l_sq <= 0 or l_sq % 2:
        raise InvalidSetup(f"(L^2) must be a positive even integer, got {l_sq}")
    half = l_sq // 2
    setups = []
    for r0 in range(1, half + 1):
        if half % r0:
            continue
        k = half // r0
        if math.gcd(r0, k) != 1:
            continue
        for d0 in range(-d0_bound, d0_bound + 1):
            if math.gcd(r0, d0) != 1:
                continue  # also drops d0 = 0 unless r0 = 1
            setups.append(make_setup(r0, d0, k, kind=kind))
    return setups


def is_applicable(verdict: TheoremVerdict) -> bool:
    return verdict.case in (TheoremCase.FM, TheoremCase.DUAL_THEN_FM)

