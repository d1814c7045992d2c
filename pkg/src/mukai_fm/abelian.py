"""The classical Fourier-Mukai transform on an abelian surface with NS = Z L.

Only the induced isometry of Mukai lattices is modelled.  The classifier
decides, from ``v = r + c1(L) + a omega`` alone, which of the WIT/IT statements
for the Poincare kernel applies and what the transformed vector is.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import HypothesisViolation, UnsupportedKind
from .lattice import Kind, MukaiVector, Surface, dual, v_squared

STABILITY_ASSUMPTION = "E is mu-stable (sheaf-level, not verified)"


def _require_abelian(s: Optional[Surface]):
    if s is not None and s.kind is not Kind.ABELIAN:
        raise UnsupportedKind(f"the Poincare transform needs an abelian surface, got {s.kind.value}")


def fm_abelian_H(v: MukaiVector, s: Optional[Surface] = None) -> MukaiVector:
    """``(r, d, a) -> (a, -d, r)``."""
    _require_abelian(s)
    return MukaiVector(v.a, -v.d, v.r)


def g_transform_H(v: MukaiVector, s: Optional[Surface] = None) -> MukaiVector:
    """Transform followed by the derived dual, shifted by 2: ``(r, d, a) -> (a, d, r)``."""
    return dual(fm_abelian_H(v, s))


class Section2Case(enum.Enum):
    IT0_F = "IT0_F"
    WIT2_G = "WIT2_G"
    WIT1_F = "WIT1_F"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool


@dataclass(frozen=True)
class Section2Verdict:
    case: Section2Case
    image: Optional[MukaiVector]
    hypotheses: tuple[Check, ...] = field(default_factory=tuple)
    assumptions: tuple[str, ...] = (STABILITY_ASSUMPTION,)


def _check_degree_one(v: MukaiVector):
    if v.d != 1:
        raise HypothesisViolation("d=1", f"expected d = 1, got d = {v.d}", v.d)


def classify_section2(v: MukaiVector, s: Surface) -> Section2Verdict:
    """Pick the applicable statement for ``v = r + c1(L) + a omega``.

    ``a > <v^2>/2`` gives IT_0 for F with image ``F_H(v)``; ``0 < a <= <v^2>/2``
    gives WIT_2 for G with image ``F_H(v)^dual``; ``a < 0`` gives WIT_1 for F
    with image ``-F_H(v)``.  Nothing is claimed for ``a = 0``.
    """
    _require_abelian(s)
    _check_degree_one(v)
    if v.r < 1:
        raise HypothesisViolation("r>=1", f"expected rank >= 1, got {v.r}", v.r)
    sq = v_squared(v, s)
    if sq < 0:
        raise HypothesisViolation("<v^2> >= 0", f"<v^2> = {sq} < 0: empty moduli space", sq)

    checks = [Check("d=1", True), Check("r>=1", True), Check("<v^2> >= 0", True)]
    if 2 * v.a > sq:
        checks.append(Check("a > <v^2>/2", True))
        return Section2Verdict(Section2Case.IT0_F, fm_abelian_H(v), tuple(checks))
    if v.a > 0:
        checks.append(Check("0 < a <= <v^2>/2", True))
        return Section2Verdict(Section2Case.WIT2_G, g_transform_H(v), tuple(checks))
    if v.a < 0:
        checks.append(Check("a < 0", True))
        return Section2Verdict(Section2Case.WIT1_F, -fm_abelian_H(v), tuple(checks))
    checks.append(Check("a != 0", False))
    return Section2Verdict(Section2Case.UNKNOWN, None, tuple(checks))


def classify_inverse(w: MukaiVector, s: Surface) -> Section2Verdict:
    """Inverse-direction statement for ``w = r - c1(L^) + a omega`` on the dual surface.

    At the lattice level this is the forward classifier applied to ``w^dual``.
    """
    return classify_section2(dual(w), s)


@dataclass(frozen=True)
class ProofBounds:
    ext_bound: Optional[int]
    sections_bound: Optional[int]


def proof_bounds(v: MukaiVector, s: Surface) -> ProofBounds:
    """Integer bounds on the extension count (``a > 0``) or total sections (``a < 0``)."""
    _check_degree_one(v)
    sq = v_squared(v, s)
    if v.a > 0:
        return ProofBounds(sq // (2 * v.a), None)
    if v.a < 0:
        return ProofBounds(None, sq // (-2 * v.a))
    return ProofBounds(None, None)
