"""Fourier-Mukai transforms whose kernel is a universal family of sheaves with
isotropic Mukai vector ``v0 = (r0, d0, d0^2 k)`` on a surface with ``(L^2) = 2 r0 k``.

The transform acts on ``(1, c1(L), omega)`` by an integral unimodular matrix
determined by ``(r0, d0, k)`` and a solution ``(d1, l)`` of
``d1 k d0 - l r0 = 1``.  Different solutions differ by a twist on the target.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import HypothesisViolation, InvalidSetup, NonSphericalMirror
from .lattice import (
    OMEGA,
    Kind,
    MukaiVector,
    Surface,
    canonical_form,
    deg_rel,
    dual,
    is_primitive,
    pairing,
    v_squared,
)

LOCALLY_FREE_FAMILY = "the universal family on X x Y is locally free"
STABLE_SHEAVES = "sheaves in M_L(v) are mu-stable (sheaf-level, not verified)"
GENERAL_POLARIZATION = "the polarization is general with respect to v"


@dataclass(frozen=True)
class IntMatrix3:
    """3x3 integer matrix stored column-major in the basis ``(1, c1(L), omega)``."""

    entries: tuple[int, ...]

    @classmethod
    def from_columns(cls, c0, c1, c2) -> "IntMatrix3":
        return cls(tuple(c0) + tuple(c1) + tuple(c2))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[3 * j + i]

    def column(self, j: int) -> tuple[int, int, int]:
        return tuple(self.entries[3 * j:3 * j + 3])

    def columns(self):
        return [self.column(j) for j in range(3)]

    def rows(self):
        return [tuple(self[i, j] for j in range(3)) for i in range(3)]

    def apply(self, v: MukaiVector) -> MukaiVector:
        x = tuple(v)
        return MukaiVector(*(sum(self[i, j] * x[j] for j in range(3)) for i in range(3)))

    def det(self) -> int:
        m = self
        return (
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )

    def inverse(self) -> "IntMatrix3":
        det = self.det()
        if det not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det = {det})")
        m = self

        def cof(i, j):
            rs = [x for x in range(3) if x != i]
            cs = [y for y in range(3) if y != j]
            minor = m[rs[0], cs[0]] * m[rs[1], cs[1]] - m[rs[0], cs[1]] * m[rs[1], cs[0]]
            return minor if (i + j) % 2 == 0 else -minor

        # inverse[i, j] = cof(j, i) / det
        cols = [[cof(j, i) * det for i in range(3)] for j in range(3)]
        return IntMatrix3.from_columns(*cols)


@dataclass(frozen=True)
class FmSetup:
    r0: int
    d0: int
    k: int
    d1: int
    l: int
    source: Surface
    target: Surface

    @property
    def v0(self) -> MukaiVector:
        return MukaiVector(self.r0, self.d0, self.d0 * self.d0 * self.k)

    @property
    def v0_dual(self) -> MukaiVector:
        return dual(self.v0)

    @property
    def l_sq(self) -> int:
        return self.source.l_sq

    def with_d1(self, d1: int) -> "FmSetup":
        return make_setup(self.r0, self.d0, self.k, d1=d1, kind=self.source.kind)


def make_setup(r0: int, d0: int, k: int, d1: Optional[int] = None, kind=Kind.K3) -> FmSetup:
    """Validate ``(r0, d0, k)`` and solve ``d1 k d0 - l r0 = 1``.

    Without an explicit ``d1`` the solution with ``0 <= d1 < r0`` is taken
    (``d1 = 0, l = -1`` when ``r0 = 1``).  An explicit ``d1`` is checked, never
    adjusted.
    """
    if r0 < 1 or k < 1:
        raise InvalidSetup(f"need r0 >= 1 and k >= 1, got r0={r0}, k={k}")
    if math.gcd(r0, k) != 1:
        raise InvalidSetup(f"gcd(r0, k) = {math.gcd(r0, k)} != 1")
    if math.gcd(r0, d0) != 1:
        raise InvalidSetup(f"gcd(r0, d0) = {math.gcd(r0, d0)} != 1")
    kd0 = k * d0
    if d1 is None:
        d1 = pow(kd0, -1, r0) if r0 > 1 else 0
    num = d1 * kd0 - 1
    if num % r0:
        raise InvalidSetup(f"d1={d1} does not solve d1*k*d0 - l*r0 = 1 for (r0, d0, k)=({r0}, {d0}, {k})")
    kind = Kind(kind) if isinstance(kind, str) else kind
    s = Surface(kind, 2 * r0 * k)
    return FmSetup(r0, d0, k, d1, num // r0, s, s)


def fm_matrix(setup: FmSetup) -> IntMatrix3:
    r0, d0, k, d1, l = setup.r0, setup.d0, setup.k, setup.d1, setup.l
    return IntMatrix3.from_columns(
        (d0 * d0 * k, d0 * l, l * l * r0),
        (2 * d0 * k * r0, 2 * d0 * k * d1 - 1, 2 * d0 * k * k * d1 * d1 - 2 * d1 * k),
        (r0, d1, d1 * d1 * k),
    )


def fm_apply(setup: FmSetup, v: MukaiVector) -> MukaiVector:
    return fm_matrix(setup).apply(v)


def fm_inverse_apply(setup: FmSetup, w: MukaiVector) -> MukaiVector:
    return fm_matrix(setup).inverse().apply(w)


def g_vectors(setup: FmSetup) -> tuple[MukaiVector, MukaiVector]:
    """Lattice classes of the two restrictions of the universal family.

    ``g1`` is the dual of a fibre over a point of the target (``v0`` dual),
    ``g2`` the fibre over a point of the source, which is the image of ``omega``.
    """
    return setup.v0_dual, fm_apply(setup, OMEGA)


class DegreeIdentity(NamedTuple):
    lhs: int
    rhs: int
    dual_form: int


def lemma_deg_identity(setup: FmSetup, v: MukaiVector) -> DegreeIdentity:
    """Both sides of ``deg_G1(v) = -deg_G2(F(v)) = deg_{G2^dual}(F(v)^dual)``."""
    g1, g2 = g_vectors(setup)
    w = fm_apply(setup, v)
    return DegreeIdentity(deg_rel(v, g1), -deg_rel(w, g2), deg_rel(dual(w), dual(g2)))


class TheoremCase(enum.Enum):
    DUAL_THEN_FM = "DualThenFM"
    FM = "FM"
    APPENDIX = "Appendix"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class TheoremVerdict:
    case: TheoremCase
    v: MukaiVector
    raw_image: Optional[MukaiVector]
    canonical_image: Optional[MukaiVector]
    pairing_with_v0dual: int
    degree: int
    assumptions: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "case": self.case.value,
            "v": str(self.v),
            "raw_image": None if self.raw_image is None else str(self.raw_image),
            "canonical_image": None if self.canonical_image is None else str(self.canonical_image),
            "pairing_with_v0dual": self.pairing_with_v0dual,
            "degree": self.degree,
        }


def theorem_map(setup: FmSetup, v: MukaiVector) -> TheoremVerdict:
    """Decide which isomorphism of moduli spaces the transform induces for ``v``.

    Requires ``deg_G1(v) = d r0 + r d0 = 1``.  With ``p = <v, v0^dual>``:
    ``p < 0`` uses the transform followed by the dual (image ``F(v)^dual``),
    ``p > 0`` the transform alone (image ``-F(v)``), ``p = 0`` is not covered.
    """
    g1, _ = g_vectors(setup)
    deg = deg_rel(v, g1)
    if deg != 1:
        raise HypothesisViolation("deg_G1(v)=1", f"deg_G1(v)={deg} ≠ 1", deg)
    if not is_primitive(v):
        raise HypothesisViolation("primitive", f"{v} is not primitive")
    sq = v_squared(v, setup.source)
    if sq < 0:
        raise HypothesisViolation("<v^2> >= 0", f"<v^2> = {sq} < 0: empty moduli space", sq)

    p = pairing(v, setup.v0_dual, setup.source)
    assumptions = (LOCALLY_FREE_FAMILY, STABLE_SHEAVES, GENERAL_POLARIZATION)
    if p == 0:
        return TheoremVerdict(TheoremCase.INAPPLICABLE, v, None, None, p, deg, assumptions)
    w = fm_apply(setup, v)
    if p < 0:
        case, raw = TheoremCase.DUAL_THEN_FM, dual(w)
    else:
        case, raw = TheoremCase.FM, -w
    canon, _, _ = canonical_form(raw, setup.target)
    return TheoremVerdict(case, v, raw, canon, p, deg, assumptions)


def classify_appendix(setup: FmSetup, v: MukaiVector) -> TheoremVerdict:
    """Degree-zero case: the transform is IT_1 and the image is ``-F(v)``.

    Only ``deg_G1(v) = 0`` is checked; stability, local freeness and the
    exclusion of ``M_L(v0^perp)`` are sheaf-level and reported as assumptions.
    """
    g1, _ = g_vectors(setup)
    deg = deg_rel(v, g1)
    if deg != 0:
        raise HypothesisViolation("deg_G1(v)=0", f"deg_G1(v)={deg} ≠ 0", deg)
    if v.is_zero():
        raise HypothesisViolation("v != 0", "zero vector")
    assumptions = [
        "E is mu-stable (sheaf-level, not verified)",
        "E is locally free (sheaf-level, not verified)",
        "E is not in M_L(v0^perp) (sheaf-level, not verified)",
        LOCALLY_FREE_FAMILY,
    ]
    v0 = setup.v0
    if v.r * v0.d == v.d * v0.r and v.r * v0.a == v.a * v0.r and v.d * v0.a == v.a * v0.d:
        assumptions.append("v is a multiple of v0: the M_L(v0^perp) exclusion is expected to fail")
    raw = -fm_apply(setup, v)
    canon, _, _ = canonical_form(raw, setup.target)
    p = pairing(v, setup.v0_dual, setup.source)
    return TheoremVerdict(TheoremCase.APPENDIX, v, raw, canon, p, deg, tuple(assumptions))


def reflection(v: MukaiVector, u: MukaiVector, s: Surface) -> MukaiVector:
    """Reflection in a ``(-2)``-class: ``v + <v, u> u``."""
    usq = v_squared(u, s)
    if usq != -2:
        raise NonSphericalMirror(f"<u^2> = {usq}, reflection needs <u^2> = -2")
    return v + pairing(v, u, s) * u
