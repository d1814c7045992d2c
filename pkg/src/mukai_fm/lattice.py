"""Mukai vectors on a surface with Picard group generated by one ample class.

A vector ``(r, d, a)`` stands for ``r + d*c1(L) + a*omega`` where ``L`` is the
ample generator and ``omega`` the class of a point.  Everything is exact
integer arithmetic; Python ints never overflow, which matters because twists
and transforms grow the ``a`` component quadratically or worse.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import DegenerateSlope, InvalidModuliVector, MukaiError


class Kind(enum.Enum):
    ABELIAN = "abelian"
    K3 = "k3"

    @property
    def epsilon(self) -> int:
        # sqrt(td) = 1 + epsilon * omega
        return 0 if self is Kind.ABELIAN else 1


@dataclass(frozen=True)
class Surface:
    """Surface kind plus the self-intersection ``l_sq = (L^2)`` of the generator."""

    kind: Kind
    l_sq: int

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", Kind(self.kind.lower()))
        if not isinstance(self.l_sq, int) or self.l_sq <= 0 or self.l_sq % 2:
            raise MukaiError(f"(L^2) must be a positive even integer, got {self.l_sq!r}")

    @property
    def epsilon(self) -> int:
        return self.kind.epsilon

    def __str__(self):
        return f"{self.kind.value},{self.l_sq}"


_VECTOR_RE = re.compile(r"^\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*$")


@dataclass(frozen=True)
class MukaiVector:
    r: int
    d: int
    a: int

    @classmethod
    def parse(cls, text: str) -> "MukaiVector":
        """Parse the ``"r,d,a"`` syntax; raises ``ValueError`` on anything else."""
        m = _VECTOR_RE.match(text)
        if m is None:
            raise ValueError(f"not a Mukai vector 'r,d,a': {text!r}")
        return cls(*(int(g) for g in m.groups()))

    def __iter__(self) -> Iterator[int]:
        yield self.r
        yield self.d
        yield self.a

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.d + other.d, self.a + other.a)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.d - other.d, self.a - other.a)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.d, -self.a)

    def __mul__(self, c: int) -> "MukaiVector":
        return MukaiVector(c * self.r, c * self.d, c * self.a)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.r == 0 and self.d == 0 and self.a == 0

    def __str__(self):
        return f"{self.r},{self.d},{self.a}"

    def pretty(self, line="L", point="ω") -> str:
        """Render as ``r + d L + a ω`` with zero terms dropped, e.g. ``3-L+ω``."""
        parts = []
        for coeff, sym in ((self.r, ""), (self.d, line), (self.a, point)):
            if coeff == 0:
                continue
            if sym and abs(coeff) == 1:
                body = sym
            else:
                body = f"{abs(coeff)}{sym}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out


OMEGA = MukaiVector(0, 0, 1)


def pairing(v: MukaiVector, w: MukaiVector, s: Surface) -> int:
    return v.d * w.d * s.l_sq - v.r * w.a - v.a * w.r


def v_squared(v: MukaiVector, s: Surface) -> int:
    return v.d * v.d * s.l_sq - 2 * v.r * v.a


def dual(v: MukaiVector) -> MukaiVector:
    return MukaiVector(v.r, -v.d, v.a)


def twist(v: MukaiVector, m: int, s: Surface) -> MukaiVector:
    """Multiply by ``ch(L^m) = 1 + m c1(L) + m^2 (L^2)/2 omega``."""
    half = s.l_sq // 2
    return MukaiVector(v.r, v.d + v.r * m, v.a + m * v.d * s.l_sq + v.r * m * m * half)


def from_chern(rank: int, c1_coeff: int, c2: int, s: Surface) -> MukaiVector:
    return MukaiVector(rank, c1_coeff, c1_coeff * c1_coeff * (s.l_sq // 2) - c2 + s.epsilon * rank)


def to_chern(v: MukaiVector, s: Surface) -> tuple[int, int, int]:
    """Inverse of :func:`from_chern`: returns ``(rank, c1 coefficient, c2)``."""
    c2 = v.d * v.d * (s.l_sq // 2) + s.epsilon * v.r - v.a
    return v.r, v.d, c2


def deg_rel(v: MukaiVector, g: MukaiVector) -> int:
    """Degree of ``E (x) G^dual`` measured against the generator."""
    return v.d * g.r - g.d * v.r


def rk_rel(v: MukaiVector, g: MukaiVector) -> int:
    return v.r * g.r


def mu_rel(v: MukaiVector, g: MukaiVector) -> Fraction:
    rk = rk_rel(v, g)
    if rk == 0:
        raise DegenerateSlope(f"relative slope undefined: rank {v.r} against rank {g.r}")
    return Fraction(deg_rel(v, g), rk)


def content(v: MukaiVector) -> int:
    return math.gcd(v.r, v.d, v.a)


def is_primitive(v: MukaiVector) -> bool:
    return content(v) == 1


def is_isotropic(v: MukaiVector, s: Surface) -> bool:
    return v_squared(v, s) == 0


def moduli_dim(v: MukaiVector, s: Surface) -> int:
    sq = v_squared(v, s)
    if sq < 0:
        raise InvalidModuliVector(f"<v^2> = {sq} < 0: moduli space of {v} is empty")
    if not is_primitive(v):
        raise InvalidModuliVector(f"{v} is not primitive")
    return sq + 2


def _leading_sign(v: MukaiVector) -> int:
    for c in v:
        if c:
            return 1 if c > 0 else -1
    return 1


def _twist_key(w: MukaiVector):
    # smallest |a|, then a >= 0, then larger d
    return (abs(w.a), w.a < 0, -w.d)


def _twist_candidates(v: MukaiVector, s: Surface) -> set[int]:
    L = s.l_sq
    if v.r == 0:
        if v.d == 0:
            return {0}
        step = v.d * L
        q = -v.a // step
        return {q - 1, q, q + 1, q + 2}
    # a(m) = (rL/2) m^2 + dL m + a, convex since r > 0
    base = -v.d // v.r
    cands = {base - 1, base, base + 1, base + 2}
    disc = L * v_squared(v, s)
    if disc >= 0:
        root = math.isqrt(disc)
        for num in (-v.d * L - root, -v.d * L + root):
            q = num // (v.r * L)
            cands.update(range(q - 1, q + 3))
    return cands


def canonical_form(v: MukaiVector, s: Surface) -> tuple[MukaiVector, int, int]:
    """Representative of ``v`` up to twisting by powers of ``L`` and a global sign.

    The sign makes the first nonzero component positive.  Among the twists the
    one with smallest ``|a|`` is chosen, preferring ``a >= 0`` and then the
    larger ``d`` on ties.  Returns ``(representative, m, sign)`` with
    ``representative == twist(sign * v, m)``.
    """
    if v.is_zero():
        raise MukaiError("canonical form of the zero vector is undefined")
    sign = _leading_sign(v)
    w = sign * v
    best_m = min(
        sorted(_twist_candidates(w, s)),
        key=lambda m: (_twist_key(twist(w, m, s)), abs(m)),
    )
    return twist(w, best_m, s), best_m, sign


def hilbert_index(v: MukaiVector, s: Surface) -> Optional[int]:
    """``n`` such that ``v`` is, up to twist and sign, the vector of ``Hilb^n``.

    Returns ``None`` when the rank is not one or ``n`` would be negative.
    """
    if v.is_zero():
        return None
    w = _leading_sign(v) * v
    if w.r != 1:
        return None
    a0 = twist(w, -w.d, s).a
    n = s.epsilon - a0
    return n if n >= 0 else None
