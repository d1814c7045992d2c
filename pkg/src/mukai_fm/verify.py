"""Regression checks that replay every worked value from the source material.

Each check is a thunk plus the expected value as a string; a run compares the
string form of the computed value with it.  The table is plain data so tests
can corrupt an entry and watch the suite fail.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable

from .abelian import classify_section2
from .catalog import example1_family, example2_k3
from .general import (
    fm_apply,
    fm_matrix,
    lemma_deg_identity,
    make_setup,
    reflection,
    theorem_map,
)
from .lattice import (
    OMEGA,
    Kind,
    MukaiVector,
    Surface,
    canonical_form,
    hilbert_index,
    moduli_dim,
    v_squared,
)


@dataclass(frozen=True)
class PaperCheck:
    name: str
    compute: Callable[[], object]
    expected: str


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    actual: str
    passed: bool

    def line(self) -> str:
        if self.passed:
            return f"PASS  {self.name}"
        return f"FAIL  {self.name}: expected {self.expected}, got {self.actual}"


def _v(text: str) -> MukaiVector:
    return MukaiVector.parse(text)


def _example2_checks() -> list[PaperCheck]:
    k3 = Surface(Kind.K3, 12)
    setup = make_setup(2, -1, 3, kind=Kind.K3)
    alt = setup.with_d1(-1)
    v = _v("1,1,3")

    def after_reflection():
        image = theorem_map(setup, v).canonical_image
        return canonical_form(reflection(image, _v("1,0,1"), k3), k3)[0]

    trace = {(s.operation, s.input): s.output for s in example2_k3()}
    return [
        PaperCheck("<v0^2> = 0 for v0 = 2,-1,3 (k3,12)", lambda: v_squared(_v("2,-1,3"), k3), "0"),
        PaperCheck("K3 (L^2)=12 setup: d1, l, (L^2)", lambda: (setup.d1, setup.l, setup.l_sq), "(1, -2, 12)"),
        PaperCheck("K3 (L^2)=12: theorem case for 1,1,3", lambda: theorem_map(setup, v).case.value, "FM"),
        PaperCheck("K3 (L^2)=12: M_L(1,1,3) -> M(3,-1,1)", lambda: theorem_map(setup, v).canonical_image, "3,-1,1"),
        PaperCheck("K3 (L^2)=12: -F(1,1,3) with d1=-1, l=1", lambda: -fm_apply(alt, v), "3,-1,1"),
        PaperCheck("K3 (L^2)=12: R_v(O_Y)(3,-1,1)", lambda: reflection(_v("3,-1,1"), _v("1,0,1"), k3), "-1,-1,-3"),
        PaperCheck("K3 (L^2)=12: reflection then canonical form", after_reflection, "1,1,3"),
        PaperCheck("hilb(1,1,3 | k3,12) = 4", lambda: hilbert_index(v, k3), "4"),
        PaperCheck("K3 (L^2)=12: hilb of reflected target = 4", lambda: hilbert_index(after_reflection(), k3), "4"),
        PaperCheck("K3 (L^2)=12: dim M(1,1,3) = 8", lambda: moduli_dim(v, k3), "8"),
        PaperCheck("K3 (L^2)=12: dim M(3,-1,1) = 8", lambda: moduli_dim(_v("3,-1,1"), k3), "8"),
        PaperCheck("K3 trace: theorem_map", lambda: trace[("theorem_map", "1,1,3")], "3,-1,1"),
        PaperCheck("K3 trace: reflection+canonical", lambda: trace[("reflection+canonical", "-1,-1,-3")], "1,1,3"),
    ]


def _lemma_checks() -> list[PaperCheck]:
    setup = make_setup(2, -1, 3, kind=Kind.K3)
    checks = [
        PaperCheck("F(v0_dual) = 0,0,1", lambda: fm_apply(setup, setup.v0_dual), "0,0,1"),
        PaperCheck("F(omega) = r0,d1,d1^2k", lambda: fm_apply(setup, OMEGA), "2,1,3"),
        PaperCheck("F(1) = d0^2k,d0 l,l^2 r0", lambda: fm_apply(setup, _v("1,0,0")), "3,2,8"),
        PaperCheck("F(c1(L)) column", lambda: fm_apply(setup, _v("0,1,0")), "-12,-7,-24"),
        PaperCheck("det F = 1 (r0=2,d0=-1,k=3)", lambda: fm_matrix(setup).det(), "1"),
    ]
    samples = [
        ((2, -1, 3), "1,1,3", "(1, 1, 1)"),
        ((2, -1, 3), "2,-1,3", "(-4, -4, -4)"),
        ((3, -2, 1), "1,1,2", "(1, 1, 1)"),
        ((2, -1, 1), "1,1,1", "(1, 1, 1)"),
        ((5, 2, 3), "7,-4,11", f"({-4 * 5 + 7 * 2}, {-4 * 5 + 7 * 2}, {-4 * 5 + 7 * 2})"),
    ]
    for (r0, d0, k), text, want in samples:
        st = make_setup(r0, d0, k)
        checks.append(PaperCheck(
            f"deg_G1 = -deg_G2(F) (r0={r0},d0={d0},k={k}; v={text})",
            lambda st=st, text=text: tuple(lemma_deg_identity(st, _v(text))),
            want,
        ))
    for k in range(1, 21):
        st = make_setup(1, 0, k)
        checks.append(PaperCheck(
            f"setup(1,0,{k}) degenerates to (r,d,a) -> (a,-d,r)",
            lambda st=st: fm_matrix(st).columns(),
            "[(0, 0, 1), (0, -1, 0), (1, 0, 0)]",
        ))
    return checks


def _section2_checks() -> list[PaperCheck]:
    ab = Surface(Kind.ABELIAN, 4)
    out = []
    for text, case, image in (("1,1,2", "IT0_F", "2,-1,1"), ("1,1,1", "WIT2_G", "1,1,1"), ("3,1,-1", "WIT1_F", "1,1,-3")):
        out.append(PaperCheck(
            f"classify2({text} | abelian,4)",
            lambda text=text: (lambda vd: f"{vd.case.value} {vd.image}")(classify_section2(_v(text), ab)),
            f"{case} {image}",
        ))
    return out


def _example1_checks() -> list[PaperCheck]:
    out = []
    for r0 in range(2, 7):
        for s in range(1, 6):
            for n in range(1, s * r0):
                if math.gcd(r0, n) != 1:
                    continue

                def run(r0=r0, n=n, s=s):
                    ex = example1_family(r0, n, s)
                    return f"v_sq={ex.v_sq} p={ex.p} case={ex.verdict.case.value}"

                out.append(PaperCheck(f"rank-one family (r0={r0}, n={n}, s={s})", run, f"v_sq={2 * s} p={n} case=FM"))
    return out


def paper_checks() -> list[PaperCheck]:
    return _example2_checks() + _lemma_checks() + _section2_checks() + _example1_checks()


def run_checks(checks) -> list[CheckResult]:
    results = []
    for check in checks:
        try:
            actual = str(check.compute())
        except Exception as exc:  # a crashing check is a failing check
            actual = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(check.name, check.expected, actual, actual == check.expected))
    return results


def verify_paper(checks=None, out=None) -> int:
    """Run the checks, print one line per check, return the exit code."""
    out = out or sys.stdout
    results = run_checks(paper_checks() if checks is None else checks)
    for res in results:
        print(res.line(), file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return 0 if failed == 0 else 1
