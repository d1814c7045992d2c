"""Command-line front end.

Vectors are written ``r,d,a``.  Exit codes: 0 success, 1 domain error (a
hypothesis failed), 2 usage error.  ``--json`` prints one document with the
keys ``command, inputs, outputs, assumptions`` in that order.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import abelian, catalog, general, lattice, verify
from .errors import MukaiError
from .lattice import Kind, MukaiVector, Surface

_NEG_VECTOR = re.compile(r"^-\d+\s*,")


def vector_arg(token: str) -> MukaiVector:
    try:
        return MukaiVector.parse(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid vector {token.strip()!r}: expected r,d,a") from None


class UsageError(Exception):
    pass


# -- handlers ---------------------------------------------------------------
# Each returns (inputs, outputs, assumptions, text lines).


def _surface(args, default_kind=Kind.K3) -> Surface:
    kind = Kind(args.kind) if args.kind else default_kind
    if args.lsq is not None:
        return Surface(kind, args.lsq)
    if args.r0 is not None and args.k is not None:
        return Surface(kind, 2 * args.r0 * args.k)
    raise UsageError("--lsq is required (or give --r0 and --k)")


def _setup(args, default_kind=Kind.K3) -> general.FmSetup:
    if args.r0 is None or args.d0 is None or args.k is None:
        raise UsageError("--r0, --d0 and --k are required for this command")
    kind = Kind(args.kind) if args.kind else default_kind
    setup = general.make_setup(args.r0, args.d0, args.k, d1=args.d1, kind=kind)
    if args.lsq is not None and args.lsq != setup.l_sq:
        raise general.InvalidSetup(f"--lsq {args.lsq} disagrees with 2*r0*k = {setup.l_sq}")
    return setup


def _setup_inputs(setup):
    return {"kind": setup.source.kind.value, "r0": setup.r0, "d0": setup.d0, "k": setup.k,
            "d1": setup.d1, "l": setup.l, "l_sq": setup.l_sq}


def _surface_inputs(s):
    return {"kind": s.kind.value, "l_sq": s.l_sq}


def cmd_pair(args):
    s = _surface(args)
    n = lattice.pairing(args.v, args.w, s)
    return {**_surface_inputs(s), "v": str(args.v), "w": str(args.w)}, {"pairing": n}, [], [str(n)]


def cmd_square(args):
    s = _surface(args)
    n = lattice.v_squared(args.v, s)
    return {**_surface_inputs(s), "v": str(args.v)}, {"v_squared": n}, [], [str(n)]


def cmd_dual(args):
    w = lattice.dual(args.v)
    return {"v": str(args.v)}, {"dual": str(w)}, [], [str(w)]


def cmd_twist(args):
    s = _surface(args)
    w = lattice.twist(args.v, args.m, s)
    return {**_surface_inputs(s), "v": str(args.v), "m": args.m}, {"twist": str(w)}, [], [str(w)]


def cmd_chern(args):
    s = _surface(args)
    if len(args.values) == 1:
        v = vector_arg(args.values[0])
        rank, c1, c2 = lattice.to_chern(v, s)
        out = {"rank": rank, "c1": c1, "c2": c2}
        return {**_surface_inputs(s), "v": str(v)}, out, [], [f"rank={rank} c1={c1} c2={c2}"]
    if len(args.values) != 3:
        raise UsageError("chern expects either RANK C1 C2 or a single vector r,d,a")
    try:
        rank, c1, c2 = (int(x) for x in args.values)
    except ValueError:
        raise UsageError(f"chern: non-integer argument in {args.values}") from None
    v = lattice.from_chern(rank, c1, c2, s)
    inputs = {**_surface_inputs(s), "rank": rank, "c1": c1, "c2": c2}
    return inputs, {"mukai_vector": str(v)}, [], [str(v)]


def cmd_deg(args):
    deg = lattice.deg_rel(args.v, args.g)
    rk = lattice.rk_rel(args.v, args.g)
    mu = str(lattice.mu_rel(args.v, args.g)) if rk else None
    out = {"deg_rel": deg, "rk_rel": rk, "mu_rel": mu}
    return {"v": str(args.v), "g": str(args.g)}, out, [], [f"deg={deg} rk={rk} mu={mu or 'undefined'}"]


def cmd_fm2(args):
    kind = Kind(args.kind) if args.kind else Kind.ABELIAN
    s = Surface(kind, args.lsq) if args.lsq is not None else None
    if s is None and kind is not Kind.ABELIAN:
        raise abelian.UnsupportedKind(f"the Poincare transform needs an abelian surface, got {kind.value}")
    fn = abelian.g_transform_H if args.dual else abelian.fm_abelian_H
    w = fn(args.v, s)
    name = "G_H" if args.dual else "F_H"
    return {"v": str(args.v), "transform": name}, {"image": str(w)}, [], [str(w)]


def cmd_classify2(args):
    s = _surface(args, Kind.ABELIAN)
    verdict = abelian.classify_section2(args.v, s)
    bounds = abelian.proof_bounds(args.v, s)
    image = None if verdict.image is None else str(verdict.image)
    out = {
        "case": verdict.case.value,
        "image": image,
        "hypotheses": {c.name: c.passed for c in verdict.hypotheses},
        "ext_bound": bounds.ext_bound,
        "sections_bound": bounds.sections_bound,
    }
    text = [f"case={verdict.case.value} image={image or 'none'}"]
    return {**_surface_inputs(s), "v": str(args.v)}, out, list(verdict.assumptions), text


def cmd_setup(args):
    setup = _setup(args)
    g1, g2 = general.g_vectors(setup)
    m = general.fm_matrix(setup)
    out = {
        "d1": setup.d1,
        "l": setup.l,
        "l_sq": setup.l_sq,
        "v0": str(setup.v0),
        "v0_dual": str(setup.v0_dual),
        "g1": str(g1),
        "g2": str(g2),
        "columns": [",".join(map(str, c)) for c in m.columns()],
        "det": m.det(),
    }
    text = [
        f"d1={setup.d1} l={setup.l} l_sq={setup.l_sq} v0={setup.v0}",
        "columns=" + " ".join(out["columns"]) + f" det={out['det']}",
    ]
    return _setup_inputs(setup), out, [general.LOCALLY_FREE_FAMILY], text


def cmd_fm(args):
    setup = _setup(args)
    w = general.fm_apply(setup, args.v)
    return {**_setup_inputs(setup), "v": str(args.v)}, {"image": str(w)}, [], [str(w)]


def cmd_inverse(args):
    setup = _setup(args)
    v = general.fm_inverse_apply(setup, args.v)
    return {**_setup_inputs(setup), "w": str(args.v)}, {"preimage": str(v)}, [], [str(v)]


def _verdict_output(verdict):
    target = verdict.canonical_image
    return verdict.as_dict(), [f"case={verdict.case.value} target={target if target is not None else 'none'}"]


def cmd_theorem(args):
    setup = _setup(args)
    verdict = general.theorem_map(setup, args.v)
    out, text = _verdict_output(verdict)
    return {**_setup_inputs(setup), "v": str(args.v)}, out, list(verdict.assumptions), text


def cmd_appendix(args):
    setup = _setup(args)
    verdict = general.classify_appendix(setup, args.v)
    out, text = _verdict_output(verdict)
    return {**_setup_inputs(setup), "v": str(args.v)}, out, list(verdict.assumptions), text


def cmd_reflect(args):
    s = _surface(args)
    w = general.reflection(args.v, args.u, s)
    canon, m, sign = lattice.canonical_form(w, s) if not w.is_zero() else (w, 0, 1)
    out = {"reflection": str(w), "canonical": str(canon), "twist": m, "sign": sign}
    return {**_surface_inputs(s), "v": str(args.v), "u": str(args.u)}, out, [], [f"{w} canonical={canon}"]


def cmd_canonical(args):
    s = _surface(args)
    canon, m, sign = lattice.canonical_form(args.v, s)
    out = {"canonical": str(canon), "twist": m, "sign": sign}
    return {**_surface_inputs(s), "v": str(args.v)}, out, [], [f"{canon} m={m} sign={sign:+d}"]


def cmd_hilb(args):
    s = _surface(args)
    n = lattice.hilbert_index(args.v, s)
    return {**_surface_inputs(s), "v": str(args.v)}, {"hilbert_index": n}, [], ["none" if n is None else str(n)]


def cmd_dim(args):
    s = _surface(args)
    n = lattice.moduli_dim(args.v, s)
    return {**_surface_inputs(s), "v": str(args.v)}, {"moduli_dim": n}, [], [str(n)]


def cmd_example1(args):
    kind = Kind(args.kind) if args.kind else Kind.K3
    ex = catalog.example1_family(args.r0_pos, args.n, args.s, kind=kind)
    out = {
        "setup": _setup_inputs(ex.setup),
        "v": str(ex.v),
        "v0": str(ex.setup.v0),
        "v_sq": ex.v_sq,
        "p": ex.p,
        "case": ex.verdict.case.value,
        "target": str(ex.verdict.canonical_image),
    }
    text = [f"v={ex.v} v0={ex.setup.v0} l_sq={ex.setup.l_sq} v_sq={ex.v_sq} p={ex.p} "
            f"case={ex.verdict.case.value} target={ex.verdict.canonical_image}"]
    return {"r0": args.r0_pos, "n": args.n, "s": args.s}, out, list(ex.verdict.assumptions), text


def cmd_example2(args):
    steps = catalog.example2_k3()
    out = {"steps": [{"operation": s.operation, "input": s.input, "output": s.output} for s in steps]}
    text = [f"{s.operation}: {s.input} -> {s.output}" for s in steps]
    return {}, out, [general.LOCALLY_FREE_FAMILY], text


def cmd_search(args):
    setup = _setup(args)
    verdicts = catalog.search_theorem_applicable(setup, args.bound)
    rows = []
    text = []
    for vd in verdicts:
        sq = lattice.v_squared(vd.v, setup.source)
        rows.append({"v_squared": sq, **vd.as_dict()})
        target = vd.canonical_image if vd.canonical_image is not None else "none"
        text.append(f"v={vd.v} v_sq={sq} p={vd.pairing_with_v0dual} case={vd.case.value} target={target}")
    return {**_setup_inputs(setup), "bound": args.bound}, {"count": len(rows), "verdicts": rows}, [], text


def cmd_setups(args):
    if args.lsq is None:
        raise UsageError("--lsq is required")
    kind = Kind(args.kind) if args.kind else Kind.K3
    setups = catalog.enumerate_setups(args.lsq, args.d0_bound, kind=kind)
    rows = [{"r0": s.r0, "d0": s.d0, "k": s.k, "d1": s.d1, "l": s.l, "v0": str(s.v0)} for s in setups]
    text = [f"r0={s.r0} d0={s.d0} k={s.k} d1={s.d1} l={s.l} v0={s.v0}" for s in setups]
    return {"l_sq": args.lsq, "d0_bound": args.d0_bound}, {"count": len(rows), "setups": rows}, [], text


# -- parser -----------------------------------------------------------------

COMMANDS = {}


def _common(p, suppress):
    dflt = argparse.SUPPRESS if suppress else None
    p.add_argument("--kind", choices=[k.value for k in Kind], default=dflt, help="surface kind")
    p.add_argument("--lsq", type=int, default=dflt, metavar="N", help="(L^2), positive and even")
    p.add_argument("--r0", type=int, default=dflt)
    p.add_argument("--d0", type=int, default=dflt)
    p.add_argument("--k", type=int, default=dflt)
    p.add_argument("--d1", type=int, default=dflt, help="override the normalization of d1 (validated)")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mukai-fm", description=__doc__.splitlines()[0])
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        COMMANDS[name] = fn
        return p

    p = add("pair", cmd_pair, "Mukai pairing <v, w>")
    p.add_argument("v", type=vector_arg)
    p.add_argument("w", type=vector_arg)
    add("square", cmd_square, "<v^2>").add_argument("v", type=vector_arg)
    add("dual", cmd_dual, "(r,d,a) -> (r,-d,a)").add_argument("v", type=vector_arg)
    p = add("twist", cmd_twist, "tensor with L^m")
    p.add_argument("v", type=vector_arg)
    p.add_argument("m", type=int)
    p = add("chern", cmd_chern, "RANK C1 C2 -> Mukai vector, or r,d,a -> Chern data")
    p.add_argument("values", nargs="+")
    p = add("deg", cmd_deg, "relative degree, rank and slope of v against g")
    p.add_argument("v", type=vector_arg)
    p.add_argument("g", type=vector_arg)
    p = add("fm2", cmd_fm2, "Poincare transform on an abelian surface")
    p.add_argument("v", type=vector_arg)
    p.add_argument("--dual", action="store_true", help="compose with the derived dual (G)")
    add("classify2", cmd_classify2, "WIT/IT classifier for v = r + c1(L) + a omega").add_argument("v", type=vector_arg)
    add("setup", cmd_setup, "validate (r0, d0, k) and show the transform matrix")
    add("fm", cmd_fm, "apply the transform").add_argument("v", type=vector_arg)
    add("inverse", cmd_inverse, "apply the inverse transform").add_argument("v", type=vector_arg)
    add("theorem", cmd_theorem, "which isomorphism of moduli spaces applies").add_argument("v", type=vector_arg)
    add("appendix", cmd_appendix, "degree-zero classifier").add_argument("v", type=vector_arg)
    p = add("reflect", cmd_reflect, "reflection of v in a (-2)-class u")
    p.add_argument("v", type=vector_arg)
    p.add_argument("u", type=vector_arg)
    add("canonical", cmd_canonical, "representative up to twist and sign").add_argument("v", type=vector_arg)
    add("hilb", cmd_hilb, "n with v ~ v(Hilb^n), if any").add_argument("v", type=vector_arg)
    add("dim", cmd_dim, "dimension <v^2> + 2 of the moduli space").add_argument("v", type=vector_arg)
    p = add("example1", cmd_example1, "rank-one family with <v^2> = 2s, <v, v0^dual> = n")
    p.add_argument("r0_pos", type=int, metavar="r0")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    add("example2", cmd_example2, "replay the K3 example with (L^2) = 12")
    p = add("search", cmd_search, "enumerate vectors satisfying the degree hypothesis")
    p.add_argument("--bound", type=int, default=3)
    p = add("setups", cmd_setups, "enumerate valid (r0, d0, k) for --lsq")
    p.add_argument("--d0-bound", type=int, default=1)
    p = add("verify-paper", None, "replay every worked example and report pass/fail")
    return parser


def _shield_negative_vectors(argv):
    # argparse would read "-1,2,3" as an option
    return [" " + a if _NEG_VECTOR.match(a) else a for a in argv]


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_shield_negative_vectors(argv))

    if args.command == "verify-paper":
        return verify.verify_paper()

    try:
        inputs, outputs, assumptions, text = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except MukaiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.json:
        doc = {"command": args.command, "inputs": inputs, "outputs": outputs, "assumptions": assumptions}
        print(json.dumps(doc, ensure_ascii=False))
    else:
        for line in text:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
