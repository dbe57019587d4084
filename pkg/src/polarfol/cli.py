"""Command-line interface: ``polarfol local|reduce|poincare``.

Exit codes: 0 success, 2 parse error, 3 dicritical, 4 truncation
insufficient, 5 extension tower, 6 incomplete singular locus, 7 genericity
failure, 8 blow-up cap, 9 no transversal line, 10 other errors.
"""
from __future__ import annotations

import argparse
import random
import sys
import time

from . import __version__
from .curves import DEFAULT_TRUNC
from .errors import Dicritical, ParseError, PolarfolError
from .exactalg import Poly
from .foliation import alg_multiplicity, milnor_along, milnor_number, polar_intersection_branch, saturate
from .gsv import excess_from_reduction
from .parsing import parse_input
from .projective import ProjCurve, from_affine, from_homogeneous, homogenize, poincare_audit
from .reduction import DEFAULT_BLOWUP_CAP, reduce, separatrices
from .report import emit

__all__ = ["main", "build_parser", "local_report", "reduce_report", "poincare_report"]


def _foliation_from_text(text: str):
    r = parse_input(text)
    if r.kind != "form":
        raise ParseError("expected a 1-form such as 'y dx - x dy' or 'd(y^2 - x^3)'", 0)
    return saturate(*r.value)


def local_report(text: str, seed: int = 0, trunc: int = DEFAULT_TRUNC,
                 cap: int = DEFAULT_BLOWUP_CAP):
    """Invariants of the germ at the origin.

    Returns
    -------
    (report, exit_code)
        ``exit_code`` is 3 for a dicritical germ, whose report is partial.
    """
    t0 = time.perf_counter()
    rng = random.Random(seed)
    F = _foliation_from_text(text)
    rep = {"command": "local", "input": text, "foliation": F.fmt(), "field": F.field.to_json(),
           "seed": seed, "trunc": trunc, "blowup_cap": cap}
    if not F.is_singular():
        rep.update(singular=False, nu=0, mu=0, dicritical=False)
        rep["timing_seconds"] = round(time.perf_counter() - t0, 3)
        return rep, 0
    rep["singular"] = True
    rep["nu"] = alg_multiplicity(F)
    rep["mu"] = milnor_number(F, rng)
    tree = reduce(F, cap)
    rep["blowups"] = tree.blowup_count
    rep["dicritical"] = tree.dicritical
    if tree.dicritical:
        rep["tree"] = tree.to_json()
        rep["timing_seconds"] = round(time.perf_counter() - t0, 3)
        return rep, Dicritical.exit_code
    seps = separatrices(tree, trunc)
    exc = excess_from_reduction(F, tree, trunc)
    out = []
    total = 0
    for s in seps:
        b = s.branch
        mu_b = milnor_along(F, b, check=False)
        total += s.weight * mu_b
        d = s.to_json()
        d.update(exact=b.is_exact(), multiplicity=b.multiplicity(), milnor_along=mu_b,
                 polar=polar_intersection_branch(F, b))
        out.append(d)
    delta_F = sum(s.weight for s in seps)
    rep.update(
        separatrices=out, delta_F=delta_F, p0_SF=exc.p0_F, mu_SF=exc.mu_C, nu_SF=exc.nu_C,
        polar_excess=exc.delta, second_type=exc.second_type,
        generalized_curve=exc.generalized_curve)
    if exc.second_type:
        if rep["mu"] != 1 - delta_F + total:
            raise ArithmeticError("delta formula fails for a second type germ")
        if exc.p0_F != rep["mu"] + rep["nu"]:
            raise ArithmeticError("p0(F, S_F) differs from mu + nu for a second type germ")
    rep["timing_seconds"] = round(time.perf_counter() - t0, 3)
    return rep, 0


def reduce_report(text: str, cap: int = DEFAULT_BLOWUP_CAP):
    F = _foliation_from_text(text)
    tree = reduce(F, cap)
    return tree, {"command": "reduce", "input": text, "tree": tree.to_json()}


def _read(path_or_text: str) -> str:
    try:
        with open(path_or_text, encoding="utf-8") as fh:
            raw = fh.read()
    except (FileNotFoundError, OSError):
        raw = path_or_text
    lines = [ln.split("#", 1)[0] for ln in raw.splitlines()]
    return " ".join(ln.strip() for ln in lines if ln.strip())


def _proj_foliation(text: str):
    r = parse_input(text)
    if r.kind == "triple":
        return from_homogeneous(*r.value)
    if r.kind == "form":
        return from_affine(r.value)
    raise ParseError("expected three homogeneous polynomials or an affine 1-form", 0)


def _proj_curve(text: str) -> ProjCurve:
    r = parse_input(text)
    if r.kind != "poly":
        raise ParseError("expected a single polynomial", 0)
    p = r.value
    if p.nvars == 2:
        p = homogenize(p)
    return ProjCurve(p)


def poincare_report(fol: str, curve: str, seed: int = 0, strict: bool = False):
    F = _proj_foliation(_read(fol))
    S = _proj_curve(_read(curve))
    ledger = poincare_audit(F, S, seed=seed, strict=strict,
                            dicritical="raise" if strict else "record")
    rep = {"command": "poincare", "foliation": F.fmt(), "curve": S.fmt(), "seed": seed,
           "strict": strict}
    rep.update(ledger.to_json())
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polarfol", description="Polar invariants of plane foliations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--json", action="store_true", help="print the JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    lp = sub.add_parser("local", parents=[common], help="invariants of a germ at the origin")
    lp.add_argument("form", help="1-form, e.g. 'y dx - x^3 dy' or 'd(y^2 - x^3)'")
    lp.add_argument("--trunc", type=int, default=DEFAULT_TRUNC, help="jet order of separatrices")
    lp.add_argument("--blowup-cap", type=int, default=DEFAULT_BLOWUP_CAP)

    rp = sub.add_parser("reduce", parents=[common], help="reduction tree as DOT")
    rp.add_argument("form")
    rp.add_argument("--dot", metavar="FILE", help="write the DOT graph to FILE")
    rp.add_argument("--blowup-cap", type=int, default=DEFAULT_BLOWUP_CAP)

    pp = sub.add_parser("poincare", parents=[common], help="Poincare-bound audit on the plane")
    pp.add_argument("foliation", help="file (or text) with 'A0, A1, A2' or an affine 1-form")
    pp.add_argument("curve", help="file (or text) with a homogeneous or affine polynomial")
    pp.add_argument("--strict", action="store_true",
                    help="fail on dicritical or unresolved singular points")
    return p


def _text_local(rep) -> str:
    keys = ["foliation", "nu", "mu", "dicritical", "delta_F", "p0_SF", "mu_SF", "nu_SF",
            "polar_excess", "second_type", "generalized_curve"]
    lines = [f"{k}: {rep[k]}" for k in keys if k in rep]
    for s in rep.get("separatrices", []):
        kind = "strong" if s["strong"] else "weak"
        lines.append(f"separatrix ({s['x']}, {s['y']}) {s['tag']} {kind}")
    return "\n".join(lines) + "\n"


def _text_poincare(rep) -> str:
    lines = [f"curve degree {rep['degree_S']}, foliation degree {rep['degree_F']}",
             f"slack {rep['bound_slack']}, weighted sum {rep['weighted_sum']}",
             f"eq10 {rep['eq10_holds']}, eq11 {rep['eq11_holds']}, complete {rep['complete']}"]
    for pt in rep["points"]:
        lines.append(f"point ({' : '.join(pt['point'])}) orbit {pt['orbit_size']} "
                     f"difference {pt['difference']} delta {pt['delta']}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "local":
            rep, code = local_report(args.form, args.seed, args.trunc, args.blowup_cap)
            out.write(emit(rep) if args.json else _text_local(rep))
            return code
        if args.command == "reduce":
            tree, rep = reduce_report(args.form, args.blowup_cap)
            dot = tree.to_dot()
            if args.dot:
                with open(args.dot, "w", encoding="utf-8") as fh:
                    fh.write(dot)
            if args.json:
                out.write(emit(rep))
            elif not args.dot:
                out.write(dot)
            return 0
        rep = poincare_report(args.foliation, args.curve, args.seed, args.strict)
        out.write(emit(rep) if args.json else _text_poincare(rep))
        return 0
    except PolarfolError as exc:
        partial = getattr(exc, "partial", None) or getattr(exc, "tree", None)
        if args.json and partial is not None:
            out.write(emit({"command": args.command, "error": type(exc).__name__,
                            "message": str(exc), "tree": partial.to_json()}))
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
