"""``krzyz`` command-line interface.

Exit status: 0 on success, 1 when a verdict fails (bound violated, stage
mismatch, extremal not sharp), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction

from . import bounds, caratheodory, majorant, schur
from .errors import KrzyzError
from .report import Report, emit
from .scalar import EXACT, FLOAT, parse_rational

FORMATS = ("json", "csv", "table")
PHIS = ("0", "pi", "pi/2", "-pi/2")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        if any(ch in text for ch in ".eE"):
            raise argparse.ArgumentTypeError(
                f"{text!r}: decimals are not accepted; write t as p/q (e.g. 1/2) so the run stays exact")
        raise argparse.ArgumentTypeError(f"{text!r}: expected p/q or an integer")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="krzyz", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, t=True, n=False):
        if t:
            sp.add_argument("--t", type=_rational, required=True, help="parameter t > 0 as p/q")
        if n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--format", choices=FORMATS, default="json")

    sp = sub.add_parser("coeffs", help="Taylor coefficients of F*(z,t) or of its normalization")
    common(sp, n=True)
    sp.add_argument("--normalized", action="store_true")

    common(sub.add_parser("minors", help="Toeplitz minors of the degree-n segment"), n=True)
    common(sub.add_parser("classify", help="extendability verdict for the degree-n segment"), n=True)

    sp = sub.add_parser("bound-check", help="seeded verification of the sharp bound")
    common(sp)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--degree", type=int, default=4,
                    help="largest number of Blaschke zeros; samples cycle through 0..degree")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)

    sp = sub.add_parser("extremal", help="equality check for F*(e^{i phi} z^n, t)")
    common(sp, n=True)
    sp.add_argument("--phi", choices=PHIS, default="0")

    sp = sub.add_parser("probe", help="conjectural values past the proved range")
    common(sp)
    sp.add_argument("--omega-seed", type=int, required=True)
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--from", dest="n_from", type=int, required=True)
    sp.add_argument("--to", dest="n_to", type=int, required=True)

    common(sub.add_parser("example-krzyz7", help="reproduce the t = 1/2 worked example"), t=False)
    return p


def _coeffs(a) -> tuple[dict, bool]:
    if a.n < 1:
        raise UsageError("--n must be >= 1")
    if a.normalized:
        F = majorant.normalized_coeffs(a.t, a.n)
        values = list(F.coeffs[1:])
        rows = [{"n": k, "coefficient": v} for k, v in enumerate(values, start=1)]
        return {"normalized": True, "coefficients": values,
                "columns": ["n", "coefficient"], "rows": rows}, True
    M = majorant.fstar_coeffs(a.t, a.n)
    floats = M.float_coeffs()
    rows = [{"n": k, "rational_part": c, "value": floats[k].real}
            for k, c in enumerate(M.rational_part)]
    return {"normalized": False, "prefactor": M.prefactor, "coefficients": list(M.rational_part),
            "columns": ["n", "rational_part", "value"], "rows": rows}, True


def _minors(a) -> tuple[dict, bool]:
    rep = caratheodory.segment_minors(a.t, a.n)
    return {"minors": list(rep.minors), "classification": rep.classification.kind,
            "index": rep.classification.index, "first_zero": rep.first_zero,
            "columns": ["k", "minor"],
            "rows": [{"k": k, "minor": m} for k, m in enumerate(rep.minors)]}, True


def _classify(a) -> tuple[dict, bool]:
    v = caratheodory.theorem1_check(a.t, a.n)
    h = majorant.bound_horizon(a.t)
    return {"extendable": v.extendable, "unique": v.unique, "N": h.N, "boundary": h.boundary}, True


def _bound_check(a) -> tuple[dict, bool]:
    if a.samples < 0 or a.degree < 0:
        raise UsageError("--samples and --degree must be >= 0")
    results = bounds.bound_sweep(a.t, a.samples, a.degree, a.seed, a.mode)
    horizon = majorant.bound_horizon(a.t)
    rows = []
    for res in results:
        d = res.omega_descriptor
        for r in res.rows:
            rows.append({"seed": d["seed"], "degree": d["degree"], "n": r.n,
                         "normalized_sq_modulus": r.normalized_sq_modulus,
                         "margin": r.margin, "pass": r.passed})
    failures = sum(not r["pass"] for r in rows)
    payload = {"N": horizon.N, "bound": horizon.bound, "samples": a.samples,
               "failures": failures,
               "min_margin": min((r["margin"] for r in rows), default=None),
               "columns": ["seed", "degree", "n", "normalized_sq_modulus", "margin", "pass"],
               "rows": rows}
    return payload, failures == 0


def _extremal(a) -> tuple[dict, bool]:
    res = bounds.extremal_equality(a.t, a.n, a.phi)
    rows = [{"n": r.n, "normalized_sq_modulus": r.normalized_sq_modulus, "margin": r.margin,
             "pass": r.passed} for r in res.rows]
    return {"N": res.horizon.N, "bound": res.horizon.bound, "sharp": res.sharp,
            "columns": ["n", "normalized_sq_modulus", "margin", "pass"], "rows": rows}, res.passed


def _probe(a) -> tuple[dict, bool]:
    B = schur.sample_omega(a.omega_seed, a.degree)
    omega = schur.blaschke_series(B, a.n_to)
    rep = bounds.probe_beyond(a.t, omega, a.n_from, a.n_to,
                              {"seed": a.omega_seed, "degree": a.degree})
    rows = [{"n": r.n, "normalized_sq_modulus": r.normalized_sq_modulus,
             "conjectural_sq_bound": r.conjectural_sq_bound,
             "below_conjectural": r.below_conjectural} for r in rep.rows]
    return {"label": rep.label,
            "note": "values beyond N(t) compared with the conjectured constant 2/e; not a proof",
            "N": rep.horizon.N, "omega": {"zero_order": B.zero_order, "zeros": list(B.zeros),
                                          "unimodular": B.unimodular},
            "columns": ["n", "normalized_sq_modulus", "conjectural_sq_bound", "below_conjectural"],
            "rows": rows}, True


def _example(a) -> tuple[dict, bool]:
    rep = bounds.reproduce_worked_example()
    stages = [{"stage": s.key, "name": s.name, "passed": s.passed, "expected": s.expected,
               "actual": s.actual, "residual": s.residual} for s in rep.stages]
    return {"t": rep.t, "passed": rep.passed, "failed_stage": rep.failed_stage,
            "stages": stages}, rep.passed


HANDLERS = {
    "coeffs": _coeffs,
    "minors": _minors,
    "classify": _classify,
    "bound-check": _bound_check,
    "extremal": _extremal,
    "probe": _probe,
    "example-krzyz7": _example,
}


def _attach_negative_phi(argv: list[str]) -> list[str]:
    # "--phi -pi/2" would otherwise be read as an unknown option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--phi" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--phi={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    argv = _attach_negative_phi(list(sys.argv[1:] if argv is None else argv))
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    inputs = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
    try:
        payload, ok = HANDLERS[args.command](args)
        report = Report(args.command, inputs, payload, getattr(args, "mode", EXACT))
        data = emit(report, args.format)
    except (KrzyzError, UsageError, ValueError) as exc:
        print(f"krzyz {args.command}: error: {exc}", file=stderr)
        return 2
    out = getattr(stdout, "buffer", None)
    if out is not None:
        out.write(data)
        out.flush()
    else:
        stdout.write(data.decode("utf-8"))
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
