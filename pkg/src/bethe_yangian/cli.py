"""Command-line front end: ``bethe-yangian run <check> [options]``.

Each invocation runs one check and writes one JSON (or text) report.  Reports
are byte-identical for identical arguments unless ``--timing`` is given.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import acceptance, bethe, classical, ncpoly, wonderful, yangian
from .bethe import THREADS_ENV
from .yangian import CalibrationError, YangianContext

CHECKS = ("nf", "minor", "tau", "commute", "poincare", "thm65", "poisson", "jacobian", "abc",
          "gt-centralizer", "wonderful-limit", "bethelevi", "rtt", "acceptance")

CORRECTED_FORMS = {"B": ("AX", 1), "C": ("XA", 1)}


class ConfigError(ValueError):
    pass


def _rationals(text: str) -> list:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot read rationals from {text!r}") from exc


def _parameter(text: str | None, n: int, rng: random.Random):
    """``"1,2,3"`` (diagonal) or ``"a,b;c,d"`` (matrix rows); a seeded random regular
    diagonal when absent."""
    if text is None:
        return acceptance.random_regular_diagonal(rng, n)
    if ";" in text:
        rows = [_rationals(r) for r in text.split(";")]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ConfigError(f"matrix parameter must be {n} x {n}")
        return rows
    vals = _rationals(text)
    if len(vals) != n:
        raise ConfigError(f"diagonal parameter needs {n} entries, got {len(vals)}")
    return vals


def _indices(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"cannot read indices from {text!r}") from exc


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _param_str(C):
    if C and isinstance(C[0], list):
        return [[str(x) for x in r] for r in C]
    return [str(x) for x in C]


def constants(n: int) -> dict:
    out = {"epsilon": ncpoly.EPSILON,
           "kappa": [str(yangian.fusion_constant(n, k)) for k in range(1, n + 1)]}
    if n >= 2:
        ctx = YangianContext(n, 3)
        out["abc_shifts"] = [str(s) for s in yangian.calibrate_abc(ctx, CORRECTED_FORMS)]
        out["abc_forms"] = {k: list(v) for k, v in CORRECTED_FORMS.items()}
    else:
        out["abc_shifts"] = []
    return out


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def check_nf(a, rng):
    p = ncpoly.parse(a.expr)
    if p.max_index() > a.n:
        raise ConfigError(f"expression uses indices beyond n={a.n}")
    nf = ncpoly.normal_form(p)
    deg = nf.degree()
    return True, [{"input": a.expr, "normal_form": str(nf),
                   "degree": None if deg == ncpoly.NEG_INF else int(deg)}]


def check_minor(a, rng):
    ctx = YangianContext(a.n, a.trunc)
    s = yangian.quantum_minor(ctx, _indices(a.rows), _indices(a.cols))
    return True, [{"rows": a.rows, "cols": a.cols,
                   "coefficients": [str(c) for c in s.coeffs], "series": str(s)}]


def check_tau(a, rng):
    ctx = YangianContext(a.n, a.trunc)
    C = _parameter(a.c, a.n, rng)
    out, ok = [], True
    for k in range(1, a.n + 1):
        fused = yangian.fused_tau(ctx, k, C)
        if bethe.is_diagonal(C):
            minor = yangian.minor_tau(ctx, k, bethe.diagonal_of(C))
        else:
            minor = yangian.general_minor_tau(ctx, k, C)
        kappa = yangian.proportionality(fused, minor) if not minor.is_zero() else None
        ok &= (minor.is_zero() and fused.is_zero()) or kappa == yangian.fusion_constant(a.n, k)
        out.append({"k": k, "minor_form": [str(c) for c in minor.coeffs],
                    "fused_over_minor": None if kappa is None else str(kappa)})
    return ok, [{"C": _param_str(C)}] + out


def check_commute(a, rng):
    C = _parameter(a.c, a.n, rng)
    rep = bethe.commute_check(bethe.tau_generators(YangianContext(a.n, a.trunc), C, a.deg))
    return rep["status"] == "pass", [{"C": _param_str(C), **rep}]


def check_poincare(a, rng):
    C = _parameter(a.c, a.n, rng)
    rep = bethe.poincare_dims(YangianContext(a.n, a.trunc), C, a.deg)
    regular = bethe.is_diagonal(C) and bethe.is_regular_diagonal(bethe.diagonal_of(C))
    ident = bethe.poincare_dims(YangianContext(a.n, a.trunc), [1] * a.n, a.deg)
    drop = any(x < y for x, y in zip(ident["graded"], ident["expected"]))
    ok = (rep["graded"] == rep["expected"]) if regular else None
    ok = (ok if ok is not None else True) and (drop or a.n == 1)
    return ok, [{"C": _param_str(C), "regular": regular, **rep},
                {"control": "identity", **ident, "strict_drop": drop}]


def check_block_limit(a, rng):
    C0, C1 = _rationals(a.c0), _rationals(a.c1)
    rep = bethe.verify_block_limit(a.n, a.k, C0, C1, a.deg)
    return rep["status"] == "pass", [rep]


def check_poisson(a, rng):
    C = _parameter(a.c, a.n, rng)
    rep = classical.poisson_commute_check(a.n, C, a.deg)
    fam = bethe.tau_generators(YangianContext(a.n, a.trunc), C, a.deg)
    sig = classical.sigma_generators(a.n, C, a.deg)
    mism = [list(k) for k in sig if classical.symbol(fam.generators[k]) != sig[k]]
    return rep["status"] == "pass" and not mism, [
        {"C": _param_str(C), **rep, "symbol_mismatches": mism}]


def check_jacobian(a, rng):
    C = _parameter(a.c, a.n, rng)
    rep = classical.jacobian_rank(a.n, C, a.deg)
    regular = bethe.is_diagonal(C) and bethe.is_regular_diagonal(bethe.diagonal_of(C))
    expected = a.n * a.deg if regular else None
    ok = not rep["cross_degree_nonzero"] and (rep["total"] == expected if regular
                                               else rep["total"] < a.n * a.deg)
    return ok, [{"C": _param_str(C), "regular": regular, **rep}]


def check_abc(a, rng):
    ctx = YangianContext(a.n, a.trunc)
    forms = yangian.PRINTED_FORMS if a.abc_form == "printed" else CORRECTED_FORMS
    try:
        shifts = yangian.calibrate_abc(ctx, forms)
    except CalibrationError as exc:
        scans = {i: {str(s): list(v) for s, v in yangian.shift_scan(ctx, i, forms).items()}
                 for i in range(1, a.n)}
        return False, [{"forms": forms, "calibration": "failed", "error": str(exc),
                        "scan_[B_holds,C_holds]": scans}]
    rep = yangian.abc_report(ctx, shifts, forms)
    return not rep["failures"], [{"forms": forms, "shifts": [str(s) for s in shifts], **rep}]


def check_centralizer(a, rng):
    gens = [g for g in yangian.gt_generators(YangianContext(a.n, a.deg), a.deg)
            if g.degree() == a.deg]
    cent = bethe.centralizer_span(gens, a.n, a.deg)
    gt = bethe.gt_span(a.n, a.deg)
    return cent == gt, [{"centralizer_dim": cent.dim, "gt_dim": gt.dim, "equal": cent == gt}]


def _curves(a):
    if not a.curve:
        raise ConfigError("--curve is required")
    curves = [wonderful.TorusCurve.parse(c) for c in a.curve]
    if any(c.n != a.n for c in curves):
        raise ConfigError("curve length must equal --n")
    return curves


def check_wonderful_limit(a, rng):
    details, ok = [], True
    for curve in _curves(a):
        point = wonderful.curve_limit(curve)
        label = wonderful.stratum_of(point)
        sym = wonderful.self_adjointness_check(point)
        ok &= sym["status"] == "pass"
        details.append({"curve": {"lambda": [str(x) for x in curve.lam], "a": list(curve.a)},
                        "point": point.render().split("\n"),
                        "canonical": {k: [str(M[i][i]) for i in range(len(M))]
                                      for k, M in point.canonical().items()},
                        "stratum": label.as_dict(), "self_adjoint": sym["status"]})
    return ok, details


def check_bethelevi(a, rng):
    details, ok = [], True
    for curve in _curves(a):
        rep = wonderful.verify_bethelevi(wonderful.curve_limit(curve), a.deg)
        ok &= rep["status"] == "pass"
        details.append({"curve": {"lambda": [str(x) for x in curve.lam], "a": list(curve.a)},
                        **rep})
    return ok, details


def check_rtt(a, rng):
    ok, det = acceptance.rtt_consistency(a.seed)
    return ok, [det]


def check_acceptance(a, rng):
    if a.criterion not in acceptance.CRITERIA:
        raise ConfigError(f"criterion must be one of {sorted(acceptance.CRITERIA)}")
    name, (ok, det) = acceptance.run_criterion(a.criterion, a.seed)
    return ok, [{"criterion": a.criterion, "name": name, "result": det}]


HANDLERS = {
    "nf": check_nf, "minor": check_minor, "tau": check_tau, "commute": check_commute,
    "poincare": check_poincare, "thm65": check_block_limit, "poisson": check_poisson,
    "jacobian": check_jacobian, "abc": check_abc, "gt-centralizer": check_centralizer,
    "wonderful-limit": check_wonderful_limit, "bethelevi": check_bethelevi,
    "rtt": check_rtt, "acceptance": check_acceptance,
}


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bethe-yangian",
                                description="Exact checks on Bethe subalgebras of Y(gl_n).")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run one check and write a report")
    r.add_argument("check", choices=CHECKS)
    r.add_argument("--n", type=int, default=2, help="matrix size")
    r.add_argument("--trunc", type=int, default=None, help="series truncation order N (default: deg)")
    r.add_argument("--deg", type=int, default=2, help="degree bound d")
    r.add_argument("--c", default=None, help="parameter: 'l1,l2,...' or 'a,b;c,d'")
    r.add_argument("--k", type=int, default=1, help="size of the degenerating block (block-limit check)")
    r.add_argument("--c0", default=None)
    r.add_argument("--c1", default=None)
    r.add_argument("--curve", action="append", help="'l1:a1,l2:a2,...' (repeatable)")
    r.add_argument("--expr", default=None, help="element to normal-form (nf)")
    r.add_argument("--rows", default="1,2")
    r.add_argument("--cols", default="1,2")
    r.add_argument("--abc-form", choices=("printed", "corrected"), default="printed")
    r.add_argument("--criterion", type=int, default=1)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--format", choices=("json", "text"), default="json")
    r.add_argument("--output", "-o", default=None, help="report file (default: stdout)")
    r.add_argument("--timing", action="store_true", help="record wall time in the report")
    return p


def _validate(a) -> None:
    if a.trunc is None:
        a.trunc = a.deg
    if a.n < 1:
        raise ConfigError("--n must be >= 1")
    if not (a.trunc >= a.deg >= 1):
        raise ConfigError("need trunc >= deg >= 1")
    if a.check == "nf" and not a.expr:
        raise ConfigError("nf needs --expr")
    if a.check == "thm65" and (a.c0 is None or a.c1 is None):
        raise ConfigError("thm65 needs --c0 and --c1")


def run(a) -> dict:
    """Execute a parsed configuration and return the report dict."""
    _validate(a)
    rng = random.Random(a.seed)
    start = time.perf_counter()
    ok, details = HANDLERS[a.check](a, rng)
    elapsed = (time.perf_counter() - start) * 1000
    params = {key: getattr(a, key) for key in ("n", "trunc", "deg", "c", "k", "c0", "c1", "curve",
                                               "expr", "rows", "cols", "abc_form", "criterion",
                                               "seed")}
    return {
        "check": a.check,
        "params": params,
        "status": "pass" if ok else "fail",
        "details": _jsonable(details),
        "constants": constants(a.n),
        "wall_time_ms": round(elapsed, 3) if a.timing else None,
    }


def render_text(report: dict) -> str:
    lines = [f"check: {report['check']}", f"status: {report['status']}"]
    for key, val in report["constants"].items():
        lines.append(f"{key}: {val}")
    for item in report["details"]:
        lines.append(json.dumps(item, sort_keys=True))
    if report["wall_time_ms"] is not None:
        lines.append(f"wall_time_ms: {report['wall_time_ms']}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        report = run(a)
    except (ConfigError, ncpoly.ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = (json.dumps(report, indent=2, sort_keys=True) + "\n" if a.format == "json"
            else render_text(report))
    if a.output:
        with open(a.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["status"] == "pass" else 1


__all__ = ["main", "run", "build_parser", "THREADS_ENV"]

if __name__ == "__main__":
    sys.exit(main())
