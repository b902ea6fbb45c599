"""Command line interface: expression commands and the machine-check suite.

Exit status: 0 on success, 1 when a check fails, 2 on usage or parse
errors.  Reports render as text (with timings) or as deterministic JSON.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import calculus, contraction, presentations, supermatrix
from .errors import ParseError, SuperalgError
from .parser import parse_element
from .presfile import load_presentation
from .presentations import Presentation, basis_counts, build, enumerate_basis
from .reports import CheckEntry, Report
from .rewrite import check_confluence, normalize

DEFAULT_SEED = 0


def _resolve_algebra(spec: str) -> Presentation:
    if spec in presentations.PRESENTATION_IDS:
        return build(spec)
    if os.path.exists(spec):
        return load_presentation(spec)
    raise SuperalgError(
        f"unknown algebra {spec!r}: not a registry id and not a file "
        f"(ids: {', '.join(presentations.PRESENTATION_IDS)})"
    )


def _timed(fn, *args, **kwargs):
    t0 = time.monotonic()
    result = fn(*args, **kwargs)
    return result, time.monotonic() - t0


def _entry_from(name: str, rep, elapsed: float, extra: dict | None = None) -> CheckEntry:
    details = dict(getattr(rep, "details", {}) or {})
    if extra:
        details.update(extra)
    failures = []
    for f in getattr(rep, "failures", []):
        if hasattr(f, "__dict__"):
            failures.append({k: str(v) for k, v in vars(f).items()})
        elif isinstance(f, dict):
            failures.append({k: str(v) for k, v in f.items()})
        else:
            failures.append({"case": str(f)})
    cases = getattr(rep, "entries_checked", None)
    if cases is None:
        cases = getattr(rep, "cases", None)
    if cases is None:
        cases = getattr(rep, "compared", None)
    if cases is None:
        cases = getattr(rep, "pairs_checked", None)
    if cases is not None:
        details["cases"] = cases
    return CheckEntry(
        name=name,
        passed=rep.passed,
        details=details,
        failures=failures,
        elapsed_s=elapsed,
    )


# ---------------------------------------------------------------------------
# check dispatch
# ---------------------------------------------------------------------------

_CONFLUENCE_DEFAULTS = presentations.PRESENTATION_IDS
_COACTION_DEFAULTS = ("superspace_h", "exterior_hp", "derham_h")
_STAR_DEFAULTS = ("superspace_h", "derham_h", "weyl_h")


def _run_check(sub: str, args, report: Report) -> None:
    algebra = args.algebra

    def add(name, rep, dt, extra=None):
        report.checks.append(_entry_from(name, rep, dt, extra))

    if sub in ("ybe", "all"):
        r = _custom_r(algebra) or supermatrix.deformed_r_matrix(supermatrix.PARAM_TABLE)
        rep, dt = _timed(supermatrix.check_ybe, r)
        add("ybe", rep, dt)
    if sub in ("rtt", "all"):
        variant = args.variant or supermatrix.PINNED_SIGN_VARIANT
        rep, dt = _timed(supermatrix.check_rtt, sign_variant=variant)
        add("rtt", rep, dt)
        report.variant = variant
    if sub in ("rhat", "all"):
        targets = [algebra] if sub == "rhat" and algebra else ["superspace_h", "derham_h"]
        for t in targets:
            rep, dt = _timed(supermatrix.check_rhat_space, build(t))
            add(f"rhat:{t}", rep, dt)
    if sub in ("coaction", "all"):
        targets = [algebra] if sub == "coaction" and algebra else _COACTION_DEFAULTS
        for t in targets:
            rep, dt = _timed(supermatrix.check_coaction, t)
            add(f"coaction:{t}", rep, dt)
    if sub in ("confluence", "all"):
        overlap = args.degree or 3
        if sub == "confluence" and algebra:
            pres_list = [(_resolve_algebra(algebra), algebra)]
        else:
            pres_list = [(build(n), n) for n in _CONFLUENCE_DEFAULTS]
        for pres, name in pres_list:
            rep, dt = _timed(check_confluence, pres.ruleset, overlap, None, name)
            add(f"confluence:{name}", rep, dt, {"overlap": overlap})
    if sub in ("dsquare", "all"):
        degree = args.degree or 6
        rep, dt = _timed(calculus.dsquare_check, degree)
        add("dsquare", rep, dt)
    if sub in ("leibniz", "all"):
        trials = args.trials or 200
        seed = args.seed if args.seed is not None else DEFAULT_SEED
        rep, dt = _timed(calculus.leibniz_check, trials, args.degree or 4, seed)
        add("leibniz", rep, dt)
    if sub in ("duality", "all"):
        rep, dt = _timed(calculus.duality_check, args.degree or 5)
        add("duality", rep, dt)
        rep, dt = _timed(calculus.delta_property_check)
        add("delta-property", rep, dt)
    if sub in ("derivatives", "all"):
        rep, dt = _timed(calculus.derivative_algebra_check, args.degree or 5)
        add("derivatives", rep, dt)
    if sub in ("star", "all"):
        targets = [algebra] if sub == "star" and algebra else _STAR_DEFAULTS
        for t in targets:
            spec = calculus.star_spec(t)
            rep, dt = _timed(calculus.star_relation_check, build(t), spec)
            add(f"star:{t}", rep, dt)
    if sub == "all":
        for t in contraction.CONTRACTION_TARGETS:
            rep, dt = _timed(contraction.contraction_check, t)
            add(f"contract:{t}", rep, dt)


def _custom_r(algebra: str | None):
    if not algebra or algebra in presentations.PRESENTATION_IDS:
        return None
    pres = _resolve_algebra(algebra)
    entries = pres.meta.get("matrix_entries")
    if not entries:
        return None
    return supermatrix.GradedOperator(pres.table, 2, entries)


# ---------------------------------------------------------------------------
# main
# ---------------------------------------------------------------------------

def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="superalg",
        description="Exact engine for Z2-graded algebras with nilpotent deformation parameters",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, expr=False):
        p.add_argument("--algebra", default=None, help="presentation id or file path")
        p.add_argument("--degree", type=int, default=None)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--variant", choices=("plain", "dressed"), default=None)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--steps", type=int, default=None, help="rewrite step limit")
        if expr:
            p.add_argument("expr", help="expression in the CLI grammar")

    p = sub.add_parser("normalize", help="reduce an expression to normal form")
    common(p, expr=True)
    p = sub.add_parser("diff", help="exterior differential of an expression")
    common(p, expr=True)
    p = sub.add_parser("partial", help="partial derivative along a coordinate")
    p.add_argument("var", help="coordinate name, e.g. x, th1, th2")
    common(p, expr=True)
    p = sub.add_parser("star", help="apply the built-in star involution")
    common(p, expr=True)
    p = sub.add_parser("basis", help="irreducible words of one degree")
    common(p)
    p = sub.add_parser("contract", help="q-to-h contraction checks")
    p.add_argument("--target", default=None, choices=contraction.CONTRACTION_TARGETS)
    common(p)
    p = sub.add_parser("check", help="machine checks")
    p.add_argument(
        "sub",
        choices=(
            "ybe",
            "rtt",
            "rhat",
            "coaction",
            "confluence",
            "dsquare",
            "leibniz",
            "duality",
            "derivatives",
            "star",
            "all",
        ),
    )
    common(p)
    return ap


def run(argv: list[str]) -> tuple[Report, int, str]:
    """Execute a command line; returns (report, exit status, output format)."""
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        raise UsageExit(int(exc.code or 0)) from None

    if args.steps:
        os.environ["SUPERALG_STEP_LIMIT"] = str(args.steps)

    cmd = args.command
    fmt = args.format
    report = Report(
        command=" ".join([cmd] + ([args.sub] if cmd == "check" else [])),
        algebra=args.algebra,
        seed=args.seed,
    )

    if cmd == "normalize":
        pres = _resolve_algebra(args.algebra or "superspace_h")
        report.algebra = pres.name
        e = parse_element(args.expr, pres.table)
        report.output = str(normalize(e, pres.ruleset, step_limit=args.steps))
        return report, 0, fmt
    if cmd == "diff":
        pres = _resolve_algebra(args.algebra or "derham_h")
        report.algebra = pres.name
        e = parse_element(args.expr, pres.table)
        report.output = str(calculus.differentiate(e, pres))
        return report, 0, fmt
    if cmd == "partial":
        pres = _resolve_algebra(args.algebra or "weyl_h")
        report.algebra = pres.name
        e = parse_element(args.expr, pres.table)
        report.output = str(calculus.partial(args.var, e, pres))
        return report, 0, fmt
    if cmd == "star":
        name = args.algebra or "superspace_h"
        spec = calculus.star_spec(name)
        report.algebra = name
        e = parse_element(args.expr, spec.pres.table)
        report.output = str(calculus.star_apply(e, spec))
        return report, 0, fmt
    if cmd == "basis":
        pres = _resolve_algebra(args.algebra or "superspace_h")
        report.algebra = pres.name
        degree = args.degree if args.degree is not None else 2
        words = enumerate_basis(pres, degree)
        counts = basis_counts(pres, degree)
        lines = [pres.table.word_str(w) for w in words]
        lines.append(f"count[{degree}] strict={counts['strict'][degree]} "
                     f"over_parameter_ring={counts['over_parameter_ring'][degree]}")
        report.output = "\n".join(lines)
        return report, 0, fmt
    if cmd == "contract":
        targets = [args.target] if args.target else list(contraction.CONTRACTION_TARGETS)
        for t in targets:
            rep, dt = _timed(contraction.contraction_check, t)
            report.checks.append(_entry_from(f"contract:{t}", rep, dt))
        return report, report.exit_code, fmt
    if cmd == "check":
        _run_check(args.sub, args, report)
        return report, report.exit_code, fmt
    raise SuperalgError(f"unhandled command {cmd!r}")


class UsageExit(Exception):
    def __init__(self, code: int):
        self.code = code


def main(argv: list[str] | None = None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    try:
        report, code, fmt = run(argv)
    except UsageExit as exc:
        return 2 if exc.code else 0
    except (ParseError, SuperalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if fmt == "json" else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
