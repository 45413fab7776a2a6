"""Command-line front end.

Exit status: 0 on success or a passing verification, 1 when a
mathematical failure or invalid parameter is found, 2 on usage or domain
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .arthur import (
    RejectedParameterError,
    casimir_eigenvalue,
    infinitesimal_character,
    load_parameter,
    validate_parameter,
)
from .core import DomainError, as_rational, format_rational
from .groups import Family, make_group, load_alpha_config
from .oracle import (
    DEFAULT_CEILING,
    EnumerationCeilingError,
    default_jobs,
    verify_dichotomy,
    verify_t1_constraints,
    verify_t38,
)
from .spectra import (
    HodgeType,
    InconsistencyError,
    SpectrumDescription,
    UnresolvableError,
    classify_case,
    dichotomy_check,
    t1_spectrum,
    t38_spectrum,
    tu_spectrum,
)

log = logging.getLogger("arthurspec")


class UsageError(Exception):
    pass


def spectrum_record(family: str, n: int, degree: Optional[int], hodge: Optional[HodgeType], ramanujan: bool) -> dict:
    """Library value behind ``spectrum``; also used by the round-trip tests."""
    fam = Family(family)
    make_group(fam, n)  # range checks
    if fam is Family.QUATERNIONIC:
        if hodge is not None:
            raise DomainError("Hodge types only apply to the unitary family")
        degree = 0 if degree is None else degree
        if degree != 0:
            raise DomainError("a closed-form quaternionic spectrum is only available in degree 0")
        spec, where, tag = t38_spectrum(n, ramanujan), {"degree": 0}, "t38"
    elif hodge is not None:
        if degree is not None:
            raise DomainError("give either --hodge or --degree, not both")
        spec, where, tag = t1_spectrum(n, hodge), {"hodge": [hodge.p, hodge.q]}, "t1"
    else:
        degree = 0 if degree is None else degree
        spec, where, tag = tu_spectrum(n, degree), {"degree": degree}, "tu"
    return {
        "family": fam.value,
        "n": n,
        **where,
        "provenance": tag,
        "ramanujan": ramanujan,
        **spec.to_json(),
        "threshold": format_rational(spec.threshold(ramanujan)),
    }


def parse_spectrum_record(record: dict) -> SpectrumDescription:
    return SpectrumDescription.from_json(record)


def _approx(x: Fraction) -> str:
    return f"{float(x):.6g}"


def render_text(record: dict) -> str:
    spec = parse_spectrum_record(record)
    where = f"degree {record['degree']}" if "degree" in record else "hodge ({},{})".format(*record["hodge"])
    lines = [f"{record['family']} n={record['n']} {where} [{record['provenance']}]"]
    lines.append(f"{'label':<20} {'lambda':>12}")
    for label, lam in spec.discrete:
        lines.append(f"{label:<20} {format_rational(lam):>12}  ({_approx(lam)})")
    thr = as_rational(record["threshold"])
    mode = "ramanujan" if record["ramanujan"] else "unconditional"
    lines.append(f"continuous from {format_rational(thr)} ({_approx(thr)}) [{mode}]")
    if spec.vacuous and not record["ramanujan"]:
        lines.append("note: unconditional threshold is negative (vacuous)")
    return "\n".join(lines) + "\n"


def render_csv(record: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["field", "label", "value"])
    for label, value in record["labels"]:
        w.writerow(["discrete", label, value])
    w.writerow(["threshold_unconditional", "", record["threshold_unconditional"]])
    w.writerow(["threshold_ramanujan", "", record["threshold_ramanujan"]])
    return buf.getvalue()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _group_with_config(n: int, alpha_config: Optional[str]):
    alpha = None
    if alpha_config:
        fam, cfg_n, alpha = load_alpha_config(alpha_config)
        if (fam, cfg_n) != (Family.QUATERNIONIC, n):
            alpha = {}
    return make_group(Family.QUATERNIONIC, n, alpha)


def cmd_spectrum(args) -> int:
    hodge = HodgeType.parse(args.hodge) if args.hodge else None
    record = spectrum_record(args.family, args.n, args.degree, hodge, args.ramanujan)
    if args.format == "json":
        text = json.dumps(record, indent=2) + "\n"
    elif args.format == "csv":
        text = render_csv(record)
    else:
        text = render_text(record)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.kind == "t1":
        if not args.hodge:
            raise UsageError("verify t1 requires --hodge P,Q")
        report = verify_t1_constraints(args.n, HodgeType.parse(args.hodge))
    else:
        if args.height is None:
            raise UsageError(f"verify {args.kind} requires --height")
        height = as_rational(args.height)
        jobs = args.jobs or default_jobs()
        if args.kind == "t38":
            report = verify_t38(args.n, height, jobs=jobs, ceiling=args.ceiling)
        else:
            g = _group_with_config(args.n, args.alpha_config)
            report = verify_dichotomy(
                args.n,
                args.degree if args.degree is not None else 0,
                height,
                ramanujan=args.ramanujan,
                jobs=jobs,
                ceiling=args.ceiling,
                group=g,
            )
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0 if report.passed else 1


def cmd_classify(args) -> int:
    try:
        param = load_parameter(args.param)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.alpha_config and param.group.quaternionic:
        g = _group_with_config(param.group.n, args.alpha_config)
        param = type(param)(g, param.blocks, param.ramanujan)
    report = validate_parameter(param)
    if not report.ok:
        print("violations: [" + ", ".join(report.kinds()) + "]")
        for v in report.violations:
            print(f"  - {v.kind}: {v.detail}")
        return 1
    if not param.group.quaternionic:
        raise DomainError("classification is implemented for the quaternionic family")
    print("validation: OK")
    lam = casimir_eigenvalue(infinitesimal_character(param), param.group)
    try:
        case = classify_case(param).value
    except InconsistencyError as exc:
        print(f"case: inconsistent ({exc}), lambda: {format_rational(lam)}")
        return 1
    degree = args.degree if args.degree is not None else 0
    if lam > 0:
        verdict = dichotomy_check(lam, degree, param.group, ramanujan=param.ramanujan)
        print(f"case: {case}, lambda: {format_rational(lam)}, verdict: {verdict}")
        return 0 if verdict.ok else 1
    print(f"case: {case}, lambda: {format_rational(lam)}, verdict: none (lambda <= 0)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arthurspec", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="closed-form spectrum tables")
    sp.add_argument("--family", choices=[f.value for f in Family], required=True)
    sp.add_argument("--n", type=int, required=True)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--hodge", metavar="P,Q")
    grp.add_argument("--degree", type=int, metavar="K")
    sp.add_argument("--ramanujan", action="store_true")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(func=cmd_spectrum)

    vp = sub.add_parser("verify", help="brute-force verification runs")
    vp.add_argument("kind", choices=["t38", "dichotomy", "t1"])
    vp.add_argument("--n", type=int, required=True)
    vp.add_argument("--degree", type=int, metavar="K")
    vp.add_argument("--hodge", metavar="P,Q")
    vp.add_argument("--height", metavar="H")
    vp.add_argument("--ramanujan", action="store_true", help="dichotomy only: assume Ramanujan")
    vp.add_argument("--jobs", type=int, default=0, metavar="J")
    vp.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, metavar="C")
    vp.add_argument("--alpha-config", metavar="PATH")
    vp.add_argument("--out", metavar="PATH")
    vp.set_defaults(func=cmd_verify)

    cp = sub.add_parser("classify", help="validate and classify a parameter file")
    cp.add_argument("--param", required=True, metavar="FILE")
    cp.add_argument("--degree", type=int, metavar="K")
    cp.add_argument("--alpha-config", metavar="PATH")
    cp.set_defaults(func=cmd_classify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, UnresolvableError, EnumerationCeilingError, RejectedParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
