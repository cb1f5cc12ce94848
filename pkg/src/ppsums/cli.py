"""Command-line interface.

Exit codes: 0 success, 1 mismatch or cap violation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .compositions import Partition, parse_composition
from .posets import (
    PosetError,
    PosetTooLarge,
    linear_extensions,
    lower_sets,
    parse_poset,
)
from .ppartitions import enumerate_ppartitions, k_truncated
from .qsym import (
    DegreeCapError,
    QSymElement,
    check_degree,
    enumerate_Q,
    enumerate_R,
    enumerate_R_symmetric,
    normalize_basis,
    poset_to_M,
    power_sum_to_F,
)
from .verify import SUITES, RunReport, worked_example_checks, run, run_suite

log = logging.getLogger("ppsums")

DEFAULT_CLI_DEGREE = 7
DEFAULT_CLI_ELEMENTS = 10


class UsageError(Exception):
    pass


class CapError(Exception):
    pass


def _emit(obj: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# -- expand --------------------------------------------------------------------

def cmd_expand(args) -> int:
    alpha = _composition(args.index)
    src = _basis(args.basis_from)
    dst = _basis(args.to)
    check_degree(alpha.size, args.max_degree)
    elem = QSymElement.basis_element(src, alpha)
    if src == "P" and dst == "F":
        out = power_sum_to_F(alpha, args.max_degree)
    else:
        out = elem.to_basis(dst)
    text = out.to_latex() if args.format == "latex" else out.to_plain()
    _emit(out.to_json_obj(), text, args.format)
    return 0


# -- verify --------------------------------------------------------------------

def cmd_verify(args) -> int:
    degree = args.degree if args.degree is not None else args.max_degree
    if degree < 0:
        raise UsageError("degree must be nonnegative")
    if degree > args.max_degree:
        raise CapError(f"requested degree {degree} exceeds --max-degree {args.max_degree}")
    report = run(f"verify {args.suite} {degree}", lambda: run_suite(args.suite, degree))
    _report(report, args)
    return 0 if report.status == "ok" else 1


def cmd_worked_examples(args) -> int:
    report = run("paper-examples", worked_example_checks)
    _report(report, args, list_all=True)
    return 0 if report.status == "ok" else 1


def _report(report: RunReport, args, list_all: bool = False) -> None:
    log.info("%s: %d checks in %.1f ms", report.command, len(report.details), report.elapsed_ms)
    if args.format == "json":
        print(json.dumps(report.to_json_obj(timing=args.timing), sort_keys=True))
        return
    shown = report.details if (list_all or args.verbose) else report.failures()
    for c in shown:
        print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}")
        if not c.ok:
            print(f"      expected: {c.to_json_obj()['expected']}")
            print(f"      actual:   {c.to_json_obj()['actual']}")
    line = f"{report.status}: {len(report.details)} checks, {len(report.failures())} failed"
    if args.timing:
        line += f" ({report.elapsed_ms:.0f} ms)"
    print(line)


# -- matrices ------------------------------------------------------------------

def cmd_matrices(args) -> int:
    alpha, beta = _composition(args.alpha), _composition(args.beta)
    if alpha.size != beta.size:
        raise UsageError(f"sizes differ: {alpha.size} vs {beta.size}")
    check_degree(alpha.size, args.max_degree)
    if args.kind == "Rsym":
        try:
            alpha, beta = Partition(alpha), Partition(beta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        mats = enumerate_R_symmetric(alpha, beta)
    elif args.kind == "R":
        mats = enumerate_R(alpha, beta)
    else:
        mats = enumerate_Q(alpha, beta)
    obj = {"kind": args.kind, "alpha": list(alpha), "beta": list(beta),
           "count": len(mats), "matrices": [m.to_json_obj() for m in mats]}
    blocks = [m.render() for m in mats]
    text = "\n\n".join(blocks + [f"count: {len(mats)}"])
    _emit(obj, text, args.format)
    return 0


# -- poset ---------------------------------------------------------------------

def cmd_poset(args) -> int:
    try:
        text = Path(args.file).read_text() if args.file != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    if not text.strip():
        raise UsageError("empty poset file")
    P = parse_poset(text)
    if len(P) > args.max_elements:
        raise CapError(f"poset has {len(P)} elements, cap is {args.max_elements}")
    sub = args.subcommand
    if sub == "extensions":
        chains = linear_extensions(P, args.max_elements)
        obj = {"count": len(chains), "extensions": [str(s) for s in chains]}
        text = "\n".join([str(s) or "e" for s in chains] + [f"count: {len(chains)}"])
    elif sub == "lowersets":
        ideals = lower_sets(P, args.max_elements)
        rows = [sorted(str(e) for e in sorted(i)) for i in ideals]
        obj = {"count": len(ideals), "lower_sets": rows}
        text = "\n".join(["{" + ", ".join(r) + "}" for r in rows] + [f"count: {len(ideals)}"])
    elif sub == "kpartitions":
        N = _vars(args, P)
        fs = enumerate_ppartitions(P, N)
        rows = [{str(e): f[e] for e in P.elements} for f in fs]
        obj = {"vars": N, "count": len(fs), "ppartitions": rows}
        text = "\n".join([" ".join(f"{k}={v}" for k, v in r.items()) for r in rows]
                         + [f"count: {len(fs)}"])
    elif sub == "ktruncate":
        N = _vars(args, P)
        poly = k_truncated(P, N)
        terms = [{"exponents": list(e), "coeff": {"num": c.numerator, "den": c.denominator}}
                 for e, c in sorted(poly.terms.items(), reverse=True)]
        obj = {"vars": N, "terms": terms}
        text = poly.to_plain()
    else:  # kexpand
        check_degree(P.total_weight(), args.max_degree)
        elem = poset_to_M(P)
        obj = elem.to_json_obj()
        text = elem.to_latex() if args.format == "latex" else elem.to_plain()
    _emit(obj, text, args.format)
    return 0


def _vars(args, P) -> int:
    N = args.vars if args.vars is not None else max(P.total_weight(), 1)
    if N < 1:
        raise UsageError("--vars must be positive")
    if N > max(args.max_degree, 1) and args.vars is None:
        raise CapError(f"default variable count {N} exceeds --max-degree {args.max_degree}")
    return N


# -- parsing helpers -------------------------------------------------------------

def _composition(text: str):
    try:
        return parse_composition(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _basis(tag: str) -> str:
    try:
        return normalize_basis(tag)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "latex"), default=argparse.SUPPRESS)
    common.add_argument("--max-degree", type=int, default=argparse.SUPPRESS,
                        help=f"degree cap (default {DEFAULT_CLI_DEGREE})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="reserved; all computation is deterministic")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include elapsed time in reports")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="ppsums", parents=[common],
        description="Combinatorial power sum quasisymmetric functions via weighted P-partitions.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("expand", parents=[common], help="expand a basis element")
    p.add_argument("basis_from", help="M, F, p or pr")
    p.add_argument("index", help="composition, e.g. 1,2,1 (or e)")
    p.add_argument("--to", default="M", help="target basis (M, F, p, pr)")
    p.set_defaults(func=cmd_expand)

    p = subs.add_parser("verify", parents=[common], help="run an identity suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("degree", type=int, nargs="?")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("matrices", parents=[common], help="list R, Rsym or Q fillings")
    p.add_argument("kind", choices=("R", "Rsym", "Q"))
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=cmd_matrices)

    p = subs.add_parser("poset", parents=[common], help="enumerate on a poset file")
    p.add_argument("subcommand", choices=("extensions", "lowersets", "kpartitions", "ktruncate", "kexpand"))
    p.add_argument("file", help="poset file, or - for stdin")
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--max-elements", type=int, default=DEFAULT_CLI_ELEMENTS)
    p.set_defaults(func=cmd_poset)

    p = subs.add_parser("paper-examples", parents=[common], help="replay the worked examples")
    p.set_defaults(func=cmd_worked_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name, default in (("format", "plain"), ("max_degree", DEFAULT_CLI_DEGREE),
                          ("seed", None), ("timing", False), ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (UsageError, PosetError) as exc:
        if isinstance(exc, PosetTooLarge):
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapError, DegreeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    log.info("done in %.1f ms", (time.perf_counter() - start) * 1000)
    return code


if __name__ == "__main__":
    sys.exit(main())
