"""Command-line frontend.

Subcommands: count, table, analyze, verify, explore, sparse.

Exit codes: 0 success (or suite pass), 1 usage or parse error, 2 semantic
set error, 3 verification-suite failure.  CSV and JSON output is
deterministic: keys sorted, counts as decimal strings, reals rendered at
a fixed display precision.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from statistics import linear_regression

import mpmath

from . import bounds
from .arith import (
    FiniteCoprimeSet,
    coprime_prefix,
    eventually_strictly_increasing,
    frobenius_threshold,
    gcd_of_set,
)
from .bounds import BOUND_IDS, HighPrecisionReal, bound_report
from .counting import count_partitions, count_table
from .setspec import (
    Finite,
    InvalidSetError,
    SpecSyntaxError,
    construct_sparse_set,
    parse_set_spec,
    validate_step_table,
)
from .suites import SUITES, run_all, run_suite

DISPLAY_DIGITS = 12
MAX_HUMAN_FAILURES = 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage problems; the contract wants 1
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="partlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parts=False, mults=False, n=False, upto=False, fmt=True, prec=True):
        if parts:
            p.add_argument("--parts", required=True, help="part-set spec")
        if mults:
            p.add_argument("--mults", default="nat", help="multiplicity-set spec")
        if n:
            p.add_argument("--n", type=int, required=True)
        if upto:
            p.add_argument("--upto", type=int, required=True)
        if fmt:
            p.add_argument(
                "--format", choices=("table", "csv", "json"), default="table"
            )
        if prec:
            p.add_argument("--precision", type=int, default=bounds.DEFAULT_DIGITS)
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("count", help="exact p(n; parts, mults)")
    common(p, parts=True, mults=True, n=True)

    p = sub.add_parser("table", help="p(0..upto) with optional bound columns")
    common(p, parts=True, mults=True, upto=True)
    p.add_argument("--bounds", help="comma-separated bound ids; see below")

    p = sub.add_parser("analyze", help="gcd, coprime prefix, representability")
    common(p, parts=True, prec=False)

    p = sub.add_parser("verify", help="run a named verification suite")
    common(p)
    p.add_argument("--suite", help="suite name, or 'all' (default)")
    p.add_argument("--list", action="store_true", help="list suites and parameters")

    p = sub.add_parser("explore", help="zero pattern and growth summary")
    common(p, parts=True, mults=True, upto=True, prec=False)

    p = sub.add_parser("sparse", help="build a sparse anchors file from a step table")
    p.add_argument("epsilon_file", help="lines 'threshold value', ascending")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out", help="anchors file to write (default stdout)")

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _check_precision(args) -> int:
    digits = getattr(args, "precision", bounds.DEFAULT_DIGITS)
    if digits < 10:
        raise UsageError("--precision must be at least 10")
    return digits


def _format_value(v) -> str:
    if isinstance(v, HighPrecisionReal):
        return mpmath.nstr(v.value, DISPLAY_DIGITS)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


# ---------------------------------------------------------------------------
# Subcommands

def cmd_count(args) -> int:
    _check_precision(args)
    parts = parse_set_spec(args.parts, "parts")
    mults = parse_set_spec(args.mults, "mults")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    value = count_partitions(args.n, parts, mults)
    if args.format == "json":
        payload = _json(
            {
                "count": str(value),
                "mults": mults.spec_string(),
                "n": args.n,
                "parts": parts.spec_string(),
            }
        )
    elif args.format == "csv":
        payload = f"n,count\n{args.n},{value}\n"
    else:
        payload = f"{value}\n"
    _emit(payload, args.out)
    return 0


def _parse_bound_ids(text: str | None) -> list[str]:
    if not text:
        return []
    ids = [b.strip() for b in text.split(",") if b.strip()]
    for bid in ids:
        if bid not in BOUND_IDS:
            raise UsageError(
                f"unknown bound id {bid!r}; known: {', '.join(BOUND_IDS)}"
            )
    return ids


def cmd_table(args) -> int:
    digits = _check_precision(args)
    parts = parse_set_spec(args.parts, "parts")
    mults = parse_set_spec(args.mults, "mults")
    if args.upto < 0:
        raise UsageError("--upto must be nonnegative")
    bound_ids = _parse_bound_ids(args.bounds)
    table = count_table(args.upto, parts, mults)
    reports = [
        bound_report(table, n, bound_ids, digits) if bound_ids else None
        for n in range(args.upto + 1)
    ]

    if args.format == "json":
        rows = []
        for n in range(args.upto + 1):
            row = {"count": str(table.values[n]), "n": n}
            if bound_ids:
                row["bounds"] = {
                    e.bound_id: {
                        "applicable": e.applicable,
                        "direction": e.direction,
                        "satisfied": e.satisfied,
                        "value": _format_value(e.value) if e.applicable else None,
                    }
                    for e in reports[n].entries
                }
            rows.append(row)
        payload = _json(
            {
                "mults": mults.spec_string(),
                "parts": parts.spec_string(),
                "rows": rows,
                "upto": args.upto,
            }
        )
    elif args.format == "csv":
        header = "n,count" + "".join(f",{b}" for b in bound_ids)
        lines = [header]
        for n in range(args.upto + 1):
            cells = [str(n), str(table.values[n])]
            if bound_ids:
                for e in reports[n].entries:
                    cells.append(_format_value(e.value) if e.applicable else "")
            lines.append(",".join(cells))
        payload = "\n".join(lines) + "\n"
    else:
        header = ["n", "count"] + bound_ids
        body = []
        for n in range(args.upto + 1):
            cells = [str(n), str(table.values[n])]
            if bound_ids:
                for e in reports[n].entries:
                    cells.append(_format_value(e.value) if e.applicable else "-")
            body.append(cells)
        widths = [
            max(len(header[i]), max(len(r[i]) for r in body))
            for i in range(len(header))
        ]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        for cells in body:
            lines.append("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0


def cmd_analyze(args) -> int:
    parts = parse_set_spec(args.parts, "parts")
    g = gcd_of_set(parts)
    info: dict = {
        "eventually_positive": g == 1,
        "gcd": g,
        "parts": parts.spec_string(),
    }
    if g == 1:
        cset, trace = coprime_prefix(parts)
        info["coprime_prefix"] = {
            "elements": list(cset.elements),
            "gcd_trace": list(trace.gcds),
            "length": trace.prefix_length,
        }
    if isinstance(parts, Finite) and g == 1:
        fc = FiniteCoprimeSet(parts.elements)
        info["frobenius_threshold"] = frobenius_threshold(fc)
        info["strictly_increasing"] = eventually_strictly_increasing(fc)

    if args.format == "json":
        payload = _json(info)
    elif args.format == "csv":
        lines = ["key,value"]
        for key in sorted(info):
            v = info[key]
            if key == "coprime_prefix":
                v = "prefix " + " ".join(str(e) for e in v["elements"])
            lines.append(f"{key},{str(v).lower() if isinstance(v, bool) else v}")
        payload = "\n".join(lines) + "\n"
    else:
        lines = [f"parts: {info['parts']}", f"gcd: {g}"]
        lines.append(f"eventually-positive: {'yes' if g == 1 else 'no'}")
        if "coprime_prefix" in info:
            cp = info["coprime_prefix"]
            elems = ",".join(str(e) for e in cp["elements"])
            trace = ",".join(str(t) for t in cp["gcd_trace"])
            lines.append(f"coprime-prefix: {{{elems}}} (gcd trace {trace})")
        if "frobenius_threshold" in info:
            lines.append(f"frobenius-threshold: {info['frobenius_threshold']}")
        if "strictly_increasing" in info:
            verdict = "yes" if info["strictly_increasing"] else "no"
            lines.append(f"eventually-strictly-increasing: {verdict}")
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0


def cmd_verify(args) -> int:
    digits = _check_precision(args)
    if args.list:
        lines = []
        for name, (_, description, params) in SUITES.items():
            lines.append(f"{name}: {description}")
            lines.append(f"    parameters: {params}")
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    name = args.suite or "all"
    if name == "all":
        results = run_all(digits)
    elif name in SUITES:
        results = [run_suite(name, digits)]
    else:
        raise UsageError(f"unknown suite {name!r}; see 'verify --list'")

    if args.format == "json":
        docs = [r.to_json_dict() for r in results]
        payload = _json(docs[0] if len(docs) == 1 else docs)
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else f"FAIL ({len(r.failures)} failures)"
            lines.append(f"suite {r.suite}: {status}  cases={r.cases}  {r.elapsed_ms} ms")
            for key, val in r.onsets.items():
                lines.append(f"  onset {key}: {val}")
            for key, val in r.extras.items():
                lines.append(f"  {key}: {val}")
            for f in r.failures[:MAX_HUMAN_FAILURES]:
                inputs = " ".join(f"{k}={v}" for k, v in f.inputs.items())
                lines.append(f"  FAIL {inputs}: expected {f.expected}, got {f.got}")
            if len(r.failures) > MAX_HUMAN_FAILURES:
                lines.append(f"  ... {len(r.failures) - MAX_HUMAN_FAILURES} more")
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0 if all(r.passed for r in results) else 3


def cmd_explore(args) -> int:
    parts = parse_set_spec(args.parts, "parts")
    mults = parse_set_spec(args.mults, "mults")
    if args.upto < 0:
        raise UsageError("--upto must be nonnegative")
    table = count_table(args.upto, parts, mults)
    zeros = [n for n in range(1, args.upto + 1) if table.values[n] == 0]
    max_count = max(table.values)
    max_index = table.values.index(max_count)
    # log-log slope over the nonzero upper half; reported, never asserted
    points = [
        (math.log(n), math.log(table.values[n]))
        for n in range(max(2, args.upto // 2), args.upto + 1)
        if table.values[n] > 0
    ]
    slope = None
    if len(points) >= 2 and len({x for x, _ in points}) >= 2:
        slope, _ = linear_regression([x for x, _ in points], [y for _, y in points])

    if args.format == "json":
        payload = _json(
            {
                "max_count": str(max_count),
                "max_index": max_index,
                "mults": mults.spec_string(),
                "parts": parts.spec_string(),
                "slope": None if slope is None else f"{slope:.4f}",
                "upto": args.upto,
                "zero_count": len(zeros),
                "zeros": zeros,
            }
        )
    elif args.format == "csv":
        lines = ["key,value"]
        lines.append(f"zero_count,{len(zeros)}")
        lines.append(f"max_count,{max_count}")
        lines.append(f"max_index,{max_index}")
        lines.append(f"slope,{'' if slope is None else f'{slope:.4f}'}")
        payload = "\n".join(lines) + "\n"
    else:
        lines = [
            f"p(n) = 0 at {len(zeros)} of {args.upto} positive n",
        ]
        if zeros:
            head = ",".join(str(z) for z in zeros[:15])
            more = f" ... ({len(zeros) - 15} more)" if len(zeros) > 15 else ""
            lines.append(f"zeros: {head}{more}")
        lines.append(f"max count: {max_count} at n={max_index}")
        if slope is None:
            lines.append("log-log slope: not estimable (too few nonzero points)")
        else:
            lines.append(f"log-log slope over upper half: {slope:.4f}")
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0


def cmd_sparse(args) -> int:
    try:
        with open(args.epsilon_file) as fh:
            raw_lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read {args.epsilon_file}: {exc}") from exc
    entries: list[tuple[int, int]] = []
    for i, line in enumerate(raw_lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        if len(fields) != 2:
            raise UsageError(
                f"{args.epsilon_file}:{i}: expected 'threshold value', got {text!r}"
            )
        try:
            entries.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise UsageError(
                f"{args.epsilon_file}:{i}: expected integers, got {text!r}"
            ) from None
    validate_step_table(entries)
    sset = construct_sparse_set(entries, source=args.out)
    anchor_lines = "\n".join(str(a) for a in sset.anchors) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(anchor_lines)
        if args.format == "json":
            sys.stdout.write(
                _json(
                    {
                        "anchors": list(sset.anchors),
                        "out": args.out,
                        "spec": sset.spec_string(),
                    }
                )
            )
        else:
            sys.stdout.write(
                f"{len(sset.anchors)} anchors -> {args.out} "
                f"(use --parts sparse:@{args.out})\n"
            )
    else:
        if args.format == "json":
            sys.stdout.write(_json({"anchors": list(sset.anchors), "out": None}))
        else:
            sys.stdout.write(anchor_lines)
    return 0


_COMMANDS = {
    "count": cmd_count,
    "table": cmd_table,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "explore": cmd_explore,
    "sparse": cmd_sparse,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (UsageError, SpecSyntaxError) as exc:
        print(f"partlab: error: {exc}", file=sys.stderr)
        return 1
    except InvalidSetError as exc:
        print(f"partlab: invalid set: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
