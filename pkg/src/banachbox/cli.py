"""Command-line interface: ``banachbox {pmf,verify,corollary,simulate,moment}``.

Every command writes one record to stdout, either JSON
``{"command", "params", "payload", "status"[, "message"]}`` or CSV (header
plus one row per ``r`` / grid cell). Exact rationals are always rendered as
``"num/den"``. Exit codes: 0 ok, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Sequence

from banachbox.identity import corollary_check, verify_identity
from banachbox.matchbox import MatchboxParams, moment, pmf_generalized
from banachbox.montecarlo import SimConfig, run_simulation

log = logging.getLogger("banachbox")

DEFAULT_P_GRID = ("1/2", "1/3", "2/5", "9/10", "1/1000")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or a finite decimal such as ``"0.25"`` exactly."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as an exact rational") from exc
    return value


def parse_probability(text: str) -> Fraction:
    p = parse_rational(text)
    if not 0 < p < 1:
        raise UsageError(f"p out of range: {fmt(p)} is not in the open interval (0, 1)")
    return p


def _non_negative(name: str, value: int) -> int:
    if value < 0:
        raise UsageError(f"{name} must be >= 0, got {value}")
    return value


def cmd_pmf(args: argparse.Namespace) -> tuple[dict, list[dict], int]:
    n = _non_negative("n", args.n)
    p = parse_probability(args.p)
    pmf = pmf_generalized(MatchboxParams(n, p))
    rows = [{"r": r, "prob": fmt(v)} for r, v in enumerate(pmf)]
    payload = {"pmf": [fmt(v) for v in pmf], "sum": fmt(pmf.total())}
    return payload, rows, EXIT_OK


def cmd_moment(args: argparse.Namespace) -> tuple[dict, list[dict], int]:
    n = _non_negative("n", args.n)
    k = _non_negative("k", args.k)
    p = parse_probability(args.p)
    value = moment(MatchboxParams(n, p), k)
    return {"k": k, "moment": fmt(value)}, [{"k": k, "moment": fmt(value)}], EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[dict, list[dict], int]:
    n_max = _non_negative("n-max", args.n_max)
    ps = [parse_probability(t) for t in args.p]
    rows = []
    failures = []
    for p in ps:
        for n in range(n_max + 1):
            rep = verify_identity(MatchboxParams(n, p))
            rows.append(
                {
                    "n": n,
                    "p": fmt(p),
                    "lhs": fmt(rep.lhs),
                    "rhs": fmt(rep.rhs_factorial_form),
                    "rhs_pochhammer": fmt(rep.rhs_pochhammer_form),
                    "equal": rep.equal,
                }
            )
            if not rep.equal:
                failures.append({"n": n, "p": fmt(p)})
                log.error("identity failed at n=%d p=%s", n, fmt(p))
    payload = {"all_equal": not failures, "failures": failures, "cells": rows}
    return payload, rows, EXIT_OK if not failures else EXIT_FAILED


def cmd_corollary(args: argparse.Namespace) -> tuple[dict, list[dict], int]:
    n_max = _non_negative("n-max", args.n_max)
    rows = []
    for n in range(n_max + 1):
        rep = corollary_check(n)
        rows.append(
            {
                "n": n,
                "value_at_2": fmt(rep.value_at_2),
                "pochhammer_ratio": fmt(rep.pochhammer_ratio),
                "value_at_1": fmt(rep.value_at_1),
                "chu_vandermonde_ratio": fmt(rep.chu_vandermonde_ratio),
                "at_2_matches_ratio": rep.at_2_matches_ratio,
                "at_1_matches_chu_vandermonde": rep.at_1_matches_chu_vandermonde,
                "at_1_matches_ratio": rep.at_1_matches_ratio,
            }
        )
    payload = {
        "all_at_2_match": all(r["at_2_matches_ratio"] for r in rows),
        "all_at_1_match_chu_vandermonde": all(r["at_1_matches_chu_vandermonde"] for r in rows),
        "rows": rows,
    }
    return payload, rows, EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> tuple[dict, list[dict], int]:
    n = _non_negative("n", args.n)
    p = parse_probability(args.p)
    if args.trials < 1:
        raise UsageError(f"trials must be >= 1, got {args.trials}")
    if not 0 <= args.seed < 2**64:
        raise UsageError(f"seed must be an unsigned 64-bit integer, got {args.seed}")
    exact = pmf_generalized(MatchboxParams(n, p))
    report = run_simulation(SimConfig(n, p, args.trials, args.seed), exact, workers=args.workers)
    rows = [
        {
            "r": r,
            "count": c,
            "frequency": f,
            "exact": fmt(e),
            "tv_distance": report.tv_distance,
            "chi_square": report.chi_square,
        }
        for r, (c, f, e) in enumerate(zip(report.counts, report.frequencies, exact))
    ]
    payload = {
        "counts": list(report.counts),
        "frequencies": list(report.frequencies),
        "exact": [fmt(e) for e in exact],
        "tv_distance": report.tv_distance,
        "chi_square": report.chi_square,
    }
    return payload, rows, EXIT_OK


COMMANDS = {
    "pmf": cmd_pmf,
    "verify": cmd_verify,
    "corollary": cmd_corollary,
    "simulate": cmd_simulate,
    "moment": cmd_moment,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="banachbox", description="Exact matchbox PMFs and 2F1 identity checks."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        return sp

    sp = add("pmf", "exact PMF of the biased matchbox problem")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", required=True, help='"a/b" or a finite decimal')

    sp = add("moment", "exact raw moment E[r^k] by direct summation")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--k", type=int, default=1)

    sp = add("verify", "check the two-term 2F1 identity over an (n, p) grid")
    sp.add_argument("--n-max", type=int, default=50)
    sp.add_argument("--p", action="append", help="repeatable; default grid if omitted")

    sp = add("corollary", "evaluate the p = q = 1/2 specialisation")
    sp.add_argument("--n-max", type=int, default=50)

    sp = add("simulate", "Monte Carlo histogram against the exact PMF")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--trials", type=int, default=10**5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    return parser


def _params_echo(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"command", "format", "verbose"}
    echo = {}
    for key, value in vars(args).items():
        if key in skip:
            continue
        if key == "p":
            # canonicalise exact inputs when they parse, echo raw text otherwise
            def canon(t: str) -> str:
                try:
                    return fmt(parse_rational(t))
                except UsageError:
                    return t

            value = [canon(t) for t in value] if isinstance(value, list) else canon(value)
        echo[key] = value
    return echo


def _csv_cell(v: Any) -> Any:
    # same spelling as the JSON encoder
    if isinstance(v, (bool, float)):
        return json.dumps(v)
    return v


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    return buf.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and not args.p:
        args.p = list(DEFAULT_P_GRID)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(message)s",
    )
    record: dict[str, Any] = {"command": args.command, "params": _params_echo(args)}
    try:
        payload, rows, code = COMMANDS[args.command](args)
    except UsageError as exc:
        log.error("%s", exc)
        record.update(payload={}, status="error", message=str(exc))
        if args.format == "csv":
            sys.stdout.write(render_csv([{"status": "error", "message": str(exc)}]))
        else:
            sys.stdout.write(json.dumps(record, indent=2) + "\n")
        return EXIT_USAGE
    record.update(payload=payload, status="ok" if code == EXIT_OK else "error")
    if code != EXIT_OK:
        record["message"] = "identity verification failed"
    if args.format == "csv":
        sys.stdout.write(render_csv(rows))
    else:
        sys.stdout.write(json.dumps(record, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
