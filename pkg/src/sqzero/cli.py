"""Command-line front end for the counting engines and the oracle.

Subcommands: compute, verify, oracle, lemma2, table.

Exit codes are stable across subcommands: 0 means success (all checks
match), 1 means a mathematical mismatch, 2 means a usage or argument
error.  Coefficients are serialized as decimal strings in JSON so
arbitrary-precision values survive any consumer.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import counting, oracle
from .qpoly import QLaurentPoly

COMPUTE_METHODS = ("closed", "recurrence", "anna", "sumanna")


@dataclass
class OutputRecord:
    """One machine-readable result row.

    ``polynomial`` is present for formula methods; ``value`` is present
    whenever a q was supplied.
    """

    n: int
    method: str
    q: int | None = None
    polynomial: QLaurentPoly | None = None
    value: int | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {"n": self.n, "method": self.method}
        if self.q is not None:
            obj["q"] = self.q
        if self.polynomial is not None:
            obj["polynomial"] = {
                str(e): str(c) for e, c in sorted(self.polynomial.terms.items())
            }
        if self.value is not None:
            obj["value"] = str(self.value)
        return obj


def polynomial_from_json_terms(terms: dict) -> QLaurentPoly:
    """Rebuild a polynomial from the JSON term map (string keys/values)."""
    return QLaurentPoly({int(e): int(c) for e, c in terms.items()})


def _engine_polynomial(n: int, method: str) -> QLaurentPoly:
    if method == "closed":
        return counting.closed_form(n)
    if method == "recurrence":
        return counting.recurrence_table(n).total(n)
    if method == "anna":
        total = counting.constant_term_entry(n, 0)
        for r in range(1, n // 2 + 1):
            total = total + counting.constant_term_entry(n, r)
        return total
    if method == "sumanna":
        return counting.constant_term_total(n)
    raise ValueError(f"unknown method: {method}")


def _emit_records_csv(records: list[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "method", "q", "polynomial", "value"])
    for rec in records:
        writer.writerow(
            [
                rec.n,
                rec.method,
                "" if rec.q is None else rec.q,
                "" if rec.polynomial is None else str(rec.polynomial),
                "" if rec.value is None else str(rec.value),
            ]
        )
    return buf.getvalue()


def _cmd_compute(args) -> int:
    if args.n < 1:
        raise ValueError(f"--n must be >= 1, got {args.n}")
    if args.q is not None and args.q < 1:
        raise ValueError(f"--q must be a positive integer, got {args.q}")
    poly = _engine_polynomial(args.n, args.method)
    value = poly.eval_at(args.q) if args.q is not None else None
    record = OutputRecord(n=args.n, method=args.method, q=args.q, polynomial=poly, value=value)
    if args.format == "json":
        print(json.dumps(record.to_json_obj()))
    elif args.format == "csv":
        print(_emit_records_csv([record]), end="")
    else:
        print(value if value is not None else str(poly))
    return 0


def _cmd_verify(args) -> int:
    if args.n_max < 1:
        raise ValueError(f"--n-max must be >= 1, got {args.n_max}")
    table = counting.recurrence_table(args.n_max)
    mismatches: list[str] = []
    for n in range(1, args.n_max + 1):
        reference = table.total(n)
        row_issues: list[str] = []
        for name, value in (
            ("closed", counting.closed_form(n)),
            ("sumanna", counting.constant_term_total(n)),
        ):
            if value != reference:
                row_issues.append(f"n={n}: {name} [{value}] != recurrence [{reference}]")
        for r in range(n // 2 + 1):
            formula = counting.constant_term_entry(n, r)
            entry = table.entry(n, r)
            if formula != entry:
                row_issues.append(f"n={n} r={r}: anna [{formula}] != recurrence [{entry}]")
        if row_issues:
            for issue in row_issues:
                print(f"MISMATCH {issue}")
            mismatches.extend(row_issues)
        else:
            print(f"n={n}: OK")
    if mismatches:
        print(f"verify: FAIL ({len(mismatches)} mismatches, n_max={args.n_max})")
        return 1
    print(f"verify: PASS (all engines agree for 1 <= n <= {args.n_max})")
    return 0


def _cmd_oracle(args) -> int:
    if args.n < 1:
        raise ValueError(f"--n must be >= 1, got {args.n}")
    workers = args.workers if args.workers is not None else os.cpu_count() or 1
    try:
        count = oracle.count_square_zero(args.n, args.q, budget=args.budget, workers=workers)
    except oracle.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    formula_poly = counting.closed_form(args.n)
    formula = formula_poly.eval_at(args.q)
    match = count == formula
    if args.format == "json":
        records = [
            OutputRecord(n=args.n, method="oracle", q=args.q, value=count),
            OutputRecord(n=args.n, method="closed", q=args.q, polynomial=formula_poly, value=formula),
        ]
        print(json.dumps([rec.to_json_obj() for rec in records]))
    else:
        print(f"n={args.n} q={args.q}")
        print(f"oracle count:  {count}")
        print(f"formula value: {formula}")
        if args.by_rank:
            ranks = oracle.count_by_rank(args.n, args.q, budget=args.budget, workers=workers)
            print("rank refinement (informational):")
            for r, c in ranks.items():
                per_rank = counting.constant_term_entry(args.n, r) if 2 * r <= args.n else None
                if per_rank is None:
                    note = "no table entry"
                else:
                    note = f"entry formula at q: {per_rank.eval_at(args.q)}"
                print(f"  rank {r}: count {c}  ({note})")
        print("MATCH" if match else "MISMATCH")
    return 0 if match else 1


def _cmd_lemma2(args) -> int:
    if args.m_max < 0:
        raise ValueError(f"--m-max must be >= 0, got {args.m_max}")
    failures = []
    for m in range(args.m_max + 1):
        lhs = counting.alternating_qbinomial_sum(m)
        rhs = counting.alternating_qbinomial_sum_closed(m)
        if lhs != rhs:
            failures.append(m)
            print(f"MISMATCH m={m}: sum [{lhs}] != closed form [{rhs}]")
    if failures:
        print(f"lemma2: FAIL ({len(failures)} mismatches, m_max={args.m_max})")
        return 1
    print(f"lemma2: PASS (identity holds for 0 <= m <= {args.m_max})")
    return 0


def _cmd_table(args) -> int:
    if args.n_max < 1:
        raise ValueError(f"--n-max must be >= 1, got {args.n_max}")
    q_list = args.q_list or []
    if any(q < 1 for q in q_list):
        raise ValueError(f"--q-list values must be positive, got {q_list}")
    polys = {n: counting.closed_form(n) for n in range(1, args.n_max + 1)}
    if args.format == "json":
        records: list[OutputRecord] = []
        for n, poly in polys.items():
            if q_list:
                for q in q_list:
                    records.append(
                        OutputRecord(n=n, method="closed", q=q, polynomial=poly, value=poly.eval_at(q))
                    )
            else:
                records.append(OutputRecord(n=n, method="closed", polynomial=poly))
        print(json.dumps([rec.to_json_obj() for rec in records]))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "polynomial"] + [str(q) for q in q_list])
        for n, poly in polys.items():
            writer.writerow([n, str(poly)] + [str(poly.eval_at(q)) for q in q_list])
        print(buf.getvalue(), end="")
    else:
        for n, poly in polys.items():
            line = f"n={n}  {poly}"
            if q_list:
                line += "  " + "  ".join(f"q={q}: {poly.eval_at(q)}" for q in q_list)
            print(line)
    return 0


def _parse_q_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqzero",
        description="Count strictly upper-triangular matrices over GF(q) whose square is zero.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the count polynomial for one n")
    p.add_argument("--n", type=int, required=True, help="matrix dimension (>= 1)")
    p.add_argument(
        "--method",
        choices=COMPUTE_METHODS,
        default="closed",
        help="closed: closed form; recurrence: table row sum; "
        "anna: per-index constant-term formula summed; "
        "sumanna: single constant-term formula",
    )
    p.add_argument("--q", type=int, help="also evaluate at q (any positive integer)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("verify", help="cross-check every engine against the recurrence")
    p.add_argument("--n-max", type=int, default=20, help="check all n up to this bound")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force count and compare with the formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True, help="a supported prime power")
    p.add_argument("--by-rank", action="store_true", help="also report counts by matrix rank")
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help="parallel workers (default: machine parallelism); the count is worker-independent",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=oracle.DEFAULT_BUDGET,
        help=f"candidate budget (default {oracle.DEFAULT_BUDGET})",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("lemma2", help="check the alternating q-binomial sum identity")
    p.add_argument("--m-max", type=int, default=60, help="check all m up to this bound")
    p.set_defaults(handler=_cmd_lemma2)

    p = sub.add_parser("table", help="emit count polynomials (and values) for n = 1..n_max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--q-list", type=_parse_q_list, default=[], help="comma-separated q values")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(handler=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        code = exc.code
        return 0 if code in (0, None) else int(code)
    try:
        return args.handler(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
