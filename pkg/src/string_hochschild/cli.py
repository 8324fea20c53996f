"""Command-line interface.

Subcommands::

    validate FILE                 string/gentle/finite-dimension report
    dims FILE --max-degree N      cohomology dimension table
    cup FILE --deg N M            cup products of class generators
    bracket FILE --deg N M        brackets of class generators
    witness FILE --max-degree N   certified nonvanishing product search
    selftest FILE --max-degree N  every cross-validation suite

Exit codes: 0 success, 1 a computed check or comparison failed, 2 invalid
input (unparseable file, bad arguments), 3 the input lies outside the
hypotheses of the requested computation (non-string or infinite-dimensional
presentation, bracket witnesses away from characteristic 0).

Output is deterministic: the same invocation on the same file prints the
same bytes.  ``--json`` switches any subcommand to a JSON document with a
top-level ``"schema": 1`` marker.  One characteristic per invocation: the
file's ``char`` entry, overridden by ``--char``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import run_selftest
from .cochain import Cochain, oracle
from .formulas import hh_dim_formula
from .gerstenhaber import (
    Witness,
    bracket_class,
    cup_class,
    find_bracket_witness,
    find_cup_witness,
)
from .linalg import FieldSpec
from .quiver import (
    BoundQuiver,
    HypothesisViolation,
    check_finite_dimensional,
    validate_gentle,
    validate_string,
)
from .quiverfile import QuiverParseError, parse_quiver_file


def _format_pair(bq: BoundQuiver, pair) -> str:
    return f"({bq.path_label(pair.chain)}|{bq.path_label(pair.path)})"


def format_cochain(bq: BoundQuiver, field: FieldSpec, f: Cochain) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for pair in f.support():
        c = f.coeffs[pair]
        label = _format_pair(bq, pair)
        if c == field.one:
            terms.append(f"+ {label}")
        elif field.characteristic == 0 and c == -1:
            terms.append(f"- {label}")
        else:
            terms.append(f"+ {field.fmt(c)}*{label}")
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else text


def _load(path: str, char_override: int | None) -> tuple[BoundQuiver, FieldSpec]:
    bq, field = parse_quiver_file(path)
    if char_override is not None:
        field = FieldSpec(char_override)
    return bq, field


def _require_hypotheses(bq: BoundQuiver) -> None:
    report = validate_string(bq)
    if not report.ok:
        raise HypothesisViolation(
            "not a valid string presentation: " + "; ".join(report.problems)
        )
    witness = check_finite_dimensional(bq)
    if witness is not None:
        labels = ",".join(bq.arrows[a].label for a in witness.arrows)
        raise HypothesisViolation(
            f"quotient algebra is infinite dimensional (surviving cycle {labels})"
        )


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        payload["schema"] = 1
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_validate(args: argparse.Namespace) -> int:
    bq, _ = _load(args.file, None)
    string_report = validate_string(bq)
    gentle_report = validate_gentle(bq)
    cycle = check_finite_dimensional(bq)
    payload = {
        "command": "validate",
        "connected": bq.is_connected(),
        "string": string_report.ok,
        "gentle": gentle_report.ok,
        "finite_dimensional": cycle is None,
        "problems": string_report.problems + [
            p for p in gentle_report.problems if p not in string_report.problems
        ],
    }
    lines = [
        f"connected:            {'yes' if payload['connected'] else 'no'}",
        f"string presentation:  {'yes' if payload['string'] else 'no'}",
        f"gentle presentation:  {'yes' if payload['gentle'] else 'no'}",
        f"finite dimensional:   {'yes' if payload['finite_dimensional'] else 'no'}",
    ]
    for p in payload["problems"]:
        lines.append(f"  problem: {p}")
    _emit(payload, args.json, lines)
    return 0 if string_report.ok else 1


def cmd_dims(args: argparse.Namespace) -> int:
    bq, field = _load(args.file, args.char)
    _require_hypotheses(bq)
    mode = args.mode
    orc = oracle(bq, field)
    rows = []
    mismatch = False
    for n in range(0, args.max_degree + 1):
        row: dict = {"degree": n}
        if mode in ("formula", "both"):
            row["formula"] = hh_dim_formula(bq, n, field).dim
        if mode in ("oracle", "both"):
            row["oracle"] = orc.hh_dim(n)
        if mode == "both":
            row["agree"] = row["formula"] == row["oracle"]
            mismatch = mismatch or not row["agree"]
        rows.append(row)
    payload = {"command": "dims", "characteristic": field.characteristic, "rows": rows}
    header = {"formula": "degree  formula", "oracle": "degree  oracle"}.get(
        mode, "degree  formula  oracle  agree"
    )
    lines = [f"characteristic: {field.characteristic}", header]
    for row in rows:
        if mode == "formula":
            lines.append(f"{row['degree']:>6}  {row['formula']:>7}")
        elif mode == "oracle":
            lines.append(f"{row['degree']:>6}  {row['oracle']:>6}")
        else:
            lines.append(
                f"{row['degree']:>6}  {row['formula']:>7}  {row['oracle']:>6}  "
                + ("yes" if row["agree"] else "NO")
            )
    _emit(payload, args.json, lines)
    return 1 if mismatch else 0


def _product_table(args: argparse.Namespace, kind: str) -> int:
    bq, field = _load(args.file, args.char)
    _require_hypotheses(bq)
    n, m = args.deg
    orc = oracle(bq, field)
    left = orc.class_generators(n)
    right = orc.class_generators(m)
    rows = []
    for i, f in enumerate(left):
        for j, g in enumerate(right):
            if kind == "cup":
                product = cup_class(orc, f, g)
            else:
                product = bracket_class(orc, f, g)
            rows.append(
                {
                    "left": i,
                    "right": j,
                    "product": format_cochain(bq, field, product),
                    "zero": product.is_zero(),
                }
            )
    payload = {
        "command": kind,
        "characteristic": field.characteristic,
        "degrees": [n, m],
        "left_generators": [format_cochain(bq, field, f) for f in left],
        "right_generators": [format_cochain(bq, field, g) for g in right],
        "rows": rows,
    }
    lines = [
        f"characteristic: {field.characteristic}",
        f"degree {n} classes: {len(left)}    degree {m} classes: {len(right)}",
    ]
    for i, f in enumerate(left):
        lines.append(f"  f{i} = {format_cochain(bq, field, f)}")
    for j, g in enumerate(right):
        lines.append(f"  g{j} = {format_cochain(bq, field, g)}")
    if not rows:
        lines.append("no products: one side is zero")
    op = "u" if kind == "cup" else ","
    for row in rows:
        if kind == "cup":
            lines.append(f"  f{row['left']} u g{row['right']} = {row['product']}")
        else:
            lines.append(f"  [f{row['left']}{op} g{row['right']}] = {row['product']}")
    _emit(payload, args.json, lines)
    return 0


def cmd_cup(args: argparse.Namespace) -> int:
    return _product_table(args, "cup")


def cmd_bracket(args: argparse.Namespace) -> int:
    return _product_table(args, "bracket")


def _witness_payload(bq: BoundQuiver, field: FieldSpec, w: Witness) -> tuple[dict, list[str]]:
    payload = {
        "command": "witness",
        "kind": w.kind,
        "characteristic": field.characteristic,
        "base_pair": _format_pair(bq, w.omega),
        "base_degree": w.base_degree,
        "rotation_order": w.rotation_order,
        "exponents": [w.s1, w.s2],
        "left_degree": w.left.degree,
        "right_degree": w.right.degree,
        "product_degree": w.product.degree,
        "product": format_cochain(bq, field, w.product),
        "identity_ok": w.identity_ok,
        "class_nonzero": w.class_nonzero,
    }
    lines = [
        f"witness kind:     {w.kind}",
        f"base pair:        {payload['base_pair']} in degree {w.base_degree}",
        f"rotation order:   {w.rotation_order}",
        f"exponents:        {w.s1}, {w.s2}",
        f"element degrees:  {w.left.degree}, {w.right.degree} -> {w.product.degree}",
        f"product:          {payload['product']}",
        f"identity holds:   {'yes' if w.identity_ok else 'NO'}",
        f"class nonzero:    {'yes' if w.class_nonzero else 'NO'}",
    ]
    return payload, lines


def cmd_witness(args: argparse.Namespace) -> int:
    bq, field = _load(args.file, args.char)
    _require_hypotheses(bq)
    if args.kind == "bracket":
        if field.characteristic != 0:
            raise HypothesisViolation(
                "bracket witnesses are only certified in characteristic 0"
            )
        w = find_bracket_witness(bq, args.max_degree)
    else:
        w = find_cup_witness(bq, field, args.max_degree)
    if w is None:
        payload = {
            "command": "witness",
            "kind": args.kind,
            "characteristic": field.characteristic,
            "found": False,
        }
        _emit(payload, args.json, [f"no {args.kind} witness up to degree {args.max_degree}"])
        return 0
    payload, lines = _witness_payload(bq, field, w)
    payload["found"] = True
    _emit(payload, args.json, lines)
    return 0 if w.verified else 1


def cmd_selftest(args: argparse.Namespace) -> int:
    bq, field = _load(args.file, args.char)
    _require_hypotheses(bq)
    results = run_selftest(bq, field, args.max_degree, seed=args.seed)
    payload = {
        "command": "selftest",
        "characteristic": field.characteristic,
        "results": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
    }
    lines = [f"characteristic: {field.characteristic}"]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status}  {r.name:<32} {r.detail}")
    failed = [r for r in results if not r.ok]
    lines.append(
        f"{len(results) - len(failed)}/{len(results)} suites passed"
    )
    _emit(payload, args.json, lines)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="string-hochschild",
        description=(
            "Exact Hochschild cohomology and Gerstenhaber structure of "
            "quadratic string algebras presented by bound quivers."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, with_char: bool = True) -> None:
        p.add_argument("file", help="presentation file")
        p.add_argument("--json", action="store_true", help="emit JSON (schema 1)")
        if with_char:
            p.add_argument(
                "--char",
                type=int,
                default=None,
                help="override the file's characteristic (0 or a prime)",
            )

    p = sub.add_parser("validate", help="report string/gentle/finiteness checks")
    common(p, with_char=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dims", help="cohomology dimension table")
    common(p)
    p.add_argument("--max-degree", type=int, default=5)
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--formula", dest="mode", action="store_const", const="formula"
    )
    group.add_argument("--oracle", dest="mode", action="store_const", const="oracle")
    group.add_argument("--both", dest="mode", action="store_const", const="both")
    p.set_defaults(func=cmd_dims, mode="both")

    p = sub.add_parser("cup", help="cup products of class generators")
    common(p)
    p.add_argument("--deg", type=int, nargs=2, required=True, metavar=("N", "M"))
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("bracket", help="brackets of class generators")
    common(p)
    p.add_argument("--deg", type=int, nargs=2, required=True, metavar=("N", "M"))
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("witness", help="search for a nonvanishing product")
    common(p)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--kind", choices=("cup", "bracket"), default="cup")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("selftest", help="run every cross-validation suite")
    common(p)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QuiverParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
