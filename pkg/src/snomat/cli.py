"""Command-line front end.

Exit status: 0 success, 1 property violation or invalid selection,
2 parse or usage error, 3 search budget exhausted without a result.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import io
from .construction import (
    FamilyError,
    FamilyParams,
    RowSelection,
    build_family,
    cardinality,
)
from .gray import GrayOrderError, deltas, gray_from_code, verify_gray
from .matrices import validate_matrix_set
from .words import (
    CodeStructureError,
    SearchBudgetExceeded,
    as_word,
    format_word,
    search_word_codes,
    validate_variable_length_code,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_code(path: str):
    try:
        return io.code_from_dict(json.loads(_read(path)))
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc
    except (io.FormatError, CodeStructureError) as exc:
        raise UsageError(str(exc)) from exc


def _word_arg(text: str):
    """``110`` or ``10,11,3`` for alphabets larger than ten."""
    try:
        return as_word(text) if "," not in text else tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}") from exc


def _selection(args) -> RowSelection:
    tops = [_word_arg(w) for w in args.top or []]
    bottoms = [_word_arg(w) for w in args.bottom or []]
    by_len_t = {len(w): w for w in tops}
    by_len_b = {len(w): w for w in bottoms}
    if len(by_len_t) != len(tops) or len(by_len_b) != len(bottoms):
        raise UsageError("at most one --top and one --bottom per length")
    if set(by_len_t) != set(by_len_b):
        raise UsageError("--top and --bottom must be given for the same lengths")
    return RowSelection({s: (by_len_t[s], by_len_b[s]) for s in by_len_t})


def _params(args) -> FamilyParams:
    return FamilyParams(args.max_rows, args.max_cols, _load_code(args.input), _selection(args))


def cmd_validate_code(args) -> int:
    code = _load_code(args.input)
    report = validate_variable_length_code(code)
    if args.format == "json":
        k = code.alphabet_size
        doc = {
            "ok": report.ok,
            "violations": [
                {"kind": v.kind, "words": [format_word(w, k) for w in v.subjects], "detail": v.detail}
                for v in report.violations
            ],
        }
        _write(args, io.dumps(doc))
    else:
        _write(args, "".join(line + "\n" for line in report.lines()) + ("ok\n" if report.ok else ""))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_build(args) -> int:
    p = _params(args)
    try:
        family = build_family(p)
        n = cardinality(p)
    except FamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if n != len(family):
        raise AssertionError(f"closed-form count {n} disagrees with {len(family)} enumerated matrices")
    for w in family.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.format == "json":
        _write(args, io.dumps(io.family_to_dict(family)))
    else:
        _write(args, io.format_matrices(family.matrices))
    print(f"count={n}", file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    try:
        n = cardinality(_params(args))
    except FamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    _write(args, f"count={n}\n")
    return EXIT_OK


def cmd_verify_family(args) -> int:
    try:
        matrices = io.load_matrices(_read(args.input))
    except (io.FormatError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    report = validate_matrix_set(matrices, method=args.method)
    lines = [f"checked={report.checked}"]
    for v in report.violations:
        lines.append(str(v))
        for m in v.subjects:
            lines.append(str(m))
            lines.append("")
        if v.witness is not None:
            lines.append(f"witness: {v.witness}")
    lines += [f"structural: {s}" for s in report.structural]
    lines.append("ok" if report.ok else "violations=%d" % len(report.violations))
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_gray(args) -> int:
    code = _load_code(args.input)
    if args.cols not in code.codes:
        raise UsageError(f"code has no words of length {args.cols}")
    wc = code[args.cols]
    top = _word_arg(args.top) if args.top else None
    bottom = _word_arg(args.bottom) if args.bottom else None
    order = [_word_arg(w) for w in args.order.split()] if args.order else None
    try:
        listing = gray_from_code(wc, args.inner_rows, top, bottom, order)
    except GrayOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.verify:
        t_, b_ = listing[0].entries[0], listing[0].entries[-1]
        inner = [w for w in wc.words if w not in (t_, b_)]
        report = verify_gray(listing, inner, args.inner_rows, top=t_, bottom=b_)
        if not report.ok:
            for line in report.lines():
                print(line, file=sys.stderr)
            return EXIT_VIOLATION
    k = code.alphabet_size
    if args.delta:
        text = str(listing[0]) + "\n\n"
        text += "".join(f"{row} {format_word(w, k) if k <= 10 else ','.join(map(str, w))}\n" for row, w in deltas(listing))
    elif args.format == "json":
        text = io.dumps([io.matrix_to_dict(m) for m in listing])
    else:
        text = io.format_matrices(listing)
    _write(args, text)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        codes = search_word_codes(args.alphabet, args.length, args.size, args.budget, args.limit)
        complete = True
    except SearchBudgetExceeded as exc:
        codes, complete = exc.found, False
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write(args, io.dumps([io.code_to_dict(c) for c in codes]))
    if not complete:
        print(f"budget of {args.budget} nodes exhausted; search incomplete", file=sys.stderr)
        if not codes:
            return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snomat", description="Strong non-overlapping codes and matrix families."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(sp):
        sp.add_argument("input", help="code JSON file, or - for stdin")
        sp.add_argument("--max-rows", type=int, required=True)
        sp.add_argument("--max-cols", type=int, required=True)
        sp.add_argument("--top", action="append", help="top row for the word's length (repeatable)")
        sp.add_argument("--bottom", action="append", help="bottom row for the word's length (repeatable)")

    sp = sub.add_parser("validate-code", help="check a code is strong non-overlapping")
    sp.add_argument("input")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_validate_code)

    sp = sub.add_parser("build", help="build the matrix family")
    family_args(sp)
    sp.add_argument("--format", choices=("text", "json"), default="json")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("count", help="family size from the closed form")
    family_args(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("verify-family", help="check a matrix set is strong non-overlapping")
    sp.add_argument("input", help="family JSON, matrix list JSON, or text matrices")
    sp.add_argument("--method", choices=("translation", "partition", "both"), default="both")
    sp.set_defaults(func=cmd_verify_family)

    sp = sub.add_parser("gray", help="list a fixed-dimension matrix set in Gray order")
    sp.add_argument("input")
    sp.add_argument("--cols", type=int, required=True)
    sp.add_argument("--inner-rows", type=int, required=True)
    sp.add_argument("--top")
    sp.add_argument("--bottom")
    sp.add_argument("--order", help="space-separated inner word order")
    sp.add_argument("--verify", action="store_true", help="re-check the emitted listing")
    sp.add_argument("--delta", action="store_true", help="print the first matrix, then 'row word' per step")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_gray)

    sp = sub.add_parser("search", help="exhaustive search for cross-bifix-free codes")
    sp.add_argument("--alphabet", type=int, required=True)
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--budget", type=int, default=1_000_000)
    sp.add_argument("--limit", type=int)
    sp.set_defaults(func=cmd_search)

    for sp in sub.choices.values():
        sp.add_argument("-o", "--output", help="write to a file instead of stdout")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
