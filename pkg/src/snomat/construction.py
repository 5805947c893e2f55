"""Variable-dimension strong non-overlapping matrix families.

Given a strong non-overlapping variable-length code and, for every length
``s``, a chosen top row ``T^s`` and bottom row ``B^s`` (distinct words of the
length-``s`` code), the family holds every matrix with ``2 <= h <= max_rows``
rows and ``s <= max_cols`` columns whose first row is ``T^s``, last row is
``B^s`` and whose inner rows are any words of the code other than those two.
Inner rows may repeat and their order matters, so the ``(h, s)`` group has
``(|V^s| - 2) ** (h - 2)`` members.

Fixing the outer rows is what rules out vertical overlaps: a matrix can only
slide over another with the same width by an offset that puts ``T^s`` or
``B^s`` onto an inner row.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .matrices import Matrix, validate_matrix_set
from .report import Report, ReportBuilder
from .words import (
    VariableLengthCode,
    Word,
    WordCode,
    WordLike,
    as_word,
    format_word,
    validate_variable_length_code,
)


class FamilyError(ValueError):
    """Invalid family parameters: bad code, bad row selection or bounds."""


@dataclass(frozen=True)
class RowSelection:
    """``rows[s] = (top, bottom)`` for every length ``s`` used in the family."""

    rows: Mapping[int, tuple[Word, Word]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        norm = {int(s): (as_word(t), as_word(b)) for s, (t, b) in sorted(self.rows.items())}
        object.__setattr__(self, "rows", norm)

    def top(self, s: int) -> Word:
        return self.rows[s][0]

    def bottom(self, s: int) -> Word:
        return self.rows[s][1]

    def with_rows(self, s: int, top: WordLike, bottom: WordLike) -> "RowSelection":
        rows = dict(self.rows)
        rows[s] = (as_word(top), as_word(bottom))
        return RowSelection(rows)


def default_selection(code: VariableLengthCode) -> RowSelection:
    """Smallest word on top, largest at the bottom, for every length with at
    least two words."""
    return RowSelection({s: (c.words[0], c.words[-1]) for s, c in code.codes.items() if len(c) >= 2})


def admissible_selections(code: WordCode) -> Iterator[tuple[Word, Word]]:
    """Every ordered ``(top, bottom)`` pair of distinct words."""
    return itertools.permutations(code.words, 2)


@dataclass(frozen=True)
class FamilyParams:
    max_rows: int
    max_cols: int
    code: VariableLengthCode
    selection: RowSelection | None = None

    def resolved_selection(self) -> RowSelection:
        """The explicit selection, with defaults filled in for lengths it omits."""
        sel = default_selection(self.code)
        if self.selection is not None:
            for s, (t, b) in self.selection.rows.items():
                sel = sel.with_rows(s, t, b)
        return sel

    def lengths(self) -> list[int]:
        """Lengths that contribute to the family (at most ``max_cols`` and with
        at least two words)."""
        return [s for s, c in self.code.codes.items() if s <= self.max_cols and len(c) >= 2]

    def warnings(self) -> list[str]:
        return [
            f"length {s} has a single word; no top/bottom pair exists, length skipped"
            for s, c in self.code.codes.items()
            if s <= self.max_cols and len(c) < 2
        ]


def check_params(p: FamilyParams, validate_code: bool = True) -> RowSelection:
    """Raise :class:`FamilyError` unless the parameters define a family;
    return the resolved row selection."""
    if p.max_rows < 2:
        raise FamilyError(f"max_rows must be at least 2, got {p.max_rows}")
    if not p.code.codes:
        raise FamilyError("empty code")
    if p.max_cols < p.code.min_length:
        raise FamilyError(f"max_cols {p.max_cols} is below the minimum word length {p.code.min_length}")
    if validate_code:
        report = validate_variable_length_code(p.code)
        if not report.ok:
            raise FamilyError("code is not strong non-overlapping: " + "; ".join(report.lines()[:5]))
    sel = p.resolved_selection()
    k = p.code.alphabet_size
    for s in sel.rows:
        if s not in p.code.codes:
            raise FamilyError(f"selection given for length {s}, which the code does not contain")
    for s in p.lengths():
        top, bottom = sel.rows[s]
        if top == bottom:
            raise FamilyError(f"top and bottom rows for length {s} are both {format_word(top, k)}")
        for name, w in (("top", top), ("bottom", bottom)):
            if w not in p.code[s]:
                raise FamilyError(f"{name} row {format_word(w, k)} is not a word of the length-{s} code")
    return sel


def inner_pool(code: WordCode, top: Word, bottom: Word) -> list[Word]:
    return [w for w in code.words if w != top and w != bottom]


def group_size(code_size: int, h: int) -> int:
    return (code_size - 2) ** (h - 2)


def iter_family(p: FamilyParams, validate_code: bool = True) -> Iterator[tuple[int, int, Matrix]]:
    """Stream ``(h, s, matrix)`` in canonical order: increasing ``s``, then
    ``h``, then inner rows in lexicographic order."""
    sel = check_params(p, validate_code)
    for s in p.lengths():
        top, bottom = sel.rows[s]
        pool = inner_pool(p.code[s], top, bottom)
        for h in range(2, p.max_rows + 1):
            for inner in itertools.product(pool, repeat=h - 2):
                yield h, s, Matrix((top, *inner, bottom))


@dataclass(frozen=True)
class MatrixFamily:
    params: FamilyParams
    groups: Mapping[tuple[int, int], tuple[Matrix, ...]]
    warnings: tuple[str, ...] = ()

    @property
    def matrices(self) -> list[Matrix]:
        return [m for g in self.groups.values() for m in g]

    def group(self, h: int, s: int) -> tuple[Matrix, ...]:
        return self.groups.get((h, s), ())

    def __len__(self) -> int:
        return sum(len(g) for g in self.groups.values())

    def __iter__(self):
        return iter(self.matrices)


def build_family(p: FamilyParams, validate_code: bool = True) -> MatrixFamily:
    """Materialize the whole family; groups keyed by ``(h, s)`` in canonical
    order.  Groups with no members (inner pool empty, ``h >= 3``) are omitted."""
    groups: dict[tuple[int, int], list[Matrix]] = {}
    for h, s, m in iter_family(p, validate_code):
        groups.setdefault((h, s), []).append(m)
    return MatrixFamily(p, {key: tuple(ms) for key, ms in groups.items()}, tuple(p.warnings()))


def cardinality(p: FamilyParams, validate_code: bool = True) -> int:
    """Closed-form family size: the sum over ``2 <= h <= max_rows`` and
    contributing lengths ``s`` of ``(|V^s| - 2) ** (h - 2)``, with ``0 ** 0 = 1``."""
    check_params(p, validate_code)
    return sum(
        group_size(len(p.code[s]), h) for h in range(2, p.max_rows + 1) for s in p.lengths()
    )


def verify_strong_non_overlap(family: MatrixFamily | list[Matrix], method: str = "both") -> Report:
    mats = family.matrices if isinstance(family, MatrixFamily) else list(family)
    return validate_matrix_set(mats, method=method)


def check_vertical_hazards(
    code: WordCode,
    top: WordLike,
    bottom: WordLike,
    matrices: list[Matrix] | None = None,
    max_rows: int = 4,
) -> Report:
    """Check the outer-row guards for one column count.

    The selection must be two distinct words of ``code``.  Each matrix (by
    default the family's width-``s`` groups up to ``max_rows`` rows) must
    start with ``top``, end with ``bottom``, and use neither as an inner row.
    """
    top, bottom = as_word(top), as_word(bottom)
    k = code.alphabet_size
    out = ReportBuilder()
    if top == bottom:
        out.add("same_top_bottom", (top,), f"top and bottom rows are both {format_word(top, k)}")
    for name, w in (("top", top), ("bottom", bottom)):
        if w not in code:
            out.add("not_in_code", (w,), f"{name} row {format_word(w, k)} is not in the code")
    if out.violations:
        return out.build()

    if matrices is None:
        vcode = VariableLengthCode(k, {code.length: code})
        params = FamilyParams(max_rows, code.length, vcode, RowSelection({code.length: (top, bottom)}))
        matrices = [m for _, _, m in iter_family(params, validate_code=False)]
    for m in matrices:
        out.checked += 1
        rows = m.entries
        if m.cols != code.length:
            out.add("width", (m,), f"matrix has {m.cols} columns, expected {code.length}")
            continue
        if rows[0] != top:
            out.add("top_row", (m,), f"first row {format_word(rows[0], k)} is not {format_word(top, k)}")
        if rows[-1] != bottom or m.rows < 2:
            out.add("bottom_row", (m,), f"last row {format_word(rows[-1], k)} is not {format_word(bottom, k)}")
        for idx, r in enumerate(rows[1:-1], start=1):
            if r == top or r == bottom:
                out.add(
                    "inner_reserved",
                    (m,),
                    f"inner row {idx} is the reserved word {format_word(r, k)}",
                    idx,
                )
    return out.build()
