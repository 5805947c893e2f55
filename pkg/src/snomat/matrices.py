"""Matrix overlap: block frames, the block-partition test and a translation oracle.

Two matrices overlap when some block of a partition of ``A`` has the same
entries as some block of a partition of ``B`` and the two blocks' frames
together cover all four sides.  Gluing the two blocks together places ``B``
at an integer offset over ``A`` whose grid intersection is exactly the common
block, so the same relation can be tested by sliding one grid over the
other.  :func:`overlap_by_partition` and :func:`overlap_by_translation`
implement the two readings independently so that each can check the other.

Coordinates are 0-based internally.  Block indices ``(i, j)`` in
:class:`BlockPartition` and :func:`frame_of_block` are 1-based, matching the
usual ``A_{ij}`` notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .report import Report, ReportBuilder
from .words import WordLike, as_word

Frame = frozenset
SIDES = ("t", "b", "l", "r")
FULL_FRAME: Frame = frozenset(SIDES)
_BIT = {"t": 1, "b": 2, "l": 4, "r": 8}
_FULL = 15


@dataclass(frozen=True, order=True)
class Matrix:
    """An immutable ``rows x cols`` grid of integer symbols."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if not rows or not rows[0]:
            raise ValueError("a matrix needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows: Iterable[WordLike]) -> "Matrix":
        """``Matrix.of(["110", "320"])`` or ``Matrix.of([[1, 1, 0], [3, 2, 0]])``."""
        return cls(tuple(as_word(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> tuple[tuple[int, ...], ...]:
        """Entries of rows ``r0:r1`` and columns ``c0:c1`` (0-based, half-open)."""
        return tuple(row[c0:c1] for row in self.entries[r0:r1])

    def symbols(self) -> set[int]:
        return {x for row in self.entries for x in row}

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


@dataclass(frozen=True)
class BlockPartition:
    """Cuts of a ``rows x cols`` grid into horizontal and vertical bands.

    ``row_cuts`` are the 0-based row indices where a new band starts, strictly
    increasing inside ``1..rows-1``; likewise ``col_cuts``.
    """

    rows: int
    cols: int
    row_cuts: tuple[int, ...] = ()
    col_cuts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for cuts, size in ((self.row_cuts, self.rows), (self.col_cuts, self.cols)):
            if list(cuts) != sorted(set(cuts)) or any(not 0 < c < size for c in cuts):
                raise ValueError(f"cuts {cuts} do not split 0..{size} into non-empty bands")

    @property
    def h(self) -> int:
        return len(self.row_cuts) + 1

    @property
    def k(self) -> int:
        return len(self.col_cuts) + 1

    def row_band(self, i: int) -> tuple[int, int]:
        edges = (0, *self.row_cuts, self.rows)
        return edges[i - 1], edges[i]

    def col_band(self, j: int) -> tuple[int, int]:
        edges = (0, *self.col_cuts, self.cols)
        return edges[j - 1], edges[j]

    def rect(self, i: int, j: int) -> tuple[int, int, int, int]:
        self._check(i, j)
        return (*self.row_band(i), *self.col_band(j))

    def _check(self, i: int, j: int) -> None:
        if not (1 <= i <= self.h and 1 <= j <= self.k):
            raise IndexError(f"block ({i}, {j}) outside a {self.h}x{self.k} partition")


def frame_of_block(partition: BlockPartition, i: int, j: int) -> Frame:
    """Sides of the whole matrix touched by block ``(i, j)``.

    Exactly the forced sides: ``t`` for the first band row, ``b`` for the
    last, ``l`` and ``r`` likewise for band columns.  Nothing else is added.
    """
    partition._check(i, j)
    sides = set()
    if i == 1:
        sides.add("t")
    if i == partition.h:
        sides.add("b")
    if j == 1:
        sides.add("l")
    if j == partition.k:
        sides.add("r")
    return frozenset(sides)


def _bits(frame: Frame) -> int:
    return sum(_BIT[s] for s in frame)


def band_partitions(size: int, max_bands: int | None = 3) -> Iterator[tuple[int, ...]]:
    """Cut tuples of ``0..size`` into at most ``max_bands`` bands, coarse first."""
    top = size if max_bands is None else min(size, max_bands)
    for bands in range(1, top + 1):
        yield from itertools.combinations(range(1, size), bands - 1)


def partitions(rows: int, cols: int, max_bands: int | None = 3) -> Iterator[BlockPartition]:
    for rc in band_partitions(rows, max_bands):
        for cc in band_partitions(cols, max_bands):
            yield BlockPartition(rows, cols, rc, cc)


@dataclass(frozen=True)
class PartitionWitness:
    """Blocks ``block_a`` of ``partition_a`` and ``block_b`` of ``partition_b``
    hold equal entries and their frames cover all four sides."""

    partition_a: BlockPartition
    block_a: tuple[int, int]
    partition_b: BlockPartition
    block_b: tuple[int, int]

    def check(self, a: Matrix, b: Matrix) -> bool:
        ra = self.partition_a.rect(*self.block_a)
        rb = self.partition_b.rect(*self.block_b)
        return (
            (self.partition_a.rows, self.partition_a.cols) == a.shape
            and (self.partition_b.rows, self.partition_b.cols) == b.shape
            and a.block(*ra) == b.block(*rb)
            and frame_of_block(self.partition_a, *self.block_a)
            | frame_of_block(self.partition_b, *self.block_b)
            == FULL_FRAME
        )

    @property
    def offset(self) -> tuple[int, int]:
        """The translation this witness induces (``B[i][j]`` lies on ``A[i+dr][j+dc]``)."""
        ra = self.partition_a.rect(*self.block_a)
        rb = self.partition_b.rect(*self.block_b)
        return ra[0] - rb[0], ra[2] - rb[2]


@dataclass(frozen=True)
class TranslationWitness:
    """``B`` shifted by ``offset`` so that ``B[i][j]`` lies on ``A[i+dr][j+dc]``;
    ``rect`` is the non-empty grid intersection in ``A`` coordinates
    ``(r0, r1, c0, c1)``, on which all entries agree."""

    offset: tuple[int, int]
    rect: tuple[int, int, int, int]

    def check(self, a: Matrix, b: Matrix) -> bool:
        dr, dc = self.offset
        if _intersection(a.shape, b.shape, dr, dc) != self.rect:
            return False
        r0, r1, c0, c1 = self.rect
        return r0 < r1 and c0 < c1 and a.block(r0, r1, c0, c1) == b.block(r0 - dr, r1 - dr, c0 - dc, c1 - dc)


def _intersection(sa, sb, dr, dc) -> tuple[int, int, int, int]:
    return (max(0, dr), min(sa[0], dr + sb[0]), max(0, dc), min(sa[1], dc + sb[1]))


def translations(a: Matrix, b: Matrix, self_test: bool = False) -> Iterator[TranslationWitness]:
    """Every agreeing placement of ``b`` over ``a``, offsets in row-major order
    from most negative to most positive.  ``self_test`` drops the zero offset."""
    ea, eb = a.entries, b.entries
    for dr in range(-(b.rows - 1), a.rows):
        r0, r1 = max(0, dr), min(a.rows, dr + b.rows)
        for dc in range(-(b.cols - 1), a.cols):
            if self_test and dr == 0 and dc == 0:
                continue
            c0, c1 = max(0, dc), min(a.cols, dc + b.cols)
            bc0, bc1 = c0 - dc, c1 - dc
            if all(ea[i][c0:c1] == eb[i - dr][bc0:bc1] for i in range(r0, r1)):
                yield TranslationWitness((dr, dc), (r0, r1, c0, c1))


def overlap_by_translation(a: Matrix, b: Matrix, self_test: bool | None = None) -> TranslationWitness | None:
    """First agreeing placement of ``b`` over ``a``, or ``None``.

    ``self_test`` defaults to ``a is b``; when set, the zero offset (a matrix
    lying on itself) is not a witness.
    """
    if self_test is None:
        self_test = a is b
    return next(translations(a, b, self_test), None)


@lru_cache(maxsize=4096)
def _block_index(m: Matrix, max_bands: int | None):
    """Blocks reachable through partitions of ``m``, grouped by their entries.

    Each value maps frame bits to up to two ``(rect, partition, (i, j))``
    entries with distinct rectangles, taken in the order the partitions are
    enumerated (coarse first).
    """
    row_bands = _bands(m.rows, max_bands, ("t", "b"))
    col_bands = _bands(m.cols, max_bands, ("l", "r"))
    index: dict = {}
    order = []
    for (r0, r1), rbits, rcuts, i in row_bands:
        for (c0, c1), cbits, ccuts, j in col_bands:
            content = m.block(r0, r1, c0, c1)
            bits = rbits | cbits
            slot = index.setdefault(content, {}).setdefault(bits, [])
            rect = (r0, r1, c0, c1)
            if len(slot) < 2 and all(e[0] != rect for e in slot):
                entry = (rect, BlockPartition(m.rows, m.cols, rcuts, ccuts), (i, j))
                slot.append(entry)
                order.append((content, bits, entry))
    return index, order


def _bands(size: int, max_bands: int | None, sides: tuple[str, str]):
    """Distinct ``(band, frame bits)`` pairs over all band partitions, each
    tagged with the first cut tuple and band index producing it."""
    seen = {}
    for cuts in band_partitions(size, max_bands):
        edges = (0, *cuts, size)
        n = len(edges) - 1
        for idx in range(1, n + 1):
            bits = (_BIT[sides[0]] if idx == 1 else 0) | (_BIT[sides[1]] if idx == n else 0)
            key = ((edges[idx - 1], edges[idx]), bits)
            if key not in seen:
                seen[key] = (cuts, idx)
    return [(band, bits, cuts, idx) for (band, bits), (cuts, idx) in seen.items()]


def _partition_search(a: Matrix, b: Matrix, max_bands: int | None, self_test: bool) -> PartitionWitness | None:
    index_b, _ = _block_index(b, max_bands)
    _, order_a = _block_index(a, max_bands)
    for content, bits_a, (rect_a, part_a, ij_a) in order_a:
        frames_b = index_b.get(content)
        if not frames_b:
            continue
        for bits_b, entries in frames_b.items():
            if bits_a | bits_b != _FULL:
                continue
            for rect_b, part_b, ij_b in entries:
                if self_test and rect_a == rect_b:
                    continue
                return PartitionWitness(part_a, ij_a, part_b, ij_b)
    return None


def overlap_by_partition(
    a: Matrix, b: Matrix, self_test: bool | None = None, max_bands: int | None = 3
) -> PartitionWitness | None:
    """Search partitions of ``a`` and ``b`` (at most ``max_bands`` bands per
    direction; ``None`` for no limit) for equal blocks with full combined frame.

    With ``self_test`` (default ``a is b``) the block pair may not be the same
    rectangle, which would be the matrix trivially matching itself.
    """
    if self_test is None:
        self_test = a is b
    return _partition_search(a, b, max_bands, self_test)


def is_self_overlapping(a: Matrix) -> bool:
    return overlap_by_translation(a, a, self_test=True) is not None


def is_self_overlapping_by_partition(a: Matrix) -> bool:
    return overlap_by_partition(a, a, self_test=True) is not None


def are_strong_non_overlapping_matrices(a: Matrix, b: Matrix) -> bool:
    if a == b:
        raise ValueError("identical matrices: use is_self_overlapping")
    return overlap_by_partition(a, b) is None


METHODS = ("translation", "partition", "both")


def _overlap(a: Matrix, b: Matrix, self_test: bool, method: str):
    """Return ``(witness, disagreement)`` under the chosen method."""
    if method == "translation":
        return overlap_by_translation(a, b, self_test), False
    if method == "partition":
        return overlap_by_partition(a, b, self_test), False
    wt = overlap_by_translation(a, b, self_test)
    wp = overlap_by_partition(a, b, self_test)
    if (wt is None) != (wp is None):
        return wt or wp, True
    return wt if wt is not None else wp, False


def validate_matrix_set(matrices: Iterable[Matrix], method: str = "both") -> Report:
    """No matrix self-overlaps and no two distinct matrices overlap.

    ``method`` picks the predicate: ``"translation"``, ``"partition"`` or
    ``"both"``; with ``"both"`` each check runs twice and a disagreement is
    itself reported.  Matrices are checked in sorted order so the report does
    not depend on input order.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    mats = list(matrices)
    out = ReportBuilder()
    uniq = sorted(set(mats), key=_sort_key)
    if len(uniq) != len(mats):
        out.structural.append(f"{len(mats) - len(uniq)} duplicate matrices")

    for a in uniq:
        out.checked += 1
        w, split = _overlap(a, a, True, method)
        if split:
            out.add("disagreement", (a,), "overlap predicates disagree on self-overlap", w)
        elif w is not None:
            out.add("self_overlap", (a,), f"{a.rows}x{a.cols} matrix overlaps itself", w)
    for a, b in itertools.combinations(uniq, 2):
        out.checked += 1
        w, split = _overlap(a, b, False, method)
        if split:
            out.add("disagreement", (a, b), "overlap predicates disagree", w)
        elif w is not None:
            out.add("overlap", (a, b), f"{a.rows}x{a.cols} and {b.rows}x{b.cols} matrices overlap", w)
    return out.build()


def _sort_key(m: Matrix):
    return (m.cols, m.rows, m.entries)


def contains_submatrix(a: Matrix, b: Matrix) -> bool:
    """True if ``b`` occurs as a contiguous subgrid of ``a``."""
    if b.rows > a.rows or b.cols > a.cols:
        return False
    return any(
        a.block(r, r + b.rows, c, c + b.cols) == b.entries
        for r in range(a.rows - b.rows + 1)
        for c in range(a.cols - b.cols + 1)
    )


def as_matrix(x: Matrix | Sequence[WordLike]) -> Matrix:
    return x if isinstance(x, Matrix) else Matrix.of(x)
