"""Gray-code listings of fixed-dimension matrix sets.

Start from an ordering ``w_1, ..., w_t, w_{t+1}, w_{t+2}`` of a length-``s``
code in which consecutive words among ``w_1..w_t`` are adjacent (by default:
Hamming distance one).  ``w_{t+1}`` and ``w_{t+2}`` are reserved as the
fixed first and last rows.  The ``t ** h`` matrices with ``h`` inner rows
drawn from ``w_1..w_t`` are listed so that consecutive matrices differ in
exactly one row, and that row moves between adjacent words.

The listing is the reflected mixed-radix Gray order with the top row as the
most significant digit: the ``w_1`` block runs through the ``h - 1`` row
listing forwards, the ``w_2`` block backwards, and so on.  :func:`gray_indices`
produces it loopless (Knuth's Algorithm H); :func:`gn_recursive` builds it
from the recursive block definition and serves as the test oracle.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, Sequence

from .matrices import Matrix
from .report import Report, ReportBuilder
from .words import Word, WordCode, WordLike, as_word, format_word, hamming_distance

Adjacency = Callable[[Word, Word], bool]


class GrayOrderError(ValueError):
    """The supplied word order is not a Gray sequence under the adjacency."""


def hamming_adjacent(v: Word, w: Word) -> bool:
    return len(v) == len(w) and hamming_distance(v, w) == 1


def check_word_order(words: Sequence[Word], adjacency: Adjacency = hamming_adjacent) -> None:
    if len(set(words)) != len(words):
        raise GrayOrderError("repeated word in Gray word list")
    for i in range(len(words) - 1):
        if not adjacency(words[i], words[i + 1]):
            raise GrayOrderError(
                f"words {i + 1} and {i + 2} ({format_word(words[i])}, {format_word(words[i + 1])}) are not adjacent"
            )


def gray_indices(t: int, h: int) -> Iterator[tuple[tuple[int, ...], int | None]]:
    """Reflected ``t``-ary Gray order on ``h`` digits, top digit most significant.

    Yields ``(digits, changed)`` where ``changed`` is the position that moved
    from the previous tuple (``None`` for the first).  Constant work per step.
    """
    if t < 1 or h < 0:
        raise ValueError("need t >= 1 and h >= 0")
    digits = [0] * h
    if t == 1 or h == 0:
        yield tuple(digits), None
        return
    # a[j] is digit j counted from the bottom (least significant) row
    a = [0] * h
    focus = list(range(h + 1))
    step = [1] * h
    changed = None
    while True:
        yield tuple(reversed(a)), changed
        j = focus[0]
        focus[0] = 0
        if j == h:
            return
        a[j] += step[j]
        if a[j] == 0 or a[j] == t - 1:
            step[j] = -step[j]
            focus[j] = focus[j + 1]
            focus[j + 1] = j + 1
        changed = h - 1 - j


def _inner(words: Sequence[WordLike], h: int) -> list[Word]:
    ws = [as_word(w) for w in words]
    if h >= 1 and not ws:
        raise ValueError("empty inner word pool")
    return ws


def build_gn(
    words: Sequence[WordLike], h: int, adjacency: Adjacency | None = hamming_adjacent
) -> list[Matrix]:
    """Gray listing of all ``h``-row matrices over the inner words ``w_1..w_t``.

    The word order is checked against ``adjacency`` first (pass ``None`` to
    skip).  Returns ``t ** h`` matrices.
    """
    if h < 1:
        raise ValueError("build_gn needs at least one row")
    ws = _inner(words, h)
    if adjacency is not None:
        check_word_order(ws, adjacency)
    return [Matrix(tuple(ws[i] for i in idx)) for idx, _ in gray_indices(len(ws), h)]


def gn_recursive(words: Sequence[WordLike], h: int) -> list[tuple[Word, ...]]:
    """Row tuples of the Gray listing built by the block recursion.

    ``h = 1`` lists the words in order.  For ``h + 1`` rows, word ``w_a`` is
    put on top of the ``h``-row listing, forwards for odd ``a`` and reversed
    for even ``a``.
    """
    ws = _inner(words, h)
    if h == 1:
        return [(w,) for w in ws]
    prev = gn_recursive(ws, h - 1)
    out = []
    for a, w in enumerate(ws, start=1):
        block = prev if a % 2 == 1 else prev[::-1]
        out.extend((w, *rest) for rest in block)
    return out


def split_reserved(
    gray_words: Sequence[WordLike], top: WordLike | None = None, bottom: WordLike | None = None
) -> tuple[list[Word], Word, Word]:
    """Split a full word list into ``(inner, top, bottom)``.

    Without ``top``/``bottom`` the last two words are reserved; otherwise the
    named words are removed and the rest keep their order.
    """
    ws = [as_word(w) for w in gray_words]
    if len(ws) < 3:
        raise ValueError("a Gray word list needs at least 3 words")
    if len(set(ws)) != len(ws):
        raise GrayOrderError("repeated word in Gray word list")
    if top is None and bottom is None:
        return ws[:-2], ws[-2], ws[-1]
    if top is None or bottom is None:
        raise ValueError("give both top and bottom or neither")
    top, bottom = as_word(top), as_word(bottom)
    if top == bottom:
        raise ValueError("top and bottom rows must differ")
    for w in (top, bottom):
        if w not in ws:
            raise ValueError(f"reserved word {format_word(w)} is not in the list")
    return [w for w in ws if w != top and w != bottom], top, bottom


def build_gm(
    gray_words: Sequence[WordLike],
    h: int,
    adjacency: Adjacency | None = hamming_adjacent,
    top: WordLike | None = None,
    bottom: WordLike | None = None,
) -> list[Matrix]:
    """The ``h``-inner-row Gray listing with the reserved rows attached.

    Each matrix has ``h + 2`` rows.  ``h = 0`` gives the single two-row
    matrix ``[top; bottom]``.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    inner, top, bottom = split_reserved(gray_words, top, bottom)
    if h == 0:
        return [Matrix((top, bottom))]
    return [Matrix((top, *m.entries, bottom)) for m in build_gn(inner, h, adjacency)]


def gray_from_code(
    code: WordCode,
    h: int,
    top: WordLike | None = None,
    bottom: WordLike | None = None,
    order: Sequence[WordLike] | None = None,
    adjacency: Adjacency | None = hamming_adjacent,
) -> list[Matrix]:
    """Gray listing for a code, with the family's default outer rows
    (smallest word on top, largest at the bottom) unless given.

    ``order`` fixes the inner word sequence; by default the remaining words in
    sorted order.
    """
    if len(code) < 3:
        raise ValueError("a Gray listing needs a code of at least 3 words")
    top = code.words[0] if top is None else as_word(top)
    bottom = code.words[-1] if bottom is None else as_word(bottom)
    inner = [w for w in code.words if w != top and w != bottom]
    if order is not None:
        given = [as_word(w) for w in order]
        if sorted(given) != sorted(inner):
            raise ValueError("order must list exactly the inner words")
        inner = given
    return build_gm([*inner, top, bottom], h, adjacency, top, bottom)


def deltas(matrices: Sequence[Matrix]) -> Iterator[tuple[int, Word]]:
    """``(row, new_word)`` for each step, rows numbered from 1."""
    for prev, cur in zip(matrices, matrices[1:]):
        for i, (a, b) in enumerate(zip(prev.entries, cur.entries), start=1):
            if a != b:
                yield i, b


def verify_gray(
    matrices: Sequence[Matrix],
    words: Sequence[WordLike],
    h: int,
    adjacency: Adjacency = hamming_adjacent,
    top: WordLike | None = None,
    bottom: WordLike | None = None,
) -> Report:
    """Check a listing against the product set of ``h`` rows over ``words``.

    With ``top`` and ``bottom`` the expected matrices carry those outer rows.
    Reports duplicates, missing or foreign matrices, steps that change other
    than exactly one row, and row changes that are not adjacent.  Step
    violations carry the index of the later matrix.
    """
    ws = [as_word(w) for w in words]
    outer = top is not None or bottom is not None
    pre = (as_word(top),) if outer else ()
    post = (as_word(bottom),) if outer else ()
    expected = {pre + inner + post for inner in itertools.product(ws, repeat=h)}
    out = ReportBuilder()
    seen: dict = {}
    for idx, m in enumerate(matrices):
        out.checked += 1
        if m.entries in seen:
            out.add("duplicate", (idx,), f"matrix {idx} repeats matrix {seen[m.entries]}", seen[m.entries])
        else:
            seen[m.entries] = idx
        if m.entries not in expected:
            out.add("foreign", (idx,), f"matrix {idx} is not in the declared set")
    missing = expected - set(seen)
    if missing:
        out.add("missing", tuple(sorted(missing)), f"{len(missing)} matrices of the declared set are absent")
    for idx in range(1, len(matrices)):
        a, b = matrices[idx - 1].entries, matrices[idx].entries
        if len(a) != len(b):
            out.add("step", (idx,), f"matrices {idx - 1} and {idx} differ in shape")
            continue
        diff = [r for r in range(len(a)) if a[r] != b[r]]
        if len(diff) != 1:
            out.add("step", (idx,), f"matrices {idx - 1} and {idx} differ in {len(diff)} rows", diff)
        elif not adjacency(a[diff[0]], b[diff[0]]):
            out.add("adjacency", (idx,), f"row {diff[0] + 1} changes between non-adjacent words", diff[0])
    return out.build()
