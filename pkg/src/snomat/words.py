"""Bifix-free words, cross-bifix-free codes and strong non-overlapping codes.

Words are tuples of small non-negative integers.  Every public predicate also
accepts a digit string such as ``"110"`` and converts it with :func:`as_word`,
so the examples below can be typed the way they are usually written::

    >>> is_bifix_free("10100")
    True
    >>> are_strong_non_overlapping("1111000", "10")
    False

A proper prefix or suffix is non-empty and strictly shorter than the word.
Length-1 words therefore have no proper affixes: they are vacuously bifix-free
and any two of them are cross-bifix-free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .report import Report, ReportBuilder

Word = tuple[int, ...]
WordLike = Union[str, Sequence[int]]

DEFAULT_BUDGET = 1_000_000


class CodeStructureError(ValueError):
    """A code is malformed: duplicate words, mixed lengths, bad symbols."""


class SearchBudgetExceeded(RuntimeError):
    """Raised when :func:`search_word_codes` stops before exhausting the space.

    ``found`` holds the codes discovered before the budget ran out.  Nothing
    is claimed about codes that were not reached.
    """

    def __init__(self, found: list["WordCode"], nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted with {len(found)} code(s) found")
        self.found = found
        self.nodes = nodes


def as_word(w: WordLike) -> Word:
    if isinstance(w, str):
        if not w.isdigit():
            raise ValueError(f"not a digit string: {w!r}")
        return tuple(int(c) for c in w)
    return tuple(int(x) for x in w)


def format_word(w: Sequence[int], alphabet_size: int = 10) -> Union[str, list[int]]:
    """Digit string for alphabets of at most ten symbols, else a list of ints."""
    if alphabet_size <= 10:
        return "".join(str(x) for x in w)
    return list(w)


def border_length(w: WordLike) -> int:
    """Length of the shortest proper border of ``w``, 0 if it is bifix-free."""
    w = as_word(w)
    n = len(w)
    for k in range(1, n):
        if w[:k] == w[n - k:]:
            return k
    return 0


def is_bifix_free(w: WordLike) -> bool:
    return border_length(w) == 0


def cross_overlap(v: WordLike, w: WordLike) -> tuple[str, int] | None:
    """First prefix/suffix coincidence between ``v`` and ``w``.

    Returns ``("vw", k)`` when the length-``k`` prefix of ``v`` equals the
    length-``k`` suffix of ``w``, ``("wv", k)`` for the mirrored case, or
    ``None`` when the two words are cross-bifix-free.
    """
    v, w = as_word(v), as_word(w)
    for k in range(1, min(len(v), len(w))):
        if v[:k] == w[-k:]:
            return ("vw", k)
        if w[:k] == v[-k:]:
            return ("wv", k)
    return None


def are_cross_bifix_free(v: WordLike, w: WordLike) -> bool:
    """True if no proper prefix of either word is a proper suffix of the other.

    Called with the same word twice this is exactly :func:`is_bifix_free`.
    """
    return cross_overlap(v, w) is None


def factor_position(v: WordLike, w: WordLike) -> int:
    """Index of the first occurrence of ``v`` inside a strictly longer ``w``, or -1."""
    v, w = as_word(v), as_word(w)
    n = len(v)
    if n >= len(w):
        return -1
    for i in range(len(w) - n + 1):
        if w[i:i + n] == v:
            return i
    return -1


def is_inner_or_factor(v: WordLike, w: WordLike) -> bool:
    """True if ``w == a + v + b`` with ``a`` and ``b`` not both empty.

    Occurrences touching either end of ``w`` count.  Only this direction is
    tested; :func:`are_strong_non_overlapping` checks both.
    """
    return factor_position(v, w) >= 0


def are_strong_non_overlapping(v: WordLike, w: WordLike) -> bool:
    return (
        are_cross_bifix_free(v, w)
        and not is_inner_or_factor(v, w)
        and not is_inner_or_factor(w, v)
    )


def hamming_distance(v: WordLike, w: WordLike) -> int:
    v, w = as_word(v), as_word(w)
    if len(v) != len(w):
        raise ValueError("Hamming distance needs equal lengths")
    return sum(a != b for a, b in zip(v, w))


@dataclass(frozen=True)
class WordCode:
    """A set of distinct words of one length ``length`` over ``range(alphabet_size)``.

    Words are stored sorted, so two codes with the same members compare equal.
    Construction only enforces structure; use :func:`validate_word_code` for
    the non-overlapping property.
    """

    alphabet_size: int
    length: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        problems = _structure_problems(self.words, self.alphabet_size, self.length)
        if problems:
            raise CodeStructureError("; ".join(problems))
        object.__setattr__(self, "words", tuple(sorted(as_word(w) for w in self.words)))

    @classmethod
    def of(cls, words: Iterable[WordLike], alphabet_size: int | None = None) -> "WordCode":
        """Build from words, inferring length and (if omitted) alphabet size."""
        ws = [as_word(w) for w in words]
        if not ws:
            raise CodeStructureError("empty code: length cannot be inferred")
        if alphabet_size is None:
            alphabet_size = max(2, max(max(w) for w in ws) + 1)
        return cls(alphabet_size, len(ws[0]), tuple(ws))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w) -> bool:
        return as_word(w) in self.words


@dataclass(frozen=True)
class VariableLengthCode:
    """At most one :class:`WordCode` per length, all over the same alphabet."""

    alphabet_size: int
    codes: Mapping[int, WordCode] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ordered = dict(sorted(self.codes.items()))
        for s, code in ordered.items():
            if code.length != s:
                raise CodeStructureError(f"code filed under length {s} has length {code.length}")
            if code.alphabet_size != self.alphabet_size:
                raise CodeStructureError(
                    f"length-{s} code uses alphabet {code.alphabet_size}, expected {self.alphabet_size}"
                )
            if s < 2:
                raise CodeStructureError(f"minimum string length must be at least 2, got {s}")
        object.__setattr__(self, "codes", ordered)

    @classmethod
    def of(cls, words: Iterable[WordLike], alphabet_size: int | None = None) -> "VariableLengthCode":
        ws = [as_word(w) for w in words]
        if alphabet_size is None:
            alphabet_size = max(2, max((max(w) for w in ws if w), default=0) + 1)
        groups: dict[int, list[Word]] = {}
        for w in ws:
            groups.setdefault(len(w), []).append(w)
        return cls(alphabet_size, {s: WordCode(alphabet_size, s, tuple(g)) for s, g in groups.items()})

    @classmethod
    def from_codes(cls, *codes: WordCode) -> "VariableLengthCode":
        if not codes:
            raise CodeStructureError("no codes given")
        lengths = [c.length for c in codes]
        if len(set(lengths)) != len(lengths):
            raise CodeStructureError("two codes share a length")
        return cls(codes[0].alphabet_size, {c.length: c for c in codes})

    @property
    def min_length(self) -> int:
        return min(self.codes)

    @property
    def lengths(self) -> list[int]:
        return list(self.codes)

    def words(self) -> list[Word]:
        return [w for code in self.codes.values() for w in code.words]

    def __getitem__(self, s: int) -> WordCode:
        return self.codes[s]


def _structure_problems(words, alphabet_size, length) -> list[str]:
    problems = []
    if alphabet_size < 2:
        problems.append(f"alphabet size must be at least 2, got {alphabet_size}")
    if length < 1:
        problems.append(f"word length must be positive, got {length}")
    seen = set()
    for raw in words:
        w = as_word(raw)
        if len(w) != length:
            problems.append(f"word {format_word(w, alphabet_size)!r} has length {len(w)}, expected {length}")
        if any(not 0 <= x < alphabet_size for x in w):
            problems.append(f"word {format_word(w, alphabet_size)!r} uses a symbol outside the alphabet")
        if w in seen:
            problems.append(f"duplicate word {format_word(w, alphabet_size)!r}")
        seen.add(w)
    return problems


def _cross_detail(v: Word, w: Word, hit: tuple[str, int], k: int) -> str:
    side, n = hit
    a, b = (v, w) if side == "vw" else (w, v)
    return (
        f"prefix of {format_word(a, k)} equals suffix of {format_word(b, k)} "
        f"({format_word(a[:n], k)})"
    )


def validate_word_code(code: WordCode | Iterable[WordLike], alphabet_size: int | None = None) -> Report:
    """Check that every word is bifix-free and every pair is cross-bifix-free.

    ``code`` may also be a plain iterable of words; structural defects are
    then listed in ``report.structural`` instead of raising.
    """
    out = ReportBuilder()
    if isinstance(code, WordCode):
        words, k = list(code.words), code.alphabet_size
    else:
        words = [as_word(w) for w in code]
        k = alphabet_size if alphabet_size is not None else max(2, max((max(w) for w in words if w), default=0) + 1)
        length = len(words[0]) if words else 1
        out.structural.extend(_structure_problems(words, k, length))
        words = sorted(set(words))

    for w in words:
        out.checked += 1
        b = border_length(w)
        if b:
            out.add("border", (w,), f"{format_word(w, k)} has border {format_word(w[:b], k)}", b)
    for v, w in itertools.combinations(words, 2):
        out.checked += 1
        hit = cross_overlap(v, w)
        if hit is not None:
            out.add("cross", (v, w), _cross_detail(v, w, hit, k), hit)
    return out.build()


def validate_variable_length_code(code: VariableLengthCode) -> Report:
    """Within-length codes must be cross-bifix-free; words of different
    lengths must be strong non-overlapping (no overlap and no containment)."""
    k = code.alphabet_size
    report = Report()
    for c in code.codes.values():
        report = report.merge(validate_word_code(c))
    out = ReportBuilder()
    for s, t in itertools.combinations(code.lengths, 2):
        for v in code[s].words:
            for w in code[t].words:
                out.checked += 1
                hit = cross_overlap(v, w)
                if hit is not None:
                    out.add("cross", (v, w), _cross_detail(v, w, hit, k), hit)
                pos = factor_position(v, w)
                if pos >= 0:
                    out.add(
                        "factor",
                        (v, w),
                        f"{format_word(v, k)} occurs in {format_word(w, k)} at position {pos}",
                        pos,
                    )
    return report.merge(out.build())


def search_word_codes(
    alphabet_size: int,
    length: int,
    target_size: int,
    budget: int = DEFAULT_BUDGET,
    limit: int | None = None,
) -> list[WordCode]:
    """All cross-bifix-free codes of exactly ``target_size`` words, in
    lexicographic order of their sorted word lists.

    Depth-first over bifix-free words in lexicographic order, pruning any
    branch where the remaining compatible words cannot reach the target.
    ``budget`` caps the number of search nodes; when it runs out
    :class:`SearchBudgetExceeded` is raised with the partial result.
    ``limit`` stops the search early after that many codes.
    """
    if alphabet_size < 2:
        raise ValueError("alphabet size must be at least 2")
    if length < 1 or target_size < 1:
        raise ValueError("length and target size must be positive")

    cands = [w for w in itertools.product(range(alphabet_size), repeat=length) if is_bifix_free(w)]
    n = len(cands)
    compat = [
        frozenset(j for j in range(i + 1, n) if are_cross_bifix_free(cands[i], cands[j]))
        for i in range(n)
    ]
    found: list[WordCode] = []
    nodes = 0

    def dfs(chosen: list[int], pool: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(found, budget)
        if len(chosen) == target_size:
            found.append(WordCode(alphabet_size, length, tuple(cands[i] for i in chosen)))
            return limit is not None and len(found) >= limit
        need = target_size - len(chosen)
        for pos, i in enumerate(pool):
            if len(pool) - pos < need:
                break
            nxt = [j for j in pool[pos + 1:] if j in compat[i]]
            if len(nxt) + 1 < need:
                continue
            chosen.append(i)
            stop = dfs(chosen, nxt)
            chosen.pop()
            if stop:
                return True
        return False

    dfs([], list(range(n)))
    return found
