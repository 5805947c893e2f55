"""Brute-force reference implementations, written without the package's
helpers so they can check it."""

import itertools


def proper_prefixes(w):
    return {tuple(w[:k]) for k in range(1, len(w))}


def proper_suffixes(w):
    return {tuple(w[len(w) - k:]) for k in range(1, len(w))}


def bifix_free(w):
    for p in proper_prefixes(w):
        for s in proper_suffixes(w):
            if p == s:
                return False
    return True


def cross_free(v, w):
    return not (proper_prefixes(v) & proper_suffixes(w)) and not (proper_prefixes(w) & proper_suffixes(v))


def inner_factor(v, w):
    # w == a + v + b with a, b not both empty
    sv = ",".join(map(str, v))
    sw = ",".join(map(str, w))
    if len(v) >= len(w):
        return False
    return ("," + sv + ",") in ("," + sw + ",")


def strong(v, w):
    return cross_free(v, w) and not inner_factor(v, w) and not inner_factor(w, v)


def cells(grid, dr=0, dc=0):
    return {(i + dr, j + dc): x for i, row in enumerate(grid) for j, x in enumerate(row)}


def canvas_overlap(a, b, skip_zero=False):
    """Slide ``b`` over ``a`` on a dict canvas; True if some placement with a
    non-empty common area agrees everywhere."""
    ca = cells(a)
    ra, rb = len(a), len(b)
    ka, kb = len(a[0]), len(b[0])
    for dr in range(-rb, ra + 1):
        for dc in range(-kb, ka + 1):
            if skip_zero and (dr, dc) == (0, 0):
                continue
            cb = cells(b, dr, dc)
            common = ca.keys() & cb.keys()
            if common and all(ca[p] == cb[p] for p in common):
                return True
    return False


def all_partitions(size):
    """Every cut tuple of 0..size (no limit on bands)."""
    inner = range(1, size)
    for r in range(size):
        yield from itertools.combinations(inner, r)


def literal_partition_overlap(a, b, max_bands=None, self_test=False):
    """Definition-literal check: loop over every partition pair and every
    block pair, computing frames from block indices."""
    def blocks(grid):
        m, n = len(grid), len(grid[0])
        for rc in all_partitions(m):
            if max_bands and len(rc) + 1 > max_bands:
                continue
            for cc in all_partitions(n):
                if max_bands and len(cc) + 1 > max_bands:
                    continue
                re, ce = (0, *rc, m), (0, *cc, n)
                h, k = len(re) - 1, len(ce) - 1
                for i in range(h):
                    for j in range(k):
                        fr = set()
                        if i == 0:
                            fr.add("t")
                        if i == h - 1:
                            fr.add("b")
                        if j == 0:
                            fr.add("l")
                        if j == k - 1:
                            fr.add("r")
                        rect = (re[i], re[i + 1], ce[j], ce[j + 1])
                        content = tuple(tuple(row[ce[j]:ce[j + 1]]) for row in grid[re[i]:re[i + 1]])
                        yield rect, content, frozenset(fr)

    bb = list(blocks(b))
    for ra, ca, fa in blocks(a):
        for rb, cb, fb in bb:
            if self_test and ra == rb:
                continue
            if ca == cb and fa | fb == {"t", "b", "l", "r"}:
                return True
    return False


def family_by_filter(words, top, bottom, h):
    """All h-row stacks of code words that start with top, end with bottom
    and use neither inside."""
    out = []
    for rows in itertools.product(words, repeat=h):
        if rows[0] == top and rows[-1] == bottom and all(r not in (top, bottom) for r in rows[1:-1]):
            out.append(rows)
    return out
