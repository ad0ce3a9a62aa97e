"""Brute-force oracles: independent (triple-loop / full-enumeration)
reimplementations of the quantities the library computes cleverly."""

from collections import Counter
from itertools import combinations, product
from math import comb

from gallai import Coloring, lex_pairs


def all_colorings(n, k):
    for colors in product(range(1, k + 1), repeat=comb(n, 2)):
        yield Coloring(n, k, colors)


def brute_census(c):
    """Classify every triple by direct enumeration."""
    mono = Counter()
    bi = rain = 0
    for u, v, w in combinations(range(1, c.n + 1), 3):
        cols = {c.color(u, v), c.color(u, w), c.color(v, w)}
        if len(cols) == 1:
            mono[cols.pop()] += 1
        elif len(cols) == 2:
            bi += 1
        else:
            rain += 1
    return dict(mono), bi, rain


def brute_protected(c):
    count = 0
    for u, v in lex_pairs(c.n):
        ok = True
        for w in range(1, c.n + 1):
            if w in (u, v):
                continue
            cols = {c.color(u, v), c.color(u, w), c.color(v, w)}
            if len(cols) != 2:
                ok = False
                break
        if ok:
            count += 1
    return count


def brute_nim_star(c, h):
    count = 0
    for u, v in lex_pairs(c.n):
        q = c.color(u, v)
        du = sum(1 for w in range(1, c.n + 1) if w != u and c.color(u, w) == q)
        dv = sum(1 for w in range(1, c.n + 1) if w != v and c.color(v, w) == q)
        if du <= h - 1 and dv <= h - 1:
            count += 1
    return count


def brute_min_mono(n, k, gallai_only=False):
    best = None
    for c in all_colorings(n, k):
        mono, _, rain = brute_census(c)
        if gallai_only and rain:
            continue
        total = sum(mono.values())
        if best is None or total < best:
            best = total
    return best


def brute_max_protected(n, k):
    return max(brute_protected(c) for c in all_colorings(n, k))


def brute_has_mono_clique(c, color, size):
    for vs in combinations(range(1, c.n + 1), size):
        if all(c.color(u, v) == color for u, v in combinations(vs, 2)):
            return True
    return False


def brute_has_mono_k4e(c, color):
    for vs in combinations(range(1, c.n + 1), 4):
        if not all(c.color(u, v) == color for u, v in combinations(vs, 2)):
            continue
        for pendant in range(1, c.n + 1):
            if pendant in vs:
                continue
            if any(c.color(x, pendant) == color for x in vs):
                return True
    return False
