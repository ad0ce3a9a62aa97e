"""Triangle censuses and monochromatic-subgraph detection.

The triangle census classifies every vertex triple of K_n as
monochromatic (one color on its three edges), bichromatic (exactly two
colors) or rainbow (three colors).  A coloring is a Gallai coloring when
its rainbow count is zero.

Counting strategy: monochromatic triangles come from per-color adjacency
bitsets (popcount of common neighborhoods along each edge, divided by
three).  Every non-monochromatic triangle has exactly one vertex where
its two same-colored edges meet, so the "monochromatic cherry" sum
    sum_v sum_c C(deg_c(v), 2)
equals 3*mono + bichromatic, which yields the bichromatic count without
triple enumeration; the rainbow count follows from the total C(n,3).
This keeps the census near O(n^2) per color, fast enough for the
n ~ 300 construction checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .coloring import Coloring, lex_pairs

MONO_KINDS = ("K3", "K4", "K4+e")


@dataclass(frozen=True)
class TriangleCensus:
    """Counts of monochromatic/bichromatic/rainbow triangles."""

    mono_per_color: dict[int, int]
    bichromatic: int
    rainbow: int

    @property
    def mono_total(self) -> int:
        return sum(self.mono_per_color.values())


@dataclass(frozen=True)
class MonoSubgraphReport:
    """Outcome of a monochromatic K3/K4/K4+e hunt in one color.

    For kind "K4+e" a witness lists the four clique vertices followed by
    the pendant vertex; for the cliques the witness is sorted.
    """

    color: int
    kind: str
    witness: Optional[tuple[int, ...]]

    @property
    def present(self) -> bool:
        return self.witness is not None


def triangle_census(coloring: Coloring) -> TriangleCensus:
    n, k = coloring.n, coloring.k
    adj = coloring.adjacency()
    deg = coloring.degrees()
    by_color = coloring.edges_by_color()

    mono = {}
    for c in range(1, k + 1):
        adj_c = adj[c]
        triples = 0
        for u, v in by_color[c]:
            triples += (adj_c[u] & adj_c[v]).bit_count()
        assert triples % 3 == 0
        mono[c] = triples // 3
    mono_total = sum(mono.values())

    cherries = 0
    for c in range(1, k + 1):
        deg_c = deg[c]
        for v in range(1, n + 1):
            d = deg_c[v]
            cherries += d * (d - 1) // 2
    bichromatic = cherries - 3 * mono_total
    rainbow = comb(n, 3) - mono_total - bichromatic
    assert bichromatic >= 0 and rainbow >= 0
    return TriangleCensus(mono, bichromatic, rainbow)


def is_gallai(coloring: Coloring) -> bool:
    """True iff the coloring has no rainbow triangle."""
    return triangle_census(coloring).rainbow == 0


def find_rainbow_triangle(coloring: Coloring) -> Optional[tuple[int, int, int]]:
    """First rainbow triangle in lexicographic order, or None."""
    n = coloring.n
    if coloring.k < 3:
        return None
    color = coloring.color
    for u, v in lex_pairs(n):
        a = color(u, v)
        for w in range(v + 1, n + 1):
            b = color(u, w)
            if b == a:
                continue
            c = color(v, w)
            if c != a and c != b:
                return (u, v, w)
    return None


def _mono_k3(coloring, c) -> Optional[tuple[int, ...]]:
    adj_c = coloring.adjacency()[c]
    for u, v in coloring.edges_by_color()[c]:
        common = adj_c[u] & adj_c[v]
        if common:
            w = (common & -common).bit_length()
            return tuple(sorted((u, v, w)))
    return None


def _iter_mono_k4(coloring, c):
    """Yield each monochromatic K4 of color c (possibly repeatedly)."""
    adj_c = coloring.adjacency()[c]
    for u, v in coloring.edges_by_color()[c]:
        common = adj_c[u] & adj_c[v]
        rest = common
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length()
            higher = common & adj_c[w] & ~((1 << w) - 1)
            while higher:
                lowx = higher & -higher
                higher ^= lowx
                x = lowx.bit_length()
                yield u, v, w, x


def _mono_k4(coloring, c) -> Optional[tuple[int, ...]]:
    for quad in _iter_mono_k4(coloring, c):
        return tuple(sorted(quad))
    return None


def _mono_k4e(coloring, c) -> Optional[tuple[int, ...]]:
    adj_c = coloring.adjacency()[c]
    for quad in _iter_mono_k4(coloring, c):
        mask = 0
        for y in quad:
            mask |= 1 << (y - 1)
        for y in sorted(quad):
            extra = adj_c[y] & ~mask
            if extra:
                pendant = (extra & -extra).bit_length()
                return tuple(sorted(quad)) + (pendant,)
    return None


def find_mono_subgraph(coloring: Coloring, color: int, kind: str) -> MonoSubgraphReport:
    """Search one color class for a monochromatic K3, K4 or K4+e."""
    if kind not in MONO_KINDS:
        raise ValueError(f"kind must be one of {MONO_KINDS}, got {kind!r}")
    if not 1 <= color <= coloring.k:
        raise ValueError(f"color {color} outside 1..{coloring.k}")
    if kind == "K3":
        witness = _mono_k3(coloring, color)
    elif kind == "K4":
        witness = _mono_k4(coloring, color)
    else:
        witness = _mono_k4e(coloring, color)
    return MonoSubgraphReport(color=color, kind=kind, witness=witness)


def count_protected_edges(coloring: Coloring) -> int:
    """Edges contained in no rainbow and no monochromatic triangle.

    For an edge uv of color a, a monochromatic triangle through it exists
    iff u and v have a common a-neighbor.  A rainbow triangle through it
    exists iff some w with c(uw) != a != c(vw) has c(uw) != c(vw), i.e.
    iff the set of vertices avoiding color a toward both endpoints is not
    covered by the same-color-toward-both sets.
    """
    n, k = coloring.n, coloring.k
    adj = coloring.adjacency()
    full = (1 << n) - 1
    protected = 0
    for (u, v), a in zip(lex_pairs(n), coloring.colors):
        adj_a = adj[a]
        if adj_a[u] & adj_a[v]:
            continue
        others = full & ~(1 << (u - 1)) & ~(1 << (v - 1))
        candidates = others & ~adj_a[u] & ~adj_a[v]
        if candidates:
            same = 0
            for c in range(1, k + 1):
                same |= adj[c][u] & adj[c][v]
            if candidates & ~same:
                continue
        protected += 1
    return protected


def count_nim_star_edges(coloring: Coloring, h: int) -> int:
    """Edges lying in no monochromatic star with h leaves.

    An edge uv of color q lies in a monochromatic K_{1,h} iff one of its
    endpoints has q-degree >= h, so it counts exactly when both
    endpoints have q-degree <= h-1.
    """
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    deg = coloring.degrees()
    count = 0
    for (u, v), q in zip(lex_pairs(coloring.n), coloring.colors):
        deg_q = deg[q]
        if deg_q[u] <= h - 1 and deg_q[v] <= h - 1:
            count += 1
    return count
