import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from gallai import (
    Coloring,
    count_nim_star_edges,
    count_protected_edges,
    find_mono_subgraph,
    find_rainbow_triangle,
    is_gallai,
    mono_clique,
    paley17_coloring,
    parse_coloring,
    pentagon_coloring,
    triangle_census,
)

RAINBOW_K3 = parse_coloring("3 3\n1 2 1\n1 3 2\n2 3 3")


@st.composite
def colorings(draw, min_n=1, max_n=9, max_k=4):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_k))
    m = comb(n, 2)
    colors = draw(st.lists(st.integers(1, k), min_size=m, max_size=m))
    return Coloring(n, k, colors)


def test_census_mono_k4():
    cen = triangle_census(mono_clique(4, 1))
    assert cen.mono_per_color == {1: 4}
    assert cen.bichromatic == 0 and cen.rainbow == 0


def test_census_pentagon():
    cen = triangle_census(pentagon_coloring(1, 2))
    assert cen.mono_total == 0 and cen.rainbow == 0


def test_census_rainbow_k3():
    assert triangle_census(RAINBOW_K3).rainbow == 1
    assert not is_gallai(RAINBOW_K3)
    assert find_rainbow_triangle(RAINBOW_K3) == (1, 2, 3)


def test_two_colorings_always_gallai():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 12)
        colors = [rng.randint(1, 2) for _ in range(comb(n, 2))]
        assert is_gallai(Coloring(n, 2, colors))


def test_degenerate_sizes():
    assert triangle_census(Coloring(1, 3, ())).mono_total == 0
    assert is_gallai(Coloring(1, 1, ()))
    assert is_gallai(Coloring(2, 5, (3,)))


@given(colorings())
@settings(max_examples=150)
def test_census_matches_brute_force(c):
    mono, bi, rain = helpers.brute_census(c)
    cen = triangle_census(c)
    assert {q: v for q, v in cen.mono_per_color.items() if v} == mono
    assert cen.bichromatic == bi
    assert cen.rainbow == rain
    assert cen.mono_total + bi + rain == comb(c.n, 3)
    assert is_gallai(c) == (rain == 0)
    assert (find_rainbow_triangle(c) is None) == (rain == 0)


# --- monochromatic subgraph detection -------------------------------------


def test_mono_k4e_in_clique():
    report = find_mono_subgraph(mono_clique(5, 1), 1, "K4+e")
    assert report.present
    *quad, pendant = report.witness
    assert len(set(report.witness)) == 5


def test_paley17_has_no_mono_k4_exhaustive():
    c = paley17_coloring(1, 2)
    for color in (1, 2):
        assert not find_mono_subgraph(c, color, "K4").present
        # independent check over all C(17,4) = 2380 quadruples
        assert not helpers.brute_has_mono_clique(c, color, 4)


def test_two_disjoint_k4s_have_no_k4e():
    # color 1: two disjoint K4s; color 2: everything between
    from gallai import lex_pairs

    colors = [1 if (u <= 4) == (v <= 4) else 2 for u, v in lex_pairs(8)]
    c = Coloring(8, 2, colors)
    assert find_mono_subgraph(c, 1, "K4").present
    assert not find_mono_subgraph(c, 1, "K4+e").present
    assert not helpers.brute_has_mono_k4e(c, 1)


@given(colorings(min_n=5, max_n=8, max_k=3))
@settings(max_examples=60, deadline=None)
def test_mono_detection_matches_brute(c):
    for color in range(1, c.k + 1):
        assert find_mono_subgraph(c, color, "K3").present == helpers.brute_has_mono_clique(c, color, 3)
        assert find_mono_subgraph(c, color, "K4").present == helpers.brute_has_mono_clique(c, color, 4)
        assert find_mono_subgraph(c, color, "K4+e").present == helpers.brute_has_mono_k4e(c, color)


@given(colorings(min_n=5, max_n=8, max_k=3))
@settings(max_examples=60, deadline=None)
def test_mono_implication_chain(c):
    for color in range(1, c.k + 1):
        k4e = find_mono_subgraph(c, color, "K4+e").present
        k4 = find_mono_subgraph(c, color, "K4").present
        k3 = find_mono_subgraph(c, color, "K3").present
        if k4e:
            assert k4
        if k4:
            assert k3


def test_witness_edges_carry_color():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(5, 9)
        c = Coloring(n, 2, [rng.randint(1, 2) for _ in range(comb(n, 2))])
        for kind, size in [("K3", 3), ("K4", 4)]:
            report = find_mono_subgraph(c, 1, kind)
            if report.present:
                assert all(
                    c.color(u, v) == 1 for u, v in combinations(report.witness, 2)
                )
        report = find_mono_subgraph(c, 1, "K4+e")
        if report.present:
            *quad, pendant = report.witness
            assert all(c.color(u, v) == 1 for u, v in combinations(quad, 2))
            assert any(c.color(x, pendant) == 1 for x in quad)


def test_kind_validation():
    with pytest.raises(ValueError):
        find_mono_subgraph(mono_clique(4, 1), 1, "K5")
    with pytest.raises(ValueError):
        find_mono_subgraph(mono_clique(4, 1), 2, "K3")


# --- protected edges -------------------------------------------------------


def test_protected_examples():
    assert count_protected_edges(mono_clique(3, 1)) == 0
    assert count_protected_edges(RAINBOW_K3) == 0
    assert count_protected_edges(pentagon_coloring(1, 2)) == 10


@given(colorings())
@settings(max_examples=120)
def test_protected_matches_brute(c):
    assert count_protected_edges(c) == helpers.brute_protected(c)


# --- nim star edges --------------------------------------------------------


def test_nim_star_examples():
    assert count_nim_star_edges(mono_clique(4, 1), 4) == 6
    assert count_nim_star_edges(mono_clique(4, 1), 3) == 0


@given(colorings(), st.integers(1, 6))
@settings(max_examples=120)
def test_nim_star_matches_brute(c, h):
    assert count_nim_star_edges(c, h) == helpers.brute_nim_star(c, h)
