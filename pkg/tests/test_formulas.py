from itertools import combinations
from math import comb

import pytest

import helpers
from gallai import (
    ex_star,
    g_multiplicity_bounds,
    goodman_m2,
    gr_k3,
    gr_mixed_k4e,
    gr_star_k3,
    m3_formula,
    mixed_k4e_extremal_order,
    turan_count,
    turan_parts,
)


def test_goodman_values():
    assert goodman_m2(6) == 2
    assert goodman_m2(5) == 0
    assert goodman_m2(7) == 4
    for n in range(1, 5):
        assert goodman_m2(n) == 0
    # classical sequence continues 8, 12, 20, 28, 40
    assert [goodman_m2(n) for n in range(8, 13)] == [8, 12, 20, 28, 40]


def test_goodman_matches_brute_small():
    for n in range(3, 7):
        assert goodman_m2(n) == helpers.brute_min_mono(n, 2)


def test_m3_values():
    assert m3_formula(16).value == 8
    assert m3_formula(10).value == 0
    assert m3_formula(11).value == 1
    assert m3_formula(16).validity == "asymptotic-only"


def test_gr_k3_values():
    assert [gr_k3(k) for k in (1, 2, 3, 4)] == [3, 6, 11, 26]
    for k in range(1, 9):
        assert gr_k3(k + 1) > gr_k3(k)


def test_gr_mixed_values():
    assert gr_mixed_k4e(2, 2) == 18
    assert gr_mixed_k4e(2, 1) == 9
    assert gr_mixed_k4e(3, 3) == 69
    assert gr_mixed_k4e(4, 4) == 290
    for k in range(1, 8):
        assert gr_mixed_k4e(k, 0) == gr_k3(k)
    for s in range(0, 5):
        for k in range(max(s, 1), 9):
            assert gr_mixed_k4e(k + 1, s) > gr_mixed_k4e(k, s)


def test_gr_mixed_exceeds_64_bits():
    # products of 17-powers overflow fixed-width arithmetic around k=32
    big = gr_mixed_k4e(60, 60)
    assert big == 17**30 + 1
    assert big > 2**64


def test_gr_star_values():
    assert gr_star_k3(2) == 3
    assert gr_star_k3(4) == 11
    assert gr_star_k3(5) == 26
    with pytest.raises(ValueError):
        gr_star_k3(1)


def test_turan_values():
    assert turan_count(6, 2) == 9
    assert turan_count(30, 5) == 360
    for n in range(1, 12):
        for r in range(n, n + 4):
            assert turan_count(n, r) == comb(n, 2)


def test_turan_matches_generated_partition():
    for n in range(1, 51):
        for r in range(1, n + 1):
            parts = turan_parts(n, r)
            sizes = sorted(len(p) for p in parts)
            assert max(sizes) - min(sizes) <= 1
            cross = sum(
                len(a) * len(b) for a, b in combinations(parts, 2)
            )
            assert cross == turan_count(n, r), (n, r)


def test_turan_closed_form_agreement():
    # (1 - 1/r) n^2/2 + (p - r) p / (2r) with p = n mod r, as an exact rational
    for n in range(1, 60):
        for r in range(1, n + 1):
            p = n % r
            numerator = (r - 1) * n * n + (p - r) * p
            assert numerator % (2 * r) == 0
            assert turan_count(n, r) == numerator // (2 * r)


def test_g_bounds_examples():
    assert g_multiplicity_bounds(3, 11) == (1, 1)
    assert g_multiplicity_bounds(4, 26) == (2, 2)
    for t in range(5):
        upper, lower = g_multiplicity_bounds(3, 11 + t)
        assert upper == t + 1
    # k=2 reduces to the 2-coloring minimum
    for n in range(6, 30):
        upper, _ = g_multiplicity_bounds(2, n)
        assert upper == goodman_m2(n)


def test_g_bounds_rejects_small_n():
    with pytest.raises(ValueError):
        g_multiplicity_bounds(3, 10)


def test_g_bounds_lower_le_upper():
    for k in range(1, 6):
        for n in range(gr_k3(k), gr_k3(k) + 40):
            upper, lower = g_multiplicity_bounds(k, n)
            assert lower <= upper, (k, n)
    for k in (1, 2, 3, 4, 5):
        assert g_multiplicity_bounds(k, gr_k3(k))[0] == g_multiplicity_bounds(k, gr_k3(k))[1]


def test_g_bounds_odd_k_closed_form():
    for k in (3, 5):
        step = 5 ** ((k - 1) // 2)
        for t in range(step):
            upper, _ = g_multiplicity_bounds(k, gr_k3(k) + t)
            assert upper == t + 1, (k, t)


def test_ex_star_values():
    assert ex_star(20, 3) == 20
    assert ex_star(7, 4) == 10
    for n in range(1, 10):
        assert ex_star(n, 1) == 0


def test_mixed_order_table():
    table = {
        (2, 1): 8,
        (2, 2): 17,
        (3, 1): 20,
        (3, 2): 34,
        (3, 3): 68,
        (4, 4): 289,
    }
    for (k, s), want in table.items():
        assert mixed_k4e_extremal_order(k, s) == want
