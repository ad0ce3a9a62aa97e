"""Acceptance battery: one test per criterion, each printing a PASS
line with its elapsed time (visible with pytest -s / -rA).  All
comparisons are exact; the stated runtime ceilings are asserted too."""

import random
import time
from itertools import product
from math import comb

from gallai import (
    Coloring,
    check_gr_star_conditions,
    construct_f_lower,
    construct_gr_k3_extremal,
    construct_gr_k4e_extremal,
    construct_multiplicity_extremal,
    construct_nim_star,
    count_nim_star_edges,
    count_protected_edges,
    ex_star,
    exists_avoiding,
    figure1_fixture,
    find_gallai_partition,
    find_mono_subgraph,
    g_multiplicity_bounds,
    goodman_m2,
    gr_k3,
    max_gr_star_witness,
    min_mono_triangles,
    mixed_k4e_extremal_order,
    random_gallai_coloring,
    triangle_census,
    turan_count,
    verify_gallai_partition,
)
from gallai.partition import _candidate_color_sets, _merge_fixpoint

from verify_support import is_valid_partition, set_partitions


class _Timer:
    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.seconds = time.monotonic() - self.start


def _report(num, timer, detail):
    print(f"CRITERION {num:02d} PASS ({timer.seconds:.1f}s): {detail}")


def test_criterion_01_goodman_oracle_equivalence():
    expected = {3: 0, 4: 0, 5: 0, 6: 2, 7: 4}
    with _Timer() as t:
        for n, want in expected.items():
            out = min_mono_triangles(n, 2, False)
            assert out.exhaustive
            assert out.value == want == goodman_m2(n), f"n={n}"
            assert triangle_census(out.witness).mono_total == want
    assert t.seconds <= 60
    _report(1, t, f"min mono over 2-colorings equals closed form for n=3..7: {list(expected.values())}")


def test_criterion_02_classical_ramsey_brackets():
    with _Timer() as t:
        assert exists_avoiding(5, 2, ["K3", "K3"], False).value == 1
        out6 = exists_avoiding(6, 2, ["K3", "K3"], False)
        assert out6.value == 0 and out6.exhaustive
        assert exists_avoiding(8, 2, ["K4+e", "K3"], False).value == 1
        out9 = exists_avoiding(9, 2, ["K4+e", "K3"], False)
        assert out9.value == 0 and out9.exhaustive
    assert t.seconds <= 300
    _report(2, t, "avoidance flips at n=6 for (K3,K3) and n=9 for (K4+e,K3)")


def test_criterion_03_gr_k3_lower_bound_witnesses():
    sizes = {1: 2, 2: 5, 3: 10, 4: 25, 5: 50}
    with _Timer() as t:
        for k, order in sizes.items():
            c = construct_gr_k3_extremal(k)
            assert c.n == order == gr_k3(k) - 1
            cen = triangle_census(c)
            assert cen.rainbow == 0 and cen.mono_total == 0, k
    _report(3, t, f"triangle-free Gallai witnesses at sizes {list(sizes.values())}")


def test_criterion_04_mixed_k4e_witnesses():
    instances = [
        (k, s)
        for k in range(1, 11)
        for s in range(0, k + 1)
        if mixed_k4e_extremal_order(k, s) <= 300
    ]
    spot = {(2, 1): 8, (2, 2): 17, (3, 1): 20, (3, 2): 34, (3, 3): 68, (4, 4): 289}
    with _Timer() as t:
        for k, s in instances:
            c = construct_gr_k4e_extremal(k, s)
            assert c.n == mixed_k4e_extremal_order(k, s)
            if (k, s) in spot:
                assert c.n == spot[k, s]
            assert triangle_census(c).rainbow == 0
            for q in range(1, s + 1):
                assert not find_mono_subgraph(c, q, "K4+e").present, (k, s, q)
            for q in range(s + 1, k + 1):
                assert not find_mono_subgraph(c, q, "K3").present, (k, s, q)
    assert t.seconds <= 600
    _report(4, t, f"{len(instances)} mixed-target witnesses up to 300 vertices")


def test_criterion_05_multiplicity_exactness():
    with _Timer() as t:
        for tt in range(5):
            c = construct_multiplicity_extremal(3, 11 + tt)
            assert triangle_census(c).mono_total == tt + 1, tt
        assert triangle_census(construct_multiplicity_extremal(4, 26)).mono_total == 2
        for k in range(1, 5):
            for n in range(gr_k3(k), gr_k3(k) + 31):
                upper, lower = g_multiplicity_bounds(k, n)
                got = triangle_census(construct_multiplicity_extremal(k, n)).mono_total
                assert got == upper and got >= lower, (k, n)
    _report(5, t, "minimum-count constructions meet the upper bound for k<=4, n<=threshold+30")


def test_criterion_06_f_lower_turan_counts():
    with _Timer() as t:
        for k, n in [(2, 6), (2, 20), (3, 30), (4, 55)]:
            c = construct_f_lower(n, k)
            want = turan_count(n, gr_k3(k - 1) - 1)
            assert count_protected_edges(c) == want, (k, n)
    _report(6, t, "protected-edge counts equal Turan numbers on all four instances")


def test_criterion_07_partition_soundness():
    with _Timer() as t:
        colorings = [construct_gr_k3_extremal(k) for k in range(2, 6)]
        colorings += [
            construct_gr_k4e_extremal(k, s)
            for k in range(1, 11)
            for s in range(0, k + 1)
            if mixed_k4e_extremal_order(k, s) <= 300
        ]
        for k in range(1, 5):
            colorings += [
                construct_multiplicity_extremal(k, n)
                for n in range(gr_k3(k), gr_k3(k) + 31)
            ]
        colorings += [construct_f_lower(n, k) for k, n in [(2, 6), (2, 20), (3, 30), (4, 55)]]
        for c in colorings:
            gp = find_gallai_partition(c)
            assert verify_gallai_partition(c, gp)

        rng = random.Random(2024)
        for i in range(1000):
            c = random_gallai_coloring(rng.randint(2, 60), rng.randint(1, 6), rng)
            gp = find_gallai_partition(c)
            assert verify_gallai_partition(c, gp), f"random case {i}"

        # refinement lemma, brute-forced over every Gallai coloring with
        # n <= 5, k <= 3: each candidate fixpoint refines every valid
        # partition whose between-colors it covers
        for n in range(2, 6):
            for colors in product((1, 2, 3), repeat=comb(n, 2)):
                c = Coloring(n, 3, colors)
                if triangle_census(c).rainbow:
                    continue
                valid = []
                for groups in set_partitions(list(range(1, n + 1))):
                    if is_valid_partition(c, groups):
                        # one representative edge per part-pair suffices:
                        # validity already forced each pair monochromatic
                        between = frozenset(
                            c.color(groups[a][0], groups[b][0])
                            for a in range(len(groups))
                            for b in range(a + 1, len(groups))
                        )
                        valid.append((groups, between))
                assert valid, "Gallai coloring must admit a partition"
                for s in _candidate_color_sets(3):
                    fix = _merge_fixpoint(c, s)
                    relevant = [g for g, between in valid if between <= set(s)]
                    if fix is None:
                        assert not relevant, (colors, s)
                        continue
                    groups, _, _ = fix
                    for target in relevant:
                        target_sets = [set(p) for p in target]
                        assert all(
                            any(set(p) <= ts for ts in target_sets) for p in groups
                        ), (colors, s)
    assert t.seconds <= 300
    _report(7, t, "partition sound on all constructions, 1000 random blow-ups, refinement brute-checked")


def test_criterion_08_gr_star_small_case_exactness():
    with _Timer() as t:
        assert max_gr_star_witness(2, 2)[0] is True
        assert max_gr_star_witness(3, 2)[0] is False
        assert max_gr_star_witness(5, 3)[0] is True
        assert max_gr_star_witness(6, 3)[0] is False
        fx = figure1_fixture()
        assert fx.pairs.n == 10 and fx.pairs.k == 4
        assert check_gr_star_conditions(fx).passes
    assert t.seconds <= 120
    _report(8, t, "witness existence flips at n=3 (k=2) and n=6 (k=3); fixture passes")


def test_criterion_09_nim_star_construction():
    with _Timer() as t:
        for n, h, k in [(20, 3, 3), (40, 3, 4), (40, 4, 3)]:
            c = construct_nim_star(n, h, k)
            assert count_nim_star_edges(c, h) >= (k - 1) * ex_star(n, h), (n, h, k)
        c2 = construct_nim_star(20, 3, 2)
        assert count_nim_star_edges(c2, 3) == ex_star(20, 3)
    _report(9, t, "layered star-free colorings meet the nim lower bound; equality at k=2")


def test_criterion_10_census_conservation_properties():
    with _Timer() as t:
        rng = random.Random(99)
        for i in range(10**4):
            n = rng.randint(3, 30)
            k = rng.randint(1, 6)
            c = Coloring(n, k, [rng.randint(1, k) for _ in range(comb(n, 2))])
            cen = triangle_census(c)
            assert cen.mono_total + cen.bichromatic + cen.rainbow == comb(n, 3), i

            cperm = dict(zip(range(1, k + 1), rng.sample(range(1, k + 1), k)))
            cc = c.permute_colors(cperm)
            cen_c = triangle_census(cc)
            assert cen_c.bichromatic == cen.bichromatic
            assert cen_c.rainbow == cen.rainbow
            assert all(
                cen_c.mono_per_color[cperm[q]] == cen.mono_per_color[q]
                for q in range(1, k + 1)
            )
            vperm = dict(zip(range(1, n + 1), rng.sample(range(1, n + 1), n)))
            cv = c.permute_vertices(vperm)
            assert triangle_census(cv) == cen

            h = rng.randint(1, 6)
            protected = count_protected_edges(c)
            assert count_protected_edges(cc) == protected
            assert count_protected_edges(cv) == protected
            nim = count_nim_star_edges(c, h)
            assert count_nim_star_edges(cc, h) == nim
            assert count_nim_star_edges(cv, h) == nim
    _report(10, t, "conservation and permutation invariances on 10^4 seeded colorings")
