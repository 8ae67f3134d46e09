"""Acceptance criteria, one test each. The terminal summary prints a PASS/FAIL
line per criterion (see conftest)."""

import math
import random

import pytest

from absgraph.graph import disjoint_union, from_edge_list, pair_order, petersen
from absgraph.qspr import BENZENOIDS, f_significance, fit_simple_ols
from absgraph.spectral import WeightKind, build_weighted_matrix, eigenvalues_symmetric
from absgraph.theorems import (
    BOUND_IDS, SKIPPED, GraphContext, run_exhaustive_suite, verify_energy_maxdeg,
    verify_radius_abs_index, verify_radius_degree, verify_radius_sum_connectivity,
)

from conftest import fam
from oracles import t_two_tailed_pvalue


def abs_spectrum(g):
    return eigenvalues_symmetric(build_weighted_matrix(g, WeightKind.ABS)).values


def within_factor(x, ref, factor):
    return ref / factor <= x <= ref * factor


def test_criterion_1_golden_spectra():
    assert abs_spectrum(fam("path", 3))[2] == pytest.approx(-0.81649, abs=1e-4)
    assert abs_spectrum(fam("path", 4))[3] == pytest.approx(-1.0306, abs=5e-4)


def test_criterion_2_closed_form_families():
    for n in range(3, 51):
        vals = abs_spectrum(fam("complete", n))
        w = math.sqrt((n - 2) / (n - 1))
        assert abs(vals[-1] + w) <= 1e-9, n
        assert abs(vals[0] - (n - 1) * w) <= 1e-8, n
    for n1 in range(1, 20):
        for n2 in range(1, 21 - n1):
            vals = abs_spectrum(fam("complete_bipartite", n1, n2))
            target = math.sqrt(n1 * n2 * (1 - 2 / (n1 + n2)))
            nonzero = [v for v in vals if abs(v) > 1e-9]
            if target == 0:
                assert nonzero == [], (n1, n2)
                continue
            assert len(nonzero) == 2, (n1, n2)
            assert abs(nonzero[0] - target) <= 1e-9 and abs(nonzero[1] + target) <= 1e-9


def test_criterion_3_trace_identities_on_random_graphs():
    rng = random.Random(20240607)
    for _ in range(1000):
        n = rng.randint(1, 40)
        g = from_edge_list(n, [e for e in pair_order(n) if rng.random() < 0.3])
        c = GraphContext(g)
        vals = c.abs_spectrum.values
        assert abs(math.fsum(vals)) <= 1e-8 * n
        assert abs(math.fsum(v * v for v in vals) - 2 * c.m_minus_h) <= 1e-7 * g.m or g.m == 0


def test_criterion_4_exhaustive_classification_n6():
    result = run_exhaustive_suite(6)
    assert result.graphs_checked == 1 + 1 + 4 + 38 + 728 + 26704
    assert result.violations == []
    for tid in ("least_eig", "two_distinct", "bip_sym", "three_distinct_bip", "rowsum"):
        assert result.checks_run[tid] > 0
    for tid in BOUND_IDS:
        assert result.checks_run[tid] + result.skipped.get(tid, 0) > 0


def test_criterion_5_equality_fixtures():
    for g in (fam("cycle", 4), fam("complete", 4), petersen()):
        r = verify_radius_abs_index(g)
        assert r.equality_detected and abs(r.slack) <= 1e-6
        r = verify_radius_degree(g)
        assert all(abs(s.slack) <= 1e-6 for s in r.sides)
    star = fam("star", 3)
    for g in (star, disjoint_union([star, fam("complete", 2), fam("complete", 1)])):
        r = verify_energy_maxdeg(g)
        assert r.status != SKIPPED and abs(r.slack) <= 1e-6
    r = verify_radius_sum_connectivity(star)
    assert all(abs(s.slack) <= 1e-6 for s in r.sides) and len(r.sides) == 2


def test_criterion_6_qspr_reproduction():
    xs = [r.e_abs for r in BENZENOIDS]
    bp = fit_simple_ols(xs, [r.bp for r in BENZENOIDS])
    assert abs(bp.slope - 22.684) <= 0.002
    assert abs(bp.intercept - 2.25) <= 0.02
    assert abs(bp.r2 - 0.9941) <= 2e-4
    assert abs(bp.se_estimate - 7.8838) <= 0.002
    assert abs(bp.f_stat - 3194.0) <= 1.0
    assert within_factor(bp.significance, 1.23e-22, 1.1)

    pi = fit_simple_ols(xs, [r.e_pi for r in BENZENOIDS])
    assert abs(abs(pi.slope) - 1.2668) <= 0.002
    assert pi.slope > 0, "pi-energy slope sign"
    assert abs(pi.intercept - 1.0586) <= 0.02
    assert abs(pi.r2 - 0.9982) <= 2e-4
    assert abs(pi.se_estimate - 0.2425) <= 0.002
    assert abs(pi.f_stat - 10522.3) <= 3
    assert within_factor(pi.significance, 1.54e-27, 1.1)


def test_criterion_7_statistics_oracle():
    for t in (0.5, 1, 2, 5, 10):
        for d2 in (5, 19, 100):
            assert abs(f_significance(t * t, 1, d2) - t_two_tailed_pvalue(t, d2)) <= 1e-10
