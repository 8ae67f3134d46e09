import math

import pytest

from absgraph.graph import (
    analyze_structure, disjoint_union, enumerate_connected, from_edge_list, parse_graph6,
    petersen, rook_graph, write_graph6,
)
from absgraph.spectral import WeightKind
from absgraph.theorems import (
    BOUND_IDS, EQ_TOL, SKIPPED, THEOREM_IDS, GraphContext, PreconditionError, SuiteResult,
    check, check_all, check_graph, run_exhaustive_suite, verify_abc_abs_relation,
    verify_bipartite_symmetry, verify_energy_abs_index, verify_energy_maxdeg, verify_energy_mH,
    verify_least_eigenvalue_classification, verify_radius_abs_index, verify_radius_chi_randic,
    verify_radius_degree, verify_radius_size_harmonic, verify_radius_sum_connectivity,
    verify_radius_unicyclic, verify_row_sum_lemma, verify_spread_bounds,
    verify_three_distinct_bipartite, verify_trace_identities, verify_two_distinct_classification,
)

from conftest import fam

K2, K4, C4, C5, C6 = fam("complete", 2), fam("complete", 4), fam("cycle", 4), fam("cycle", 5), fam("cycle", 6)
STAR3 = fam("star", 3)
P3, P4 = fam("path", 3), fam("path", 4)
K23 = fam("complete_bipartite", 2, 3)
S2, S3, S15 = math.sqrt(2), math.sqrt(3), math.sqrt(1.5)


def approx(x):
    return pytest.approx(x, abs=1e-9)


def test_theorem_ids_are_stable():
    assert THEOREM_IDS == ("trace", "least_eig", "two_distinct", "bip_sym", "three_distinct_bip",
                           "rowsum", "radius_abs", "radius_mh", "radius_deg", "radius_sc",
                           "radius_chi_r", "radius_unicyclic", "energy_mh", "energy_abs",
                           "spread", "energy_maxdeg", "abc_abs")
    assert len(BOUND_IDS) == 12


# ------------------------------------------------------ identities

def test_trace_examples():
    r = verify_trace_identities(K4)
    assert r.holds and r.lhs == approx(8.0) and r.rhs == approx(2 * (6 - 2))
    r = verify_trace_identities(disjoint_union([K2, K2]))
    assert r.holds and r.lhs == 0 and r.rhs == 0
    r = verify_trace_identities(STAR3)
    assert r.holds and r.lhs == approx(3.0) and r.rhs == approx(2 * (3 - 1.5))


# -------------------------------------------------- classifications

def test_least_eig_examples():
    r = verify_least_eigenvalue_classification(fam("complete", 5))
    assert r.holds and r.lhs == approx(-math.sqrt(0.75)) and r.extremal_class_matched
    r = verify_least_eigenvalue_classification(P4)
    assert r.holds and r.lhs == pytest.approx(-1.0306, abs=1e-4) and not r.extremal_class_matched
    r = verify_least_eigenvalue_classification(C4)
    assert r.holds and r.lhs == approx(-S2)
    assert verify_least_eigenvalue_classification(P3).extremal_class_matched
    with pytest.raises(PreconditionError):
        verify_least_eigenvalue_classification(disjoint_union([K2, K2]))


def test_two_distinct_examples():
    r = verify_two_distinct_classification(fam("complete", 6))
    assert r.holds and r.lhs == 2 and r.extremal_class_matched
    r = verify_two_distinct_classification(P3)
    assert r.holds and r.lhs == 3
    r = verify_two_distinct_classification(K23)
    assert r.holds and r.lhs == 3
    with pytest.raises(PreconditionError):
        verify_two_distinct_classification(K2)


def test_bip_sym_examples():
    for g in (C6, C5, fam("complete", 1), K23, petersen()):
        assert verify_bipartite_symmetry(g).holds
    assert verify_bipartite_symmetry(C6).extremal_class_matched
    assert not verify_bipartite_symmetry(C5).extremal_class_matched


def test_three_distinct_bip_examples():
    r = verify_three_distinct_bipartite(K23)
    assert r.holds and r.lhs == 3 and r.extremal_class_matched
    r = verify_three_distinct_bipartite(P4)
    assert r.holds and r.lhs == 4 and not r.extremal_class_matched
    r = verify_three_distinct_bipartite(C6)
    assert r.holds and r.lhs == 4
    with pytest.raises(PreconditionError):
        verify_three_distinct_bipartite(C5)


def test_rowsum_examples():
    assert verify_row_sum_lemma(C4).holds and verify_row_sum_lemma(C4).extremal_class_matched
    r = verify_row_sum_lemma(STAR3)
    assert r.holds and not r.extremal_class_matched and r.lhs == approx(3 * math.sqrt(0.5) - math.sqrt(0.5))
    assert verify_row_sum_lemma(fam("complete", 5)).extremal_class_matched
    with pytest.raises(PreconditionError):
        verify_row_sum_lemma(disjoint_union([K2, fam("complete", 1)]))


# --------------------------------------------------------- radius

def test_radius_abs_examples():
    r = verify_radius_abs_index(C4)
    assert r.holds and r.equality_detected and r.extremal_class_matched and r.rhs == approx(S2)
    r = verify_radius_abs_index(STAR3)
    assert r.holds and not r.equality_detected
    assert (r.lhs, r.rhs) == (approx(3 / S2 * 2 / 4), approx(S15))
    r = verify_radius_abs_index(K4)
    assert r.equality_detected and r.rhs == approx(math.sqrt(6))


def test_radius_mh_examples():
    r = verify_radius_size_harmonic(K4)
    assert r.holds and r.side("upper").equal and not r.side("lower").equal
    assert r.side("lower").lhs == approx(S2) and r.side("upper").rhs == approx(math.sqrt(6))
    r = verify_radius_size_harmonic(disjoint_union([K2, K2]))
    assert r.holds and r.side("upper").equal and r.side("lower").equal and r.extremal_class_matched
    r = verify_radius_size_harmonic(C5)
    assert r.side("lower").lhs == approx(1.0) and r.side("upper").rhs == approx(2.0)
    assert r.side("lower").rhs == approx(S2) and not r.equality_detected


def test_radius_deg_examples():
    r = verify_radius_degree(fam("cycle", 7))
    assert r.side("lower").equal and r.side("upper").equal and r.extremal_class_matched
    r = verify_radius_degree(STAR3)
    assert r.holds and not r.equality_detected
    assert r.side("lower").lhs == 0 and r.side("upper").rhs == approx(math.sqrt(6))
    r = verify_radius_degree(K4)
    assert r.equality_detected and r.side("upper").rhs == approx(math.sqrt(6))


def test_radius_sc_examples():
    r = verify_radius_sum_connectivity(STAR3)
    assert r.side("lower").equal and r.side("upper").equal and r.extremal_class_matched
    assert r.side("lower").lhs == approx(S15)
    assert verify_radius_sum_connectivity(C4).side("upper").rhs == approx(S2)
    r = verify_radius_sum_connectivity(P4)
    assert r.holds and not r.equality_detected and not r.extremal_class_matched
    # P4: rho(S) from the (1/sqrt3, 1/2, 1/sqrt3) tridiagonal: x^2 = (2/3 + 1/4 + sqrt((...)))/2
    a2, b2 = 1 / 3, 1 / 4
    rho = math.sqrt((2 * a2 + b2 + math.sqrt((2 * a2 + b2) ** 2 - 4 * a2 * a2)) / 2)
    assert r.side("lower").lhs == approx(rho * 1.0) and r.side("upper").rhs == approx(rho * S2)
    with pytest.raises(PreconditionError):
        verify_radius_sum_connectivity(fam("complete", 1))


def test_radius_chi_randic_examples():
    r = verify_radius_chi_randic(C4)
    assert r.side("lower").lhs == approx(S2) and r.side("lower").equal
    assert r.side("upper").rhs == approx(S3) and not r.side("upper").equal
    r = verify_radius_chi_randic(fam("complete", 3))
    assert r.side("lower").equal and r.side("upper").equal and r.side("upper").rhs == approx(S2)
    r = verify_radius_chi_randic(STAR3)
    assert r.holds and r.side("lower").lhs == 0
    assert r.side("upper").rhs == approx(math.sqrt(2 * 2 * 0.75 * S3))


def test_radius_unicyclic_examples():
    r = verify_radius_unicyclic(C5)
    assert r.holds and r.lhs == approx(S2) and r.rhs == approx(S3)
    r = verify_radius_unicyclic(C6)
    assert r.holds and r.rhs == approx(math.sqrt(3 * 7 / 5))
    pendant = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    r = verify_radius_unicyclic(pendant)
    assert r.holds and r.rhs == approx(math.sqrt(3 * 7 / 5)) and r.lhs < r.rhs
    for bad in (C4, P4):
        with pytest.raises(PreconditionError):
            verify_radius_unicyclic(bad)


# --------------------------------------------------------- energy

def test_energy_mh_examples():
    r = verify_energy_mH(STAR3)
    assert r.side("lower").equal and r.extremal_class_matched
    assert r.side("lower").lhs == approx(2 * S15)
    r = verify_energy_mH(disjoint_union([K2, K2]))
    assert r.side("lower").equal and r.side("upper").equal
    r = verify_energy_mH(K4)
    assert (r.side("lower").lhs, r.side("lower").rhs, r.side("upper").rhs) == (
        approx(4.0), approx(2 * math.sqrt(6)), approx(math.sqrt(32)))
    assert not r.equality_detected and not r.extremal_class_matched


def test_energy_abs_examples():
    r = verify_energy_abs_index(K4)
    assert r.status != SKIPPED and r.equality_detected and r.rhs == approx(2 * math.sqrt(6))
    r = verify_energy_abs_index(C5)
    assert r.holds and not r.equality_detected
    # Petersen is strongly regular, but |eta_2| != |eta_n| so the bound is strict.
    r = verify_energy_abs_index(petersen())
    assert r.holds and not r.equality_detected and r.extremal_class_matched
    assert r.lhs == approx(16 * math.sqrt(2 / 3))
    # 4x4 rook's graph: srg(16, 6, 2, 2), adjacency eigenvalues 6, 2, -2.
    r = verify_energy_abs_index(rook_graph(4))
    assert r.holds and r.equality_detected and r.extremal_class_matched


def test_energy_abs_skips_when_hypothesis_fails():
    r = verify_energy_abs_index(STAR3)     # 2(m - H) = 3 < n = 4
    assert r.status == SKIPPED and r.holds


def test_spread_examples():
    r = verify_spread_bounds(K4)
    assert r.side("lower").lhs == approx(2 * S2)
    assert r.side("lower").rhs == approx(math.sqrt(6) + math.sqrt(2 / 3))
    assert r.side("upper").rhs == approx(4.0)
    r = verify_spread_bounds(STAR3)
    assert r.side("lower").equal and r.side("upper").equal
    assert r.side("lower").lhs == approx(2 * math.sqrt(6 / 4))
    r = verify_spread_bounds(C5)
    assert r.side("lower").lhs == approx(2.0) and r.side("upper").rhs == approx(2 * math.sqrt(2.5))
    assert r.holds


def test_energy_maxdeg_examples():
    r = verify_energy_maxdeg(STAR3)
    assert r.equality_detected and r.extremal_class_matched and r.rhs == approx(2 * S15)
    r = verify_energy_maxdeg(disjoint_union([STAR3, K2, fam("complete", 1)]))
    assert r.equality_detected and r.extremal_class_matched
    r = verify_energy_maxdeg(P4)
    assert r.status != SKIPPED and r.holds and not r.equality_detected
    m_h = 3 - (2 / 3 + 1 / 2 + 2 / 3)
    t = 2 / 3
    assert r.rhs == approx(2 * math.sqrt(t) + math.sqrt(2 * 2 * (m_h - t)))


def test_energy_maxdeg_skips_when_hypothesis_fails():
    assert verify_energy_maxdeg(K4).status == SKIPPED


def test_abc_abs_examples():
    r = verify_abc_abs_relation(C4)
    assert r.holds and r.rhs == approx(2 * S2) and r.lhs == approx(2.0)
    r = verify_abc_abs_relation(K4)
    assert r.holds and r.lhs == approx(math.sqrt(0.5) * 4.0) and r.rhs == approx(2 * math.sqrt(6))
    r = verify_abc_abs_relation(C6)
    assert r.holds and r.lhs == approx(math.sqrt(2 / 6) * r.rhs)
    with pytest.raises(PreconditionError):
        verify_abc_abs_relation(P4)


def test_report_invariants_on_examples():
    for g in (K2, K4, C4, C5, STAR3, P4, K23, petersen()):
        for r in check_all(g):
            assert r.status == SKIPPED or r.holds
            if r.equality_detected:
                assert r.holds
            for s in r.sides:
                assert s.holds == (s.lhs <= s.rhs + EQ_TOL)


def test_check_unknown_theorem():
    with pytest.raises(KeyError):
        check("nope", K4)


# ------------------------------------------------------------ suite

def test_suite_small():
    r = run_exhaustive_suite(3)
    assert r.graphs_checked == 1 + 1 + 4
    assert r.violations == []


def test_suite_n3_only_counts_n3_graphs():
    result = SuiteResult()
    enumerate_connected(3, lambda g: check_graph(g, result=result))
    assert result.graphs_checked == 4 and result.violations == []


def test_suite_n5_radius_deg_witnesses_are_regular():
    r = run_exhaustive_suite(5)
    assert r.violations == []
    regular = set()
    for n in range(1, 6):
        enumerate_connected(n, lambda g: regular.add(write_graph6(g))
                            if analyze_structure(g).regular_degree is not None else None)
    witnesses = {g6 for g6, t in r.equality_witnesses if t == "radius_deg"}
    assert witnesses == regular


def test_suite_parallel_matches_serial():
    serial = run_exhaustive_suite(5)
    parallel = run_exhaustive_suite(5, jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_suite_flags_a_broken_checker(monkeypatch):
    from absgraph import theorems
    real = theorems.verify_spread_bounds

    def broken(g):
        rep = real(g)
        rep.holds = False
        return rep

    monkeypatch.setitem(theorems.CHECKERS, "spread", (broken, theorems.CHECKERS["spread"][1]))
    r = run_exhaustive_suite(3, ["spread"])
    assert len(r.violations) == 4 + 1
    assert all(v.theorem == "spread" for v in r.violations)
    assert parse_graph6(r.violations[-1].graph6).n == 3


def test_context_caches_spectra():
    c = GraphContext(petersen())
    check_all(c)
    assert c.spectrum(WeightKind.ABS) is c.abs_spectrum
