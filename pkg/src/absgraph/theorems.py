"""Machine checks for the ABS spectral classification theorems and bounds.

Each ``verify_*`` function takes a :class:`Graph` (or a prebuilt
:class:`GraphContext`, which caches spectra and indices across checkers)
and returns a :class:`TheoremReport`.  Inequalities are stored in
``lhs <= rhs`` orientation; two-sided bounds produce two entries in
``TheoremReport.sides``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .graph import Graph, analyze_structure, components, write_graph6
from .graph import connected_masks, graph_from_mask, _check_cap
from .spectral import (
    IndexKind, Spectrum, WeightKind, build_weighted_matrix, distinct_eigenvalues,
    eigenvalues_symmetric, graph_energy, is_symmetric_about_origin, row_sums,
    topological_index,
)

EQ_TOL = 1e-6

CHECKED = "checked"
SKIPPED = "precondition-skipped"

CLASSIFICATION_IDS = ("least_eig", "two_distinct", "bip_sym", "three_distinct_bip", "rowsum")
BOUND_IDS = ("trace", "radius_abs", "radius_mh", "radius_deg", "radius_sc", "radius_chi_r",
             "radius_unicyclic", "energy_mh", "energy_abs", "spread", "energy_maxdeg", "abc_abs")
THEOREM_IDS = ("trace",) + CLASSIFICATION_IDS + BOUND_IDS[1:]


class PreconditionError(ValueError):
    """The graph does not meet the theorem's stated setting."""


@dataclass(frozen=True)
class Side:
    label: str
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs + EQ_TOL

    @property
    def equal(self) -> bool:
        return abs(self.slack) <= EQ_TOL


@dataclass
class TheoremReport:
    theorem_id: str
    holds: bool
    lhs: float
    rhs: float
    slack: float
    equality_detected: bool
    extremal_class_matched: bool
    notes: str = ""
    status: str = CHECKED
    sides: tuple[Side, ...] = ()

    def side(self, label: str) -> Side:
        for s in self.sides:
            if s.label == label:
                return s
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id, "status": self.status, "holds": self.holds,
            "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack,
            "equality_detected": self.equality_detected,
            "extremal_class_matched": self.extremal_class_matched,
            "sides": [{"label": s.label, "lhs": s.lhs, "rhs": s.rhs} for s in self.sides],
            "notes": self.notes,
        }


def _bound_report(tid: str, sides: list[Side], extremal: bool, notes: str = "") -> TheoremReport:
    binding = min(sides, key=lambda s: s.slack)
    return TheoremReport(
        theorem_id=tid,
        holds=all(s.holds for s in sides),
        lhs=binding.lhs, rhs=binding.rhs, slack=binding.slack,
        equality_detected=any(s.equal for s in sides),
        extremal_class_matched=extremal,
        notes=notes, sides=tuple(sides),
    )


def _iff_report(tid: str, left: bool, right: bool, lhs: float, rhs: float,
                notes: str) -> TheoremReport:
    return TheoremReport(tid, left == right, lhs, rhs, rhs - lhs, False, right, notes)


def _skipped(tid: str, notes: str) -> TheoremReport:
    nan = float("nan")
    return TheoremReport(tid, True, nan, nan, nan, False, False, notes, SKIPPED)


class GraphContext:
    """Lazily computed quantities shared by the checkers for one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.m = g.m
        self.delta = g.min_degree
        self.Delta = g.max_degree

    def spectrum(self, kind: WeightKind) -> Spectrum:
        cache = self.__dict__.setdefault("_spectra", {})
        if kind not in cache:
            cache[kind] = eigenvalues_symmetric(build_weighted_matrix(self.g, kind))
        return cache[kind]

    @cached_property
    def abs_spectrum(self) -> Spectrum:
        return self.spectrum(WeightKind.ABS)

    @cached_property
    def eta1(self) -> float:
        return self.abs_spectrum.largest

    @cached_property
    def eta_n(self) -> float:
        return self.abs_spectrum.least

    @cached_property
    def energy(self) -> float:
        return graph_energy(self.abs_spectrum)

    @cached_property
    def distinct(self) -> int:
        return distinct_eigenvalues(self.abs_spectrum)[0]

    @cached_property
    def structure(self):
        return analyze_structure(self.g)

    @cached_property
    def harmonic(self) -> float:
        return topological_index(self.g, IndexKind.HARMONIC)

    @cached_property
    def abs_index(self) -> float:
        return topological_index(self.g, IndexKind.ABS_INDEX)

    @cached_property
    def m_minus_h(self) -> float:
        return max(0.0, self.m - self.harmonic)

    @cached_property
    def regular(self) -> bool:
        return self.delta == self.Delta

    @cached_property
    def complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @cached_property
    def is_complete_bipartite(self) -> bool:
        bip = self.structure.bipartition
        if bip is None or not self.structure.connected:
            return False
        a, b = bip
        return len(a) > 0 and len(b) > 0 and self.m == len(a) * len(b)

    @cached_property
    def component_graphs(self) -> list[Graph]:
        out = []
        for comp in components(self.g):
            index = {v: i for i, v in enumerate(comp)}
            edges = frozenset((index[u], index[v]) for u, v in self.g.edges if u in index)
            out.append(Graph(len(comp), edges))
        return out

    @cached_property
    def edge_degree_sums(self) -> list[int]:
        d = self.g.degrees
        return [d[u] + d[v] for u, v in self.g.edges]


def _ctx(g: Graph | GraphContext) -> GraphContext:
    return g if isinstance(g, GraphContext) else GraphContext(g)


def _require(cond: bool, tid: str, what: str) -> None:
    if not cond:
        raise PreconditionError(f"{tid}: requires {what}")


# ----------------------------------------------------- extremal signatures

def _is_small_union(c: GraphContext) -> bool:
    """pK2 u qK1: every component has at most two vertices."""
    return c.Delta <= 1


def _single_big_component(c: GraphContext, accept: Callable[[Graph], bool]) -> bool:
    """At most one component with more than two vertices, and it passes ``accept``."""
    big = [h for h in c.component_graphs if h.n > 2]
    return len(big) == 0 or (len(big) == 1 and accept(big[0]))


def _complete_bipartite(h: Graph) -> bool:
    return GraphContext(h).is_complete_bipartite


def _star_of_max_degree(delta_max: int) -> Callable[[Graph], bool]:
    def accept(h: Graph) -> bool:
        return h.m == h.n - 1 and h.max_degree == h.n - 1 == delta_max
    return accept


def _strongly_regular(c: GraphContext) -> bool:
    if not (c.regular and c.structure.connected and not c.complete):
        return False
    return distinct_eigenvalues(c.spectrum(WeightKind.ADJACENCY))[0] == 3


# ------------------------------------------------- spectral classification

def verify_trace_identities(g) -> TheoremReport:
    c = _ctx(g)
    vals = c.abs_spectrum.values
    total = math.fsum(vals)
    squares = math.fsum(x * x for x in vals)
    pair_sum = (total * total - squares) / 2.0
    target = 2.0 * (c.m - c.harmonic)
    tol_sum = 1e-9 * c.n
    tol_sq = 1e-8 * max(1, c.m)
    ok = abs(total) <= tol_sum and abs(squares - target) <= tol_sq \
        and abs(pair_sum - (c.harmonic - c.m)) <= tol_sq
    notes = f"sum={total:.3e} sum_sq={squares:.12g} 2(m-H)={target:.12g}"
    return TheoremReport("trace", ok, squares, target, target - squares,
                         abs(squares - target) <= EQ_TOL, True, notes)


def verify_least_eigenvalue_classification(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.structure.connected, "least_eig", "a connected graph")
    above = c.eta_n > -1.0 + EQ_TOL
    is_class = c.complete or (c.n == 3 and c.m == 2)
    return _iff_report("least_eig", above, is_class, c.eta_n, -1.0,
                       f"eta_n={c.eta_n:.12g} K_n/P3={is_class}")


def verify_two_distinct_classification(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.structure.connected and c.n > 2, "two_distinct", "connected, n > 2")
    return _iff_report("two_distinct", c.distinct == 2, c.complete, c.distinct, 2,
                       f"distinct={c.distinct} complete={c.complete}")


def verify_bipartite_symmetry(g) -> TheoremReport:
    c = _ctx(g)
    bipartite = c.structure.bipartition is not None
    symmetric = is_symmetric_about_origin(c.abs_spectrum)
    return _iff_report("bip_sym", symmetric, bipartite, float(symmetric), float(bipartite),
                       f"bipartite={bipartite} symmetric={symmetric}")


def verify_three_distinct_bipartite(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.structure.connected and c.structure.bipartition is not None and c.n > 2,
             "three_distinct_bip", "connected bipartite, n > 2")
    return _iff_report("three_distinct_bip", c.distinct == 3, c.is_complete_bipartite,
                       c.distinct, 3,
                       f"distinct={c.distinct} complete_bipartite={c.is_complete_bipartite}")


# -------------------------------------------------------- radius bounds

def verify_row_sum_lemma(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.delta >= 1, "rowsum", "no isolated vertices")
    sums = row_sums(build_weighted_matrix(c.g, WeightKind.ABS))
    spread = max(sums) - min(sums)
    return _iff_report("rowsum", spread <= EQ_TOL, c.regular, spread, 0.0,
                       f"row sum spread={spread:.3e} regular={c.regular}")


def verify_radius_abs_index(g) -> TheoremReport:
    c = _ctx(g)
    bound = 2.0 * c.abs_index / c.n
    return _bound_report("radius_abs", [Side("lower", bound, c.eta1)], c.regular)


def verify_radius_size_harmonic(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.delta >= 1, "radius_mh", "no isolated vertices")
    lo = math.sqrt(2.0 * c.m_minus_h / c.n)
    hi = math.sqrt(2.0 * (c.n - 1) * c.m_minus_h / c.n)
    return _bound_report("radius_mh", [Side("lower", lo, c.eta1), Side("upper", c.eta1, hi)],
                         c.Delta == 1, "upper-side equality also occurs on K_n")


def verify_radius_degree(g) -> TheoremReport:
    c = _ctx(g)
    lo = math.sqrt(c.delta * (c.delta - 1)) if c.delta else 0.0
    hi = math.sqrt(c.Delta * (c.Delta - 1)) if c.Delta else 0.0
    return _bound_report("radius_deg", [Side("lower", lo, c.eta1), Side("upper", c.eta1, hi)],
                         c.regular)


def verify_radius_sum_connectivity(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.structure.connected and c.n >= 2, "radius_sc", "connected, n >= 2")
    rho = c.spectrum(WeightKind.SUM_CONNECTIVITY).largest
    sums = c.edge_degree_sums
    lo = rho * math.sqrt(min(sums) - 2)
    hi = rho * math.sqrt(max(sums) - 2)
    return _bound_report("radius_sc", [Side("lower", lo, c.eta1), Side("upper", c.eta1, hi)],
                         min(sums) == max(sums), f"rho(S)={rho:.12g}")


def verify_radius_chi_randic(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.structure.connected, "radius_chi_r", "a connected graph")
    chi = topological_index(c.g, IndexKind.SUM_CONNECTIVITY_INDEX)
    randic = topological_index(c.g, IndexKind.RANDIC_INDEX)
    lo = 2.0 * chi / c.n * math.sqrt(max(0, 2 * c.delta - 2))
    hi = math.sqrt(2.0 * max(0, c.Delta - 1) * (c.n - 1) / c.n * randic)
    return _bound_report("radius_chi_r", [Side("lower", lo, c.eta1), Side("upper", c.eta1, hi)],
                         c.regular, f"chi={chi:.12g} R={randic:.12g}")


def verify_radius_unicyclic(g) -> TheoremReport:
    c = _ctx(g)
    s = c.structure
    _require(s.unicyclic and s.girth is not None and s.girth >= 5,
             "radius_unicyclic", "a unicyclic graph of girth >= 5")
    bound = math.sqrt((c.n - 3) * (c.n + 1) / (c.n - 1))
    return _bound_report("radius_unicyclic", [Side("upper", c.eta1, bound)], False)


# -------------------------------------------------------- energy bounds

def verify_energy_mH(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.n >= 2, "energy_mh", "n >= 2")
    lo = 2.0 * math.sqrt(c.m_minus_h)
    hi = math.sqrt(2.0 * c.n * c.m_minus_h)
    lower_class = _single_big_component(c, _complete_bipartite)
    upper_class = _is_small_union(c)
    return _bound_report("energy_mh", [Side("lower", lo, c.energy), Side("upper", c.energy, hi)],
                         lower_class,
                         f"lower-class={lower_class} upper-class={upper_class}")


def energy_abs_hypothesis(c: GraphContext) -> bool:
    return abs(c.m - c.harmonic) <= EQ_TOL or 2.0 * (c.m - c.harmonic) >= c.n - EQ_TOL


def verify_energy_abs_index(g) -> TheoremReport:
    c = _ctx(g)
    if not energy_abs_hypothesis(c):
        return _skipped("energy_abs", "needs m = H(G) or 2(m - H(G)) >= n")
    a = 2.0 * c.abs_index / c.n
    bound = a + math.sqrt(max(0.0, (c.n - 1) * (2.0 * c.m_minus_h - a * a)))
    extremal = _is_small_union(c) or c.complete or _strongly_regular(c)
    return _bound_report("energy_abs", [Side("upper", c.energy, bound)], extremal)


def verify_spread_bounds(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.structure.connected and c.n >= 2, "spread", "connected, n >= 2")
    spread = c.eta1 + abs(c.eta_n)
    D, d = c.Delta, c.delta
    lo = 2.0 * math.sqrt(D * (D + d - 2) / (D + d))
    hi = 2.0 * math.sqrt(c.m_minus_h)
    return _bound_report("spread", [Side("lower", lo, spread), Side("upper", spread, hi)],
                         False)


def energy_maxdeg_hypothesis(c: GraphContext) -> bool:
    D = c.Delta
    return 2.0 * c.m_minus_h / c.n <= D * (D - 1) / (D + 1) + EQ_TOL


def verify_energy_maxdeg(g) -> TheoremReport:
    c = _ctx(g)
    if not energy_maxdeg_hypothesis(c):
        return _skipped("energy_maxdeg", "needs 2(m - H(G))/n <= D(D-1)/(D+1)")
    D = c.Delta
    t = D * (D - 1) / (D + 1)
    bound = 2.0 * math.sqrt(t) + math.sqrt(max(0.0, 2.0 * (c.n - 2) * (c.m_minus_h - t)))
    extremal = _single_big_component(c, _star_of_max_degree(D))
    return _bound_report("energy_maxdeg", [Side("upper", c.energy, bound)], extremal)


def verify_abc_abs_relation(g) -> TheoremReport:
    c = _ctx(g)
    _require(c.delta >= 2, "abc_abs", "minimum degree >= 2")
    e_abc = graph_energy(c.spectrum(WeightKind.ABC))
    return _bound_report("abc_abs", [Side("lower", math.sqrt(2.0 / c.n) * e_abc, c.energy)],
                         False, f"E_ABC={e_abc:.12g}")


# ----------------------------------------------------------- registry

def _connected(c): return c.structure.connected
def _no_isolated(c): return c.delta >= 1


CHECKERS: dict[str, tuple[Callable, Callable[[GraphContext], bool]]] = {
    "trace": (verify_trace_identities, lambda c: True),
    "least_eig": (verify_least_eigenvalue_classification, _connected),
    "two_distinct": (verify_two_distinct_classification, lambda c: _connected(c) and c.n > 2),
    "bip_sym": (verify_bipartite_symmetry, lambda c: True),
    "three_distinct_bip": (verify_three_distinct_bipartite,
                           lambda c: _connected(c) and c.n > 2
                           and c.structure.bipartition is not None),
    "rowsum": (verify_row_sum_lemma, _no_isolated),
    "radius_abs": (verify_radius_abs_index, lambda c: True),
    "radius_mh": (verify_radius_size_harmonic, _no_isolated),
    "radius_deg": (verify_radius_degree, lambda c: True),
    "radius_sc": (verify_radius_sum_connectivity, lambda c: _connected(c) and c.n >= 2),
    "radius_chi_r": (verify_radius_chi_randic, _connected),
    "radius_unicyclic": (verify_radius_unicyclic,
                         lambda c: c.structure.unicyclic and (c.structure.girth or 0) >= 5),
    "energy_mh": (verify_energy_mH, lambda c: c.n >= 2),
    "energy_abs": (verify_energy_abs_index, lambda c: True),
    "spread": (verify_spread_bounds, lambda c: _connected(c) and c.n >= 2),
    "energy_maxdeg": (verify_energy_maxdeg, lambda c: True),
    "abc_abs": (verify_abc_abs_relation, lambda c: c.delta >= 2),
}

# Checkers whose extremal class must force equality (one-directional).
EXTREMAL_FORCES_EQUALITY = ("radius_deg", "radius_abs", "energy_mh")


def applicable(tid: str, g: Graph | GraphContext) -> bool:
    return CHECKERS[tid][1](_ctx(g))


def check(tid: str, g: Graph | GraphContext) -> TheoremReport:
    if tid not in CHECKERS:
        raise KeyError(f"unknown theorem id {tid!r}")
    return CHECKERS[tid][0](g)


def check_all(g: Graph | GraphContext, theorems=THEOREM_IDS) -> list[TheoremReport]:
    """Run every applicable checker; inapplicable ones are omitted."""
    c = _ctx(g)
    return [check(t, c) for t in theorems if applicable(t, c)]


# ------------------------------------------------------------ the suite

@dataclass
class Violation:
    graph6: str
    theorem: str
    lhs: float
    rhs: float
    reason: str = "does not hold"

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "theorem": self.theorem, "lhs": self.lhs,
                "rhs": self.rhs, "reason": self.reason}


@dataclass
class SuiteResult:
    graphs_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    equality_witnesses: list[tuple[str, str]] = field(default_factory=list)
    checks_run: dict[str, int] = field(default_factory=dict)
    skipped: dict[str, int] = field(default_factory=dict)

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        out = SuiteResult(self.graphs_checked + other.graphs_checked,
                          self.violations + other.violations,
                          self.equality_witnesses + other.equality_witnesses,
                          dict(self.checks_run), dict(self.skipped))
        for src, dst in ((other.checks_run, out.checks_run), (other.skipped, out.skipped)):
            for k, v in src.items():
                dst[k] = dst.get(k, 0) + v
        return out

    def to_dict(self) -> dict:
        return {
            "graphs_checked": self.graphs_checked,
            "violations": [v.to_dict() for v in self.violations],
            "equality_witnesses": [{"graph6": g6, "theorem": t}
                                   for g6, t in self.equality_witnesses],
            "checks_run": dict(sorted(self.checks_run.items())),
            "skipped": dict(sorted(self.skipped.items())),
        }


def check_graph(g: Graph, theorems=THEOREM_IDS, result: SuiteResult | None = None) -> SuiteResult:
    """Apply every applicable checker to ``g`` and fold the outcome into ``result``."""
    result = SuiteResult() if result is None else result
    c = GraphContext(g)
    g6 = None
    result.graphs_checked += 1
    for tid in theorems:
        if not applicable(tid, c):
            continue
        rep = check(tid, c)
        if rep.status == SKIPPED:
            result.skipped[tid] = result.skipped.get(tid, 0) + 1
            continue
        result.checks_run[tid] = result.checks_run.get(tid, 0) + 1
        problems = []
        if not rep.holds:
            problems.append("does not hold")
        if tid in EXTREMAL_FORCES_EQUALITY and rep.extremal_class_matched \
                and not rep.equality_detected:
            problems.append("extremal class without equality")
        if tid == "radius_sc" and rep.equality_detected and not rep.extremal_class_matched:
            problems.append("equality with non-constant edge degree sums")
        if problems or (rep.equality_detected and tid != "trace"):
            g6 = g6 or write_graph6(g)
        for p in problems:
            result.violations.append(Violation(g6, tid, rep.lhs, rep.rhs, p))
        if rep.equality_detected and tid != "trace":
            result.equality_witnesses.append((g6, tid))
    return result


def _run_chunk(args) -> SuiteResult:
    n, start, stop, theorems = args
    result = SuiteResult()
    for mask in connected_masks(n, start, stop):
        check_graph(graph_from_mask(n, mask), theorems, result)
    return result


def run_exhaustive_suite(n_max: int, theorems=THEOREM_IDS, *, jobs: int = 1,
                         allow_seven: bool = False) -> SuiteResult:
    """Check every labeled connected graph on 1..n_max vertices.

    With ``jobs > 1`` the edge-mask range is split into chunks handled by a
    process pool; chunks are merged in mask order so the output is the same
    as the serial run.
    """
    _check_cap(n_max, allow_seven)
    theorems = tuple(theorems)
    tasks = []
    for n in range(1, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        step = max(1, total // (8 * jobs)) if jobs > 1 else total
        tasks += [(n, s, min(s + step, total), theorems) for s in range(0, total, step)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, tasks))
    else:
        parts = [_run_chunk(t) for t in tasks]
    result = SuiteResult()
    for part in parts:
        result = result.merge(part)
    return result
