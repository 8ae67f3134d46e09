"""Degree-based edge weights, weighted matrices, the symmetric eigensolver
and spectrum statistics."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph

__all__ = [
    "WeightKind", "IndexKind", "WeightedMatrix", "Spectrum", "NumericError",
    "edge_weight", "build_weighted_matrix", "row_sums", "eigenvalues_symmetric",
    "spectral_radius", "graph_energy", "distinct_eigenvalues",
    "is_symmetric_about_origin", "topological_index", "dump_matrix",
    "JACOBI_TOL", "MAX_SWEEPS", "DISTINCT_TOL",
]

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
DISTINCT_TOL = 1e-7


class NumericError(ArithmeticError):
    """The eigensolver failed to converge."""


class WeightKind(enum.Enum):
    ABS = "abs"
    ABC = "abc"
    SUM_CONNECTIVITY = "sc"
    RANDIC = "randic"
    ADJACENCY = "adjacency"


class IndexKind(enum.Enum):
    ABS_INDEX = "abs"
    HARMONIC = "harmonic"
    SUM_CONNECTIVITY_INDEX = "sc"
    RANDIC_INDEX = "randic"
    ABC_INDEX = "abc"


def _abs(a, b):
    s = a + b
    return math.sqrt((s - 2) / s)


def _abc(a, b):
    return math.sqrt((a + b - 2) / (a * b))


_WEIGHTS = {
    WeightKind.ABS: _abs,
    WeightKind.ABC: _abc,
    WeightKind.SUM_CONNECTIVITY: lambda a, b: 1.0 / math.sqrt(a + b),
    WeightKind.RANDIC: lambda a, b: 1.0 / math.sqrt(a * b),
    WeightKind.ADJACENCY: lambda a, b: 1.0,
}

_INDEX_WEIGHTS = {
    IndexKind.ABS_INDEX: _abs,
    IndexKind.ABC_INDEX: _abc,
    IndexKind.HARMONIC: lambda a, b: 2.0 / (a + b),
    IndexKind.SUM_CONNECTIVITY_INDEX: _WEIGHTS[WeightKind.SUM_CONNECTIVITY],
    IndexKind.RANDIC_INDEX: _WEIGHTS[WeightKind.RANDIC],
}


def edge_weight(kind: WeightKind, d_i: int, d_j: int) -> float:
    """Weight of an edge whose endpoints have degrees ``d_i`` and ``d_j``."""
    if d_i < 1 or d_j < 1:
        raise ValueError(f"edge endpoint degrees must be >= 1, got ({d_i}, {d_j})")
    return _WEIGHTS[kind](d_i, d_j)


@dataclass(frozen=True, eq=False)
class WeightedMatrix:
    kind: WeightKind
    entries: np.ndarray
    source: Graph

    @property
    def order(self) -> int:
        return self.entries.shape[0]


def build_weighted_matrix(g: Graph, kind: WeightKind) -> WeightedMatrix:
    a = np.zeros((g.n, g.n))
    f = _WEIGHTS[kind]
    deg = g.degrees
    for u, v in g.edges:
        a[u, v] = a[v, u] = f(deg[u], deg[v])
    a.flags.writeable = False
    return WeightedMatrix(kind, a, g)


def row_sums(m: WeightedMatrix) -> list[float]:
    return [math.fsum(row) for row in m.entries.tolist()]


def dump_matrix(m: WeightedMatrix | np.ndarray) -> str:
    a = m.entries if isinstance(m, WeightedMatrix) else np.asarray(m)
    return "\n".join(" ".join(repr(float(x)) for x in row) for row in a) + "\n"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the relative clustering tolerance."""

    values: tuple[float, ...]
    tolerance: float = DISTINCT_TOL

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def largest(self) -> float:
        return self.values[0]

    @property
    def least(self) -> float:
        return self.values[-1]

    def gap_threshold(self) -> float:
        return self.tolerance * max(1.0, abs(self.values[0])) if self.values else self.tolerance


def eigenvalues_symmetric(m: WeightedMatrix | np.ndarray, *, tolerance: float = DISTINCT_TOL,
                          backend: str | None = None) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Raises NumericError if the sweep cap is hit before the off-diagonal
    norm falls below ``JACOBI_TOL * ||M||_F``.
    """
    a = m.entries if isinstance(m, WeightedMatrix) else m
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {work.shape}")
    if not np.all(np.isfinite(work)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(work, work.T):
        raise ValueError("matrix is not symmetric")
    kernel = _kernels.jacobi_sweeps if backend is None else _kernels.BACKENDS[backend]
    sweeps = kernel(work, JACOBI_TOL, MAX_SWEEPS)
    if sweeps < 0:
        raise NumericError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")
    values = sorted(np.diagonal(work).tolist(), reverse=True)
    return Spectrum(tuple(values), tolerance)


def spectral_radius(s: Spectrum) -> float:
    if not s.values:
        raise ValueError("empty spectrum")
    return max(abs(s.values[0]), abs(s.values[-1]))


def graph_energy(s: Spectrum) -> float:
    return math.fsum(abs(x) for x in s.values)


def distinct_eigenvalues(s: Spectrum) -> tuple[int, list[float]]:
    """Cluster sorted eigenvalues whose consecutive gaps are within the
    threshold; returns the count and the mean of each cluster."""
    if not s.values:
        return 0, []
    tau = s.gap_threshold()
    clusters = [[s.values[0]]]
    for x in s.values[1:]:
        if clusters[-1][-1] - x <= tau:
            clusters[-1].append(x)
        else:
            clusters.append([x])
    return len(clusters), [math.fsum(c) / len(c) for c in clusters]


def is_symmetric_about_origin(s: Spectrum) -> bool:
    tau = s.gap_threshold()
    v = s.values
    i, j = 0, len(v) - 1
    while i < j:
        if abs(v[i] + v[j]) > tau:
            return False
        i += 1
        j -= 1
    return i != j or abs(v[i]) <= tau


def topological_index(g: Graph, kind: IndexKind) -> float:
    f = _INDEX_WEIGHTS[kind]
    deg = g.degrees
    return math.fsum(f(deg[u], deg[v]) for u, v in g.edges)
