"""Directed graphs, the combinatorial directed Laplacian, and matrix indices.

The central operator is ``L = D_out - A`` where ``A[i, j]`` is the weight of
the edge ``i -> j`` and ``D_out`` is the diagonal of row sums (out-degrees).
With this row convention every row of ``L`` sums to zero, so the constant
vector is always in the null space and acts as the DC mode of the spectral
analysis built on top.

Two scalar indices separate plain asymmetry from non-normality:

- ``asymmetry_index``:  alpha(M) = ||M - M^T||_F / ||M||_F
- ``normality_departure``:  delta(M) = ||M M* - M* M||_F / ||M||_F^2

A directed cycle has alpha = 1 but delta = 0 (asymmetric yet normal); adding
random edges drives delta > 0 and degrades eigenvector conditioning.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


class Edge(NamedTuple):
    src: int
    dst: int
    weight: float


@dataclass(frozen=True)
class AsymmetryReport:
    """Asymmetry and normality-departure indices of one matrix.

    ``alpha`` is 0 iff the matrix is symmetric and stays within [0, sqrt(2)]
    for graph-derived matrices (adjacency and Laplacian entries make the
    Frobenius inner product <M, M^T> nonnegative). ``delta`` is 0 iff the
    matrix is normal.
    """

    alpha: float
    delta: float


@dataclass(frozen=True)
class DirectedGraph:
    """Weighted directed graph on vertices ``0 .. n-1``.

    Self-loops are rejected: a loop adds the same amount to the out-degree
    and the adjacency, so it cancels in the Laplacian while still inflating
    every Frobenius-norm based index. Duplicate ``(src, dst)`` pairs are
    rejected as well (no multigraphs).
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        normalized = []
        seen = set()
        for e in self.edges:
            src, dst, weight = e
            src, dst, weight = int(src), int(dst), float(weight)
            if not (0 <= src < self.n and 0 <= dst < self.n):
                raise ValueError(f"edge ({src}, {dst}) out of range for n={self.n}")
            if src == dst:
                raise ValueError(f"self-loop at vertex {src} rejected")
            if not np.isfinite(weight) or weight <= 0.0:
                raise ValueError(f"edge ({src}, {dst}) needs a finite positive weight, got {weight}")
            if (src, dst) in seen:
                raise ValueError(f"duplicate edge ({src}, {dst})")
            seen.add((src, dst))
            normalized.append(Edge(src, dst, weight))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def adjacency(g: DirectedGraph) -> np.ndarray:
    """Dense adjacency matrix: ``A[i, j] = w(i, j)``, rows index sources."""
    a = np.zeros((g.n, g.n))
    for src, dst, weight in g.edges:
        a[src, dst] = weight
    return a


def directed_laplacian(g: DirectedGraph) -> np.ndarray:
    """Combinatorial directed Laplacian ``L = D_out - A`` (zero row sums)."""
    a = adjacency(g)
    return np.diag(a.sum(axis=1)) - a


def _square(m) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def asymmetry_index(m) -> float:
    """``||M - M^T||_F / ||M||_F``, with the zero matrix mapped to 0."""
    m = _square(m)
    fro = np.linalg.norm(m, "fro")
    if fro == 0.0:
        return 0.0
    return float(np.linalg.norm(m - m.T, "fro") / fro)


def normality_departure(m) -> float:
    """Commutator size ``||M M* - M* M||_F / ||M||_F^2``; 0 iff M is normal."""
    m = _square(m)
    fro2 = np.linalg.norm(m, "fro") ** 2
    if fro2 == 0.0:
        return 0.0
    mh = m.conj().T
    return float(np.linalg.norm(m @ mh - mh @ m, "fro") / fro2)


def asymmetry_report(m) -> AsymmetryReport:
    return AsymmetryReport(alpha=asymmetry_index(m), delta=normality_departure(m))


def gershgorin_disks(l) -> list[tuple[float, float]]:
    """Row disks ``(center, radius)`` of a Laplacian-like matrix.

    Centers are the diagonal entries, radii the off-diagonal absolute row
    sums; for a directed Laplacian both equal the out-degree, which places
    every eigenvalue in the closed right half plane.
    """
    l = _square(l)
    disks = []
    for i in range(l.shape[0]):
        radius = float(np.sum(np.abs(l[i]))) - abs(float(np.real(l[i, i])))
        disks.append((float(np.real(l[i, i])), radius))
    return disks


def gen_directed_cycle(n: int) -> DirectedGraph:
    """Unweighted directed cycle ``0 -> 1 -> ... -> n-1 -> 0`` (n >= 2)."""
    if n < 2:
        raise ValueError(f"a directed cycle needs n >= 2, got {n}")
    return DirectedGraph(n, tuple(Edge(i, (i + 1) % n, 1.0) for i in range(n)))


def gen_perturbed_cycle(n: int, p: float, w: float, seed: int) -> DirectedGraph:
    """Directed cycle plus random extra edges of weight ``w``.

    Every ordered pair ``(i, j)`` that is neither a self-loop nor a cycle
    edge receives an edge independently with probability ``p``. Pairs are
    visited in lexicographic order drawing exactly one uniform variate per
    candidate pair from a PCG64 generator, so the result is a pure function
    of ``(n, p, w, seed)``. Cycle edges keep weight exactly 1.0.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if not np.isfinite(w) or w <= 0.0:
        raise ValueError(f"perturbation weight must be positive, got {w}")
    base = gen_directed_cycle(n)
    cycle_pairs = {(i, (i + 1) % n) for i in range(n)}
    rng = np.random.default_rng(seed)
    extra = []
    for i in range(n):
        for j in range(n):
            if i == j or (i, j) in cycle_pairs:
                continue
            if rng.random() < p:
                extra.append(Edge(i, j, float(w)))
    return DirectedGraph(n, base.edges + tuple(extra))


def two_disjoint_cycles(block: int = 3) -> DirectedGraph:
    """Two vertex-disjoint directed cycles; useful as a graph whose Laplacian
    null space is two-dimensional (no isolated DC mode)."""
    edges = [Edge(i, (i + 1) % block, 1.0) for i in range(block)]
    edges += [Edge(block + i, block + (i + 1) % block, 1.0) for i in range(block)]
    return DirectedGraph(2 * block, tuple(edges))
