"""Bandlimited models, vertex sampling, recovery, and stability certificates.

A signal is bandlimited to a frequency index set ``omega`` when it lies in
the span of the corresponding right eigenvectors, ``x = V_omega c``. Sampling
at a vertex set takes the rows of ``V_omega``:

    B = P_M V_omega,    y = B c (+ noise)

Recovery is the least-squares solution ``c = pinv(B) y``, exact whenever
``B`` has full column rank. Robustness is governed by two factors the
certificates below keep separate: the sampling geometry through
``gamma = sigma_min(B)`` and the eigenvector geometry through
``||V_omega||_2`` (equal to 1 only when the synthesis basis is orthonormal).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .eigen import SpectralDecomposition
from .errors import DimensionMismatchError, RankDeficientError
from .transform import GraphSignal, VERTEX

#: singular values below RANK_RTOL * sigma_max count as zero (rank boundary)
RANK_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class BandModel:
    """Frequency index set plus its synthesis submatrix ``V_omega``.

    Indices are distinct, sorted, and in range; ``v_omega`` holds the
    decomposition's eigenvector columns for those indices, unmodified.
    """

    decomposition: SpectralDecomposition
    omega: np.ndarray
    v_omega: np.ndarray

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=int)
        n = self.decomposition.n
        if omega.ndim != 1 or omega.size == 0:
            raise ValueError("band needs at least one frequency index")
        if np.unique(omega).size != omega.size or not np.array_equal(omega, np.sort(omega)):
            raise ValueError("band indices must be distinct and sorted")
        if omega.min() < 0 or omega.max() >= n:
            raise ValueError(f"band indices must lie in [0, {n})")
        if not np.array_equal(self.v_omega, self.decomposition.v[:, omega]):
            raise ValueError("v_omega must be the decomposition's columns, unchanged")
        object.__setattr__(self, "omega", omega)

    @property
    def k(self) -> int:
        return self.omega.shape[0]

    @property
    def n(self) -> int:
        return self.v_omega.shape[0]

    @cached_property
    def synthesis_norm(self) -> float:
        """Spectral norm ``||V_omega||_2`` of the synthesis submatrix."""
        return float(np.linalg.norm(self.v_omega, 2))


@dataclass(frozen=True, eq=False)
class SamplingPlan:
    """Vertex sample set with its sampling matrix and stability constants.

    ``gamma = sigma_min(B)`` is positive iff the samples identify the band
    (full column rank, the no-aliasing condition); ``b_norm = sigma_max(B)``.
    A plan with ``gamma == 0`` is a valid diagnostic object, recovery will
    refuse it.
    """

    sample_set: np.ndarray
    b: np.ndarray
    gamma: float
    b_norm: float

    @property
    def m(self) -> int:
        return self.sample_set.shape[0]


@dataclass(frozen=True, eq=False)
class RecoveryReport:
    """Least-squares reconstruction with its observable-misfit certificate.

    ``error_bound`` bounds the reconstruction error attributable to the
    visible least-squares misfit: ``||V_omega||_2 * residual / gamma``. For
    a bound in terms of a known noise norm use :func:`noise_certificate`.
    """

    x_rec: GraphSignal
    coeffs: np.ndarray
    error_bound: float
    residual: float


def make_band(dec: SpectralDecomposition, k: int) -> BandModel:
    """Low-pass band: the ``k`` smallest-magnitude eigenvalue indices."""
    if not 1 <= k <= dec.n:
        raise ValueError(f"band size must lie in [1, {dec.n}], got {k}")
    omega = np.arange(k)
    return BandModel(decomposition=dec, omega=omega, v_omega=dec.v[:, :k].copy())


def synthesize_bandlimited(band: BandModel, c) -> GraphSignal:
    """Synthesize ``x = V_omega c`` (exactly bandlimited by construction)."""
    c = np.asarray(c, dtype=np.complex128)
    if c.shape != (band.k,):
        raise DimensionMismatchError(f"expected {band.k} coefficients, got shape {c.shape}")
    return GraphSignal(band.v_omega @ c, VERTEX)


def plan_sampling(band: BandModel, sample_set: Iterable[int]) -> SamplingPlan:
    """Evaluate a vertex sample set against a band.

    Extracts the sampled rows of ``V_omega`` and computes the extreme
    singular values; duplicate vertices collapse (set semantics). With
    fewer samples than band size the rank is deficient by counting, so
    ``gamma = 0`` without further analysis.
    """
    sample = np.unique(np.asarray(list(sample_set), dtype=int))
    if sample.size == 0:
        raise ValueError("sample set must not be empty")
    if sample.min() < 0 or sample.max() >= band.n:
        raise ValueError(f"sample vertices must lie in [0, {band.n})")
    b = band.v_omega[sample, :]
    s = np.linalg.svd(b, compute_uv=False)
    gamma = float(s[-1]) if sample.size >= band.k else 0.0
    return SamplingPlan(sample_set=sample, b=b, gamma=gamma, b_norm=float(s[0]))


def _require_full_rank(plan: SamplingPlan) -> None:
    if plan.gamma <= RANK_RTOL * plan.b_norm:
        raise RankDeficientError(
            f"sampling matrix is rank deficient (gamma={plan.gamma:.3e}, "
            f"sigma_max={plan.b_norm:.3e}); samples alias the band"
        )


def recover(plan: SamplingPlan, band: BandModel, y) -> RecoveryReport:
    """Least-squares recovery ``c = pinv(B) y``, ``x = V_omega c``.

    Exact (to rounding) when ``y`` consists of noiseless samples of a
    signal bandlimited to the plan's band.

    Raises:
        RankDeficientError: when ``gamma`` sits below the rank boundary
            ``RANK_RTOL * sigma_max``; the samples do not determine the
            band coefficients.
    """
    _require_full_rank(plan)
    y = np.asarray(y, dtype=np.complex128)
    if y.shape != (plan.m,):
        raise DimensionMismatchError(f"expected {plan.m} samples, got shape {y.shape}")
    coeffs = np.linalg.pinv(plan.b, rcond=RANK_RTOL) @ y
    residual = float(np.linalg.norm(plan.b @ coeffs - y))
    return RecoveryReport(
        x_rec=GraphSignal(band.v_omega @ coeffs, VERTEX),
        coeffs=coeffs,
        error_bound=band.synthesis_norm * residual / plan.gamma,
        residual=residual,
    )


def noise_certificate(plan: SamplingPlan, band: BandModel, eta_norm: float) -> float:
    """Guaranteed error ceiling ``||V_omega||_2 * eta_norm / gamma``.

    Bounds ``||x_rec - x||_2`` for least-squares recovery of a bandlimited
    signal whose samples carry additive noise of norm ``eta_norm``.
    """
    _require_full_rank(plan)
    if eta_norm < 0.0:
        raise ValueError("noise norm must be nonnegative")
    return band.synthesis_norm * eta_norm / plan.gamma


def conservative_noise_certificate(
    plan: SamplingPlan, band: BandModel, eta_norm: float
) -> float:
    """Coarser ceiling ``sigma_max(V) * eta_norm / gamma``.

    Always at least :func:`noise_certificate` since
    ``||V_omega||_2 <= sigma_max(V)``; useful when only whole-basis
    conditioning is known.
    """
    _require_full_rank(plan)
    if eta_norm < 0.0:
        raise ValueError("noise norm must be nonnegative")
    return band.decomposition.sigma_max * eta_norm / plan.gamma


def approx_band_certificate(
    plan: SamplingPlan, band: BandModel, r_samples_norm: float, eta_norm: float
) -> float:
    """Bias-variance ceiling for approximately bandlimited signals.

    For ``x = V_omega c + r`` with out-of-band remainder ``r``, recovery
    treats the sampled remainder as extra noise:

        ||x_rec - V_omega c|| <= ||V_omega||_2 (||P_M r|| + ||eta||) / gamma

    ``r_samples_norm`` is the remainder measured at the sampled vertices,
    not over the whole graph.
    """
    _require_full_rank(plan)
    if r_samples_norm < 0.0 or eta_norm < 0.0:
        raise ValueError("norms must be nonnegative")
    return band.synthesis_norm * (r_samples_norm + eta_norm) / plan.gamma


def select_sampling_set(
    band: BandModel, m: int, strategy: str = "greedy-gamma", seed: int = 0
) -> np.ndarray:
    """Choose ``m`` sample vertices for a band.

    ``"greedy-gamma"`` grows the set one vertex at a time, each step adding
    the vertex that maximizes the smallest singular value of the augmented
    sample matrix (ties resolved to the lowest index). Below ``k`` rows the
    smallest *computed* singular value is used, which greedily builds rank
    until gamma proper becomes positive. ``"random"`` draws a uniform
    sample without replacement from a PCG64 generator seeded with ``seed``.
    """
    if not band.k <= m <= band.n:
        raise ValueError(f"sample budget must lie in [{band.k}, {band.n}], got {m}")
    if strategy == "random":
        rng = np.random.default_rng(seed)
        return np.sort(rng.choice(band.n, size=m, replace=False))
    if strategy != "greedy-gamma":
        raise ValueError(f"unknown strategy {strategy!r}")

    chosen: list[int] = []
    remaining = set(range(band.n))
    for _ in range(m):
        best_val, best_vertex = -1.0, -1
        for cand in sorted(remaining):
            rows = chosen + [cand]
            s = np.linalg.svd(band.v_omega[rows, :], compute_uv=False)
            if s[-1] > best_val:
                best_val, best_vertex = float(s[-1]), cand
        chosen.append(best_vertex)
        remaining.remove(best_vertex)
    return np.sort(np.array(chosen, dtype=int))
