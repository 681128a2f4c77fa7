"""Observables: fidelity curves, cutoff times, scaling fits, Trotter
error bounds, localization profiles, IPR, and the complete-graph closed
forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .partition import LaplacianPartition
from .simulator import Statevector, jacobi_eigh, step_unitary


@dataclass
class ExperimentRecord:
    """Samples from one evolution run plus the configuration that
    produced them."""

    metadata: dict
    fidelity_samples: list[tuple[float, float]] = field(default_factory=list)
    probability_samples: list[tuple[float, np.ndarray]] = field(default_factory=list)


@dataclass(frozen=True)
class LocalizationProfile:
    p_bar: np.ndarray
    N: int
    start_vertex: int


@dataclass(frozen=True)
class ScalingFit:
    slope: float
    intercept: float
    residual: float
    points: tuple[tuple[float, float], ...]


def log_time_grid(t_max: float, points_per_decade: int = 50,
                  t_min: float = 0.1) -> np.ndarray:
    """Logarithmically spaced sample times from t_min to t_max."""
    if not 0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    decades = np.log10(t_max / t_min)
    count = max(2, int(round(decades * points_per_decade)) + 1)
    return np.logspace(np.log10(t_min), np.log10(t_max), count)


class _ExactPropagator:
    """Eigendecomposition of L reused across sample times."""

    def __init__(self, L: np.ndarray, gamma: float):
        self.evals, self.Q = jacobi_eigh(np.asarray(L, dtype=float))
        self.gamma = gamma

    def state(self, psi0: np.ndarray, t: float) -> np.ndarray:
        coeffs = self.Q.T @ psi0
        return self.Q @ (np.exp(1j * self.gamma * self.evals * t) * coeffs)


class _StepPropagator:
    """Trotter step unitary with cached binary powers."""

    def __init__(self, partition: LaplacianPartition, gamma: float, dt: float):
        self.U = step_unitary(partition, gamma, dt)
        self.dt = dt
        self._powers: dict[int, np.ndarray] = {1: self.U}

    def power(self, r: int) -> np.ndarray:
        if r == 0:
            return np.eye(self.U.shape[0], dtype=complex)
        if r in self._powers:
            return self._powers[r]
        half = self.power(r // 2)
        out = half @ half
        if r % 2:
            out = out @ self.U
        self._powers[r] = out
        return out


def fidelity_curve(L: np.ndarray, partition: LaplacianPartition, gamma: float,
                   dt: float, times: Sequence[float],
                   start_vertex: int = 0) -> list[tuple[float, float]]:
    """(t_eff, fidelity) samples of Trotterized vs exact evolution from
    a basis start state, via the dense matrix-power backend."""
    N = L.shape[0]
    psi0 = np.zeros(N, dtype=complex)
    psi0[start_vertex] = 1.0
    exact = _ExactPropagator(L, gamma)
    steps = _StepPropagator(partition, gamma, dt)
    samples = []
    for t in times:
        r = int(round(t / dt))
        t_eff = r * dt
        psi_circ = steps.power(r) @ psi0
        psi_exact = exact.state(psi0, t_eff)
        samples.append((t_eff, float(abs(np.vdot(psi_exact, psi_circ)) ** 2)))
    return samples


def time_averaged_probability(L: np.ndarray, gamma: float, psi0: Statevector,
                              samples: int = 1000, horizon: float = 100.0,
                              evolve: str = "exact",
                              partition: Optional[LaplacianPartition] = None,
                              dt: float = 1e-3,
                              start_vertex: Optional[int] = None) -> LocalizationProfile:
    """Discrete time average of the vertex occupation probabilities at
    t_k = k*horizon/samples, k = 1..samples.

    evolve="exact" uses the eigendecomposition, evolve="circuit" the
    Trotter step unitary (requires the partition).
    """
    if samples < 1 or horizon <= 0:
        raise ValueError("need samples >= 1 and horizon > 0")
    N = psi0.amplitudes.size
    if start_vertex is None:
        start_vertex = int(np.argmax(np.abs(psi0.amplitudes)))
    acc = np.zeros(N)
    if evolve == "exact":
        prop = _ExactPropagator(L, gamma)
        coeffs = prop.Q.T @ psi0.amplitudes
        for k in range(1, samples + 1):
            t = k * horizon / samples
            psi = prop.Q @ (np.exp(1j * gamma * prop.evals * t) * coeffs)
            acc += np.abs(psi) ** 2
    elif evolve == "circuit":
        if partition is None:
            raise ValueError("circuit evolution requires the partition")
        steps = _StepPropagator(partition, gamma, dt)
        psi = psi0.amplitudes.astype(complex)
        r_prev = 0
        for k in range(1, samples + 1):
            r = int(round(k * horizon / (samples * dt)))
            psi = steps.power(r - r_prev) @ psi
            r_prev = r
            acc += np.abs(psi) ** 2
    else:
        raise ValueError(f"unknown evolution mode {evolve!r}")
    return LocalizationProfile(p_bar=acc / samples, N=N, start_vertex=start_vertex)


def localization_test(profile: LocalizationProfile, vertex: int) -> bool:
    """True iff the time-averaged probability at the vertex exceeds the
    uniform baseline 1/N."""
    return bool(profile.p_bar[vertex] > 1.0 / profile.N)


def ipr(prob_vector: np.ndarray) -> float:
    """Inverse participation ratio sum_i p_i^2; 1/N uniform, 1 delta."""
    p = np.asarray(prob_vector, dtype=float)
    if abs(p.sum() - 1.0) > 1e-6:
        raise ValueError("probabilities must sum to 1")
    return float(np.sum(p ** 2))


def complete_graph_return_probability(N: int, t: float) -> float:
    """Instantaneous return probability on K_N (gamma = 1)."""
    if N < 2:
        raise ValueError("need N >= 2")
    return (1.0 / N**2 + (1.0 - 1.0 / N) ** 2
            + (2.0 / N) * (1.0 - 1.0 / N) * np.cos(N * t))


def complete_graph_return_average(N: int) -> float:
    """Long-time average of the K_N return probability: 1 - 2/N + 2/N^2."""
    if N < 2:
        raise ValueError("need N >= 2")
    return 1.0 - 2.0 / N + 2.0 / N**2


def complete_graph_ipr(N: int, t: float) -> float:
    """Instantaneous IPR on K_N for a single-vertex start (gamma = 1)."""
    if N < 2:
        raise ValueError("need N >= 2")
    return (1.0 - 4.0 / N + 10.0 / N**2 - 6.0 / N**3
            + 4.0 * (N - 1) * (N - 2) / N**3 * np.cos(N * t)
            + 2.0 * (N - 1) / N**3 * np.cos(2 * N * t))


def complete_graph_ipr_average(N: int) -> float:
    """Long-time average of the K_N IPR: 1 - 4/N + 10/N^2 - 6/N^3."""
    if N < 2:
        raise ValueError("need N >= 2")
    return 1.0 - 4.0 / N + 10.0 / N**2 - 6.0 / N**3


def cutoff_time(samples: Sequence[tuple[float, float]],
                threshold: float = 0.95) -> Optional[float]:
    """First time the fidelity drops below the threshold, interpolated
    linearly in log-t between the bracketing samples.

    Returns None when the curve never crosses (beyond horizon).
    """
    pts = sorted(samples)
    prev_t, prev_f = None, None
    for t, f in pts:
        if f < threshold:
            if prev_t is None or prev_t <= 0:
                return float(t)
            frac = (prev_f - threshold) / (prev_f - f)
            log_tau = np.log(prev_t) + frac * (np.log(t) - np.log(prev_t))
            return float(np.exp(log_tau))
        prev_t, prev_f = t, f
    return None


def fit_exponential(points: Sequence[tuple[float, float]]) -> ScalingFit:
    """Least-squares fit of ln(tau) = m*n + c over (n, tau) pairs."""
    if len(points) < 3:
        raise ValueError("need at least 3 points to fit")
    ns = np.array([p[0] for p in points], dtype=float)
    taus = np.array([p[1] for p in points], dtype=float)
    if np.any(taus <= 0):
        raise ValueError("cutoff times must be positive")
    y = np.log(taus)
    A = np.vstack([ns, np.ones_like(ns)]).T
    coef, res, _, _ = np.linalg.lstsq(A, y, rcond=None)
    residual = float(res[0]) if res.size else 0.0
    return ScalingFit(slope=float(coef[0]), intercept=float(coef[1]),
                      residual=residual, points=tuple((float(a), float(b)) for a, b in points))


def trotter_error_bound(n: int, dt: float, epsilon: float = 1.0) -> float:
    """Per-step first-order bound dt^2 * epsilon * 2^(2n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return dt**2 * epsilon * 2.0 ** (2 * n - 1)


def accumulated_error_bound(n: int, dt: float, total_time: float,
                            epsilon: float = 1.0) -> float:
    """Accumulated bound T * dt * epsilon * 2^(2n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return total_time * dt * epsilon * 2.0 ** (2 * n - 1)
