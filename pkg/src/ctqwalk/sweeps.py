"""Per-tuple experiment computations behind the CLI sweeps.

Each function here handles one (parameter, seed) tuple so runs can be
distributed over a worker pool; results are merged in deterministic
tuple order by the caller.  Nothing in this module mutates shared
state.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .analysis import (
    LocalizationProfile,
    _ExactPropagator,
    _StepPropagator,
    cutoff_time,
    ipr,
    log_time_grid,
    time_averaged_probability,
)
from .graphs import Graph, extremal_degree_vertex, generate_erdos_renyi, laplacian
from .partition import partition_laplacian
from .simulator import Statevector


def resolve_start_vertex(g: Graph, policy: str) -> int:
    """Start-vertex policy: min-degree, max-degree, or an explicit index."""
    if policy == "min-degree":
        return extremal_degree_vertex(g, "min")
    if policy == "max-degree":
        return extremal_degree_vertex(g, "max")
    vertex = int(policy)
    if not 0 <= vertex < g.N:
        raise ValueError(f"start vertex {vertex} out of range for N={g.N}")
    return vertex


@dataclass(frozen=True)
class FidelityTask:
    n: int
    p: float
    seed: int
    dt: float
    gamma: float
    t_max: float
    points_per_decade: int
    start_policy: str


def fidelity_rows(task: FidelityTask) -> list[tuple]:
    """Rows (n, p, seed, dt, t_eff, fidelity) for one graph realization."""
    g = generate_erdos_renyi(task.n, task.p, task.seed)
    L = laplacian(g)
    partition = partition_laplacian(L)
    start = resolve_start_vertex(g, task.start_policy)
    psi0 = np.zeros(g.N, dtype=complex)
    psi0[start] = 1.0
    exact = _ExactPropagator(L, task.gamma)
    steps = _StepPropagator(partition, task.gamma, task.dt)
    rows = []
    for t in log_time_grid(task.t_max, task.points_per_decade):
        r = int(round(t / task.dt))
        t_eff = r * task.dt
        f = abs(np.vdot(exact.state(psi0, t_eff), steps.power(r) @ psi0)) ** 2
        rows.append((task.n, task.p, task.seed, task.dt, t_eff, min(float(f), 1.0)))
    return rows


@dataclass(frozen=True)
class CutoffTask:
    n: int
    p: float
    seed: int
    dt: float
    gamma: float
    t_max: float
    points_per_decade: int
    threshold: float
    start_policy: str


def cutoff_for(task: CutoffTask) -> Optional[float]:
    """Cutoff time of one realization; None when the fidelity never
    drops below the threshold within the horizon."""
    g = generate_erdos_renyi(task.n, task.p, task.seed)
    L = laplacian(g)
    partition = partition_laplacian(L)
    start = resolve_start_vertex(g, task.start_policy)
    psi0 = np.zeros(g.N, dtype=complex)
    psi0[start] = 1.0
    exact = _ExactPropagator(L, task.gamma)
    steps = _StepPropagator(partition, task.gamma, task.dt)
    samples: list[tuple[float, float]] = []
    for t in log_time_grid(task.t_max, task.points_per_decade,
                           t_min=max(10 * task.dt, 0.1)):
        r = int(round(t / task.dt))
        t_eff = r * task.dt
        f = float(abs(np.vdot(exact.state(psi0, t_eff), steps.power(r) @ psi0)) ** 2)
        samples.append((t_eff, f))
        if f < task.threshold - 0.2:  # safely bracketed, stop scanning
            break
    return cutoff_time(samples, task.threshold)


@dataclass(frozen=True)
class LocalizationTask:
    n: int
    p: float
    seed: int
    dt: float
    gamma: float
    samples: int
    horizon: float
    start_policy: str
    contour: bool = True


@dataclass
class LocalizationResult:
    start_vertex: int
    exact: LocalizationProfile
    circuit: LocalizationProfile
    contour_times: np.ndarray          # circuit-path sample times
    contour_probs: np.ndarray          # (samples, N) per-vertex probabilities


def localization_for(task: LocalizationTask) -> LocalizationResult:
    """Time-averaged profiles (exact and circuit paths) plus the
    circuit-path time-resolved probabilities."""
    g = generate_erdos_renyi(task.n, task.p, task.seed)
    L = laplacian(g)
    partition = partition_laplacian(L)
    start = resolve_start_vertex(g, task.start_policy)
    psi0 = Statevector.basis_state(task.n, start)
    exact = time_averaged_probability(
        L, task.gamma, psi0, samples=task.samples, horizon=task.horizon,
        evolve="exact", start_vertex=start)
    circuit = time_averaged_probability(
        L, task.gamma, psi0, samples=task.samples, horizon=task.horizon,
        evolve="circuit", partition=partition, dt=task.dt, start_vertex=start)
    times = np.empty(task.samples)
    probs = np.empty((task.samples, g.N))
    if task.contour:
        steps = _StepPropagator(partition, task.gamma, task.dt)
        psi = psi0.amplitudes.astype(complex)
        r_prev = 0
        for k in range(1, task.samples + 1):
            r = int(round(k * task.horizon / (task.samples * task.dt)))
            psi = steps.power(r - r_prev) @ psi
            r_prev = r
            times[k - 1] = r * task.dt
            probs[k - 1] = np.abs(psi) ** 2
    return LocalizationResult(start_vertex=start, exact=exact, circuit=circuit,
                              contour_times=times, contour_probs=probs)


@dataclass(frozen=True)
class IprTask:
    n: int
    p: float
    seed: int
    dt: float
    gamma: float
    t_max: float
    points_per_decade: int
    start_policy: str
    evolve: str = "circuit"


def ipr_rows(task: IprTask) -> list[tuple]:
    """Rows (n, p, seed, t_eff, ipr) along a logarithmic time grid."""
    g = generate_erdos_renyi(task.n, task.p, task.seed)
    L = laplacian(g)
    start = resolve_start_vertex(g, task.start_policy)
    psi0 = np.zeros(g.N, dtype=complex)
    psi0[start] = 1.0
    rows = []
    if task.evolve == "exact":
        exact = _ExactPropagator(L, task.gamma)
        for t in log_time_grid(task.t_max, task.points_per_decade):
            prob = np.abs(exact.state(psi0, t)) ** 2
            rows.append((task.n, task.p, task.seed, t, ipr(prob / prob.sum())))
    else:
        steps = _StepPropagator(partition_laplacian(L), task.gamma, task.dt)
        for t in log_time_grid(task.t_max, task.points_per_decade):
            r = int(round(t / task.dt))
            prob = np.abs(steps.power(r) @ psi0) ** 2
            rows.append((task.n, task.p, task.seed, r * task.dt,
                         ipr(prob / prob.sum())))
    return rows
