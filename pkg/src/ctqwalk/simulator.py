"""Statevector execution, dense unitaries, and evolution backends.

Qubit 1 is the most significant bit of the amplitude index, matching
the permutation conventions.  Gate application works on arrays of shape
(N,) (a statevector) or (N, M) (M states at once, used to build dense
circuit unitaries column by column).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .circuits import Circuit, Cnot, DiagPhase, GlobalPhase, Rotation
from .partition import LaplacianPartition
from .permutations import permutation_index_map
from .synthesis import block_exponential

_DENSE_QUBIT_GUARD = 10


@dataclass(frozen=True)
class Statevector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError("amplitude count must be 2^n")

    @classmethod
    def basis_state(cls, n: int, index: int) -> "Statevector":
        amps = np.zeros(1 << n, dtype=complex)
        amps[index] = 1.0
        return cls(n=n, amplitudes=amps)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class EvolutionParams:
    """Trotter run parameters; r = round(t/dt), effective time r*dt."""

    gamma: float
    dt: float
    t: float

    @property
    def r(self) -> int:
        return int(round(self.t / self.dt))

    @property
    def t_eff(self) -> float:
        return self.r * self.dt


@lru_cache(maxsize=256)
def _pair_indices(n: int, qubit: int) -> tuple[np.ndarray, np.ndarray]:
    bit = 1 << (n - qubit)
    basis = np.arange(1 << n)
    i0 = basis[(basis & bit) == 0]
    return i0, i0 | bit


@lru_cache(maxsize=256)
def _cnot_permutation(n: int, control: int, target: int) -> np.ndarray:
    cbit = 1 << (n - control)
    tbit = 1 << (n - target)
    basis = np.arange(1 << n)
    return np.where(basis & cbit, basis ^ tbit, basis)


def _apply(state: np.ndarray, gate, n: int) -> np.ndarray:
    if isinstance(gate, Cnot):
        return state[_cnot_permutation(n, gate.control, gate.target)]
    if isinstance(gate, Rotation):
        i0, i1 = _pair_indices(n, gate.target)
        out = np.empty_like(state)
        if gate.axis == "y":
            c, s = np.cos(gate.angle), np.sin(gate.angle)
            out[i0] = c * state[i0] + s * state[i1]
            out[i1] = -s * state[i0] + c * state[i1]
        else:
            out[i0] = np.exp(1j * gate.angle) * state[i0]
            out[i1] = np.exp(-1j * gate.angle) * state[i1]
        return out
    if isinstance(gate, DiagPhase):
        phase = np.exp(1j * np.asarray(gate.phases))
        return state * (phase[:, None] if state.ndim == 2 else phase)
    if isinstance(gate, GlobalPhase):
        return state * np.exp(1j * gate.angle)
    raise TypeError(f"unknown gate {gate!r}")


def apply_gate(state: Statevector, gate) -> Statevector:
    return Statevector(state.n, _apply(state.amplitudes.astype(complex), gate, state.n))


def run_circuit(circuit: Circuit, state: Statevector) -> Statevector:
    """Left-to-right gate application."""
    if circuit.n != state.n:
        raise ValueError("circuit and state dimensions differ")
    amps = state.amplitudes.astype(complex)
    for gate in circuit.gates:
        amps = _apply(amps, gate, circuit.n)
    return Statevector(state.n, amps)


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Dense unitary via column-by-column application to basis states."""
    if circuit.n > _DENSE_QUBIT_GUARD:
        raise ValueError(
            f"dense unitary limited to n <= {_DENSE_QUBIT_GUARD}, got {circuit.n}")
    U = np.eye(1 << circuit.n, dtype=complex)
    for gate in circuit.gates:
        U = _apply(U, gate, circuit.n)
    return U


def jacobi_eigh(M: np.ndarray, tol: float = 1e-12,
                max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Returns (eigenvalues, Q) with M = Q diag(eigenvalues) Q^T.
    Convergence: off-diagonal Frobenius mass below tol relative to the
    input Frobenius norm, cap at max_sweeps sweeps.
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(A, A.T, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    m = A.shape[0]
    Q = np.eye(m)
    scale = max(1.0, float(np.linalg.norm(A)))
    for _ in range(max_sweeps):
        off = np.sqrt(2.0 * np.sum(np.triu(A, 1) ** 2))
        if off <= tol * scale:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = 0.5 * (A[q, q] - A[p, p]) / apq
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                tau = s / (1.0 + c)
                app, aqq = A[p, p], A[q, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = A[q, p] = 0.0
                rows = np.ones(m, dtype=bool)
                rows[[p, q]] = False
                arp, arq = A[rows, p].copy(), A[rows, q].copy()
                A[rows, p] = arp - s * (arq + tau * arp)
                A[rows, q] = arq + s * (arp - tau * arq)
                A[p, rows] = A[rows, p]
                A[q, rows] = A[rows, q]
                qp, qq = Q[:, p].copy(), Q[:, q].copy()
                Q[:, p] = qp - s * (qq + tau * qp)
                Q[:, q] = qq + s * (qp - tau * qq)
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")
    return np.diag(A).copy(), Q


def exact_evolution(L: np.ndarray, gamma: float, t: float,
                    psi0: Statevector) -> Statevector:
    """psi(t) = e^{-iHt} psi0 with H = -gamma*L, via eigendecomposition."""
    evals, Q = jacobi_eigh(np.asarray(L, dtype=float))
    coeffs = Q.T @ psi0.amplitudes
    amps = Q @ (np.exp(1j * gamma * evals * t) * coeffs)
    return Statevector(psi0.n, amps)


def step_unitary(partition: LaplacianPartition, gamma: float, dt: float) -> np.ndarray:
    """Dense unitary of one Trotter step, assembled from the component
    block exponentials (identical by construction to the compiled
    circuit's unitary; the equivalence is covered by tests)."""
    n = partition.n
    N = 1 << n
    U = np.eye(N, dtype=complex)
    for j in range(1, N):
        blocks = partition.components[j].blocks.astype(float)
        if j == 1:
            blocks = blocks + partition.components[0].blocks.astype(float)
        W = np.zeros((N, N), dtype=complex)
        for b in range(N // 2):
            W[2 * b:2 * b + 2, 2 * b:2 * b + 2] = block_exponential(blocks[b], gamma, dt)
        perm = permutation_index_map(n, j)
        Uj = W[np.ix_(perm, perm)]
        U = Uj @ U  # ascending j, j = 1 acts first
    return U


def trotter_evolution(partition: LaplacianPartition, params: EvolutionParams,
                      psi0: Statevector, backend: str = "matrix_power",
                      step_circuit: Circuit | None = None,
                      max_gate_applications: int = 10**8) -> Statevector:
    """Apply r Trotter steps to psi0.

    backend="gates" runs the compiled step circuit r times;
    backend="matrix_power" computes the dense step unitary once and
    raises it to the r-th power by binary exponentiation.
    """
    r = params.r
    if r < 0:
        raise ValueError("step count must be >= 0")
    if r == 0:
        return Statevector(psi0.n, psi0.amplitudes.astype(complex))
    if backend == "gates":
        from .synthesis import synthesize_trotter_step
        circuit = step_circuit or synthesize_trotter_step(partition, params.gamma, params.dt)
        if r * len(circuit.gates) > max_gate_applications:
            raise ValueError(
                f"gates backend refused: {r} steps x {len(circuit.gates)} gates "
                f"exceeds budget {max_gate_applications}; use matrix_power")
        state = psi0
        for _ in range(r):
            state = run_circuit(circuit, state)
        return state
    if backend == "matrix_power":
        U = np.linalg.matrix_power(step_unitary(partition, params.gamma, params.dt), r)
        return Statevector(psi0.n, U @ psi0.amplitudes)
    raise ValueError(f"unknown backend {backend!r}")


def fidelity(psi_a: Statevector, psi_b: Statevector) -> float:
    """|<a|b>|^2."""
    if psi_a.n != psi_b.n:
        raise ValueError("statevector dimensions differ")
    return float(abs(np.vdot(psi_a.amplitudes, psi_b.amplitudes)) ** 2)
