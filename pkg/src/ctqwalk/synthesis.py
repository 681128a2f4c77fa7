"""Compile partition components into explicit gate sequences.

Each component factor exp(i*gamma*dt*L^(j)) becomes: the component's
CNOT conjugation, three multiplexed rotations (ZYZ angles of the 2x2
block exponentials), and one diagonal phase gate collecting the
per-block global phases.  A full Trotter step is the concatenation of
the factors for j = 1..2^n-1 with the diagonal component folded into
the j = 1 factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .circuits import Circuit, Cnot, DiagPhase, GlobalPhase, Rotation, rotation_matrix
from .partition import LaplacianPartition, PartitionComponent
from .permutations import cnot_sequence_for

_UNITARY_TOL = 1e-10


@dataclass(frozen=True)
class BlockUnitary:
    """Global phase plus ZYZ angles of one 2x2 unitary block."""

    global_phase: float
    alpha: float  # first R_z angle (leftmost factor)
    gamma: float  # R_y angle, canonical branch [0, pi/2]
    beta: float   # last R_z angle (rightmost factor)

    def reconstruct(self) -> np.ndarray:
        return (np.exp(1j * self.global_phase)
                * rotation_matrix("z", self.alpha)
                @ rotation_matrix("y", self.gamma)
                @ rotation_matrix("z", self.beta))


def block_exponential(block: np.ndarray, gamma: float, dt: float) -> np.ndarray:
    """exp(i*gamma*dt*B) for a symmetric real 2x2 block, in closed form.

    B = mu*I + vz*Z + vx*X; the exponential is
    e^{i*theta*mu} (cos(theta*nu) I + i sin(theta*nu) (vz Z + vx X)/nu).
    """
    B = np.asarray(block, dtype=float)
    if B.shape != (2, 2) or abs(B[0, 1] - B[1, 0]) > 1e-12:
        raise ValueError("block must be a symmetric real 2x2 matrix")
    theta = gamma * dt
    mu = 0.5 * (B[0, 0] + B[1, 1])
    vz = 0.5 * (B[0, 0] - B[1, 1])
    vx = B[0, 1]
    nu = np.hypot(vz, vx)
    phase = np.exp(1j * theta * mu)
    if nu == 0.0:
        return phase * np.eye(2, dtype=complex)
    c, s = np.cos(theta * nu), np.sin(theta * nu)
    return phase * np.array([[c + 1j * s * vz / nu, 1j * s * vx / nu],
                             [1j * s * vx / nu, c - 1j * s * vz / nu]])


def zyz_decompose(U: np.ndarray) -> BlockUnitary:
    """Split a 2x2 unitary into e^{i*delta} R_z(a) R_y(g) R_z(b).

    Canonical branch g = arccos|u00| in [0, pi/2]; when a row/column is
    degenerate (|u00| in {0, 1}) beta is set to 0 and the phase absorbed
    into alpha.
    """
    U = np.asarray(U, dtype=complex)
    if U.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    if np.linalg.norm(U.conj().T @ U - np.eye(2)) > _UNITARY_TOL:
        raise ValueError("input matrix is not unitary")
    det = U[0, 0] * U[1, 1] - U[0, 1] * U[1, 0]
    delta = 0.5 * np.angle(det)
    V = U * np.exp(-1j * delta)  # SU(2) up to rounding
    # same branch as arccos|u00| in [0, pi/2], but well-conditioned when
    # |u00| is close to 0 or 1
    g = float(np.arctan2(abs(V[0, 1]), abs(V[0, 0])))
    if abs(V[0, 1]) < 1e-14:        # diagonal: V = diag(e^{i(a+b)}, e^{-i(a+b)})
        # pin the branch exactly; arccos near 1 amplifies rounding noise
        a, b, g = float(np.angle(V[0, 0])), 0.0, 0.0
    elif abs(V[0, 0]) < 1e-14:      # antidiagonal
        a, b, g = float(np.angle(V[0, 1])), 0.0, float(np.pi / 2)
    else:
        splus = float(np.angle(V[0, 0]))   # a + b
        sminus = float(np.angle(V[0, 1]))  # a - b
        a = 0.5 * (splus + sminus)
        b = 0.5 * (splus - sminus)
    return BlockUnitary(global_phase=float(delta), alpha=a, gamma=g, beta=b)


def default_masks(k: int) -> tuple[int, ...]:
    """Control-line masks of the recursive multiplexor layout.

    The mask before rotation i (1-based) is the (i-1)-th k-bit string,
    control qubit 1 carried by the most significant bit.
    """
    return tuple(range(1 << k))


def sign_matrix(masks: Sequence[int], k: int) -> np.ndarray:
    """S[c, i] = (-1)^<c, m_i> over control strings c (parity rule)."""
    c = np.arange(1 << k)[:, None]
    m = np.asarray(masks)[None, :]
    overlap = c & m
    parity = np.zeros_like(overlap)
    for bit in range(k):
        parity ^= (overlap >> bit) & 1
    return np.where(parity, -1, 1).astype(np.int64)


def multiplexor_forward(omega: np.ndarray, masks: Optional[Sequence[int]] = None) -> np.ndarray:
    """Per-block angles eta_c produced by circuit angles omega (parity sum)."""
    omega = np.asarray(omega, dtype=float)
    k = omega.size.bit_length() - 1
    if 1 << k != omega.size:
        raise ValueError("angle count must be a power of two")
    if masks is None:
        masks = default_masks(k)
    return sign_matrix(masks, k) @ omega


def solve_multiplexor_angles(eta: np.ndarray, masks: Optional[Sequence[int]] = None) -> np.ndarray:
    """Invert the parity sum: omega = 2^{-k} S eta.

    With the default mask layout S is the (unnormalized) Walsh-Hadamard
    matrix, its own inverse up to the 2^{-k} factor.
    """
    eta = np.asarray(eta, dtype=float)
    k = eta.size.bit_length() - 1
    if 1 << k != eta.size:
        raise ValueError("angle count must be a power of two")
    if masks is None:
        masks = default_masks(k)
    S = sign_matrix(masks, k)
    return (S @ eta) / float(1 << k)


def compile_multiplexor(axis: str, omega: np.ndarray, n: Optional[int] = None,
                        target: Optional[int] = None,
                        masks: Optional[Sequence[int]] = None) -> Circuit:
    """Gate list of the multiplexed rotation with circuit angles omega.

    Controls are qubits 1..k adjacent above the target (default: target
    is qubit k+1 on a (k+1)-qubit register).  The recursion interleaves
    the rotation fan of the inner controls with closing CNOTs from the
    outer control, reproducing the recursive mask layout.
    """
    omega = np.asarray(omega, dtype=float)
    k = omega.size.bit_length() - 1
    if 1 << k != omega.size:
        raise ValueError("angle count must be a power of two")
    if masks is not None and tuple(masks) != default_masks(k):
        raise ValueError("only the recursive (natural binary) mask layout is supported")
    if n is None:
        n = k + 1
    if target is None:
        target = n
    controls = list(range(target - k, target))
    if controls and controls[0] < 1:
        raise ValueError("not enough control qubits above the target")

    def emit(ctrls: list[int], angles: np.ndarray) -> list:
        if not ctrls:
            return [Rotation(axis, target, float(angles[0]))]
        half = angles.size // 2
        inner_first = emit(ctrls[1:], angles[:half])
        inner_second = emit(ctrls[1:], angles[half:])
        closing = Cnot(ctrls[0], target)
        return inner_first + [closing] + inner_second + [closing]

    return Circuit(n, tuple(emit(controls, omega)))


def synthesize_block_diagonal(blocks: Sequence[np.ndarray],
                              n: Optional[int] = None) -> Circuit:
    """Circuit for a direct sum of 2x2 unitary blocks.

    DIAG_PHASE carries the per-block global phases; the SU(2) parts
    become three multiplexed rotations whose per-block angles are the
    ZYZ factors, applied rightmost factor first.
    """
    count = len(blocks)
    k = count.bit_length() - 1
    if 1 << k != count:
        raise ValueError("block count must be a power of two")
    if n is None:
        n = k + 1
    elif n != k + 1:
        raise ValueError(f"{count} blocks require n = {k + 1}")
    decomps = [zyz_decompose(B) for B in blocks]
    alphas = np.array([d.alpha for d in decomps])
    gammas = np.array([d.gamma for d in decomps])
    betas = np.array([d.beta for d in decomps])
    phases = np.repeat([d.global_phase for d in decomps], 2)

    circuit = compile_multiplexor("z", solve_multiplexor_angles(betas), n=n)
    circuit += compile_multiplexor("y", solve_multiplexor_angles(gammas), n=n)
    circuit += compile_multiplexor("z", solve_multiplexor_angles(alphas), n=n)
    circuit += Circuit(n, (DiagPhase(tuple(float(p) for p in phases)),))
    return circuit


def synthesize_component(component: PartitionComponent, gamma: float, dt: float,
                         fold_diagonal: Optional[PartitionComponent] = None) -> Circuit:
    """Circuit for exp(i*gamma*dt*L^(j)): permutation conjugation around
    the block-diagonal factor.

    With fold_diagonal given (the j = 0 diagonal component), its blocks
    are added before exponentiation; this is how the diagonal enters the
    j = 1 factor of a Trotter step.
    """
    n, j = component.n, component.j
    blocks = component.blocks.astype(float)
    if fold_diagonal is not None:
        blocks = blocks + fold_diagonal.blocks.astype(float)
    unitaries = [block_exponential(B, gamma, dt) for B in blocks]
    conj = Circuit(n, tuple(Cnot(c, t) for c, t in cnot_sequence_for(n, j).gates))
    return conj + synthesize_block_diagonal(unitaries, n=n) + conj


def synthesize_trotter_step(partition: LaplacianPartition, gamma: float,
                            dt: float) -> Circuit:
    """One first-order Trotter step: factors j = 1..2^n-1 in ascending j,
    the diagonal component folded into the j = 1 factor."""
    n = partition.n
    circuit = synthesize_component(partition.components[1], gamma, dt,
                                   fold_diagonal=partition.components[0])
    for j in range(2, 1 << n):
        circuit += synthesize_component(partition.components[j], gamma, dt)
    return circuit


def decompose_diag_phase(phases: Sequence[float], n: int) -> Circuit:
    """Optional pass: expand a diagonal phase gate into multiplexed R_z
    gates plus a global phase.  Off by default; simulation applies
    DIAG_PHASE natively."""
    phi = np.asarray(phases, dtype=float)
    if phi.size != 1 << n:
        raise ValueError(f"need {1 << n} phases for n={n}")
    gates: list = []
    for q in range(n, 0, -1):
        # diag(e^{i phi_{2b}}, e^{i phi_{2b+1}}) = e^{i mean_b} R_z(dev_b) on qubit q
        pairs = phi.reshape(-1, 2)
        dev = 0.5 * (pairs[:, 0] - pairs[:, 1])
        if q == 1:
            gates.append(Rotation("z", 1, float(dev[0])))
        else:
            gates.append(compile_multiplexor("z", solve_multiplexor_angles(dev),
                                             n=n, target=q))
        phi = 0.5 * (pairs[:, 0] + pairs[:, 1])
    gates.append(GlobalPhase(float(phi[0])))
    flat: list = []
    for g in gates:
        flat.extend(g.gates if isinstance(g, Circuit) else [g])
    return Circuit(n, tuple(flat))
