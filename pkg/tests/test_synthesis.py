import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import expm_i_symmetric, random_unitary_2x2
from ctqwalk.circuits import DiagPhase, rotation_matrix
from ctqwalk.graphs import generate_erdos_renyi, laplacian
from ctqwalk.partition import partition_laplacian
from ctqwalk.permutations import permutation_matrix, cycles_for
from ctqwalk.simulator import circuit_unitary
from ctqwalk.synthesis import (
    block_exponential,
    compile_multiplexor,
    decompose_diag_phase,
    default_masks,
    multiplexor_forward,
    sign_matrix,
    solve_multiplexor_angles,
    synthesize_block_diagonal,
    synthesize_component,
    synthesize_trotter_step,
    zyz_decompose,
)


# ---------------------------------------------------------------------------
# 2x2 building blocks

@settings(max_examples=60, deadline=None)
@given(a=st.floats(-4, 4), d=st.floats(-4, 4), o=st.floats(-4, 4),
       theta=st.floats(-2, 2))
def test_block_exponential_matches_eigh_oracle(a, d, o, theta):
    B = np.array([[a, o], [o, d]])
    got = block_exponential(B, gamma=1.0, dt=theta)
    want = expm_i_symmetric(theta, B)
    assert np.linalg.norm(got - want) < 1e-12


def test_block_exponential_rejects_asymmetric():
    with pytest.raises(ValueError):
        block_exponential(np.array([[0.0, 1.0], [2.0, 0.0]]), 1.0, 0.1)


def test_zyz_reconstructs_random_unitaries(rng):
    for _ in range(200):
        U = random_unitary_2x2(rng)
        d = zyz_decompose(U)
        assert 0.0 <= d.gamma <= np.pi / 2 + 1e-12
        assert np.linalg.norm(d.reconstruct() - U) < 1e-12


def test_zyz_degenerate_branches_are_exact():
    # diagonal input: the middle rotation angle must be exactly zero
    d = zyz_decompose(np.diag([np.exp(0.3j), np.exp(-0.3j)]))
    assert d.gamma == 0.0 and d.beta == 0.0
    # antidiagonal input: exactly pi/2
    d = zyz_decompose(np.array([[0, 1], [-1, 0]], dtype=complex))
    assert d.gamma == np.pi / 2 and d.beta == 0.0


def test_zyz_rejects_non_unitary():
    with pytest.raises(ValueError):
        zyz_decompose(np.array([[1.0, 0.1], [0.0, 1.0]]))


# ---------------------------------------------------------------------------
# multiplexed rotations

def test_sign_matrix_k2_golden():
    S = sign_matrix(default_masks(2), 2)
    assert np.array_equal(S, [[1, 1, 1, 1],
                              [1, -1, 1, -1],
                              [1, 1, -1, -1],
                              [1, -1, -1, 1]])


def test_forward_inverse_round_trip():
    rng = np.random.Generator(np.random.PCG64(5))
    for k in range(1, 7):
        eta = rng.normal(size=1 << k)
        omega = solve_multiplexor_angles(eta)
        assert np.linalg.norm(multiplexor_forward(omega) - eta) < 1e-12


def test_compiled_multiplexor_realizes_block_rotations(rng):
    for axis in ("y", "z"):
        for k in (1, 2, 3):
            eta = rng.normal(size=1 << k)
            omega = solve_multiplexor_angles(eta)
            circ = compile_multiplexor(axis, omega)
            U = circuit_unitary(circ)
            want = np.zeros_like(U)
            for c, angle in enumerate(eta):
                want[2 * c:2 * c + 2, 2 * c:2 * c + 2] = rotation_matrix(axis, angle)
            assert np.linalg.norm(U - want) < 1e-12, (axis, k)


def test_multiplexor_rejects_foreign_mask_layout():
    with pytest.raises(ValueError):
        compile_multiplexor("y", np.zeros(4), masks=(0, 2, 1, 3))


def test_block_diagonal_synthesis(rng):
    blocks = [random_unitary_2x2(rng) for _ in range(4)]
    circ = synthesize_block_diagonal(blocks)
    U = circuit_unitary(circ)
    want = np.zeros((8, 8), dtype=complex)
    for b, B in enumerate(blocks):
        want[2 * b:2 * b + 2, 2 * b:2 * b + 2] = B
    assert np.linalg.norm(U - want) < 1e-12


# ---------------------------------------------------------------------------
# component and step synthesis

def _component_oracle(partition, j, gamma, dt):
    comp = partition.components[j]
    dense = comp.dense().astype(float)
    if j == 1:
        dense = dense + partition.components[0].dense()
    return expm_i_symmetric(gamma * dt, dense)


@pytest.mark.parametrize("n,p,seed", [(2, 0.6, 0), (3, 0.5, 1), (3, 0.9, 2),
                                      (4, 0.4, 3)])
def test_component_circuits_match_exponential_oracle(n, p, seed):
    gamma, dt = 1.0, 0.05
    L = laplacian(generate_erdos_renyi(n, p, seed))
    partition = partition_laplacian(L)
    for j in range(1, 1 << n):
        fold = partition.components[0] if j == 1 else None
        circ = synthesize_component(partition.components[j], gamma, dt,
                                    fold_diagonal=fold)
        U = circuit_unitary(circ)
        want = _component_oracle(partition, j, gamma, dt)
        assert np.linalg.norm(U - want) < 1e-10, j


def test_component_conjugation_structure():
    # the compiled component equals P * blockdiag * P with P from the
    # cycle oracle
    n, gamma, dt = 3, 0.7, 0.02
    L = laplacian(generate_erdos_renyi(n, 0.8, seed=9))
    partition = partition_laplacian(L)
    for j in range(2, 1 << n):
        comp = partition.components[j]
        circ = synthesize_component(comp, gamma, dt)
        P = permutation_matrix(cycles_for(n, j)).astype(complex)
        W = np.zeros((8, 8), dtype=complex)
        for b in range(4):
            W[2 * b:2 * b + 2, 2 * b:2 * b + 2] = block_exponential(
                comp.blocks[b].astype(float), gamma, dt)
        assert np.linalg.norm(circuit_unitary(circ) - P @ W @ P) < 1e-12


def test_trotter_step_is_product_of_factors():
    n, gamma, dt = 3, 1.0, 0.01
    L = laplacian(generate_erdos_renyi(n, 0.5, seed=4))
    partition = partition_laplacian(L)
    circ = synthesize_trotter_step(partition, gamma, dt)
    want = np.eye(8, dtype=complex)
    for j in range(1, 8):
        want = _component_oracle(partition, j, gamma, dt) @ want
    assert np.linalg.norm(circuit_unitary(circ) - want) < 1e-10


def test_diag_phase_expansion(rng):
    n = 3
    phases = rng.normal(size=8)
    expanded = decompose_diag_phase(tuple(phases), n)
    assert not any(isinstance(g, DiagPhase) for g in expanded.gates)
    U = circuit_unitary(expanded)
    assert np.linalg.norm(U - np.diag(np.exp(1j * phases))) < 1e-12
