"""Shared oracles and helpers for the test suite.

The oracles deliberately use numpy's LAPACK-backed routines so they are
independent of the library's own eigensolver and closed-form
exponentials.
"""
import numpy as np
import pytest


def expm_i_symmetric(theta: float, H: np.ndarray) -> np.ndarray:
    """Oracle for exp(i*theta*H), H real symmetric, via np.linalg.eigh."""
    evals, vecs = np.linalg.eigh(np.asarray(H, dtype=float))
    return (vecs * np.exp(1j * theta * evals)) @ vecs.T


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random 2x2 unitary from a QR factorization."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(12345))
