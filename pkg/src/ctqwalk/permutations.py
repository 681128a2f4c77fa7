"""Transposition-product permutations and their CNOT realizations.

For every component index j on n qubits there is a permutation that is a
product of disjoint 2-cycles, and an equivalent CNOT sequence.  The
2-cycles come in two parity classes: for odd j both swapped indices are
even (1-based), for even j exactly one is odd.

Conventions (fixed throughout the package):
  - cycle endpoints are 1-based; helpers ending in `_map` are 0-based
  - qubits are numbered 1..n with qubit 1 the most significant bit of
    the vertex index and qubit n the least significant
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CycleSpec:
    """Disjoint-transposition description of the component-j permutation."""

    n: int
    j: int
    cycles: tuple[tuple[int, int], ...]  # (alpha, beta) with alpha < beta, 1-based
    parity_class: str                    # "even" | "odd"
    x: int                               # (j-1)//2 for odd j, j//2 for even j
    kappa: frozenset[int]                # set-bit positions of x


@dataclass(frozen=True)
class CnotSequence:
    """Ordered CNOT gates as (control, target) pairs, qubits 1..n."""

    n: int
    j: int
    gates: tuple[tuple[int, int], ...]


def _check_index(n: int, j: int) -> None:
    if not 0 <= j < (1 << n):
        raise ValueError(f"component index j={j} out of range for n={n}")


def cycles_for(n: int, j: int) -> CycleSpec:
    """Enumerate the disjoint 2-cycles of the component-j permutation.

    For j >= 2 the endpoints are, per u in [0, 2^(n-1)):
        alpha(u) = 2u + 2
        beta(u)  = 2(u XOR x) + 2   (odd j, both endpoints even)
        beta(u)  = 2(u XOR x) + 1   (even j, one endpoint odd)
    keeping only pairs with alpha < beta.  j in {0, 1} is the identity.
    """
    _check_index(n, j)
    if j < 2:
        return CycleSpec(n=n, j=j, cycles=(), parity_class="even" if j % 2 else "odd",
                         x=0, kappa=frozenset())
    odd = j % 2 == 1
    x = (j - 1) // 2 if odd else j // 2
    kappa = frozenset(k for k in range(n - 1) if (x >> k) & 1)
    offset = 2 if odd else 1
    cycles = []
    for u in range(1 << (n - 1)):
        alpha = 2 * u + 2
        beta = 2 * (u ^ x) + offset
        if alpha < beta:
            cycles.append((alpha, beta))
    return CycleSpec(n=n, j=j, cycles=tuple(cycles),
                     parity_class="even" if odd else "odd", x=x, kappa=kappa)


def cnot_sequence_for(n: int, j: int) -> CnotSequence:
    """CNOT realization of the component-j permutation.

    Odd j: one CNOT per set bit k of x, control n, target n-k-1, in
    ascending k (the fan commutes, the order is fixed for determinism).
    Even j: the same fan conjugated on both sides by the CNOT with
    control n-max(kappa)-1 and target n.  Empty for j in {0, 1}.
    """
    _check_index(n, j)
    if j < 2:
        return CnotSequence(n=n, j=j, gates=())
    odd = j % 2 == 1
    x = (j - 1) // 2 if odd else j // 2
    kappa = sorted(k for k in range(n - 1) if (x >> k) & 1)
    fan = [(n, n - k - 1) for k in kappa]
    if odd:
        gates = fan
    else:
        wrap = (n - max(kappa) - 1, n)
        gates = [wrap] + fan + [wrap]
    return CnotSequence(n=n, j=j, gates=tuple(gates))


def cycle_index_map(spec: CycleSpec) -> np.ndarray:
    """0-based vertex map v -> P(v) of the transposition product."""
    N = 1 << spec.n
    perm = np.arange(N)
    for alpha, beta in spec.cycles:
        perm[alpha - 1], perm[beta - 1] = perm[beta - 1], perm[alpha - 1]
    return perm


def permutation_index_map(n: int, j: int) -> np.ndarray:
    """0-based vertex map of the component-j permutation (cycle route)."""
    return cycle_index_map(cycles_for(n, j))


def cnot_index_map(seq: CnotSequence) -> np.ndarray:
    """0-based vertex map realized by applying the CNOTs in order."""
    n = seq.n
    v = np.arange(1 << n)
    for control, target in seq.gates:
        cbit = 1 << (n - control)
        tbit = 1 << (n - target)
        v = np.where(v & cbit, v ^ tbit, v)
    # v[i] is where basis state i ends up under the full product
    return v


def permutation_matrix(spec: CycleSpec) -> np.ndarray:
    """Dense 0/1 matrix of the transposition product (test oracle)."""
    perm = cycle_index_map(spec)
    N = perm.size
    P = np.zeros((N, N), dtype=np.int64)
    P[perm, np.arange(N)] = 1
    return P


def cnot_sequence_matrix(seq: CnotSequence) -> np.ndarray:
    """Dense 0/1 matrix of the CNOT product."""
    perm = cnot_index_map(seq)
    N = perm.size
    P = np.zeros((N, N), dtype=np.int64)
    P[perm, np.arange(N)] = 1
    return P


def verify_cnot_equals_cycles(n: int, j: int) -> bool:
    """True iff the CNOT-product unitary equals the cycle-product matrix."""
    _check_index(n, j)
    P_cycles = permutation_matrix(cycles_for(n, j))
    P_cnot = cnot_sequence_matrix(cnot_sequence_for(n, j))
    return bool(np.array_equal(P_cycles, P_cnot))
