"""Laplacian partition into 2^n permutation-similar components.

A symmetric integer matrix L on N = 2^n vertices splits exactly into
components L^(j), j = 0..2^n-1, where every nonzero entry of L^(j) sits
at a position with row XOR col = j (0-based).  Component 0 is the
diagonal, component 1 the (k, k+1) pairs for even k, and components
j >= 2 are extracted by the alpha/beta element-swap loop -- no matrix
multiplication.  Each component, conjugated by its permutation, is
block-diagonal with 2x2 symmetric blocks; the extraction loop fills the
blocks directly.

The alpha/beta index arithmetic is 1-based;
the stored entries and blocks are 0-based.  The XOR law
(component_of) is kept as an independent oracle only.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .permutations import permutation_index_map

Entry = tuple[int, int, int]


@dataclass(frozen=True)
class PartitionComponent:
    """One component: sparse entries plus its conjugated 2x2 blocks."""

    n: int
    j: int
    entries: tuple[Entry, ...]   # (row, col, value), 0-based, row XOR col = j
    blocks: np.ndarray           # (2^(n-1), 2, 2) int64, symmetric blocks

    def dense(self) -> np.ndarray:
        N = 1 << self.n
        M = np.zeros((N, N), dtype=np.int64)
        for r, c, v in self.entries:
            M[r, c] = v
        return M

    def block_diagonal_dense(self) -> np.ndarray:
        N = 1 << self.n
        M = np.zeros((N, N), dtype=np.int64)
        for b in range(N // 2):
            M[2 * b:2 * b + 2, 2 * b:2 * b + 2] = self.blocks[b]
        return M


@dataclass(frozen=True)
class LaplacianPartition:
    n: int
    components: tuple[PartitionComponent, ...]
    op_count: int  # element reads+writes performed during extraction

    def reconstruct(self) -> np.ndarray:
        N = 1 << self.n
        M = np.zeros((N, N), dtype=np.int64)
        for c in self.components:
            M += c.dense()
        return M


def component_of(row: int, col: int) -> int:
    """Index of the structural class containing position (row, col)."""
    return row ^ col


def partition_laplacian(L: np.ndarray) -> LaplacianPartition:
    """Split a real symmetric 2^n x 2^n integer matrix into components.

    Exact integer arithmetic throughout; sum of components reproduces L
    exactly and supports of distinct components are disjoint.
    """
    L = np.asarray(L)
    N = L.shape[0]
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise ValueError("input must be a square matrix")
    n = N.bit_length() - 1
    if 1 << n != N:
        raise ValueError(f"matrix size {N} is not a power of two")
    if not np.array_equal(L, L.T):
        raise ValueError("input matrix must be symmetric")

    half = N // 2
    ops = 0
    entries: list[list[Entry]] = [[] for _ in range(N)]
    blocks = np.zeros((N, half, 2, 2), dtype=np.int64)

    # component 0: the diagonal
    for k in range(N):
        v = int(L[k, k])
        ops += 2  # one read, one write
        if v:
            entries[0].append((k, k, v))
        blocks[0, k // 2, k % 2, k % 2] = v

    # component 1: (k, k+1) pairs for even k (identity permutation)
    for k in range(0, N, 2):
        v = int(L[k, k + 1])
        ops += 3  # one read, symmetric pair of writes
        if v:
            entries[1].append((k, k + 1, v))
            entries[1].append((k + 1, k, v))
        blocks[1, k // 2, 0, 1] = v
        blocks[1, k // 2, 1, 0] = v

    # components j >= 2: alpha/beta element-swap loop
    for j in range(2, N):
        odd = j % 2 == 1
        x = (j - 1) // 2 if odd else j // 2
        for u in range(half):
            w = u ^ x
            alpha = 2 * u + 2
            beta = 2 * w + (2 if odd else 1)
            ops += 2  # alpha/beta index computation visits this position pair
            if alpha >= beta:
                continue
            if odd:
                # block u off-diagonal from L[2u, 2w+1], block w from L[2w, 2u+1]
                positions = ((2 * u, 2 * w + 1, u), (2 * w, 2 * u + 1, w))
            else:
                # block u off-diagonal from L[2u, 2w], block w from L[2u+1, 2w+1]
                positions = ((2 * u, 2 * w, u), (2 * u + 1, 2 * w + 1, w))
            for r, c, b in positions:
                v = int(L[r, c])
                ops += 4  # read + entry pair + block write
                if v:
                    entries[j].append((r, c, v))
                    entries[j].append((c, r, v))
                blocks[j, b, 0, 1] = v
                blocks[j, b, 1, 0] = v

    components = tuple(
        PartitionComponent(n=n, j=j, entries=tuple(entries[j]), blocks=blocks[j])
        for j in range(N)
    )
    return LaplacianPartition(n=n, components=components, op_count=ops)


def operation_count(partition: LaplacianPartition) -> int:
    """Element reads+writes performed by partition_laplacian."""
    return partition.op_count


def conjugated_blocks(component: PartitionComponent) -> np.ndarray:
    """The 2x2 symmetric blocks of P L^(j) P, checked block-diagonal.

    The blocks are produced during extraction; this recomputes the
    conjugation densely and verifies agreement, raising if the stored
    form is not actually block-diagonal (an internal indexing bug).
    """
    n, j = component.n, component.j
    perm = permutation_index_map(n, j)
    M = component.dense()
    conj = M[np.ix_(perm, perm)]
    if not np.array_equal(conj, component.block_diagonal_dense()):
        raise AssertionError(
            f"component j={j} conjugated form is not the stored block-diagonal")
    return component.blocks


def partition_to_json(partition: LaplacianPartition) -> str:
    """Dump format: {n, components: [{j, entries: [[r, c, v], ...]}]}."""
    doc = {
        "n": partition.n,
        "components": [
            {"j": c.j, "entries": [[r, cc, v] for r, cc, v in c.entries]}
            for c in partition.components
        ],
    }
    return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def partition_from_json(text: str) -> LaplacianPartition:
    """Rebuild a partition from its JSON dump (blocks recomputed)."""
    doc = json.loads(text)
    n = doc["n"]
    N = 1 << n
    M = np.zeros((N, N), dtype=np.int64)
    for comp in doc["components"]:
        for r, c, v in comp["entries"]:
            M[r, c] += v
    return partition_laplacian(M)
