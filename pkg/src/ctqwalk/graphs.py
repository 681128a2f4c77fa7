"""Undirected graphs on N = 2^n vertices and their Laplacians.

Vertices are 0-based integers 0..N-1, identified with the computational
basis states of an n-qubit register (qubit 1 = most significant bit).
All matrices are kept integer-exact; conversion to floating point only
happens at evolution time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO

import numpy as np

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with N = 2^n vertices.

    Edges are stored as a frozenset of (i, j) pairs with i < j.
    Immutable after construction; safe to share across threads.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"qubit count must be >= 1, got {self.n}")
        N = self.N
        for i, j in self.edges:
            if not (0 <= i < j < N):
                raise ValueError(f"invalid edge ({i}, {j}) for N={N}")

    @property
    def N(self) -> int:
        return 1 << self.n

    def degree(self, v: int) -> int:
        return sum(1 for i, j in self.edges if v == i or v == j)

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.N, dtype=np.int64)
        for i, j in self.edges:
            d[i] += 1
            d[j] += 1
        return d

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.N, self.N), dtype=np.int64)
        for i, j in self.edges:
            A[i, j] = 1
            A[j, i] = 1
        return A


def normalize_edges(pairs: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    """Canonicalize unordered pairs to (min, max), rejecting self-loops."""
    out = set()
    for a, b in pairs:
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


def generate_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """Sample G(N, p): each of the N(N-1)/2 edges present independently
    with probability p.

    The PRNG is numpy's PCG64 seeded with `seed`; candidate edges are
    visited in lexicographic (i, j) order, so identical (n, p, seed)
    always yields the identical edge set, on any platform.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    N = 1 << n
    rng = np.random.Generator(np.random.PCG64(seed))
    edges = []
    draws = rng.random(N * (N - 1) // 2)
    k = 0
    for i in range(N):
        for j in range(i + 1, N):
            if draws[k] < p:
                edges.append((i, j))
            k += 1
    return Graph(n=n, edges=frozenset(edges))


def complete_graph(n: int) -> Graph:
    """K_N on N = 2^n vertices."""
    N = 1 << n
    return Graph(n=n, edges=frozenset((i, j) for i in range(N) for j in range(i + 1, N)))


def graph_from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n=n, edges=normalize_edges(pairs))


def laplacian(g: Graph) -> np.ndarray:
    """L = D - A as an exact integer matrix.

    Symmetric, off-diagonal entries in {0, -1}, rows sum to zero.
    """
    A = g.adjacency()
    return np.diag(g.degrees()) - A


def extremal_degree_vertex(g: Graph, mode: str) -> int:
    """Vertex of minimum/maximum degree, ties broken by lowest index."""
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    d = g.degrees()
    return int(np.argmin(d) if mode == "min" else np.argmax(d))


def write_edge_list(g: Graph, fh: TextIO, p: Optional[float] = None,
                    seed: Optional[int] = None) -> None:
    """Write the edge-list text format.

    First line: "n p seed" with "-" for absent p/seed; then one "i j"
    line per edge in sorted order.
    """
    ps = "-" if p is None else repr(p)
    ss = "-" if seed is None else str(seed)
    fh.write(f"{g.n} {ps} {ss}\n")
    for i, j in sorted(g.edges):
        fh.write(f"{i} {j}\n")


def read_edge_list(fh: TextIO) -> tuple[Graph, Optional[float], Optional[int]]:
    """Inverse of write_edge_list."""
    header = fh.readline().split()
    if len(header) != 3:
        raise ValueError("edge-list header must be 'n p seed'")
    n = int(header[0])
    p = None if header[1] == "-" else float(header[1])
    seed = None if header[2] == "-" else int(header[2])
    pairs = []
    for line in fh:
        line = line.strip()
        if not line:
            continue
        i, j = line.split()
        pairs.append((int(i), int(j)))
    return graph_from_edges(n, pairs), p, seed
