"""Gate and circuit types plus serialization.

Gate vocabulary: CNOT, single-qubit Y/Z rotations, a diagonal phase gate
over the full register, and a global phase.  Rotation conventions:

    R_y(theta) = [[cos, sin], [-sin, cos]]
    R_z(theta) = diag(e^{i theta}, e^{-i theta})

Qubits are numbered 1..n, qubit 1 = most significant bit of the
amplitude index.  Gates in a circuit are listed leftmost-acts-first.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

import numpy as np


@dataclass(frozen=True)
class Cnot:
    control: int
    target: int

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError("CNOT control and target must differ")


@dataclass(frozen=True)
class Rotation:
    axis: str  # "y" | "z"
    target: int
    angle: float

    def __post_init__(self):
        if self.axis not in ("y", "z"):
            raise ValueError(f"rotation axis must be 'y' or 'z', got {self.axis!r}")


@dataclass(frozen=True)
class DiagPhase:
    phases: tuple[float, ...]  # one phase (radians) per basis state


@dataclass(frozen=True)
class GlobalPhase:
    angle: float


Gate = Union[Cnot, Rotation, DiagPhase, GlobalPhase]


def rotation_matrix(axis: str, angle: float) -> np.ndarray:
    if axis == "y":
        c, s = np.cos(angle), np.sin(angle)
        return np.array([[c, s], [-s, c]], dtype=complex)
    if axis == "z":
        return np.array([[np.exp(1j * angle), 0], [0, np.exp(-1j * angle)]],
                        dtype=complex)
    raise ValueError(f"unknown axis {axis!r}")


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        N = 1 << self.n
        for g in self.gates:
            if isinstance(g, Cnot):
                qubits = (g.control, g.target)
            elif isinstance(g, Rotation):
                qubits = (g.target,)
            elif isinstance(g, DiagPhase):
                if len(g.phases) != N:
                    raise ValueError(
                        f"DIAG_PHASE needs {N} phases, got {len(g.phases)}")
                qubits = ()
            else:
                qubits = ()
            for q in qubits:
                if not 1 <= q <= self.n:
                    raise ValueError(f"qubit {q} out of range 1..{self.n}")

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.n != other.n:
            raise ValueError("cannot concatenate circuits of different width")
        return Circuit(self.n, self.gates + other.gates)

    def inverse(self) -> "Circuit":
        inv: list[Gate] = []
        for g in reversed(self.gates):
            if isinstance(g, Cnot):
                inv.append(g)
            elif isinstance(g, Rotation):
                inv.append(Rotation(g.axis, g.target, -g.angle))
            elif isinstance(g, DiagPhase):
                inv.append(DiagPhase(tuple(-p for p in g.phases)))
            else:
                inv.append(GlobalPhase(-g.angle))
        return Circuit(self.n, tuple(inv))


def circuit_to_json(circuit: Circuit) -> str:
    """JSON form: {n, gates: [{kind, params...}]}, angles as doubles."""
    gates = []
    for g in circuit.gates:
        if isinstance(g, Cnot):
            gates.append({"kind": "CNOT", "control": g.control, "target": g.target})
        elif isinstance(g, Rotation):
            gates.append({"kind": "ROT", "axis": g.axis.upper(),
                          "target": g.target, "angle": g.angle})
        elif isinstance(g, DiagPhase):
            gates.append({"kind": "DIAG_PHASE", "phases": list(g.phases)})
        else:
            gates.append({"kind": "GLOBAL_PHASE", "angle": g.angle})
    return json.dumps({"n": circuit.n, "gates": gates})


def circuit_from_json(text: str) -> Circuit:
    doc = json.loads(text)
    gates: list[Gate] = []
    for g in doc["gates"]:
        kind = g["kind"]
        if kind == "CNOT":
            gates.append(Cnot(g["control"], g["target"]))
        elif kind == "ROT":
            gates.append(Rotation(g["axis"].lower(), g["target"], g["angle"]))
        elif kind == "DIAG_PHASE":
            gates.append(DiagPhase(tuple(g["phases"])))
        elif kind == "GLOBAL_PHASE":
            gates.append(GlobalPhase(g["angle"]))
        else:
            raise ValueError(f"unknown gate kind {kind!r}")
    return Circuit(doc["n"], tuple(gates))


def disassemble(circuit: Circuit) -> str:
    """One gate per line, for human diffing."""
    lines = []
    for g in circuit.gates:
        if isinstance(g, Cnot):
            lines.append(f"CNOT {g.control} {g.target}")
        elif isinstance(g, Rotation):
            lines.append(f"R{g.axis.upper()} {g.target} {g.angle!r}")
        elif isinstance(g, DiagPhase):
            lines.append("DIAG [" + ", ".join(repr(p) for p in g.phases) + "]")
        else:
            lines.append(f"GPHASE {g.angle!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def gate_count(circuit: Circuit) -> dict[str, int]:
    counts = {"CNOT": 0, "ROT": 0, "DIAG_PHASE": 0, "GLOBAL_PHASE": 0}
    for g in circuit.gates:
        if isinstance(g, Cnot):
            counts["CNOT"] += 1
        elif isinstance(g, Rotation):
            counts["ROT"] += 1
        elif isinstance(g, DiagPhase):
            counts["DIAG_PHASE"] += 1
        else:
            counts["GLOBAL_PHASE"] += 1
    return counts
