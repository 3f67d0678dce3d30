"""Circuit IR, primitive lowering, simulation, and quantum-cost accounting.

The primitive set is {any single-qubit gate, CNOT}, each of cost 1.
Composite gates lower to primitives: SWAP becomes three CNOTs, CZ becomes
H-CNOT-H on the target. Measurements and classical wires cost nothing here;
circuits are purely unitary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import apply_on_density, apply_on_state, embed, ket

_S2 = 1 / np.sqrt(2)

GATE_MATRICES: dict[str, np.ndarray] = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _S2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}

_ONE_QUBIT = ("H", "X", "Y", "Z")
_TWO_QUBIT = ("CNOT", "CZ", "SWAP")


@dataclass(frozen=True)
class Gate:
    """A named gate on explicit qubit indices (control first for 2-qubit kinds).

    ``kind`` is one of H, X, Y, Z, CNOT, CZ, SWAP, or CU for a controlled
    single-qubit unitary carried in ``unitary``.
    """

    kind: str
    targets: tuple[int, ...]
    unitary: np.ndarray | None = None

    def __post_init__(self):
        if self.kind in _ONE_QUBIT:
            arity = 1
        elif self.kind in _TWO_QUBIT or self.kind == "CU":
            arity = 2
        else:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.targets) != arity:
            raise ValueError(f"{self.kind} expects {arity} target(s), got {self.targets}")
        if len(set(self.targets)) != len(self.targets):
            raise ValueError(f"duplicate targets in {self.targets}")
        if self.kind == "CU":
            if self.unitary is None or self.unitary.shape != (2, 2):
                raise ValueError("CU requires a 2x2 unitary payload")
        elif self.unitary is not None:
            raise ValueError(f"{self.kind} takes no unitary payload")

    def matrix(self) -> np.ndarray:
        if self.kind == "CU":
            m = np.eye(4, dtype=complex)
            m[2:, 2:] = self.unitary
            return m
        return GATE_MATRICES[self.kind]


@dataclass
class Circuit:
    """Ordered gate list over ``n_qubits`` wires."""

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        for g in self.gates:
            self._check(g)

    def _check(self, gate: Gate) -> None:
        if any(t < 0 or t >= self.n_qubits for t in gate.targets):
            raise ValueError(f"gate {gate.kind}{gate.targets} out of range (n={self.n_qubits})")

    def add(self, kind: str, *targets: int, unitary: np.ndarray | None = None) -> "Circuit":
        g = Gate(kind, tuple(targets), unitary)
        self._check(g)
        self.gates.append(g)
        return self

    def extend(self, other: "Circuit") -> "Circuit":
        if other.n_qubits > self.n_qubits:
            raise ValueError("cannot extend with a wider circuit")
        for g in other.gates:
            self.gates.append(g)
        return self

    def to_text(self) -> str:
        """One gate per line: ``KIND q0 [q1]``."""
        lines = []
        for g in self.gates:
            if g.kind == "CU":
                raise ValueError("CU gates have no text form")
            lines.append(" ".join([g.kind] + [str(t) for t in g.targets]))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, n_qubits: int | None = None) -> "Circuit":
        gates = []
        max_q = -1
        for ln, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kind, args = parts[0].upper(), parts[1:]
            try:
                targets = tuple(int(a) for a in args)
            except ValueError as exc:
                raise ValueError(f"line {ln}: bad qubit index in {raw!r}") from exc
            gates.append(Gate(kind, targets))
            max_q = max(max_q, *targets)
        n = n_qubits if n_qubits is not None else max_q + 1
        return cls(n, gates)


def lower(gate: Gate) -> list[Gate]:
    """Rewrite a gate into the primitive set {1-qubit gates, CNOT}."""
    a, *rest = gate.targets
    if gate.kind in _ONE_QUBIT or gate.kind == "CNOT":
        return [gate]
    if gate.kind == "SWAP":
        b = rest[0]
        return [Gate("CNOT", (a, b)), Gate("CNOT", (b, a)), Gate("CNOT", (a, b))]
    if gate.kind == "CZ":
        b = rest[0]
        return [Gate("H", (b,)), Gate("CNOT", (a, b)), Gate("H", (b,))]
    if gate.kind == "CU":
        b = rest[0]
        u = gate.unitary
        if np.allclose(u, GATE_MATRICES["X"], atol=1e-12):
            return [Gate("CNOT", (a, b))]
        if np.allclose(u, GATE_MATRICES["Z"], atol=1e-12):
            return [Gate("H", (b,)), Gate("CNOT", (a, b)), Gate("H", (b,))]
        raise ValueError("controlled-U lowering supported only for U in {X, Z}")
    raise ValueError(f"cannot lower gate kind {gate.kind!r}")


def quantum_cost(circuit: Circuit) -> int:
    """Primitive gate count after lowering; every primitive costs 1."""
    return sum(len(lower(g)) for g in circuit.gates)


def simulate(circuit: Circuit, state: np.ndarray | None = None) -> np.ndarray:
    """Run the circuit on a state vector (default |0...0>)."""
    if state is None:
        state = ket("0" * circuit.n_qubits)
    if state.shape[0] != 2**circuit.n_qubits:
        raise ValueError(
            f"state dim {state.shape[0]} does not match {circuit.n_qubits} qubits"
        )
    for g in circuit.gates:
        state = apply_on_state(state, g.matrix(), list(g.targets))
    return state


def simulate_density(circuit: Circuit, rho: np.ndarray) -> np.ndarray:
    """Run the circuit on a density matrix."""
    if rho.shape[0] != 2**circuit.n_qubits:
        raise ValueError(f"density dim {rho.shape[0]} does not match {circuit.n_qubits} qubits")
    for g in circuit.gates:
        rho = apply_on_density(rho, g.matrix(), list(g.targets))
    return rho


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Full 2^n x 2^n unitary of the circuit (gates applied left to right)."""
    u = np.eye(2**circuit.n_qubits, dtype=complex)
    for g in circuit.gates:
        u = embed(g.matrix(), list(g.targets), circuit.n_qubits) @ u
    return u
