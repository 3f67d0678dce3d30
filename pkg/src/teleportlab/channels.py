"""Constructors for the six entangled-channel families used as teleportation resources.

Families and their variant selectors:

* ``bell``      - 2 qubits, bits (sign, flip): the four Bell states
* ``ghz``       - 3 qubits, bits per the published three-bit enumeration
* ``cluster2``  - 2 qubits, bits pick |+>/|-> inputs to a CZ
* ``cluster3``  - 3 qubits, bits pick |+>/|-> inputs to CZ(0,1) CZ(1,2)
* ``brown``     - 5 qubits, the highly entangled Brown et al. state
* ``borras``    - 6 qubits, the highly entangled Borras et al. state

Each variant carries both a hard-coded amplitude table (the source of truth)
and a preparation circuit from |0...0>; ``build_channel`` cross-checks the
two against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .circuit import Circuit, Gate
from .circuit import simulate as _simulate
from .linalg import ket

FAMILIES = ("bell", "ghz", "cluster2", "cluster3", "brown", "borras")

_BITS_LEN = {"bell": 2, "ghz": 3, "cluster2": 2, "cluster3": 3, "brown": 0, "borras": 0}
_N_QUBITS = {"bell": 2, "ghz": 3, "cluster2": 2, "cluster3": 3, "brown": 5, "borras": 6}

_S2 = 1 / np.sqrt(2)

# Two-qubit maximally entangled pair states, named as used by the 5- and
# 6-qubit resource states below.
_PAIR = {
    "psi+": (ket("00") + ket("11")) * _S2,
    "psi-": (ket("00") - ket("11")) * _S2,
    "phi+": (ket("01") + ket("10")) * _S2,
    "phi-": (ket("01") - ket("10")) * _S2,
}

# GHZ variant table: bits -> (basis pattern of the first branch, relative sign).
# The published bit-to-state assignment is irregular, so it is data, not a formula.
GHZ_VARIANTS: dict[tuple[int, int, int], tuple[str, int]] = {
    (0, 0, 0): ("000", +1),
    (0, 0, 1): ("001", +1),
    (0, 1, 0): ("010", +1),
    (0, 1, 1): ("000", -1),
    (1, 0, 0): ("011", +1),
    (1, 0, 1): ("001", -1),
    (1, 1, 0): ("010", -1),
    (1, 1, 1): ("011", -1),
}

# Cluster-state sign rows over the computational basis in ascending order.
CLUSTER2_SIGNS: dict[tuple[int, int], tuple[int, ...]] = {
    (0, 0): (+1, +1, +1, -1),
    (0, 1): (+1, -1, +1, +1),
    (1, 0): (+1, +1, -1, +1),
    (1, 1): (+1, -1, -1, -1),
}
CLUSTER3_SIGNS: dict[tuple[int, int, int], tuple[int, ...]] = {
    (0, 0, 0): (+1, +1, +1, -1, +1, +1, -1, +1),
    (0, 0, 1): (+1, -1, +1, +1, +1, -1, -1, -1),
    (0, 1, 0): (+1, +1, -1, +1, +1, +1, +1, -1),
    (0, 1, 1): (+1, -1, -1, -1, +1, -1, +1, +1),
    (1, 0, 0): (+1, +1, +1, -1, -1, -1, +1, -1),
    (1, 0, 1): (+1, -1, +1, +1, -1, +1, +1, +1),
    (1, 1, 0): (+1, +1, -1, +1, -1, -1, -1, +1),
    (1, 1, 1): (+1, -1, -1, -1, -1, +1, -1, -1),
}

# Brown state: 1/2 * sum over (3-bit pattern) x (entangled pair on the last
# two qubits).
BROWN_GROUPS: dict[str, tuple[int, str]] = {
    "001": (+1, "phi-"),
    "010": (+1, "psi-"),
    "100": (+1, "phi+"),
    "111": (+1, "psi+"),
}

# Borras state: 1/4 * sum over (3-bit pattern, middle qubit) x signed pair.
BORRAS_GROUPS: dict[tuple[str, str], tuple[int, str]] = {
    ("000", "0"): (+1, "psi+"),
    ("000", "1"): (+1, "phi+"),
    ("001", "0"): (+1, "phi-"),
    ("001", "1"): (-1, "psi-"),
    ("010", "0"): (+1, "phi+"),
    ("010", "1"): (-1, "psi+"),
    ("011", "0"): (+1, "psi-"),
    ("011", "1"): (+1, "phi-"),
    ("100", "0"): (-1, "phi-"),
    ("100", "1"): (-1, "psi-"),
    ("101", "0"): (-1, "psi+"),
    ("101", "1"): (+1, "phi+"),
    ("110", "0"): (+1, "psi-"),
    ("110", "1"): (-1, "phi-"),
    ("111", "0"): (+1, "phi+"),
    ("111", "1"): (+1, "psi+"),
}


@dataclass(frozen=True)
class ChannelSpec:
    """Tagged channel variant: a family name plus its selector bits."""

    family: str
    bits: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown channel family {self.family!r}")
        want = _BITS_LEN[self.family]
        if len(self.bits) != want:
            raise ValueError(f"{self.family} takes {want} selector bits, got {self.bits}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"selector bits must be 0/1, got {self.bits}")

    @property
    def n_qubits(self) -> int:
        return _N_QUBITS[self.family]

    @property
    def bits_str(self) -> str:
        return "".join(str(b) for b in self.bits)

    @property
    def label(self) -> str:
        return f"{self.family}:{self.bits_str}" if self.bits else self.family


@dataclass(frozen=True)
class ChannelState:
    spec: ChannelSpec
    state: np.ndarray
    n_qubits: int


def _amplitudes(spec: ChannelSpec) -> np.ndarray:
    f, b = spec.family, spec.bits
    if f == "bell":
        sign, flip = b
        x = str(flip)
        xbar = "1" if flip == 0 else "0"
        return (ket("0" + x) + (-1) ** sign * ket("1" + xbar)) * _S2
    if f == "ghz":
        pattern, sign = GHZ_VARIANTS[b]
        conj = "".join("1" if c == "0" else "0" for c in pattern)
        return (ket(pattern) + sign * ket(conj)) * _S2
    if f == "cluster2":
        return np.array(CLUSTER2_SIGNS[b], dtype=complex) / 2.0
    if f == "cluster3":
        return np.array(CLUSTER3_SIGNS[b], dtype=complex) / (2.0 * np.sqrt(2.0))
    if f == "brown":
        v = np.zeros(32, dtype=complex)
        for pattern, (sign, pair) in BROWN_GROUPS.items():
            v += 0.5 * sign * np.kron(ket(pattern), _PAIR[pair])
        return v
    if f == "borras":
        v = np.zeros(64, dtype=complex)
        for (pattern, mid), (sign, pair) in BORRAS_GROUPS.items():
            v += 0.25 * sign * np.kron(ket(pattern + mid), _PAIR[pair])
        return v
    raise ValueError(f"unknown family {f!r}")


def prep_circuit(spec: ChannelSpec) -> Circuit:
    """Preparation circuit taking |0...0> to the channel state (up to global phase)."""
    f, b = spec.family, spec.bits
    c = Circuit(spec.n_qubits)
    if f == "bell":
        sign, flip = b
        c.add("H", 0).add("CNOT", 0, 1)
        if sign:
            c.add("Z", 0)
        if flip:
            c.add("X", 1)
    elif f == "ghz":
        pattern, s = GHZ_VARIANTS[b]
        c.add("H", 0).add("CNOT", 0, 1).add("CNOT", 0, 2)
        if s < 0:
            c.add("Z", 0)
        for i, ch in enumerate(pattern):
            if ch == "1":
                c.add("X", i)
    elif f == "cluster2":
        c.add("H", 0).add("H", 1)
        for i, bit in enumerate(b):
            if bit:
                c.add("Z", i)
        c.add("CZ", 0, 1)
    elif f == "cluster3":
        c.add("H", 0).add("H", 1).add("H", 2)
        for i, bit in enumerate(b):
            if bit:
                c.add("Z", i)
        c.add("CZ", 0, 1).add("CZ", 1, 2)
    elif f == "brown":
        # Odd-parity pattern register, then a pair register steered by it.
        for g in [("H", 0), ("H", 1), ("X", 2), ("CNOT", 0, 2), ("CNOT", 1, 2),
                  ("H", 3), ("CNOT", 3, 4), ("CNOT", 0, 4), ("CNOT", 2, 4),
                  ("Z", 3), ("CZ", 0, 3)]:
            c.add(*g)
    elif f == "borras":
        for g in [("H", 0), ("H", 1), ("H", 2), ("H", 3), ("H", 4), ("CNOT", 4, 5),
                  ("CNOT", 0, 5), ("CNOT", 1, 5), ("CNOT", 2, 5), ("CNOT", 3, 5),
                  ("CZ", 0, 4), ("CZ", 2, 4),
                  ("CZ", 2, 3), ("CZ", 1, 3), ("Z", 0), ("CZ", 0, 1)]:
            c.add(*g)
    return c


@lru_cache(maxsize=None)
def build_channel(spec: ChannelSpec) -> ChannelState:
    """The channel state for a variant, cross-checked against its prep circuit."""
    state = _amplitudes(spec)
    prepared = _simulate(prep_circuit(spec))
    overlap = abs(np.vdot(prepared, state))
    if abs(overlap - 1.0) > 1e-10:
        raise AssertionError(
            f"prep circuit for {spec.label} disagrees with amplitude table "
            f"(|overlap| = {overlap:.12f})"
        )
    state = state.copy()
    state.setflags(write=False)
    return ChannelState(spec=spec, state=state, n_qubits=spec.n_qubits)


def enumerate_variants() -> list[ChannelSpec]:
    """All 26 channel variants in deterministic order."""
    out: list[ChannelSpec] = []
    for bits in itertools.product((0, 1), repeat=2):
        out.append(ChannelSpec("bell", bits))
    for bits in itertools.product((0, 1), repeat=3):
        out.append(ChannelSpec("ghz", bits))
    for bits in itertools.product((0, 1), repeat=2):
        out.append(ChannelSpec("cluster2", bits))
    for bits in itertools.product((0, 1), repeat=3):
        out.append(ChannelSpec("cluster3", bits))
    out.append(ChannelSpec("brown"))
    out.append(ChannelSpec("borras"))
    return out


def spec_from_label(label: str) -> ChannelSpec:
    """Parse ``family`` or ``family:bits`` (e.g. ``bell:01``) into a spec."""
    if ":" in label:
        fam, bits_str = label.split(":", 1)
        bits = tuple(int(ch) for ch in bits_str)
    else:
        fam, bits = label, ()
    return ChannelSpec(fam.lower(), bits)
