"""Dense complex linear algebra for few-qubit Hilbert spaces (dimension <= 2**7).

States are plain 1-D numpy arrays of complex amplitudes, operators are 2-D
arrays. Qubit ordering is big-endian throughout: qubit 0 is the leftmost
symbol of a basis label, so basis index ``int(bits, 2)`` holds amplitude
``<bits|psi>``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Elementwise algebraic identities hold to this tolerance in double precision.
ATOL_ALGEBRAIC = 1e-12
# Spectral checks (PSD, unitarity) get extra slack from eigensolves.
ATOL_SPECTRAL = 1e-10


def n_qubits_of(dim: int) -> int:
    """Number of qubits for a power-of-two dimension; raises otherwise."""
    n = dim.bit_length() - 1
    if dim <= 0 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def ket(bits: str) -> np.ndarray:
    """Computational basis state from a bit string, e.g. ket('011')."""
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; dimensions multiply."""
    return np.kron(a, b)


def apply_on_state(state: np.ndarray, gate: np.ndarray, targets: list[int]) -> np.ndarray:
    """Apply ``gate`` (2^k x 2^k) to the ``targets`` qubits of a state vector."""
    n = n_qubits_of(state.shape[0])
    k = len(targets)
    if gate.shape != (2**k, 2**k):
        raise ValueError(f"gate shape {gate.shape} does not match {k} target(s)")
    if len(set(targets)) != k:
        raise ValueError(f"duplicate targets in {targets}")
    if any(t < 0 or t >= n for t in targets):
        raise ValueError(f"targets {targets} out of range for {n} qubits")
    rest = [q for q in range(n) if q not in targets]
    psi = state.reshape([2] * n).transpose(targets + rest).reshape(2**k, -1)
    psi = gate @ psi
    inv = np.argsort(targets + rest)
    return psi.reshape([2] * n).transpose(inv).reshape(-1)


def embed(gate: np.ndarray, targets: list[int], n: int) -> np.ndarray:
    """Embed a 2^k-dim gate as a 2^n x 2^n operator acting on ``targets``.

    Big-endian: qubit 0 is the leftmost ket symbol. Identity elsewhere.
    """
    k = len(targets)
    if gate.shape != (2**k, 2**k):
        raise ValueError(f"gate shape {gate.shape} does not match {k} target(s)")
    if len(set(targets)) != k:
        raise ValueError(f"duplicate targets in {targets}")
    if any(t < 0 or t >= n for t in targets):
        raise ValueError(f"targets {targets} out of range for {n} qubits")
    rest = [q for q in range(n) if q not in targets]
    perm = targets + rest
    op = np.kron(gate, np.eye(2 ** (n - k), dtype=complex))
    op = op.reshape([2] * (2 * n))
    inv = list(np.argsort(perm))
    op = op.transpose(inv + [n + a for a in inv])
    return op.reshape(2**n, 2**n)


def apply_on_density(rho: np.ndarray, gate: np.ndarray, targets: list[int]) -> np.ndarray:
    """Conjugate a density matrix by a gate on ``targets``: U rho U^dagger."""
    n = n_qubits_of(rho.shape[0])
    u = embed(gate, targets, n)
    return u @ rho @ u.conj().T


def partial_trace(rho: np.ndarray, keep: list[int]) -> np.ndarray:
    """Reduced matrix on the ``keep`` qubits; preserves the trace exactly."""
    n = n_qubits_of(rho.shape[0])
    if not keep:
        raise ValueError("keep must be nonempty")
    if len(set(keep)) != len(keep) or any(q < 0 or q >= n for q in keep):
        raise ValueError(f"keep {keep} invalid for {n} qubits")
    rest = [q for q in range(n) if q not in keep]
    perm = keep + rest
    t = rho.reshape([2] * (2 * n)).transpose(perm + [n + a for a in perm])
    dk, dr = 2 ** len(keep), 2 ** len(rest)
    t = t.reshape(dk, dr, dk, dr)
    return np.einsum("iaja->ij", t)


def pure_density(psi: np.ndarray) -> np.ndarray:
    return np.outer(psi, psi.conj())


def fidelity_pure(psi: np.ndarray, rho: np.ndarray) -> float:
    """Overlap <psi|rho|psi> of a normalized pure state with a density matrix.

    The value is returned as given (no renormalization of rho), clamped into
    [0, 1] only when within 1e-10 of either boundary.
    """
    if psi.shape[0] != rho.shape[0]:
        raise ValueError(f"dimension mismatch: state {psi.shape[0]}, matrix {rho.shape[0]}")
    val = complex(psi.conj() @ rho @ psi)
    if abs(val.imag) > ATOL_ALGEBRAIC:
        raise ValueError(f"overlap has imaginary residue {val.imag:.3e}")
    f = val.real
    if -ATOL_SPECTRAL < f < 0.0:
        return 0.0
    if 1.0 < f < 1.0 + ATOL_SPECTRAL:
        return 1.0
    return f


@dataclass(frozen=True)
class DensityDiagnostics:
    """Validity report for a (possibly subnormalized) density matrix."""

    hermiticity_residual: float
    min_eigenvalue: float
    trace: float
    hermitian: bool
    positive_semidefinite: bool
    trace_ok: bool

    @property
    def passed(self) -> bool:
        return self.hermitian and self.positive_semidefinite and self.trace_ok


def validate_density(rho: np.ndarray, subnormalized_ok: bool = False) -> DensityDiagnostics:
    """Diagnose Hermiticity, positivity and trace of a square matrix.

    Never raises: returns a report. With ``subnormalized_ok`` the trace check
    accepts any trace in [0, 1 + 1e-10] instead of requiring trace ~= 1.
    """
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    herm_res = float(np.max(np.abs(rho - rho.conj().T)))
    hermitian = herm_res <= ATOL_ALGEBRAIC
    sym = (rho + rho.conj().T) / 2
    min_eig = float(np.min(np.linalg.eigvalsh(sym)))
    psd = min_eig >= -ATOL_SPECTRAL
    tr = float(np.real(np.trace(rho)))
    if subnormalized_ok:
        trace_ok = -ATOL_SPECTRAL <= tr <= 1.0 + ATOL_SPECTRAL
    else:
        trace_ok = abs(tr - 1.0) <= ATOL_SPECTRAL
    return DensityDiagnostics(herm_res, min_eig, tr, hermitian, psd, trace_ok)


def is_unitary(u: np.ndarray, atol: float = ATOL_SPECTRAL) -> bool:
    return bool(np.allclose(u @ u.conj().T, np.eye(u.shape[0]), atol=atol))
