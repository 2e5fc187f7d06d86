"""Two-qubit density matrices, Pauli operators, and tensor products.

The product basis is ordered |00>, |01>, |10>, |11> with qubit A as the
left tensor factor. Every function here is pure; matrices are treated as
immutable once returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Tolerances for the density-matrix invariants. The PSD slack absorbs
# rounding introduced by channel application without masking real
# violations.
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
MIN_EIGENVALUE_TOL = -1e-10

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_1, SIGMA_2, SIGMA_3)
IDENTITY_2 = np.eye(2, dtype=complex)


def pauli(index: int) -> np.ndarray:
    """Pauli matrix for axis `index` in {1, 2, 3}."""
    if index not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {index}")
    return PAULIS[index - 1].copy()


def tensor2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product A (x) B with A acting on the left (qubit A) slot."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def make_pure_state(c: float) -> np.ndarray:
    """Density matrix of the entangled pure state c|01> - sqrt(1-c^2)|10>.

    The result is a rank-1 projector supported on the antiparallel
    subspace: diagonal block (c^2, 1-c^2) on |01>, |10> with off-diagonal
    -c*sqrt(1-c^2), zeros elsewhere.
    """
    c = float(c)
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"Schmidt coefficient must lie in [0, 1], got {c}")
    amp = np.array([0.0, c, -np.sqrt(1.0 - c * c), 0.0], dtype=complex)
    return np.outer(amp, amp.conj())


@dataclass(frozen=True)
class DensityReport:
    """Residuals of the density-matrix checks on a 4x4 matrix."""

    hermiticity_residual: float
    trace_deviation: float
    min_eigenvalue: float

    @property
    def failures(self) -> list[str]:
        out = []
        if self.hermiticity_residual > HERMITICITY_TOL:
            out.append(f"hermiticity residual {self.hermiticity_residual:.3e}")
        if self.trace_deviation > TRACE_TOL:
            out.append(f"trace deviation {self.trace_deviation:.3e}")
        if self.min_eigenvalue < MIN_EIGENVALUE_TOL:
            out.append(f"min eigenvalue {self.min_eigenvalue:.3e}")
        return out

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_density(rho: np.ndarray) -> DensityReport:
    """Check Hermiticity, unit trace, and positive semidefiniteness.

    Failed checks are reported with their residuals rather than raised.
    """
    rho = np.asarray(rho, dtype=complex)
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    trace_dev = float(abs(np.trace(rho) - 1.0))
    # eigvalsh assumes Hermitian input and returns real eigenvalues; use the
    # symmetrized matrix so a tiny Hermiticity residual cannot skew the check.
    min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
    return DensityReport(herm, trace_dev, min_eig)


def random_density(rng: np.random.Generator) -> np.ndarray:
    """Random physical state: a random pure state mixed with identity."""
    amp = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    amp /= np.linalg.norm(amp)
    weight = rng.uniform()
    return weight * np.outer(amp, amp.conj()) + (1.0 - weight) * np.eye(4) / 4.0
