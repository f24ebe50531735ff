"""Dense Hermitian linear algebra for walk states and their diagnostics.

Matrices are plain ``numpy.ndarray`` objects with dtype complex128.  The
eigendecomposition is delegated to LAPACK via ``numpy.linalg.eigh``; the
functions here add the contract checks (Hermiticity, positive
semidefiniteness) and the symmetrization guard that keeps accumulated
round-off from leaking into downstream results.

Collections of per-vertex blocks are stacked arrays of shape (k, d, d);
anything with a ``.blocks`` attribute of that shape is accepted too.
"""

from __future__ import annotations

import numpy as np

#: max allowed |m - m^dagger| entry before an input is rejected as non-Hermitian
HERMITIAN_ATOL = 1e-10
#: eigenvalues in [PSD_FLOOR, 0) are treated as round-off and clamped to zero
PSD_FLOOR = -1e-10


def as_matrix(m) -> np.ndarray:
    """Validate and return m as a square complex matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise ValueError("matrix contains non-finite entries")
    return a


def conj_transpose(m) -> np.ndarray:
    """Conjugate transpose m^dagger."""
    return as_matrix(m).conj().T.copy()


def matmul(a, b) -> np.ndarray:
    """Matrix product of two square matrices of equal dimension."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def trace(m) -> complex:
    """Sum of the diagonal entries."""
    return complex(np.trace(as_matrix(m)))


def hermiticity_defect(m) -> float:
    """Largest entrywise deviation of m from its conjugate transpose."""
    m = as_matrix(m)
    return float(np.max(np.abs(m - m.conj().T)))


def _require_hermitian(m) -> np.ndarray:
    m = as_matrix(m)
    defect = np.max(np.abs(m - m.conj().T))
    if defect > HERMITIAN_ATOL:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    # symmetrization guard: remove accumulated drift before factorizing
    return (m + m.conj().T) / 2.0


def hermitian_eig(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with real eigenvalues in ascending
    order and eigenvectors as the columns of a unitary matrix, so that
    m = V diag(w) V^dagger.
    """
    w, v = np.linalg.eigh(_require_hermitian(m))
    return w, v


def psd_sqrt(m) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in [PSD_FLOOR, 0) are clamped to zero; anything below the
    floor means the input is genuinely indefinite and is rejected.
    """
    w, v = hermitian_eig(m)
    if w[0] < PSD_FLOOR:
        raise ValueError(f"matrix is not PSD (min eigenvalue {w[0]:.3e})")
    w = np.maximum(w, 0.0)
    root = (v * np.sqrt(w)) @ v.conj().T
    return (root + root.conj().T) / 2.0


def trace_norm(m) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    w, _ = hermitian_eig(m)
    return float(np.sum(np.abs(w)))


def _as_blocks(x) -> np.ndarray:
    blocks = getattr(x, "blocks", x)
    a = np.asarray(blocks, dtype=np.complex128)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected stacked square blocks, got shape {a.shape}")
    return a


def _paired_blocks(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = _as_blocks(a)
    b = _as_blocks(b)
    if a.shape != b.shape:
        raise ValueError(f"block shape mismatch: {a.shape} vs {b.shape}")
    return a, b


def fidelity_blocks(a, b) -> float:
    """Quantum fidelity between two block-diagonal states.

    For block-diagonal density matrices the square-root fidelity is the sum
    of the per-block square-root fidelities, so the full matrices are never
    assembled:  F = (sum_u tr sqrt(sqrt(a_u) b_u sqrt(a_u)))^2.
    """
    a, b = _paired_blocks(a, b)
    acc = 0.0
    for rho, sigma in zip(a, b):
        root = psd_sqrt(rho)
        inner = root @ sigma @ root
        acc += float(np.trace(psd_sqrt(inner)).real)
    return acc * acc


def trace_distance_blocks(a, b) -> float:
    """Trace distance between two block-diagonal states.

    D = 1/2 sum_u ||a_u - b_u||_1, exact for block-diagonal states.
    """
    a, b = _paired_blocks(a, b)
    return 0.5 * sum(trace_norm(rho - sigma) for rho, sigma in zip(a, b))
