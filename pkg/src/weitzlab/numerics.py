"""Dense matrix kernel: Hermitian eigendecomposition, nullspaces, Kronecker
products and orthogonal projections.

Everything is computed in double-precision complex; real inputs are the
imaginary-part-zero case.  All functions are pure and never mutate their
arguments, so concurrent use is safe.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_matrix",
    "eig_hermitian",
    "fix_phases",
    "frobenius",
    "kron",
    "nullspace",
    "orthonormal_columns",
    "projector",
]

#: Relative singular-value cutoff used by :func:`nullspace` when no tolerance
#: is supplied.  Intertwiner spaces downstream have singular-value gaps many
#: orders of magnitude wider than this at the sizes we handle.
DEFAULT_NULLSPACE_TOL = 1e-9


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-d complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got array of dimension {m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def fix_phases(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate each column so its first non-negligible entry is positive real.

    This pins the phase/sign freedom of eigenvectors and nullspace bases so
    that repeated runs on identical input produce byte-identical output.
    """
    v = np.array(v, dtype=np.complex128, copy=True)
    for j in range(v.shape[1]):
        col = v[:, j]
        nz = np.nonzero(np.abs(col) > tol)[0]
        if nz.size == 0:
            continue
        pivot = col[nz[0]]
        v[:, j] = col * (np.abs(pivot) / pivot)
    return v


def eig_hermitian(a, hermitian_tol: float = 1e-12):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    a : array_like
        Square matrix with ``||a - a*|| <= hermitian_tol * ||a||``.
    hermitian_tol : float
        Relative tolerance for the Hermiticity precondition.

    Returns
    -------
    (w, v) : eigenvalues ascending (real 1-d array) and orthonormal
        eigenvectors as the columns of ``v``, with phases fixed by the
        first-nonzero-positive convention.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"eig_hermitian needs a square matrix, got {m.shape}")
    scale = frobenius(m)
    if scale > 0 and frobenius(m - m.conj().T) > hermitian_tol * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh((m + m.conj().T) / 2.0)
    return w, fix_phases(v)


def nullspace(a, tol: float = DEFAULT_NULLSPACE_TOL, atol: float = 0.0) -> np.ndarray:
    """Orthonormal basis of ``{v : a v = 0}`` as matrix columns.

    A singular value s counts as zero when ``s <= max(tol * s_max, atol)``.
    The absolute floor matters for matrices that are zero up to rounding dust,
    where a purely relative cutoff would report full rank.  The returned array
    has shape ``(cols, k)``; ``k`` may be zero.
    """
    if tol <= 0:
        raise ValueError("nullspace tolerance must be positive")
    m = as_matrix(a)
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    smax = s[0] if s.size else 0.0
    cutoff = max(tol * smax, atol)
    rank = int(np.sum(s > cutoff)) if smax > cutoff else 0
    basis = vh[rank:].conj().T
    return fix_phases(basis)


def kron(a, b) -> np.ndarray:
    """Kronecker product, ``(a ⊗ b)(u ⊗ v) = a u ⊗ b v``."""
    return np.kron(np.asarray(a), np.asarray(b))


def orthonormal_columns(a, tol: float = DEFAULT_NULLSPACE_TOL, atol: float = 0.0) -> np.ndarray:
    """Orthonormal basis for the column span of ``a`` (rank-revealing SVD)."""
    m = as_matrix(a)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    smax = s[0] if s.size else 0.0
    cutoff = max(tol * smax, atol)
    rank = int(np.sum(s > cutoff)) if smax > cutoff else 0
    return fix_phases(u[:, :rank])


def projector(columns: np.ndarray) -> np.ndarray:
    """Orthogonal projector onto the span of the (orthonormal) columns."""
    q = as_matrix(columns)
    return q @ q.conj().T
