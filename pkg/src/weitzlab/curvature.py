"""Algebraic curvature operators: symmetric bilinear forms on so(n).

Normalisation, fixed once and calibrated against two anchors at the same
time (the round sphere gives the identity matrix, and the curvature term on
1-forms gives the Ricci tensor):

* ``R_ab = R_{i_a j_a i_b j_b} / 2`` over the lexicographic pair basis;
* with this scale the "sphere" operator ``R = Id`` has sectional curvature 2,
  Ricci ``2(n-1) Id`` and scalar curvature ``2 n (n-1)``;
* ``Ricci_ik = sum_j T_ijkj`` on the tensor form, positive on the sphere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import numerics
from .so_algebra import SimpleAlgebraData, basis as so_basis, expand, pair_list

__all__ = [
    "CurvatureOperator",
    "FourDimBlocks",
    "bi_invariant_group",
    "bianchi_project",
    "bianchi_residual",
    "curvature_from_json",
    "curvature_operator",
    "curvature_to_json",
    "four_dim_blocks",
    "from_tensor",
    "random_curvature",
    "random_symmetric",
    "ricci",
    "scalar",
    "sphere",
    "to_tensor",
]


@dataclass(frozen=True)
class CurvatureOperator:
    """Symmetric N x N matrix over the so(n) pair basis, N = n(n-1)/2."""

    n: int
    matrix: np.ndarray
    bianchi_flag: bool

    @property
    def pairs(self):
        return pair_list(self.n)


def curvature_operator(n: int, matrix, bianchi: bool | None = None, sym_tol: float = 1e-12) -> CurvatureOperator:
    """Validated constructor; symmetrises exactly after checking the residual."""
    m = np.asarray(matrix, dtype=float)
    npairs = n * (n - 1) // 2
    if m.shape != (npairs, npairs):
        raise ValueError(f"curvature matrix for n={n} must be {npairs} x {npairs}, got {m.shape}")
    scale = max(1.0, float(np.linalg.norm(m)))
    if np.linalg.norm(m - m.T) > sym_tol * scale:
        raise ValueError("curvature operator is not symmetric within tolerance")
    m = (m + m.T) / 2.0
    if bianchi is None:
        bianchi = bianchi_residual_matrix(n, m) <= 1e-10
    return CurvatureOperator(n=n, matrix=m, bianchi_flag=bool(bianchi))


# ---------------------------------------------------------------------------
# Tensor form and Bianchi projection
# ---------------------------------------------------------------------------


def to_tensor(op: CurvatureOperator) -> np.ndarray:
    """Rank-4 form: ``T[i,j,k,l]`` with the pair (anti)symmetries, ``T = 2 R``
    on sorted pairs."""
    n = op.n
    t = np.zeros((n, n, n, n))
    pairs = pair_list(n)
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            v = 2.0 * op.matrix[a, b]
            t[i, j, k, l] = v
            t[j, i, k, l] = -v
            t[i, j, l, k] = -v
            t[j, i, l, k] = v
    return t


def from_tensor(t: np.ndarray, tol: float = 1e-10) -> CurvatureOperator:
    """Inverse of :func:`to_tensor`; validates the pair symmetries."""
    t = np.asarray(t, dtype=float)
    if t.ndim != 4 or len(set(t.shape)) != 1:
        raise ValueError("tensor form must be an n x n x n x n array")
    n = t.shape[0]
    scale = max(1.0, float(np.linalg.norm(t)))
    for label, viol in (
        ("antisymmetry in (i, j)", t + np.einsum("jikl->ijkl", t)),
        ("antisymmetry in (k, l)", t + np.einsum("ijlk->ijkl", t)),
        ("pair-swap symmetry", t - np.einsum("klij->ijkl", t)),
    ):
        if np.linalg.norm(viol) > tol * scale:
            raise ValueError(f"tensor violates {label} beyond tolerance")
    pairs = pair_list(n)
    npairs = len(pairs)
    r = np.zeros((npairs, npairs))
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            r[a, b] = t[i, j, k, l] / 2.0
    return curvature_operator(n, (r + r.T) / 2.0)


def _cyclic_sum(t: np.ndarray) -> np.ndarray:
    """First-Bianchi cyclic sum ``T_ijkl + T_jkil + T_kijl``."""
    return t + np.einsum("jkil->ijkl", t) + np.einsum("kijl->ijkl", t)


def bianchi_residual(op: CurvatureOperator) -> float:
    return bianchi_residual_matrix(op.n, op.matrix)


def bianchi_residual_matrix(n: int, matrix: np.ndarray) -> float:
    t = to_tensor(CurvatureOperator(n=n, matrix=np.asarray(matrix, dtype=float), bianchi_flag=False))
    scale = max(1.0, float(np.linalg.norm(t)))
    return float(np.linalg.norm(_cyclic_sum(t))) / scale


_SYM_CACHE: dict[int, tuple] = {}


def _sym_coords(n: int):
    """Orthonormal coordinates on symmetric N x N matrices (Frobenius)."""
    npairs = n * (n - 1) // 2
    if n in _SYM_CACHE:
        return _SYM_CACHE[n]
    mats = []
    for a in range(npairs):
        for b in range(a, npairs):
            m = np.zeros((npairs, npairs))
            if a == b:
                m[a, a] = 1.0
            else:
                m[a, b] = m[b, a] = 1.0 / np.sqrt(2.0)
            mats.append(m)
    _SYM_CACHE[n] = tuple(mats)
    return _SYM_CACHE[n]


_BIANCHI_PROJ_CACHE: dict[int, np.ndarray] = {}


def _bianchi_projector(n: int) -> np.ndarray:
    """Orthogonal projector, in symmetric-matrix coordinates, onto the kernel
    of the cyclic-sum map (the algebraic curvature tensors)."""
    if n in _BIANCHI_PROJ_CACHE:
        return _BIANCHI_PROJ_CACHE[n]
    coords = _sym_coords(n)
    cols = []
    for m in coords:
        t = to_tensor(CurvatureOperator(n=n, matrix=m, bianchi_flag=False))
        cols.append(_cyclic_sum(t).ravel())
    null = numerics.nullspace(np.array(cols).T, atol=1e-12)
    proj = np.real(null @ null.conj().T)
    _BIANCHI_PROJ_CACHE[n] = proj
    return proj


def _to_sym_coords(n: int, matrix: np.ndarray) -> np.ndarray:
    coords = _sym_coords(n)
    return np.array([float(np.sum(matrix * c)) for c in coords])


def _from_sym_coords(n: int, vec: np.ndarray) -> np.ndarray:
    coords = _sym_coords(n)
    return sum(v * c for v, c in zip(vec, coords))


def bianchi_project(op: CurvatureOperator) -> CurvatureOperator:
    """Orthogonal projection onto the algebraic-curvature subspace."""
    proj = _bianchi_projector(op.n)
    vec = proj @ _to_sym_coords(op.n, op.matrix)
    return CurvatureOperator(n=op.n, matrix=_from_sym_coords(op.n, vec), bianchi_flag=True)


def bianchi_space_dimension(n: int) -> int:
    """Dimension of the algebraic-curvature subspace of Sym^2(Lambda^2)."""
    return int(round(float(np.trace(_bianchi_projector(n)))))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def sphere(n: int) -> CurvatureOperator:
    """The identity operator (the round sphere; sectional curvature 2 in this
    normalisation)."""
    if n < 2:
        raise ValueError("sphere needs n >= 2")
    npairs = n * (n - 1) // 2
    return CurvatureOperator(n=n, matrix=np.eye(npairs), bianchi_flag=True)


def random_symmetric(n: int, seed: int) -> CurvatureOperator:
    """Seeded Gaussian symmetric operator, *not* Bianchi-projected."""
    npairs = n * (n - 1) // 2
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((npairs, npairs))
    m = (g + g.T) / 2.0
    return CurvatureOperator(n=n, matrix=m, bianchi_flag=False)


def random_curvature(n: int, seed: int) -> CurvatureOperator:
    """Seeded Gaussian symmetric operator projected onto the Bianchi subspace."""
    return bianchi_project(random_symmetric(n, seed))


def bi_invariant_group(g: SimpleAlgebraData) -> CurvatureOperator:
    """Curvature operator of a compact simple group with the metric -B:
    ``R = (1/8) sum_c ad(y_c) (x) ad(y_c)`` over the so(dim g) pair basis."""
    d = g.dim
    so = so_basis(d)
    coeff = np.array([expand(so, np.real(a)) for a in g.ad])  # (d, N)
    r = coeff.T @ coeff / 8.0
    op = curvature_operator(d, r, bianchi=None)
    if not op.bianchi_flag:
        raise RuntimeError(f"bi-invariant curvature of {g.label} failed the Bianchi check")
    return op


# ---------------------------------------------------------------------------
# Ricci, scalar, four-dimensional blocks
# ---------------------------------------------------------------------------


def ricci(op: CurvatureOperator) -> np.ndarray:
    """Ricci tensor by index contraction of the tensor form."""
    return np.einsum("ijkj->ik", to_tensor(op))


def scalar(op: CurvatureOperator) -> float:
    return float(np.trace(ricci(op)))


@dataclass(frozen=True)
class FourDimBlocks:
    """Block decomposition of a 4-dimensional curvature operator over the
    self-dual / anti-self-dual splitting of the 2-forms."""

    wplus: np.ndarray
    wminus: np.ndarray
    mixed: np.ndarray
    scalar_part: float
    basis_plus: np.ndarray
    basis_minus: np.ndarray

    def reassemble(self) -> np.ndarray:
        u = np.hstack([self.basis_plus, self.basis_minus])
        top = np.hstack([self.wplus, self.mixed])
        bottom = np.hstack([self.mixed.T, self.wminus])
        return u @ np.vstack([top, bottom]) @ u.T


def _hodge_star_coefficients() -> np.ndarray:
    """Hodge star on Lambda^2(R^4) over the lexicographic pair basis."""
    star = np.zeros((6, 6))
    signs = {((0, 1), (2, 3)): 1.0, ((0, 2), (1, 3)): -1.0, ((0, 3), (1, 2)): 1.0}
    pairs = pair_list(4)
    for (p, q), s in signs.items():
        star[pairs.index(q), pairs.index(p)] = s
        star[pairs.index(p), pairs.index(q)] = s
    return star


def _self_dual_bases() -> tuple[np.ndarray, np.ndarray]:
    """Deterministic orthonormal bases of the +-1 eigenspaces of the star,
    labelled so that the + side acts trivially on negative-chirality spinors."""
    from .spin import half_spin_columns, rep_spin

    star = _hodge_star_coefficients()
    pairs = pair_list(4)
    plus, minus = [], []
    for p, q in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        s = star[pairs.index(q), pairs.index(p)]
        v = np.zeros(6)
        v[pairs.index(p)] = 1.0 / np.sqrt(2.0)
        v[pairs.index(q)] = s / np.sqrt(2.0)
        plus.append(v)
        w = np.zeros(6)
        w[pairs.index(p)] = 1.0 / np.sqrt(2.0)
        w[pairs.index(q)] = -s / np.sqrt(2.0)
        minus.append(w)
    bp = np.array(plus).T
    bm = np.array(minus).T
    # align the labels with the chirality convention of the spin module: the
    # self-dual side must kill the negative-chirality spinors
    sp = rep_spin(so_basis(4))
    _, neg = half_spin_columns(4)
    stacked = np.array(sp.mats)

    def acts_on_minus(cols):
        total = 0.0
        for k in range(3):
            m = np.tensordot(cols[:, k], stacked, axes=(0, 0))
            total += float(np.linalg.norm(m @ neg))
        return total

    if acts_on_minus(bp) > acts_on_minus(bm):
        bp, bm = bm, bp
    return bp, bm


def four_dim_blocks(op: CurvatureOperator) -> FourDimBlocks:
    """Conjugate a (Bianchi) 4-dimensional curvature operator into the
    self-dual / anti-self-dual basis and return the three 3x3 blocks.

    The mixed block is a fixed linear image of the trace-free Ricci tensor,
    so it vanishes exactly when the operator is Einstein.
    """
    if op.n != 4:
        raise ValueError("four_dim_blocks needs n = 4")
    if not op.bianchi_flag:
        raise ValueError("four_dim_blocks needs a Bianchi curvature operator")
    bp, bm = _self_dual_bases()
    return FourDimBlocks(
        wplus=bp.T @ op.matrix @ bp,
        wminus=bm.T @ op.matrix @ bm,
        mixed=bp.T @ op.matrix @ bm,
        scalar_part=scalar(op),
        basis_plus=bp,
        basis_minus=bm,
    )


# ---------------------------------------------------------------------------
# JSON interface
# ---------------------------------------------------------------------------

CURVATURE_SCHEMA_BASIS = "lex-upper"
CURVATURE_SCHEMA_NORMALIZATION = "half-tensor"


def curvature_to_json(op: CurvatureOperator) -> dict:
    return {
        "n": op.n,
        "basis": CURVATURE_SCHEMA_BASIS,
        "normalization": CURVATURE_SCHEMA_NORMALIZATION,
        "R": [[float(x) for x in row] for row in op.matrix],
    }


def curvature_from_json(payload) -> CurvatureOperator:
    """Load a curvature operator from the JSON schema, enforcing symmetry and
    recording the Bianchi check in the flag."""
    if isinstance(payload, (str, bytes)):
        payload = json.loads(payload)
    if not isinstance(payload, dict):
        raise ValueError("curvature JSON must be an object")
    for key in ("n", "basis", "normalization", "R"):
        if key not in payload:
            raise ValueError(f"curvature JSON is missing the {key!r} field")
    if payload["basis"] != CURVATURE_SCHEMA_BASIS:
        raise ValueError(f"unsupported basis {payload['basis']!r}")
    if payload["normalization"] != CURVATURE_SCHEMA_NORMALIZATION:
        raise ValueError(f"unsupported normalization {payload['normalization']!r}")
    n = int(payload["n"])
    return curvature_operator(n, np.array(payload["R"], dtype=float), bianchi=None, sym_tol=1e-9)


def constant_sectional_tensor(n: int, kappa: float = 2.0) -> np.ndarray:
    """Tensor form of constant sectional curvature kappa (oracle helper)."""
    t = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            t[i, j, i, j] += kappa
            t[i, j, j, i] -= kappa
    return t


def _einstein_projector(n: int = 4) -> np.ndarray:
    """Projector in symmetric coordinates onto {Bianchi, trace-free Ricci = 0}."""
    coords = _sym_coords(n)
    proj_b = _bianchi_projector(n)
    rows = []
    for m in coords:
        opm = CurvatureOperator(n=n, matrix=m, bianchi_flag=False)
        ric = ricci(opm)
        ric0 = ric - np.trace(ric) / n * np.eye(n)
        rows.append(ric0.ravel())
    ric_map = np.array(rows).T  # (n^2, ncoords)
    stacked = np.vstack([np.eye(len(coords)) - proj_b, ric_map])
    null = numerics.nullspace(stacked, atol=1e-12)
    return np.real(null @ null.conj().T)


_EINSTEIN_CACHE: dict[int, np.ndarray] = {}


def einstein_project(op: CurvatureOperator) -> CurvatureOperator:
    """Project a curvature operator onto the Einstein (Ricci = scalar/n) part
    of the Bianchi subspace."""
    if op.n not in _EINSTEIN_CACHE:
        _EINSTEIN_CACHE[op.n] = _einstein_projector(op.n)
    vec = _EINSTEIN_CACHE[op.n] @ _to_sym_coords(op.n, op.matrix)
    return CurvatureOperator(n=op.n, matrix=_from_sym_coords(op.n, vec), bianchi_flag=True)
