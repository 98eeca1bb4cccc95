"""Representations of so(n) and its subalgebras as explicit matrix lists.

A :class:`Rep` stores one endomorphism per orthonormal basis element of the
algebra (so(n) or a subalgebra), acting on a complex vector space with an
orthonormal basis, so every constructed action is skew-adjoint.  Tensor,
exterior and symmetric powers act by derivations.

Representations are stored extensionally; no symbolic machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from . import numerics
from .so_algebra import SoBasis, Subalgebra, bracket, expand, inner

__all__ = [
    "IsotypicPiece",
    "Rep",
    "casimir",
    "commutant_dimension",
    "homomorphism_residual",
    "intertwiners",
    "invariant_bilinear_forms",
    "is_irreducible",
    "isotypic_decompose",
    "rep_adjoint",
    "rep_exterior",
    "rep_restrict",
    "rep_standard",
    "rep_sym",
    "rep_sym0",
    "rep_tensor",
    "rep_trivial",
    "rep_vector",
]


@dataclass(frozen=True)
class Rep:
    """Matrix representation: one complex ``dim x dim`` matrix per generator."""

    basis: SoBasis | Subalgebra
    dim: int
    mats: tuple[np.ndarray, ...]
    label: str

    @property
    def n_generators(self) -> int:
        return len(self.mats)

    def stacked(self) -> np.ndarray:
        return np.array(self.mats)


def _basis_matrices(b: SoBasis | Subalgebra) -> tuple[np.ndarray, ...]:
    return b.elements


def _same_basis(r1: Rep, r2: Rep) -> bool:
    if r1.basis is r2.basis:
        return True
    b1, b2 = _basis_matrices(r1.basis), _basis_matrices(r2.basis)
    return len(b1) == len(b2) and all(np.array_equal(x, y) for x, y in zip(b1, b2))


def homomorphism_residual(r: Rep) -> float:
    """Worst-case ``|| rho([x_a, x_b]) - [rho(x_a), rho(x_b)] ||`` over pairs.

    Brackets of basis elements are expanded over the (orthonormal) basis, so
    this also fails loudly if the underlying set is not closed under bracket.
    """
    elements = _basis_matrices(r.basis)
    stacked = r.stacked()
    worst = 0.0
    for a, b in itertools.combinations(range(len(elements)), 2):
        lie = bracket(elements[a], elements[b])
        coeff = np.array([inner(e, lie) for e in elements])
        target = np.tensordot(coeff, stacked, axes=(0, 0))
        got = bracket(r.mats[a], r.mats[b])
        worst = max(worst, float(np.linalg.norm(got - target)))
    return worst


def skew_adjoint_residual(r: Rep) -> float:
    return max(float(np.linalg.norm(m + m.conj().T)) for m in r.mats)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def rep_trivial(basis: SoBasis | Subalgebra) -> Rep:
    z = np.zeros((1, 1), dtype=complex)
    return Rep(basis=basis, dim=1, mats=tuple(z.copy() for _ in _basis_matrices(basis)), label="trivial")


def rep_vector(basis: SoBasis) -> Rep:
    mats = tuple(np.asarray(x, dtype=complex) for x in basis.elements)
    return Rep(basis=basis, dim=basis.n, mats=mats, label="vector")


def rep_adjoint(basis: SoBasis) -> Rep:
    """ad of so(n) on itself in the orthonormal basis."""
    n_gen = basis.dim
    mats = []
    for a in range(n_gen):
        m = np.zeros((n_gen, n_gen), dtype=complex)
        for b in range(n_gen):
            m[:, b] = expand(basis, bracket(basis.elements[a], basis.elements[b]))
        mats.append(m)
    return Rep(basis=basis, dim=n_gen, mats=tuple(mats), label="adjoint")


def _exterior_action(x: np.ndarray, n: int, p: int) -> np.ndarray:
    """Derivation action of an n x n matrix on Lambda^p with the orthonormal
    basis e_{i1} ^ ... ^ e_{ip}, i1 < ... < ip, in lexicographic order."""
    combos = list(itertools.combinations(range(n), p))
    index = {c: k for k, c in enumerate(combos)}
    d = len(combos)
    out = np.zeros((d, d), dtype=complex)
    for col, combo in enumerate(combos):
        for slot in range(p):
            i = combo[slot]
            for j in range(n):
                c = x[j, i]
                if c == 0 or (j != i and j in combo):
                    continue
                replaced = list(combo)
                replaced[slot] = j
                order = np.argsort(replaced)
                sign = 1.0
                # parity of the permutation sorting `replaced`
                seen = [False] * p
                for start in range(p):
                    if seen[start]:
                        continue
                    cycle = 0
                    k = start
                    while not seen[k]:
                        seen[k] = True
                        k = int(order[k])
                        cycle += 1
                    if cycle % 2 == 0:
                        sign = -sign
                row = index[tuple(sorted(replaced))]
                out[row, col] += sign * c
    return out


def rep_exterior(basis: SoBasis, p: int) -> Rep:
    if not 0 <= p <= basis.n:
        raise ValueError(f"exterior power p={p} out of range for n={basis.n}")
    if p == 0:
        r = rep_trivial(basis)
        return Rep(basis=basis, dim=1, mats=r.mats, label="exterior(0)")
    mats = tuple(_exterior_action(np.asarray(x, dtype=complex), basis.n, p) for x in basis.elements)
    return Rep(basis=basis, dim=comb(basis.n, p), mats=mats, label=f"exterior({p})")


def _sym_action(x: np.ndarray, n: int, p: int) -> np.ndarray:
    """Derivation action on Sym^p in the orthonormal monomial basis."""
    monos = list(itertools.combinations_with_replacement(range(n), p))
    index = {m: k for k, m in enumerate(monos)}

    def mult_factorial(mono):
        f = 1.0
        for _, grp in itertools.groupby(mono):
            c = len(list(grp))
            for t in range(2, c + 1):
                f *= t
        return f

    norms = np.array([mult_factorial(m) for m in monos])  # prod of multiplicities!
    d = len(monos)
    out = np.zeros((d, d), dtype=complex)
    for col, mono in enumerate(monos):
        for slot in range(p):
            i = mono[slot]
            for j in range(n):
                c = x[j, i]
                if c == 0:
                    continue
                replaced = tuple(sorted(mono[:slot] + (j,) + mono[slot + 1:]))
                row = index[replaced]
                out[row, col] += c * np.sqrt(norms[row] / norms[col])
    return out


def rep_sym(basis: SoBasis, p: int) -> Rep:
    if p < 1:
        raise ValueError("symmetric power needs p >= 1")
    mats = tuple(_sym_action(np.asarray(x, dtype=complex), basis.n, p) for x in basis.elements)
    return Rep(basis=basis, dim=comb(basis.n + p - 1, p), mats=mats, label=f"sym({p})")


def rep_sym0(basis: SoBasis) -> Rep:
    """Trace-free part of Sym^2 (dimension n(n+1)/2 - 1)."""
    s2 = rep_sym(basis, 2)
    n = basis.n
    monos = list(itertools.combinations_with_replacement(range(n), 2))
    metric = np.zeros((s2.dim, 1), dtype=complex)
    for k, (i, j) in enumerate(monos):
        if i == j:
            metric[k, 0] = 1.0
    metric /= np.linalg.norm(metric)
    cols = numerics.nullspace(metric.conj().T)  # orthonormal complement of the metric vector
    mats = tuple(cols.conj().T @ m @ cols for m in s2.mats)
    return Rep(basis=basis, dim=s2.dim - 1, mats=mats, label="sym0(2)")


def rep_standard(basis: SoBasis, kind: str, p: int | None = None) -> Rep:
    """Dispatcher: ``trivial | vector | adjoint | exterior (p) | sym (p) | sym0``."""
    if kind == "trivial":
        return rep_trivial(basis)
    if kind == "vector":
        return rep_vector(basis)
    if kind == "adjoint":
        return rep_adjoint(basis)
    if kind == "exterior":
        if p is None:
            raise ValueError("exterior needs a degree p")
        return rep_exterior(basis, p)
    if kind == "sym":
        if p is None:
            raise ValueError("sym needs a degree p")
        return rep_sym(basis, p)
    if kind == "sym0":
        return rep_sym0(basis)
    raise ValueError(f"unknown representation kind {kind!r}")


def rep_tensor(r1: Rep, r2: Rep) -> Rep:
    """Tensor product: generators act as ``rho(x) (x) 1 + 1 (x) sigma(x)``."""
    if not _same_basis(r1, r2):
        raise ValueError("tensor factors live over different bases")
    i1 = np.eye(r1.dim)
    i2 = np.eye(r2.dim)
    mats = tuple(numerics.kron(m1, i2) + numerics.kron(i1, m2) for m1, m2 in zip(r1.mats, r2.mats))
    return Rep(basis=r1.basis, dim=r1.dim * r2.dim, mats=mats, label=f"{r1.label}(x){r2.label}")


def rep_restrict(r: Rep, h: Subalgebra) -> Rep:
    """Restrict a representation of so(n) to a subalgebra (by expanding the
    orthonormalised generators of h over the so(n) basis)."""
    if not isinstance(r.basis, SoBasis):
        raise ValueError("can only restrict a representation of the full so(n)")
    if h.ambient.n != r.basis.n:
        raise ValueError(f"subalgebra ambient so({h.ambient.n}) does not match rep over so({r.basis.n})")
    stacked = r.stacked()
    mats = []
    for g in h.elements:
        coeff = expand(r.basis, g)
        mats.append(np.tensordot(coeff, stacked, axes=(0, 0)))
    return Rep(basis=h, dim=r.dim, mats=tuple(mats), label=f"{r.label}|{h.label}")


# ---------------------------------------------------------------------------
# Invariants: commutants, forms, Casimir, isotypic pieces
# ---------------------------------------------------------------------------


def casimir(r: Rep) -> np.ndarray:
    """Quadratic Casimir ``sum_a rho(x_a)^2`` over the orthonormal basis."""
    m = r.stacked()
    return np.einsum("aij,ajk->ik", m, m)


def intertwiners(r1: Rep, r2: Rep) -> list[np.ndarray]:
    """Orthonormal basis (Frobenius) of ``{T : sigma(x_a) T = T rho(x_a)}``.

    Maps go from the space of ``r1`` to the space of ``r2``.
    """
    if not _same_basis(r1, r2):
        raise ValueError("intertwiners need representations over the same basis")
    d1, d2 = r1.dim, r2.dim
    i1, i2 = np.eye(d1), np.eye(d2)
    blocks = [numerics.kron(m2, i1) - numerics.kron(i2, m1.T) for m1, m2 in zip(r1.mats, r2.mats)]
    null = numerics.nullspace(np.vstack(blocks))
    return [null[:, k].reshape(d2, d1) for k in range(null.shape[1])]


def commutant_dimension(r: Rep, field: str = "C") -> int:
    """Dimension of the commutant, over C or (for real matrix reps) over R."""
    if field == "C":
        return len(intertwiners(r, r))
    if field != "R":
        raise ValueError("field must be 'C' or 'R'")
    d = r.dim
    eye = np.eye(d)
    blocks = []
    for m in r.mats:
        op = numerics.kron(m, eye) - numerics.kron(eye, m.T)
        blocks.append(np.real(op))
        blocks.append(np.imag(op))
    null = numerics.nullspace(np.vstack(blocks))
    return null.shape[1]


def is_irreducible(r: Rep) -> bool:
    """Irreducibility over C (commutant is the scalars)."""
    return commutant_dimension(r, "C") == 1


def invariant_bilinear_forms(r: Rep) -> list[tuple[np.ndarray, int]]:
    """Solutions of ``rho(x_a)^T B + B rho(x_a) = 0`` classified by symmetry.

    Returns pairs ``(B, s)`` with ``B^T = s B``, ``s = +1`` or ``-1``; the B's
    are Frobenius-orthonormal and each is purely symmetric or antisymmetric.
    """
    d = r.dim
    eye = np.eye(d)
    blocks = [numerics.kron(m.T, eye) + numerics.kron(eye, m.T) for m in r.mats]
    null = numerics.nullspace(np.vstack(blocks))
    sym, skew = [], []
    for k in range(null.shape[1]):
        b = null[:, k].reshape(d, d)
        sym.append(((b + b.T) / 2).ravel())
        skew.append(((b - b.T) / 2).ravel())
    out = []
    for part, sign in ((sym, 1), (skew, -1)):
        if not part:
            continue
        # nullspace vectors are unit norm, so components below 1e-10 are dust
        span = numerics.orthonormal_columns(np.array(part).T, atol=1e-10)
        for k in range(span.shape[1]):
            out.append((span[:, k].reshape(d, d), sign))
    return out


@dataclass(frozen=True)
class IsotypicPiece:
    """One isotypic block: orthogonal projector, its dimension, the dimension
    of the multiplicity space, and the Casimir eigenvalue on the block."""

    projector: np.ndarray
    dim: int
    multiplicity: int
    casimir_eigenvalue: float


def _center_of_commutant(comm: list[np.ndarray]) -> list[np.ndarray]:
    k = len(comm)
    if k == 1:
        return list(comm)
    cols = []
    for j in range(k):
        col = np.concatenate([bracket(comm[j], comm[i]).ravel() for i in range(k)])
        cols.append(col)
    # commutant elements are unit norm; an abelian commutant gives a matrix of
    # rounding dust here, hence the absolute floor
    null = numerics.nullspace(np.array(cols).T, atol=1e-10)
    return [sum(null[j, m] * comm[j] for j in range(k)) for m in range(null.shape[1])]


def isotypic_decompose(r: Rep, seed: int = 0, cluster_tol: float = 1e-6) -> list[IsotypicPiece]:
    """Split a representation into isotypic pieces.

    The projectors come from the eigenspaces of a pseudorandom (seeded,
    recorded by callers) Hermitian element of the *center* of the commutant;
    the Casimir alone cannot separate inequivalent pieces with equal Casimir
    eigenvalue.  Pieces are ordered by ascending Casimir eigenvalue, then by
    the generic element's eigenvalue.
    """
    comm = intertwiners(r, r)
    center = _center_of_commutant(comm)
    # Hermitian part of the center as a *real* vector space: orthonormalising
    # over C would rotate phases and lose Hermiticity.
    vecs = []
    for z in center:
        for h in ((z + z.conj().T) / 2, (z - z.conj().T) / 2j):
            v = h.ravel()
            vecs.append(np.concatenate([v.real, v.imag]))
    span = numerics.orthonormal_columns(np.array(vecs).T, atol=1e-10)
    d2 = r.dim * r.dim
    basis_herm = [
        (np.real(span[:d2, m]) + 1j * np.real(span[d2:, m])).reshape(r.dim, r.dim)
        for m in range(span.shape[1])
    ]
    rng = np.random.default_rng(seed)
    coeff = rng.standard_normal(len(basis_herm))
    generic = sum(c * h for c, h in zip(coeff, basis_herm))
    generic = (generic + generic.conj().T) / 2
    w, v = numerics.eig_hermitian(generic, hermitian_tol=1e-8)
    scale = max(1.0, float(np.max(np.abs(w))))
    clusters: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[i - 1] <= cluster_tol * scale:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    cas = casimir(r)
    pieces = []
    for idx in clusters:
        cols = v[:, idx]
        proj = numerics.projector(cols)
        cas_block = cols.conj().T @ cas @ cols
        lam = float(np.real(np.trace(cas_block)) / len(idx))
        # multiplicity^2 = dimension of the commutant block on this piece
        blk = np.array([(proj @ t @ proj).ravel() for t in comm])
        svals = np.linalg.svd(blk, compute_uv=False)
        rank = int(np.sum(svals > 1e-8 * max(1.0, svals[0]))) if svals.size else 0
        mult = int(round(np.sqrt(rank)))
        pieces.append(
            IsotypicPiece(projector=proj, dim=len(idx), multiplicity=mult, casimir_eigenvalue=lam)
        )
    pieces.sort(key=lambda p: (round(p.casimir_eigenvalue, 9), p.dim))
    return pieces
