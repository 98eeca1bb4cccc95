"""Curvature endomorphisms of representations and the identities they satisfy.

The central object is ``K = sum_ab R_ab rho(x_a) rho(x_b)`` for a curvature
operator R and a representation rho; it is self-adjoint because R is
symmetric and the generators are skew-adjoint.  On top of it:

* named multiples ``t K`` matching the classical geometric operators
  (spinor, Hodge, Lichnerowicz, Killing, curvature-tensor);
* the twisted term ``W`` for tensor products and its k-factor version;
* a verifier for the projection identity ``P K P = -(k/4) P W P`` on
  permutation-fixed subspaces of spinor tensor powers;
* a positivity analyzer for families of representations, with a finite
  diagnostic search standing in for the (infinite-dimensional) converse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import numerics
from .curvature import CurvatureOperator
from .report import CheckReport, digest
from .representations import (
    Rep,
    casimir,
    commutant_dimension,
    rep_adjoint,
    rep_exterior,
    rep_sym0,
    rep_vector,
)
from .so_algebra import SoBasis
from .spin import rep_half_spin, rep_spin

__all__ = [
    "CurvatureEndomorphism",
    "LemmaPreconditionError",
    "PositivityEntry",
    "PositivityReport",
    "LAPLACIAN_PRESETS",
    "k_matrix",
    "k_term",
    "laplacian_curvature",
    "lemma_check",
    "permutation_matrix",
    "positivity_report",
    "standard_family",
    "sym_projector",
    "tensor_power_rep",
    "twisted_term",
    "twisted_term_k",
    "vanishing_verdict",
]

#: Values of t for the classical operators: the spinor Laplacian carries -4K,
#: the Hodge and Lichnerowicz Laplacians -2K, Killing fields +2K, and the
#: Laplacian on curvature tensors -1K.
LAPLACIAN_PRESETS = {
    "spinor_dirac": -4.0,
    "hodge": -2.0,
    "lichnerowicz": -2.0,
    "killing": 2.0,
    "curvature_tensor": -1.0,
}


@dataclass(frozen=True)
class CurvatureEndomorphism:
    rep_label: str
    matrix: np.ndarray
    spectrum: np.ndarray
    self_adjoint_residual: float


def _check_compatible(r: CurvatureOperator, rep: Rep) -> None:
    if len(rep.mats) != r.matrix.shape[0]:
        raise ValueError(
            f"curvature operator has {r.matrix.shape[0]} basis directions but the "
            f"representation has {len(rep.mats)} generators"
        )
    base = rep.basis
    n = base.ambient.n if hasattr(base, "ambient") else base.n
    if n != r.n:
        raise ValueError(f"curvature lives on so({r.n}) but the representation on so({n})")


def k_matrix(r: CurvatureOperator, rep: Rep) -> np.ndarray:
    """The matrix ``sum_ab R_ab rho(x_a) rho(x_b)`` without the spectral data."""
    _check_compatible(r, rep)
    m = rep.stacked()
    s = np.tensordot(r.matrix, m, axes=(1, 0))
    return np.matmul(m, s).sum(axis=0)


def k_term(r: CurvatureOperator, rep: Rep) -> CurvatureEndomorphism:
    """Curvature endomorphism of a representation, with spectrum."""
    k = k_matrix(r, rep)
    scale = max(1.0, float(np.linalg.norm(k)))
    residual = float(np.linalg.norm(k - k.conj().T)) / scale
    w, _ = numerics.eig_hermitian(k, hermitian_tol=1e-10)
    return CurvatureEndomorphism(
        rep_label=rep.label, matrix=k, spectrum=w, self_adjoint_residual=residual
    )


def laplacian_curvature(r: CurvatureOperator, rep: Rep, t) -> np.ndarray:
    """The zeroth-order term ``t K``; ``t`` may be a number or a preset name."""
    if isinstance(t, str):
        if t not in LAPLACIAN_PRESETS:
            raise ValueError(f"unknown Laplacian preset {t!r}; choose from {sorted(LAPLACIAN_PRESETS)}")
        t = LAPLACIAN_PRESETS[t]
    return float(t) * k_matrix(r, rep)


def twisted_term(r: CurvatureOperator, rho: Rep, sigma: Rep) -> np.ndarray:
    """``-4 sum_ab R_ab (rho(x_a) rho(x_b) (x) 1 + rho(x_a) (x) sigma(x_b))``."""
    _check_compatible(r, rho)
    _check_compatible(r, sigma)
    first = numerics.kron(k_matrix(r, rho), np.eye(sigma.dim))
    ms = sigma.stacked()
    weighted = np.tensordot(r.matrix, ms, axes=(1, 0))
    cross = sum(numerics.kron(rho.mats[a], weighted[a]) for a in range(len(rho.mats)))
    return -4.0 * (first + cross)


def tensor_power_rep(rho: Rep, k: int) -> Rep:
    """k-fold tensor power: generators act by the sum over the k slots."""
    if k < 1:
        raise ValueError("tensor power needs k >= 1")
    d = rho.dim
    dim = d ** k
    mats = []
    for m in rho.mats:
        total = np.zeros((dim, dim), dtype=complex)
        for slot in range(k):
            left = np.eye(d ** slot)
            right = np.eye(d ** (k - slot - 1))
            total += numerics.kron(numerics.kron(left, m), right)
        mats.append(total)
    return Rep(basis=rho.basis, dim=dim, mats=tuple(mats), label=f"{rho.label}^(x){k}")


def twisted_term_k(r: CurvatureOperator, rho: Rep, k: int) -> np.ndarray:
    """k-factor twisted term: the two-factor formula with the second slot
    replaced by the sum of the actions on factors 2..k."""
    _check_compatible(r, rho)
    if k < 1:
        raise ValueError("twisted term needs k >= 1")
    d = rho.dim
    tail_dim = d ** (k - 1)
    first = numerics.kron(k_matrix(r, rho), np.eye(tail_dim))
    if k == 1:
        return -4.0 * first
    tail = tensor_power_rep(rho, k - 1)
    weighted = np.tensordot(r.matrix, tail.stacked(), axes=(1, 0))
    cross = sum(numerics.kron(rho.mats[a], weighted[a]) for a in range(len(rho.mats)))
    return -4.0 * (first + cross)


# ---------------------------------------------------------------------------
# Projection lemma verifier
# ---------------------------------------------------------------------------


class LemmaPreconditionError(ValueError):
    """A stated hypothesis of the projection identity fails for these inputs."""


def permutation_matrix(perm: tuple[int, ...], d: int) -> np.ndarray:
    """Matrix of a permutation of tensor factors on (C^d)^(x) k.

    ``perm[s]`` is the slot the s-th factor is sent to:
    ``P (v_0 (x) ... (x) v_{k-1}) = w`` with ``w_{perm[s]} = v_s``.
    """
    k = len(perm)
    if sorted(perm) != list(range(k)):
        raise ValueError(f"{perm} is not a permutation of 0..{k - 1}")
    dim = d ** k
    p = np.zeros((dim, dim))
    for src in range(dim):
        digits = []
        rest = src
        for _ in range(k):
            digits.append(rest % d)
            rest //= d
        digits.reverse()  # digits[s] = index in slot s
        out = [0] * k
        for s in range(k):
            out[perm[s]] = digits[s]
        dst = 0
        for s in range(k):
            dst = dst * d + out[s]
        p[dst, src] = 1.0
    return p


def _transitive(perms: list[tuple[int, ...]], k: int) -> bool:
    reach = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for p in perms:
                for t in (p[s], p.index(s)):
                    if t not in reach:
                        reach.add(t)
                        nxt.append(t)
        frontier = nxt
    return len(reach) == k


def sym_projector(d: int) -> np.ndarray:
    """Orthogonal projector onto Sym^2 inside C^d (x) C^d."""
    return (np.eye(d * d) + permutation_matrix((1, 0), d)) / 2.0


def lemma_check(
    r: CurvatureOperator,
    k: int,
    e_projector: np.ndarray,
    gamma_generators: list[tuple[int, ...]],
    tol: float = 1e-9,
) -> CheckReport:
    """Verify ``P K P = -(k/4) P W P`` on a permutation-fixed subspace of the
    k-th tensor power of the spinor space.

    Preconditions (violations raise :class:`LemmaPreconditionError`): the
    projector must be an orthogonal projector whose image is invariant under
    the spin action and pointwise fixed by every listed permutation, and the
    permutations must generate a transitive group on the k slots.
    """
    from .so_algebra import basis as so_basis

    rho = rep_spin(so_basis(r.n))
    d = rho.dim
    p = np.asarray(e_projector, dtype=complex)
    if p.shape != (d ** k, d ** k):
        raise ValueError(f"projector must be {d ** k} x {d ** k} for n={r.n}, k={k}")
    scale = max(1.0, float(np.linalg.norm(p)))
    if np.linalg.norm(p @ p - p) > 1e-9 * scale or np.linalg.norm(p - p.conj().T) > 1e-9 * scale:
        raise LemmaPreconditionError("E_projector is not an orthogonal projector")
    power = tensor_power_rep(rho, k)
    inv = max(float(np.linalg.norm((np.eye(d ** k) - p) @ m @ p)) for m in power.mats)
    if inv > 1e-9 * max(1.0, max(float(np.linalg.norm(m)) for m in power.mats)):
        raise LemmaPreconditionError("E_projector image is not invariant under the spin action")
    if not gamma_generators:
        raise LemmaPreconditionError("no permutation generators given")
    for perm in gamma_generators:
        if len(perm) != k:
            raise LemmaPreconditionError(f"permutation {perm} does not act on {k} letters")
        pm = permutation_matrix(tuple(perm), d)
        if np.linalg.norm((pm - np.eye(d ** k)) @ p) > 1e-9 * scale:
            raise LemmaPreconditionError(
                f"permutation {perm} does not fix the subspace pointwise"
            )
    if not _transitive([tuple(g) for g in gamma_generators], k):
        raise LemmaPreconditionError("the permutation group is not transitive on the factors")

    kmat = k_matrix(r, power)
    w = twisted_term_k(r, rho, k)
    lhs = p @ kmat @ p
    rhs = -(k / 4.0) * (p @ w @ p)
    knorm = float(np.linalg.norm(kmat))
    residual = float(np.linalg.norm(lhs - rhs))
    tolerance = tol * (1.0 + knorm)
    cols = numerics.orthonormal_columns(p, atol=0.5)  # projector eigenvalues are 0/1
    restricted = cols.conj().T @ kmat @ cols
    spectrum, _ = numerics.eig_hermitian(restricted, hermitian_tol=1e-8)
    return CheckReport(
        check=f"projection-lemma-k{k}",
        inputs={
            "curvature": digest(r.matrix),
            "n": r.n,
            "k": k,
            "generators": [list(g) for g in gamma_generators],
            "subspace_dim": int(cols.shape[1]),
        },
        residual=residual,
        tolerance=tolerance,
        passed=residual <= tolerance,
        spectrum=[float(x) for x in spectrum],
        details={"t": -4.0 / k, "k_norm": knorm},
    )


# ---------------------------------------------------------------------------
# Positivity analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PositivityEntry:
    label: str
    dim: int
    irreducible: bool
    min_eig_neg_k: float
    verdict: str


@dataclass
class PositivityReport:
    curvature_digest: str
    r_spectrum: list
    entries: list[PositivityEntry]
    overall: str
    diagnostic: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "curvature": self.curvature_digest,
            "r_spectrum": [float(x) for x in self.r_spectrum],
            "entries": [
                {
                    "label": e.label,
                    "dim": e.dim,
                    "irreducible": e.irreducible,
                    "min_eig_neg_k": float(e.min_eig_neg_k),
                    "verdict": e.verdict,
                }
                for e in self.entries
            ],
            "overall": self.overall,
            "diagnostic": self.diagnostic,
        }


def standard_family(basis: SoBasis) -> list[Rep]:
    """Default representation family: vector, exterior powers 2 <= p < n/2,
    trace-free Sym^2, spin (half-spins for even n), adjoint."""
    n = basis.n
    fam = [rep_vector(basis)]
    fam.extend(rep_exterior(basis, p) for p in range(2, (n + 1) // 2))
    fam.append(rep_sym0(basis))
    if n % 2 == 0:
        fam.append(rep_half_spin(basis, +1))
        fam.append(rep_half_spin(basis, -1))
    else:
        fam.append(rep_spin(basis))
    fam.append(rep_adjoint(basis))
    return fam


def _entry_for(r: CurvatureOperator, rep: Rep, tol: float) -> PositivityEntry:
    k = k_matrix(r, rep)
    w = np.linalg.eigvalsh((k + k.conj().T) / 2.0)
    min_neg_k = float(np.min(-w))
    if min_neg_k > tol:
        verdict = "positive"
    elif min_neg_k >= -tol:
        verdict = "semi-definite"
    else:
        verdict = "indefinite"
    return PositivityEntry(
        label=rep.label,
        dim=rep.dim,
        irreducible=commutant_dimension(rep, "C") == 1,
        min_eig_neg_k=min_neg_k,
        verdict=verdict,
    )


def positivity_report(
    r: CurvatureOperator,
    reps: list[Rep] | None = None,
    tol: float = 1e-9,
    search_dim_cap: int = 4096,
) -> PositivityReport:
    """Positivity of -K across a family of representations.

    Forward direction: a positive-definite curvature operator must make -K
    positive on every representation without trivial summands.  When the
    operator has a negative direction, a finite counterexample search runs
    over the family and pairwise tensor products up to ``search_dim_cap``
    total dimension; that search is reported as DIAGNOSTIC only, because the
    genuine converse quantifies over all representations.
    """
    from .so_algebra import basis as so_basis
    from .representations import rep_tensor

    if reps is None:
        reps = standard_family(so_basis(r.n))
    if not reps:
        raise ValueError("positivity_report needs a non-empty representation family")
    r_eigs = np.linalg.eigvalsh(r.matrix)
    entries = [_entry_for(r, rep, tol) for rep in reps]
    diagnostic: dict = {}
    if np.min(r_eigs) > tol:
        bad = [e.label for e in entries if e.verdict != "positive"]
        overall = (
            "positive curvature operator: -K positive on the whole family"
            if not bad
            else f"FORWARD-VIOLATION: non-positive entries {bad}"
        )
    elif np.min(r_eigs) >= -tol:
        overall = "semi-definite curvature operator: vanishing predicts parallel sections only"
    else:
        counterexamples = [e.label for e in entries if e.verdict == "indefinite"]
        searched = [e.label for e in entries]
        for ra, rb in itertools.combinations_with_replacement(reps, 2):
            if ra.dim * rb.dim > search_dim_cap:
                continue
            t = rep_tensor(ra, rb)
            e = _entry_for(r, t, tol)
            searched.append(t.label)
            if e.verdict == "indefinite":
                counterexamples.append(t.label)
        diagnostic = {
            "searched": searched,
            "counterexamples": sorted(set(counterexamples)),
            "note": "finite search; the converse direction quantifies over all representations",
        }
        overall = (
            "curvature operator not positive: counterexample representations found (DIAGNOSTIC)"
            if counterexamples
            else "curvature operator not positive: no counterexample within the finite family (DIAGNOSTIC)"
        )
    return PositivityReport(
        curvature_digest=digest(r.matrix),
        r_spectrum=[float(x) for x in r_eigs],
        entries=entries,
        overall=overall,
        diagnostic=diagnostic,
    )


def vanishing_verdict(tk: np.ndarray, tol: float = 1e-9) -> str:
    """Pointwise vanishing conclusion from the curvature term ``t K``:
    strictly positive kills the null space, semi-definite leaves only parallel
    sections, a negative direction gives no conclusion."""
    m = np.asarray(tk, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(m)))
    if np.linalg.norm(m - m.conj().T) > 1e-9 * scale:
        raise ValueError("vanishing_verdict needs a self-adjoint matrix")
    w = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    low = float(np.min(w)) if w.size else 0.0
    if low > tol:
        return "vanishes"
    if low >= -tol:
        return "parallel-only"
    return "no-conclusion"
