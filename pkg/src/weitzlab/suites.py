"""Named verification suites: each returns a list of CheckReports.

These back the command-line ``check`` command and the acceptance tests.
Every report records the seeds and digests of its inputs, so identical
configurations reproduce identical output.
"""

from __future__ import annotations

import numpy as np

from . import casimir_weights as cw
from . import curvature as curv
from . import numerics
from . import representations as reps
from . import spin as spinmod
from . import weitzenbock as wb
from .report import CheckReport, digest
from .so_algebra import basis as so_basis, simple_algebra

__all__ = [
    "SUITE_NAMES",
    "run_suite",
]


def _lichnerowicz_one(n: int, op, tol: float) -> tuple[float, float]:
    sp = spinmod.rep_spin(so_basis(n))
    k = wb.k_matrix(op, sp)
    s = curv.scalar(op)
    resid = float(np.linalg.norm(-4.0 * k - (s / 4.0) * np.eye(sp.dim)))
    return resid / (1.0 + float(np.linalg.norm(k))), s


def lichnerowicz_suite(n: int, trials: int, seed: int, tol: float = 1e-9) -> list[CheckReport]:
    """-4 K on spinors equals scalar/4 for Bianchi operators; a control batch
    of unprojected symmetric operators must violate the identity."""
    out = []
    for t in range(trials):
        op = curv.random_curvature(n, seed + t)
        resid, s = _lichnerowicz_one(n, op, tol)
        out.append(
            CheckReport(
                check="lichnerowicz",
                inputs={"n": n, "seed": seed + t, "curvature": digest(op.matrix)},
                residual=resid,
                tolerance=tol,
                passed=resid <= tol,
                details={"scalar_curvature": s},
            )
        )
    # negative control: without the first Bianchi identity the identity breaks
    control_n = max(n, 4)  # at n=3 every symmetric operator is Bianchi
    hits = 0
    control_trials = 100
    for t in range(control_trials):
        op = curv.random_symmetric(control_n, seed + 10_000 + t)
        resid, _ = _lichnerowicz_one(control_n, op, tol)
        if resid > 1e-3:
            hits += 1
    out.append(
        CheckReport(
            check="lichnerowicz-negative-control",
            inputs={"n": control_n, "seed": seed + 10_000, "trials": control_trials},
            residual=float(control_trials - hits),
            tolerance=float(control_trials - int(0.95 * control_trials)),
            passed=hits >= int(0.95 * control_trials),
            details={"violations_above_1e-3": hits},
        )
    )
    return out


def bochner_suite(n: int, trials: int, seed: int, tol: float = 1e-10) -> list[CheckReport]:
    """-2 K on the vector representation equals the Ricci endomorphism."""
    v = reps.rep_vector(so_basis(n))
    out = []
    for t in range(trials):
        op = curv.random_curvature(n, seed + t)
        k = wb.k_matrix(op, v)
        resid = float(np.linalg.norm(-2.0 * k - curv.ricci(op)))
        out.append(
            CheckReport(
                check="bochner",
                inputs={"n": n, "seed": seed + t, "curvature": digest(op.matrix)},
                residual=resid,
                tolerance=tol,
                passed=resid <= tol,
            )
        )
    return out


def sphere_casimir_suite(n: int, tol: float = 1e-12, hw_tol: float = 1e-9) -> list[CheckReport]:
    """K of the identity curvature operator is the Casimir, entrywise, for the
    standard family; Casimir scalars match the highest-weight formula."""
    b = so_basis(n)
    sph = curv.sphere(n)
    out = []
    for r in wb.standard_family(b):
        k = wb.k_matrix(sph, r)
        resid = float(np.linalg.norm(k - reps.casimir(r)))
        out.append(
            CheckReport(
                check="sphere-casimir",
                inputs={"n": n, "rep": r.label},
                residual=resid,
                tolerance=tol,
                passed=resid <= tol,
            )
        )
    if n >= 3:
        from fractions import Fraction

        m = n // 2
        e1 = tuple(Fraction(int(i == 0)) for i in range(m))
        hw2 = e1 if n == 3 else tuple(Fraction(int(i <= 1)) for i in range(m))
        cases = [
            ("vector", reps.rep_vector(b), e1),
            ("exterior(2)", reps.rep_exterior(b, 2), hw2),
            ("spin", spinmod.rep_spin(b), cw.spin_highest_weight(n)),
        ]
        for label, r, w in cases:
            cas = reps.casimir(r)
            matrix_value = float(np.real(np.trace(cas))) / r.dim
            formula = -float(cw.so_casimir_scalar(n, w))
            resid = abs(matrix_value - formula)
            out.append(
                CheckReport(
                    check="casimir-highest-weight",
                    inputs={"n": n, "rep": label, "weight": [str(x) for x in w]},
                    residual=resid,
                    tolerance=hw_tol,
                    passed=resid <= hw_tol,
                    details={
                        "matrix_casimir": matrix_value,
                        "weight_formula": formula,
                        "normalization_factor": 1.0,
                        "killing_conversion": str(cw.so_weight_killing_factor(n)),
                    },
                )
            )
    return out


def _lemma_k2_config():
    return 3, 2, wb.sym_projector(2), [(1, 0)]


def _lemma_k4_config():
    t = spinmod.clifford_symbol(4)
    q2 = t[:, 5:11]  # Lambda^2 block of the symbol columns (degrees 0,1 first)
    cols = []
    for a in range(6):
        for b in range(a, 6):
            v = np.kron(q2[:, a], q2[:, b]) + np.kron(q2[:, b], q2[:, a])
            cols.append(v)
    e = numerics.orthonormal_columns(np.array(cols).T)
    return 4, 4, e @ e.conj().T, [(1, 0, 3, 2), (2, 3, 0, 1)]


def lemma_suite(kind: str, trials: int, seed: int, tol: float | None = None) -> list[CheckReport]:
    """Projection lemma on permutation-fixed subspaces of spinor tensor powers:
    k2 runs on Sym^2 of the n=3 spinors, k4 on the curvature-tensor space
    (symmetric square of the 2-forms) inside the 4th power of n=4 spinors."""
    if kind == "k2":
        n, k, proj, gens = _lemma_k2_config()
        tol = 1e-9 if tol is None else tol
    elif kind == "k4":
        n, k, proj, gens = _lemma_k4_config()
        tol = 1e-8 if tol is None else tol
    else:
        raise ValueError(f"unknown lemma configuration {kind!r}")
    out = []
    for t in range(trials):
        op = curv.random_curvature(n, seed + t)
        rep = wb.lemma_check(op, k, proj, gens, tol=tol)
        rep.inputs["seed"] = seed + t
        out.append(rep)
    return out


def strange_suite(labels: list[str]) -> list[CheckReport]:
    return [cw.strange_formula_check(simple_algebra(label)) for label in labels]


def group_model_suite(labels: list[str], tol: float = 1e-10) -> list[CheckReport]:
    """Bi-invariant metrics on compact groups: Ricci is a quarter of the
    metric, scalar curvature is dim/4, the spinor curvature term is dim/16,
    and the ad-representation data is internally consistent."""
    out = []
    for label in labels:
        g = simple_algebra(label)
        op = curv.bi_invariant_group(g)
        ric = curv.ricci(op)
        resid = float(np.linalg.norm(ric - np.eye(g.dim) / 4.0))
        out.append(
            CheckReport(
                check="group-ricci-quarter",
                inputs={"algebra": g.label},
                residual=resid,
                tolerance=tol,
                passed=resid <= tol,
                details={"scalar": curv.scalar(op), "dim_over_4": g.dim / 4.0},
            )
        )
        s_resid = abs(curv.scalar(op) - g.dim / 4.0)
        out.append(
            CheckReport(
                check="group-scalar-dim-over-4",
                inputs={"algebra": g.label},
                residual=s_resid,
                tolerance=tol,
                passed=s_resid <= tol,
            )
        )
        cas_resid = float(np.linalg.norm(sum(a @ a for a in g.ad) + np.eye(g.dim)))
        out.append(
            CheckReport(
                check="group-ad-casimir",
                inputs={"algebra": g.label},
                residual=cas_resid,
                tolerance=1e-10,
                passed=cas_resid <= 1e-10,
            )
        )
        # spinor curvature term -(1/2) sum rho(ad y_c)^2 = (dim/16) Id,
        # equivalently -4K = s/4 for the group curvature operator
        sp = spinmod.rep_spin(so_basis(g.dim))
        k = wb.k_matrix(op, sp)
        term_resid = float(np.linalg.norm(-4.0 * k - (g.dim / 16.0) * np.eye(sp.dim)))
        direct = -0.5 * sum(
            np.linalg.matrix_power(
                np.tensordot(
                    np.array([float(x) for x in coeff]), sp.stacked(), axes=(0, 0)
                ),
                2,
            )
            for coeff in _ad_coefficients(g)
        )
        direct_resid = float(np.linalg.norm(direct - (g.dim / 16.0) * np.eye(sp.dim)))
        out.append(
            CheckReport(
                check="group-spin-curvature-term",
                inputs={"algebra": g.label},
                residual=direct_resid,
                tolerance=1e-9,
                passed=direct_resid <= 1e-9,
                details={"via_k_term": term_resid},
            )
        )
    return out


def _ad_coefficients(g) -> list[list[float]]:
    """Coefficients of each ad(y_c) over the orthonormal so(dim) basis."""
    from .so_algebra import expand

    so = so_basis(g.dim)
    return [list(expand(so, np.real(a))) for a in g.ad]


def blocks4_suite(trials: int, seed: int, tol: float = 1e-9) -> list[CheckReport]:
    """Four-dimensional block structure: the mixed block vanishes exactly for
    Einstein operators, and on non-Einstein samples its size is a fixed
    multiple of the trace-free Ricci norm."""
    out = []
    ratios = []
    for t in range(trials):
        op = curv.random_curvature(4, seed + t)
        blocks = curv.four_dim_blocks(op)
        ric = curv.ricci(op)
        ric0 = ric - np.trace(ric) / 4.0 * np.eye(4)
        mixed_small = float(np.linalg.norm(blocks.mixed)) <= tol
        ric0_small = float(np.linalg.norm(ric0)) <= tol
        agree = mixed_small == ric0_small
        if not ric0_small:
            ratios.append(float(np.linalg.norm(blocks.mixed)) / float(np.linalg.norm(ric0)))
        reassembly = float(np.linalg.norm(blocks.reassemble() - op.matrix))
        out.append(
            CheckReport(
                check="blocks4-mixed-iff-ric0",
                inputs={"seed": seed + t, "curvature": digest(op.matrix)},
                residual=reassembly,
                tolerance=1e-12,
                passed=agree and reassembly <= 1e-12,
                details={
                    "mixed_norm": float(np.linalg.norm(blocks.mixed)),
                    "ric0_norm": float(np.linalg.norm(ric0)),
                },
            )
        )
    # Einstein-projected samples must kill the mixed block
    for t in range(min(trials, 20)):
        op = curv.einstein_project(curv.random_curvature(4, seed + 50_000 + t))
        blocks = curv.four_dim_blocks(op)
        resid = float(np.linalg.norm(blocks.mixed))
        out.append(
            CheckReport(
                check="blocks4-einstein-mixed-vanishes",
                inputs={"seed": seed + 50_000 + t},
                residual=resid,
                tolerance=tol,
                passed=resid <= tol,
            )
        )
    if ratios:
        spread = (max(ratios) - min(ratios)) / max(ratios)
        out.append(
            CheckReport(
                check="blocks4-ratio-constant",
                inputs={"seed": seed, "samples": len(ratios)},
                residual=float(spread),
                tolerance=1e-6,
                passed=spread <= 1e-6,
                details={"ratio": float(np.mean(ratios))},
            )
        )
    return out


def positive_definite_curvature(n: int, seed: int) -> curv.CurvatureOperator:
    """Seeded positive-definite Bianchi operator: identity plus a controlled
    Bianchi perturbation."""
    bump = curv.random_curvature(n, seed)
    norm = float(np.linalg.norm(bump.matrix))
    npairs = n * (n - 1) // 2
    mat = np.eye(npairs) + 0.3 * bump.matrix / max(norm, 1e-12)
    return curv.CurvatureOperator(n=n, matrix=mat, bianchi_flag=True)


def positivity_suite(
    n: int,
    trials: int,
    seed: int,
    tol: float = 1e-9,
    operator: curv.CurvatureOperator | None = None,
) -> list[CheckReport]:
    """Forward positivity: positive curvature operators force -K positive on
    every non-trivial entry of the standard family.  With an explicit operator
    the full report (including the diagnostic converse search) is embedded."""
    b = so_basis(n)
    family = wb.standard_family(b)
    out = []
    if operator is not None:
        rep = wb.positivity_report(operator, reps=family, tol=tol)
        passed = "FORWARD-VIOLATION" not in rep.overall
        out.append(
            CheckReport(
                check="positivity-report",
                inputs={"n": n, "curvature": rep.curvature_digest},
                residual=0.0 if passed else 1.0,
                tolerance=0.5,
                passed=passed,
                details=rep.to_dict(),
                diagnostic="DIAGNOSTIC" in rep.overall,
            )
        )
        return out
    worst = np.inf
    for t in range(trials):
        op = positive_definite_curvature(n, seed + t)
        for r in family:
            k = wb.k_matrix(op, r)
            w = np.linalg.eigvalsh((k + k.conj().T) / 2.0)
            worst = min(worst, float(np.min(-w)))
    out.append(
        CheckReport(
            check="positivity-forward",
            inputs={"n": n, "seed": seed, "trials": trials, "family": [r.label for r in family]},
            residual=max(0.0, -worst + tol),
            tolerance=tol,
            passed=worst > 0.0,
            details={"worst_min_eig_neg_k": worst},
        )
    )
    return out


SUITE_NAMES = (
    "lichnerowicz",
    "bochner",
    "sphere-casimir",
    "lemma:k2",
    "lemma:k4",
    "strange",
    "group-model",
    "blocks4",
    "positivity",
)

_DEFAULT_ALGEBRAS = ["A1", "A2", "B2", "C3", "D4", "G2"]


def run_suite(
    name: str,
    n: int = 4,
    trials: int = 20,
    seed: int = 1,
    algebras: list[str] | None = None,
    tolerance: float | None = None,
    operator: curv.CurvatureOperator | None = None,
) -> list[CheckReport]:
    """Dispatch a named suite with shared configuration."""
    algebras = algebras or _DEFAULT_ALGEBRAS
    if name == "lichnerowicz":
        return lichnerowicz_suite(n, trials, seed, tol=tolerance or 1e-9)
    if name == "bochner":
        return bochner_suite(n, trials, seed, tol=tolerance or 1e-10)
    if name == "sphere-casimir":
        return sphere_casimir_suite(n, tol=tolerance or 1e-12)
    if name == "lemma:k2":
        return lemma_suite("k2", trials, seed, tol=tolerance)
    if name == "lemma:k4":
        return lemma_suite("k4", trials, seed, tol=tolerance)
    if name == "strange":
        return strange_suite(algebras)
    if name == "group-model":
        return group_model_suite(algebras)
    if name == "blocks4":
        return blocks4_suite(trials, seed, tol=tolerance or 1e-9)
    if name == "positivity":
        return positivity_suite(n, trials, seed, tol=tolerance or 1e-9, operator=operator)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
