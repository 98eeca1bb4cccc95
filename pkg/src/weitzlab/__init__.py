"""weitzlab: a numerical laboratory for curvature operators on so(n),
orthogonal and spin representations, and the curvature endomorphisms of the
associated Laplacians.

Typical use::

    from weitzlab import so_algebra, representations, spin, curvature, weitzenbock

    b = so_algebra.basis(4)
    R = curvature.random_curvature(4, seed=7)
    K = weitzenbock.k_term(R, spin.rep_spin(b))
"""

from .report import ARTIFACT_VERSION

__version__ = ARTIFACT_VERSION

__all__ = [
    "ARTIFACT_VERSION",
    "casimir_weights",
    "cli",
    "curvature",
    "numerics",
    "report",
    "representations",
    "so_algebra",
    "spin",
    "suites",
    "weitzenbock",
]
