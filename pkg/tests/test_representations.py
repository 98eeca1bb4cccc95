import numpy as np
import pytest

from weitzlab import representations as reps
from weitzlab import so_algebra as so
from weitzlab.spin import rep_spin


@pytest.fixture(scope="module")
def b3():
    return so.basis(3)


@pytest.fixture(scope="module")
def b4():
    return so.basis(4)


class TestConstructors:
    def test_trivial(self, b3):
        r = reps.rep_trivial(b3)
        assert r.dim == 1
        assert all(np.linalg.norm(m) == 0.0 for m in r.mats)

    def test_vector_is_defining(self, b3):
        r = reps.rep_vector(b3)
        for m, x in zip(r.mats, b3.elements):
            assert np.array_equal(np.real(m), x)

    def test_exterior2_n4(self, b4):
        r = reps.rep_exterior(b4, 2)
        assert r.dim == 6
        assert reps.homomorphism_residual(r) <= 1e-10
        assert reps.skew_adjoint_residual(r) <= 1e-12

    def test_exterior_range(self, b4):
        with pytest.raises(ValueError):
            reps.rep_exterior(b4, 5)
        assert reps.rep_exterior(b4, 0).dim == 1
        assert reps.rep_exterior(b4, 4).dim == 1

    def test_exterior_top_is_trivial_for_so(self, b4):
        # so(n) acts trivially on the volume form
        r = reps.rep_exterior(b4, 4)
        assert all(np.linalg.norm(m) <= 1e-14 for m in r.mats)

    def test_sym_dims(self, b3):
        assert reps.rep_sym(b3, 2).dim == 6
        assert reps.rep_sym(b3, 3).dim == 10
        with pytest.raises(ValueError):
            reps.rep_sym(b3, 0)

    def test_sym0_dimension_and_invariants(self, b4):
        r = reps.rep_sym0(b4)
        assert r.dim == 4 * 5 // 2 - 1
        assert reps.homomorphism_residual(r) <= 1e-10
        assert reps.skew_adjoint_residual(r) <= 1e-12

    @pytest.mark.parametrize("n", range(2, 9))
    def test_homomorphism_residuals_across_n(self, n):
        b = so.basis(n)
        for r in (reps.rep_vector(b), reps.rep_adjoint(b), reps.rep_exterior(b, 2)):
            assert reps.homomorphism_residual(r) <= 1e-10

    def test_dispatcher(self, b3):
        assert reps.rep_standard(b3, "vector").label == "vector"
        assert reps.rep_standard(b3, "exterior", 2).dim == 3
        with pytest.raises(ValueError):
            reps.rep_standard(b3, "exterior")
        with pytest.raises(ValueError):
            reps.rep_standard(b3, "nonsense")


class TestTensor:
    def test_trivial_factor_is_identity(self, b3):
        r = reps.rep_vector(b3)
        t = reps.rep_tensor(reps.rep_trivial(b3), r)
        for mt, mr in zip(t.mats, r.mats):
            assert np.allclose(mt, mr)

    def test_vector_squared_casimir_partition(self, b3):
        t = reps.rep_tensor(reps.rep_vector(b3), reps.rep_vector(b3))
        assert t.dim == 9
        got = np.sort(np.linalg.eigvalsh(reps.casimir(t)))
        want = np.sort(
            np.concatenate(
                [
                    np.linalg.eigvalsh(reps.casimir(reps.rep_exterior(b3, 2))),
                    np.linalg.eigvalsh(reps.casimir(reps.rep_sym0(b3))),
                    np.linalg.eigvalsh(reps.casimir(reps.rep_trivial(b3))),
                ]
            )
        )
        assert np.allclose(got, want, atol=1e-9)

    def test_basis_mismatch(self, b3, b4):
        with pytest.raises(ValueError):
            reps.rep_tensor(reps.rep_vector(b3), reps.rep_vector(b4))

    def test_spin_squared_matches_exterior_dimension(self, b4):
        s = rep_spin(b4)
        t = reps.rep_tensor(s, s)
        assert t.dim == 16 == 2 ** 4


class TestRestrict:
    def test_restrict_to_full_so_is_identity(self, b4):
        r = reps.rep_vector(b4)
        full = so.Subalgebra(ambient=b4, elements=b4.elements, label="so(4)")
        got = reps.rep_restrict(r, full)
        for ma, mb in zip(got.mats, r.mats):
            assert np.allclose(ma, mb, atol=1e-12)

    def test_vector_so4_restricted_to_u2(self, b4):
        h = so.u_subalgebra(2)
        r = reps.rep_restrict(reps.rep_vector(b4), h)
        assert r.dim == 4
        assert reps.homomorphism_residual(r) <= 1e-10

    def test_ambient_mismatch(self, b3):
        h = so.u_subalgebra(2)
        with pytest.raises(ValueError):
            reps.rep_restrict(reps.rep_vector(b3), h)


class TestIntertwiners:
    def test_schur_for_irreducible(self, b3):
        r = reps.rep_vector(b3)
        basis = reps.intertwiners(r, r)
        assert len(basis) == 1

    def test_basis_frobenius_orthonormal(self, b4):
        basis = reps.intertwiners(reps.rep_exterior(b4, 2), reps.rep_exterior(b4, 2))
        assert len(basis) == 2
        for i, s in enumerate(basis):
            for j, t in enumerate(basis):
                gram = np.sum(np.conj(s) * t)
                assert abs(gram - (1.0 if i == j else 0.0)) <= 1e-10

    def test_intertwiners_intertwine(self, b3):
        r1 = reps.rep_exterior(b3, 2)  # isomorphic to the vector rep
        r2 = reps.rep_vector(b3)
        basis = reps.intertwiners(r1, r2)
        assert len(basis) == 1
        t = basis[0]
        for m1, m2 in zip(r1.mats, r2.mats):
            assert np.linalg.norm(m2 @ t - t @ m1) <= 1e-10

    def test_irreducibility_examples(self, b3, b4):
        assert reps.is_irreducible(reps.rep_trivial(b3))
        assert reps.is_irreducible(reps.rep_vector(b3))
        assert reps.is_irreducible(reps.rep_vector(b4))
        assert not reps.is_irreducible(reps.rep_exterior(b4, 2))
        assert reps.commutant_dimension(reps.rep_exterior(b4, 2)) == 2

    def test_real_commutant_flag(self, b3):
        # the complex 2-dim rep of so(2) is real-irreducible but splits over C
        b2 = so.basis(2)
        r = reps.rep_vector(b2)
        assert reps.commutant_dimension(r, "C") == 2
        assert reps.commutant_dimension(r, "R") == 2  # {aI + bJ}
        assert reps.commutant_dimension(reps.rep_vector(b3), "R") == 1


class TestInvariantForms:
    def test_vector_standard_form(self, b3):
        forms = reps.invariant_bilinear_forms(reps.rep_vector(b3))
        assert len(forms) == 1
        b, sign = forms[0]
        assert sign == 1
        assert np.allclose(b, b[0, 0] * np.eye(3), atol=1e-12)

    def test_defining_equation(self, b4):
        r = reps.rep_exterior(b4, 2)
        for b, _ in reps.invariant_bilinear_forms(r):
            for m in r.mats:
                assert np.linalg.norm(m.T @ b + b @ m) <= 1e-12


class TestCasimir:
    def test_trivial_zero(self, b3):
        assert np.linalg.norm(reps.casimir(reps.rep_trivial(b3))) == 0.0

    @pytest.mark.parametrize("n", range(2, 8))
    def test_vector_value(self, n):
        b = so.basis(n)
        cas = reps.casimir(reps.rep_vector(b))
        assert np.allclose(cas, -(n - 1) * np.eye(n), atol=1e-12)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_spin_value(self, n):
        b = so.basis(n)
        r = rep_spin(b)
        assert np.allclose(reps.casimir(r), -n * (n - 1) / 8.0 * np.eye(r.dim), atol=1e-12)

    def test_commutes_with_generators(self, b4):
        r = reps.rep_exterior(b4, 2)
        cas = reps.casimir(r)
        scale = max(1.0, np.linalg.norm(cas))
        for m in r.mats:
            assert np.linalg.norm(cas @ m - m @ cas) <= 1e-10 * scale

    def test_scalar_on_irreducible(self, b3):
        r = reps.rep_sym0(b3)
        cas = reps.casimir(r)
        lam = np.trace(cas) / r.dim
        assert np.linalg.norm(cas - lam * np.eye(r.dim)) <= 1e-9 * max(1.0, np.linalg.norm(cas))


class TestIsotypic:
    def test_trivial_single_piece(self, b3):
        pieces = reps.isotypic_decompose(reps.rep_trivial(b3))
        assert len(pieces) == 1
        assert pieces[0].dim == 1

    def test_exterior2_so4_selfdual_split(self, b4):
        pieces = reps.isotypic_decompose(reps.rep_exterior(b4, 2))
        assert sorted(p.dim for p in pieces) == [3, 3]
        assert all(abs(p.casimir_eigenvalue + 4.0) < 1e-9 for p in pieces)

    def test_exterior2_u2_pieces_and_kahler_form(self, b4):
        h = so.u_subalgebra(2)
        r = reps.rep_restrict(reps.rep_exterior(b4, 2), h)
        pieces = reps.isotypic_decompose(r)
        dims = sorted(p.dim for p in pieces)
        assert dims == [1, 1, 1, 3]
        assert sum(p.dim for p in pieces) == 6
        trivial = [p for p in pieces if abs(p.casimir_eigenvalue) < 1e-9]
        assert len(trivial) == 1 and trivial[0].dim == 1
        # the Kahler 2-form (coefficient vector of the complex structure J
        # over the pair basis) spans that trivial piece
        jmat = np.zeros((4, 4))
        for k in range(2):
            jmat[2 * k + 1, 2 * k] = 1.0
            jmat[2 * k, 2 * k + 1] = -1.0
        omega = so.expand(b4, jmat)
        omega = omega / np.linalg.norm(omega)
        assert np.linalg.norm(trivial[0].projector @ omega - omega) <= 1e-9

    def test_projector_properties(self, b4):
        h = so.u_subalgebra(2)
        r = reps.rep_restrict(reps.rep_exterior(b4, 2), h)
        pieces = reps.isotypic_decompose(r)
        total = sum(p.projector for p in pieces)
        assert np.linalg.norm(total - np.eye(r.dim)) <= 1e-10
        for p in pieces:
            assert np.linalg.norm(p.projector @ p.projector - p.projector) <= 1e-10
            assert np.linalg.norm(p.projector - p.projector.conj().T) <= 1e-10
            for q in pieces:
                if p is not q:
                    assert np.linalg.norm(p.projector @ q.projector) <= 1e-10
            for m in r.mats:
                off = (np.eye(r.dim) - p.projector) @ m @ p.projector
                assert np.linalg.norm(off) <= 1e-9

    def test_exterior2_so6_under_u3(self):
        # the Kahler-type split of 2-forms in six dimensions: the invariant
        # form, the two (2,0)-type pieces and the primitive (1,1) part
        b6 = so.basis(6)
        h = so.u_subalgebra(3)
        r = reps.rep_restrict(reps.rep_exterior(b6, 2), h)
        pieces = reps.isotypic_decompose(r)
        assert sorted(p.dim for p in pieces) == [1, 3, 3, 8]
        trivial = [p for p in pieces if abs(p.casimir_eigenvalue) < 1e-9]
        assert len(trivial) == 1 and trivial[0].dim == 1

    def test_multiplicity_detection(self, b4):
        r = reps.rep_vector(b4)
        mats = tuple(
            np.block([[m, np.zeros((4, 4))], [np.zeros((4, 4)), m]]) for m in r.mats
        )
        doubled = reps.Rep(basis=b4, dim=8, mats=mats, label="vector+vector")
        pieces = reps.isotypic_decompose(doubled)
        assert len(pieces) == 1
        assert pieces[0].dim == 8
        assert pieces[0].multiplicity == 2

    def test_seed_recorded_determinism(self, b4):
        r = reps.rep_exterior(b4, 2)
        p1 = reps.isotypic_decompose(r, seed=5)
        p2 = reps.isotypic_decompose(r, seed=5)
        for a, b in zip(p1, p2):
            assert np.array_equal(a.projector, b.projector)
