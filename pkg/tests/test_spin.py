from functools import reduce

import numpy as np
import pytest

from weitzlab import representations as reps
from weitzlab import so_algebra as so
from weitzlab import spin


class TestGamma:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_clifford_relations(self, n):
        cg = spin.gamma(n)
        assert cg.dim == 2 ** (n // 2)
        assert cg.relation_residual() <= 1e-12

    @pytest.mark.parametrize("n", range(2, 9))
    def test_generators_unitary_and_skew(self, n):
        for g in spin.gamma(n).gammas:
            assert np.allclose(g @ g.conj().T, np.eye(g.shape[0]), atol=1e-12)
            assert np.allclose(g.conj().T, -g, atol=1e-12)

    def test_n2_anticommuting_pair(self):
        cg = spin.gamma(2)
        e1, e2 = cg.gammas
        assert np.allclose(e1 @ e1, -np.eye(2))
        assert np.allclose(e2 @ e2, -np.eye(2))
        assert np.linalg.norm(e1 @ e2 + e2 @ e1) == 0.0

    @pytest.mark.parametrize("n", range(2, 9))
    def test_volume_element_square_sign(self, n):
        # direct multiplication oracle: (e_1...e_n)^2 = (-1)^{n(n+1)/2} I
        cg = spin.gamma(n)
        vol = reduce(lambda a, b: a @ b, cg.gammas)
        sign = (-1) ** (n * (n + 1) // 2)
        assert np.allclose(vol @ vol, sign * np.eye(cg.dim), atol=1e-12)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            spin.gamma(1)

    def test_construction_deterministic(self):
        a = spin.gamma(6)
        b = spin.gamma(6)
        for x, y in zip(a.gammas, b.gammas):
            assert np.array_equal(x, y)


class TestRepSpin:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_generator_squares(self, n):
        r = spin.rep_spin(so.basis(n))
        for m in r.mats:
            assert np.allclose(m @ m, -0.25 * np.eye(r.dim), atol=1e-12)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_rep_invariants(self, n):
        r = spin.rep_spin(so.basis(n))
        assert reps.homomorphism_residual(r) <= 1e-10
        assert reps.skew_adjoint_residual(r) <= 1e-12

    def test_explicit_bracket_n3(self):
        b = so.basis(3)
        r = spin.rep_spin(b)
        i12 = b.pair_index(0, 1)
        i23 = b.pair_index(1, 2)
        i13 = b.pair_index(0, 2)
        got = r.mats[i12] @ r.mats[i23] - r.mats[i23] @ r.mats[i12]
        assert np.linalg.norm(got - r.mats[i13]) <= 1e-12

    @pytest.mark.parametrize("n", range(3, 8))
    def test_casimir(self, n):
        r = spin.rep_spin(so.basis(n))
        cas = reps.casimir(r)
        assert np.allclose(cas, -n * (n - 1) / 8.0 * np.eye(r.dim), atol=1e-12)


class TestHalfSpin:
    @pytest.mark.parametrize("n", (4, 6, 8))
    def test_chirality_splits_evenly(self, n):
        plus, minus = spin.half_spin_columns(n)
        assert plus.shape[1] == minus.shape[1] == 2 ** (n // 2 - 1)

    def test_chirality_squares_to_identity(self):
        for n in (4, 6):
            nu = spin.chirality(spin.gamma(n))
            assert np.allclose(nu @ nu, np.eye(2 ** (n // 2)), atol=1e-12)
            assert np.allclose(nu, nu.conj().T, atol=1e-12)

    def test_half_spin_reps_pass_invariants(self):
        b = so.basis(4)
        for sign in (+1, -1):
            r = spin.rep_half_spin(b, sign)
            assert r.dim == 2
            assert reps.homomorphism_residual(r) <= 1e-10
            assert reps.is_irreducible(r)

    def test_odd_n_has_no_half_spin(self):
        with pytest.raises(ValueError):
            spin.rep_half_spin(so.basis(5), +1)


class TestSpinorPairing:
    def test_schur_one_form_per_half_n4(self):
        sp = spin.spinor_pairing(4)
        assert sp.half_forms["+"] is not None
        assert sp.half_forms["-"] is not None

    def test_n4_half_forms_antisymmetric(self):
        sp = spin.spinor_pairing(4)
        for tag in ("+", "-"):
            _, sign = sp.half_forms[tag]
            assert sign == -1

    def test_n6_halves_pair_crosswise(self):
        sp = spin.spinor_pairing(6)
        assert sp.half_forms["+"] is None
        assert sp.half_forms["-"] is None
        assert len(sp.forms) >= 1

    @pytest.mark.parametrize("n", (3, 4, 5, 6))
    def test_invariance_equation(self, n):
        b = so.basis(n)
        r = spin.rep_spin(b)
        sp = spin.spinor_pairing(n)
        for bform, _ in sp.forms:
            for m in r.mats:
                assert np.linalg.norm(m.T @ bform + bform @ m) <= 1e-12

    @pytest.mark.parametrize("n", (4, 6))
    def test_algebra_lands_in_sym_or_skew_as_form_dictates(self, n):
        # with B^T = s B, every B rho(x_a) satisfies (B rho)^T = -s (B rho)
        r = spin.rep_spin(so.basis(n))
        for bform, s in spin.spinor_pairing(n).forms:
            for m in r.mats:
                prod = bform @ m
                assert np.linalg.norm(prod.T + s * prod) <= 1e-12


class TestCliffordSymbol:
    @pytest.mark.parametrize("n", (2, 4, 6))
    def test_dimensions_and_unitarity(self, n):
        t = spin.clifford_symbol(n)
        d = 2 ** n
        assert t.shape == (d, d)
        assert np.allclose(t.conj().T @ t, np.eye(d), atol=1e-12)
        assert np.linalg.cond(t) < 1.0 + 1e-9

    @pytest.mark.parametrize("n", (2, 4, 6))
    def test_intertwines(self, n):
        b = so.basis(n)
        t = spin.clifford_symbol(n)
        ext = spin.rep_full_exterior(b)
        ss = reps.rep_tensor(spin.rep_spin(b), spin.rep_spin(b))
        for mext, mss in zip(ext.mats, ss.mats):
            assert np.linalg.norm(mss @ t - t @ mext) <= 1e-9

    def test_degree_zero_maps_to_identity_endomorphism(self):
        # undoing the pairing on the degree-0 column recovers a multiple of Id
        n = 4
        t = spin.clifford_symbol(n)
        bmat = spin._invertible_pairing(n)
        m = t[:, 0].reshape(4, 4) @ bmat
        lam = np.trace(m) / 4.0
        assert np.linalg.norm(m - lam * np.eye(4)) <= 1e-12
        assert abs(lam) > 1e-3

    def test_odd_dimension_refused(self):
        with pytest.raises(ValueError, match="half the exterior algebra"):
            spin.clifford_symbol(5)

    def test_full_exterior_dimension(self):
        ext = spin.rep_full_exterior(so.basis(4))
        assert ext.dim == 16
        assert reps.homomorphism_residual(ext) <= 1e-10

    def test_intertwiner_space_nonempty_n4(self):
        b = so.basis(4)
        ext = spin.rep_full_exterior(b)
        ss = reps.rep_tensor(spin.rep_spin(b), spin.rep_spin(b))
        basis = reps.intertwiners(ext, ss)
        assert len(basis) >= 1
