import numpy as np
import pytest

from weitzlab import numerics


class TestEigHermitian:
    def test_identity(self):
        w, v = numerics.eig_hermitian(np.eye(3))
        assert np.allclose(w, [1.0, 1.0, 1.0])
        assert np.allclose(v.conj().T @ v, np.eye(3))

    def test_already_diagonal(self):
        w, _ = numerics.eig_hermitian(np.diag([-2.0, 0.0, 5.0]))
        assert np.allclose(w, [-2.0, 0.0, 5.0])

    def test_two_by_two_offdiagonal(self):
        # characteristic polynomial of [[0,1],[1,0]] is t^2 - 1 by hand
        w, v = numerics.eig_hermitian(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(w, [-1.0, 1.0])
        a = np.array([[0.0, 1.0], [1.0, 0.0]])
        assert np.linalg.norm(a @ v - v @ np.diag(w)) < 1e-12

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            numerics.eig_hermitian(np.zeros((2, 3)))

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            numerics.eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_reconstruction_on_random_hermitian(self):
        # sizes up to 256, 1000 draws, residual <= 1e-10 * ||A||
        rng = np.random.default_rng(20240817)
        sizes = rng.integers(1, 257, size=1000)
        for size in sizes:
            g = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
            a = (g + g.conj().T) / 2.0
            w, v = numerics.eig_hermitian(a)
            scale = np.linalg.norm(a)
            assert np.linalg.norm(a @ v - v @ np.diag(w)) <= 1e-10 * max(scale, 1.0)
            assert np.linalg.norm(v.conj().T @ v - np.eye(size)) <= 1e-10 * size

    def test_eigenvalues_ascending(self):
        rng = np.random.default_rng(3)
        g = rng.standard_normal((17, 17))
        w, _ = numerics.eig_hermitian((g + g.T) / 2)
        assert np.all(np.diff(w) >= 0)

    def test_phase_fixing_is_deterministic(self):
        rng = np.random.default_rng(4)
        g = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
        a = (g + g.conj().T) / 2
        _, v1 = numerics.eig_hermitian(a)
        _, v2 = numerics.eig_hermitian(a.copy())
        assert np.array_equal(v1, v2)


class TestNullspace:
    def test_zero_matrix(self):
        basis = numerics.nullspace(np.zeros((3, 3)))
        assert basis.shape == (3, 3)
        assert np.allclose(basis.conj().T @ basis, np.eye(3))

    def test_identity_has_empty_nullspace(self):
        assert numerics.nullspace(np.eye(3)).shape == (3, 0)

    def test_rank_one(self):
        basis = numerics.nullspace(np.array([[1.0, 1.0], [1.0, 1.0]]))
        assert basis.shape == (2, 1)
        expected = np.array([1.0, -1.0]) / np.sqrt(2.0)
        assert min(np.linalg.norm(basis[:, 0] - expected), np.linalg.norm(basis[:, 0] + expected)) < 1e-12

    def test_vectors_annihilated(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((6, 10))
        basis = numerics.nullspace(a)
        assert basis.shape[1] == 4
        assert np.linalg.norm(a @ basis) <= 1e-9 * np.linalg.norm(a)

    def test_dimension_invariant_under_orthogonal_change(self):
        rng = np.random.default_rng(11)
        a = rng.standard_normal((8, 8))
        a[:, -2] = a[:, 0] + a[:, 1]
        a[:, -1] = a[:, 2] - a[:, 3]
        q, _ = np.linalg.qr(rng.standard_normal((8, 8)))
        d1 = numerics.nullspace(a).shape[1]
        d2 = numerics.nullspace(a @ q).shape[1]
        d3 = numerics.nullspace(q @ a).shape[1]
        assert d1 == d2 == d3 == 2

    def test_positive_tolerance_required(self):
        with pytest.raises(ValueError):
            numerics.nullspace(np.eye(2), tol=0.0)


class TestKron:
    def test_identities(self):
        assert np.array_equal(numerics.kron(np.eye(2), np.eye(3)), np.eye(6))

    def test_leibniz_on_simple_tensors(self):
        rng = np.random.default_rng(2)
        a = rng.standard_normal((3, 3))
        b = rng.standard_normal((4, 4))
        u = rng.standard_normal(3)
        v = rng.standard_normal(4)
        lhs = (numerics.kron(a, np.eye(4)) + numerics.kron(np.eye(3), b)) @ np.kron(u, v)
        rhs = np.kron(a @ u, v) + np.kron(u, b @ v)
        assert np.allclose(lhs, rhs, atol=1e-12)

    def test_rotation_block_squares_to_minus_identity(self):
        # direct 4x4 multiplication oracle
        j = np.array([[0.0, 1.0], [-1.0, 0.0]])
        m = numerics.kron(j, np.eye(2))
        assert np.allclose(m @ m, -np.eye(4))

    def test_associative_exact_on_representable_entries(self):
        rng = np.random.default_rng(9)
        a, b, c = (rng.integers(-8, 9, size=(2, 2)).astype(float) for _ in range(3))
        left = numerics.kron(numerics.kron(a, b), c)
        right = numerics.kron(a, numerics.kron(b, c))
        assert np.array_equal(left, right)

    def test_associative_on_floats(self):
        rng = np.random.default_rng(9)
        a, b, c = (rng.standard_normal((2, 2)) for _ in range(3))
        left = numerics.kron(numerics.kron(a, b), c)
        right = numerics.kron(a, numerics.kron(b, c))
        assert np.linalg.norm(left - right) <= 1e-15 * np.linalg.norm(right)

    def test_mixed_product(self):
        rng = np.random.default_rng(10)
        a, c = rng.standard_normal((3, 3)), rng.standard_normal((3, 3))
        b, d = rng.standard_normal((2, 2)), rng.standard_normal((2, 2))
        lhs = numerics.kron(a, b) @ numerics.kron(c, d)
        rhs = numerics.kron(a @ c, b @ d)
        assert np.linalg.norm(lhs - rhs) <= 1e-12 * max(1.0, np.linalg.norm(rhs))


class TestProjectors:
    def test_projector_idempotent(self):
        rng = np.random.default_rng(1)
        q = numerics.orthonormal_columns(rng.standard_normal((7, 3)))
        p = numerics.projector(q)
        assert np.allclose(p @ p, p, atol=1e-12)
        assert np.allclose(p, p.conj().T, atol=1e-12)

    def test_orthonormal_columns_of_dust_is_empty(self):
        dust = 1e-17 * np.ones((4, 2))
        assert numerics.orthonormal_columns(dust, atol=1e-10).shape[1] == 0
