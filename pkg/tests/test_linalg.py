import numpy as np
import pytest
from hypothesis import given, strategies as st

import framekit as fk
from framekit.errors import (
    BadIndexSet,
    DimensionMismatch,
    NonFiniteInput,
    NotHermitian,
    NotPositiveDefinite,
    SingularMatrix,
)
from framekit.linalg import as_matrix, max_abs

from conftest import cofactor_det


class TestSolveLinear:
    def test_identity_returns_rhs(self, rng):
        b = rng.standard_normal((3, 2))
        x = fk.solve_linear(np.eye(3), b)
        np.testing.assert_allclose(x, b, atol=1e-14)

    def test_two_by_two_diagonal_correction_system(self):
        # the system matrix of a tight example: diag(-2/3) against (1/3, -1/3)
        a = np.diag([-2 / 3, -2 / 3])
        b = np.array([1 / 3, -1 / 3])
        x = fk.solve_linear(a, b)
        np.testing.assert_allclose(x, [-0.5, 0.5], atol=1e-14)

    def test_construct_then_solve(self, rng):
        a = rng.standard_normal((5, 5)) + 5 * np.eye(5)
        x0 = rng.standard_normal((5, 3))
        x = fk.solve_linear(a, a @ x0)
        assert max_abs(x - x0) < 1e-9

    def test_residual_contract(self, rng):
        for _ in range(20):
            k = int(rng.integers(1, 7))
            a = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
            b = rng.standard_normal((k, 2)) + 1j * rng.standard_normal((k, 2))
            try:
                x = fk.solve_linear(a, b)
            except SingularMatrix:
                continue
            assert max_abs(a @ x - b) <= 1e-9 * (1.0 + max_abs(b))

    def test_singular_raises(self):
        a = np.array([[1.0, 2.0], [2.0, 4.0]])
        with pytest.raises(SingularMatrix):
            fk.solve_linear(a, np.eye(2))

    def test_zero_matrix_raises(self):
        with pytest.raises(SingularMatrix):
            fk.solve_linear(np.zeros((2, 2)), np.ones(2))

    def test_shape_checks(self):
        with pytest.raises(DimensionMismatch):
            fk.solve_linear(np.ones((2, 3)), np.ones(2))
        with pytest.raises(DimensionMismatch):
            fk.solve_linear(np.eye(2), np.ones(3))

    def test_rejects_nan(self):
        a = np.eye(2)
        a = a.copy()
        a[0, 0] = np.nan
        with pytest.raises(NonFiniteInput):
            fk.solve_linear(a, np.ones(2))

    @given(st.integers(1, 5), st.integers(0, 10**6))
    def test_diagonally_dominant_residual(self, k, seed):
        r = np.random.default_rng(seed)
        a = r.standard_normal((k, k)) + (3 * k) * np.eye(k)
        b = r.standard_normal(k)
        x = fk.solve_linear(a, b)
        assert max_abs(a @ x - b) <= 1e-9 * (1.0 + max_abs(b))


class TestHermitianInvSqrt:
    def test_scalar_multiple_of_identity(self):
        s = fk.hermitian_inv_sqrt(4.0 * np.eye(2))
        np.testing.assert_allclose(s, 0.5 * np.eye(2), atol=1e-14)

    def test_tight_frame_operator(self):
        s = fk.hermitian_inv_sqrt(0.75 * np.eye(2))
        np.testing.assert_allclose(s, (2 / np.sqrt(3)) * np.eye(2), atol=1e-14)

    def test_rank_one_bump_closed_form(self):
        # (I + theta_{x,x})^{-1/2} for x = (1,1,1) is I - (1/6) * ones
        x = np.ones(3)
        a = np.eye(3) + np.outer(x, x)
        expected = np.eye(3) - np.ones((3, 3)) / 6.0
        s = fk.hermitian_inv_sqrt(a)
        np.testing.assert_allclose(s, expected, atol=1e-12)
        np.testing.assert_allclose(s @ a @ s, np.eye(3), atol=1e-12)

    def test_contract_properties(self, rng):
        for _ in range(10):
            n = int(rng.integers(1, 6))
            g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            a = g @ g.conj().T + 0.5 * np.eye(n)
            s = fk.hermitian_inv_sqrt(a)
            assert max_abs(s @ a @ s - np.eye(n)) <= 1e-9
            assert max_abs(s - s.conj().T) <= 1e-9
            assert max_abs(s @ a - a @ s) <= 1e-9

    def test_not_positive_definite(self):
        with pytest.raises(NotPositiveDefinite):
            fk.hermitian_inv_sqrt(np.diag([1.0, -1.0]))

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            fk.hermitian_inv_sqrt(np.array([[1.0, 1.0], [0.0, 1.0]]))


class TestMinorDet:
    def test_single_entry(self, rng):
        a = rng.standard_normal((3, 4))
        assert fk.minor_det(a, [1], [1]) == pytest.approx(a[0, 0])

    def test_pascal_lower_left_block(self):
        p = fk.pascal(6)
        assert fk.minor_det(p.matrix, [4, 5], [1, 2]) == pytest.approx(1.0)

    def test_two_by_two_minors_against_cofactor_oracle(self, rng):
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        for rows in ([1, 2], [1, 4], [2, 3], [3, 4]):
            for cols in ([1, 3], [2, 4], [1, 2]):
                sub = a[np.ix_(np.array(rows) - 1, np.array(cols) - 1)]
                expected = cofactor_det(sub)
                assert fk.minor_det(a, rows, cols) == pytest.approx(expected)

    def test_full_index_set_is_determinant(self, rng):
        a = rng.standard_normal((4, 4))
        assert fk.minor_det(a, [1, 2, 3, 4], [1, 2, 3, 4]) == pytest.approx(
            complex(np.linalg.det(a))
        )

    def test_bad_index_sets(self):
        a = np.eye(3)
        with pytest.raises(BadIndexSet):
            fk.minor_det(a, [1, 1], [1, 2])
        with pytest.raises(BadIndexSet):
            fk.minor_det(a, [2, 1], [1, 2])
        with pytest.raises(BadIndexSet):
            fk.minor_det(a, [1, 4], [1, 2])
        with pytest.raises(BadIndexSet):
            fk.minor_det(a, [1, 2], [3])


class TestNumericRank:
    def test_identity(self):
        assert fk.numeric_rank(np.eye(4)) == 4

    def test_three_vector_plane_family(self):
        fam = np.array([[1.0, 1.0, 0.0], [0.0, 1.0, 1.0]])
        assert fk.numeric_rank(fam) == 2

    def test_rank_one_outer_product(self, rng):
        u = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        assert fk.numeric_rank(np.outer(u, v)) == 1

    def test_zero_matrix(self):
        assert fk.numeric_rank(np.zeros((3, 2))) == 0

    def test_permutation_invariance(self, rng):
        a = rng.standard_normal((4, 6))
        a[:, 3] = a[:, 0] + a[:, 1]
        perm_rows = rng.permutation(4)
        perm_cols = rng.permutation(6)
        assert fk.numeric_rank(a) == fk.numeric_rank(a[np.ix_(perm_rows, perm_cols)])


def test_tolerances_validation():
    with pytest.raises(ValueError):
        fk.Tolerances(rank_rel=0.0)
    with pytest.raises(ValueError):
        fk.Tolerances(rank_rel=1.5)
    with pytest.raises(ValueError):
        fk.Tolerances(eq_abs=-1e-9)


def test_as_matrix_accepts_wrapper_objects():
    tp = fk.pascal(3)
    assert as_matrix(tp).shape == (3, 3)
