import numpy as np
import pytest
from hypothesis import given, strategies as st

import framekit as fk
from framekit.errors import (
    BadIndexSet,
    DimensionMismatch,
    MrcViolated,
    NotADual,
    NotInvertible,
    PrefixNotInvertible,
)
from framekit.linalg import max_abs, rank_one

from conftest import (
    parseval_c3_frame,
    random_admissible_erasure,
    random_frame,
    tight_c2_frame,
    witness_gap_pair,
)


class TestErasureSet:
    def test_normalizes_and_sorts(self):
        e = fk.ErasureSet([3, 1, 2])
        assert e.indices == (1, 2, 3)
        assert e.k == 3 and list(e) == [1, 2, 3]

    def test_rejects_duplicates_and_nonpositive(self):
        with pytest.raises(BadIndexSet):
            fk.ErasureSet([1, 1])
        with pytest.raises(BadIndexSet):
            fk.ErasureSet([0, 2])
        with pytest.raises(BadIndexSet):
            fk.ErasureSet([1.5, 2])

    def test_survivors(self):
        e = fk.ErasureSet([2, 4])
        assert e.survivors(5) == (1, 3, 5)
        with pytest.raises(BadIndexSet):
            e.survivors(3)

    def test_empty_set_is_allowed(self):
        e = fk.ErasureSet()
        assert e.k == 0 and e.survivors(3) == (1, 2, 3)


class TestMrcCriteria:
    def test_span_on_tight_example(self):
        assert fk.mrc_by_span(tight_c2_frame(), [1, 2])

    def test_span_fails_for_basis(self):
        assert not fk.mrc_by_span(fk.Frame(np.eye(3)), [1])

    def test_full_spark_frame_survives_two_erasures(self, rng):
        f = fk.full_spark_from_generator(
            fk.Frame(np.eye(4)), fk.pascal(4).matrix[:, :2], unchecked=True
        )
        from itertools import combinations

        for size in (1, 2):
            for subset in combinations(range(1, 7), size):
                assert fk.mrc_by_span(f, subset)

    def test_gramian_single_equation(self):
        # the 1 x 1 system matrix is [1/9] - [1] = [-8/9]
        f = parseval_c3_frame()
        g = fk.cross_gramian(f, fk.canonical_dual(f), [1])
        assert complex(g[0, 0] - 1.0) == pytest.approx(-8 / 9)
        assert fk.mrc_by_gramian(f, [1])

    def test_gramian_fails_on_unit_norm_vector(self):
        assert not fk.mrc_by_gramian(parseval_c3_frame(), [4])

    def test_operator_on_tight_example(self):
        assert fk.mrc_by_operator(tight_c2_frame(), [1, 2])

    def test_operator_fails_on_unit_norm_vector(self):
        assert not fk.mrc_by_operator(parseval_c3_frame(), [4])

    def test_three_criteria_agree_on_random_cases(self, rng):
        disagreements = 0
        for _ in range(200):
            n = int(rng.integers(2, 5))
            m = n + int(rng.integers(0, 3))
            f = random_frame(rng, n, m)
            k = int(rng.integers(1, m + 1))
            picks = rng.choice(m, size=k, replace=False) + 1
            e = fk.ErasureSet(int(p) for p in picks)
            votes = {
                fk.mrc_by_span(f, e),
                fk.mrc_by_gramian(f, e),
                fk.mrc_by_operator(f, e),
            }
            disagreements += len(votes) != 1
        assert disagreements == 0

    def test_hereditary_under_subsets(self, rng):
        from itertools import combinations

        f = random_frame(rng, 3, 6)
        e = fk.ErasureSet([1, 3, 5])
        if fk.mrc_by_operator(f, e):
            for size in (1, 2, 3):
                for subset in combinations(e.indices, size):
                    assert fk.mrc_by_operator(f, subset)

    def test_witness_counterexample(self):
        frame, dual = witness_gap_pair()
        assert fk.mrc_by_span(frame, [1])
        assert not fk.mrc_witness(frame, dual, [1])

    def test_witness_with_canonical_dual_matches_gramian(self, rng):
        f = random_frame(rng, 3, 5)
        d = fk.canonical_dual(f)
        for e in ([1], [2, 4], [1, 3, 5]):
            assert fk.mrc_witness(f, d.frame, e) == fk.mrc_by_gramian(f, e)

    def test_witness_true_for_compensating_dual(self):
        f = tight_c2_frame()
        comp = fk.compensating_dual_system(f, [1, 2])
        assert fk.mrc_witness(f, comp.dual.frame, [1, 2])

    def test_witness_requires_a_dual(self):
        f = tight_c2_frame()
        with pytest.raises(NotADual):
            fk.mrc_witness(f, f, [1])


class TestCompensatingDualSystem:
    def test_parseval_single_erasure(self):
        f = parseval_c3_frame()
        comp = fk.compensating_dual_system(f, [1])
        assert comp.alphas[2][0] == pytest.approx(-0.25, abs=1e-12)
        assert comp.alphas[3][0] == pytest.approx(-0.25, abs=1e-12)
        np.testing.assert_allclose(
            comp.vector(2), [0.75, -1 / np.sqrt(2), 0.0], atol=1e-12
        )
        np.testing.assert_allclose(
            comp.vector(3), [0.75, 1 / np.sqrt(2), 0.0], atol=1e-12
        )
        np.testing.assert_allclose(comp.vector(4), [0.0, 0.0, 1.0], atol=1e-12)

    def test_tight_double_erasure(self):
        comp = fk.compensating_dual_system(tight_c2_frame(), [1, 2])
        np.testing.assert_allclose(comp.alphas[3], [-0.5, 0.5], atol=1e-12)
        np.testing.assert_allclose(comp.alphas[4], [-0.5, -0.5], atol=1e-12)
        np.testing.assert_allclose(comp.vector(3), [1.0, -1.0], atol=1e-12)
        np.testing.assert_allclose(comp.vector(4), [1.0, 1.0], atol=1e-12)

    def test_random_outputs_are_vanishing_duals(self, rng):
        for _ in range(25):
            n = int(rng.integers(2, 5))
            m = n + int(rng.integers(1, 4))
            f = random_frame(rng, n, m)
            e = random_admissible_erasure(rng, f, int(rng.integers(1, m - n + 1)))
            comp = fk.compensating_dual_system(f, e)
            assert fk.is_dual_pair(f, comp.dual.frame)
            for idx in e:
                assert np.all(comp.vector(idx) == 0.0)

    def test_violation_raises_with_diagnostics(self):
        f = fk.Frame(np.eye(3))
        with pytest.raises(MrcViolated) as err:
            fk.compensating_dual_system(f, [1])
        assert "gramian" in str(err.value)

    def test_empty_erasure_returns_canonical_dual(self):
        f = tight_c2_frame()
        comp = fk.compensating_dual_system(f, [])
        assert max_abs(comp.matrix - fk.canonical_dual(f).frame.matrix) <= 1e-14
        assert all(a.size == 0 for a in comp.alphas.values())


class TestCompensatingDualOperator:
    def test_matches_system_on_tight_example(self):
        f = tight_c2_frame()
        a = fk.compensating_dual_system(f, [1, 2])
        b = fk.compensating_dual_operator(f, [1, 2])
        assert max_abs(a.matrix - b.matrix) <= 1e-12
        for n in (3, 4):
            np.testing.assert_allclose(a.alphas[n], b.alphas[n], atol=1e-12)

    def test_orthogonal_pair_closed_form(self):
        # <y_m, x_m> = 0 forces x_m = 0 (the inverse frame operator is
        # positive definite); erasure of the zero vector costs nothing
        f = fk.Frame(np.array([[0.0, 1.0, 0.0, 1.0], [0.0, 0.0, 1.0, 1.0]]))
        d = fk.canonical_dual(f).frame.matrix
        assert abs(np.vdot(f.matrix[:, 0], d[:, 0])) <= 1e-15
        comp = fk.compensating_dual_operator(f, [1])
        for n in (2, 3, 4):
            shift = np.vdot(f.matrix[:, 0], d[:, n - 1]) * d[:, 0]
            np.testing.assert_allclose(comp.vector(n), d[:, n - 1] + shift, atol=1e-12)

    def test_agreement_with_system_on_random_cases(self, rng):
        worst = 0.0
        for _ in range(100):
            n = int(rng.integers(2, 5))
            m = n + int(rng.integers(1, 4))
            f = random_frame(rng, n, m)
            e = random_admissible_erasure(rng, f, int(rng.integers(1, m - n + 1)))
            a = fk.compensating_dual_system(f, e)
            b = fk.compensating_dual_operator(f, e)
            worst = max(worst, max_abs(a.matrix - b.matrix))
        assert worst <= 1e-8


class TestSingleErasureDual:
    def test_matches_system_on_parseval_example(self):
        f = parseval_c3_frame()
        a = fk.compensating_dual_system(f, [1])
        b = fk.single_erasure_dual(f, 1)
        assert max_abs(a.matrix - b.matrix) <= 1e-12
        np.testing.assert_allclose(a.alphas[2], b.alphas[2], atol=1e-12)

    def test_orthogonal_case_has_unit_denominator(self):
        f = fk.Frame(np.array([[0.0, 1.0, 0.0, 1.0], [0.0, 0.0, 1.0, 1.0]]))
        y = fk.canonical_dual(f).frame.matrix
        assert abs(np.vdot(f.matrix[:, 0], y[:, 0])) <= 1e-15
        comp = fk.single_erasure_dual(f, 1)
        for n in (2, 3, 4):
            shift = np.vdot(f.matrix[:, 0], y[:, n - 1]) * y[:, 0]
            np.testing.assert_allclose(comp.vector(n), y[:, n - 1] + shift, atol=1e-12)

    def test_agreement_with_operator(self, rng):
        for _ in range(40):
            n = int(rng.integers(2, 5))
            f = random_frame(rng, n, n + int(rng.integers(1, 4)))
            e = random_admissible_erasure(rng, f, 1)
            a = fk.single_erasure_dual(f, e[0])
            b = fk.compensating_dual_operator(f, e)
            assert max_abs(a.matrix - b.matrix) <= 1e-9

    def test_unit_inner_product_raises(self):
        with pytest.raises(MrcViolated):
            fk.single_erasure_dual(fk.Frame(np.eye(2)), 1)


class TestRankOneInverse:
    def test_orthogonal_vectors(self):
        y = np.array([1.0, 0.0])
        x = np.array([0.0, 1.0])
        np.testing.assert_allclose(
            fk.rank_one_inverse(y, x), np.eye(2) + rank_one(y, x), atol=1e-15
        )

    def test_short_self_pair(self):
        # y = x = e1/3 gives denominator 8/9 and factor 9/8
        x = np.array([1 / 3, 0.0, 0.0])
        expected = np.eye(3) + (9 / 8) * rank_one(x, x)
        np.testing.assert_allclose(fk.rank_one_inverse(x, x), expected, atol=1e-14)

    def test_product_against_dense_inverse(self, rng):
        for _ in range(30):
            n = int(rng.integers(1, 6))
            y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            if abs(1 - np.vdot(x, y)) < 1e-3:
                continue
            inv = fk.rank_one_inverse(y, x)
            target = np.eye(n) - rank_one(y, x)
            assert max_abs(inv @ target - np.eye(n)) <= 1e-10
            np.testing.assert_allclose(inv, np.linalg.inv(target), atol=1e-9)

    def test_unit_inner_product_raises(self):
        y = np.array([1.0, 0.0])
        with pytest.raises(NotInvertible):
            fk.rank_one_inverse(y, y)

    @given(st.integers(0, 10**6))
    def test_inverse_property_hypothesis(self, seed):
        r = np.random.default_rng(seed)
        n = int(r.integers(1, 5))
        y = r.standard_normal(n)
        x = r.standard_normal(n)
        denom = 1 - np.vdot(x, y)
        if abs(denom) < 1e-2:
            return
        inv = fk.rank_one_inverse(y, x)
        assert max_abs(inv @ (np.eye(n) - rank_one(y, x)) - np.eye(n)) <= 1e-9


class TestChainAndClosedFormInverse:
    def test_single_step_equals_rank_one(self, rng):
        y = rng.standard_normal(4)
        x = rng.standard_normal(4)
        np.testing.assert_allclose(
            fk.chain_inverse([x], [y]), fk.rank_one_inverse(y, x), atol=1e-14
        )

    def test_tight_example_against_dense_inverse(self):
        f = tight_c2_frame()
        y = fk.canonical_dual(f).frame.matrix
        xs = f.matrix[:, :2]
        ys = y[:, :2]
        target = np.eye(2) - ys @ xs.conj().T
        dense = np.linalg.inv(target)
        assert max_abs(fk.chain_inverse(xs, ys) - dense) <= 1e-10
        assert max_abs(fk.closed_form_inverse(xs, ys) - dense) <= 1e-10

    def test_random_chains_multiply_to_identity(self, rng):
        done = 0
        while done < 20:
            xs = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
            ys = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
            target = np.eye(5) - ys @ xs.conj().T
            if np.linalg.svd(target, compute_uv=False)[-1] < 1e-3:
                continue
            try:
                chain = fk.chain_inverse(xs, ys)
            except PrefixNotInvertible:
                continue
            assert max_abs(chain @ target - np.eye(5)) <= 1e-9
            done += 1

    def test_closed_form_with_dependent_ys(self, rng):
        # y2 = 2 y1 keeps the formula valid: no independence is needed
        for _ in range(20):
            ys = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
            ys[:, 1] = 2.0 * ys[:, 0]
            xs = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
            target = np.eye(5) - ys @ xs.conj().T
            if np.linalg.svd(target, compute_uv=False)[-1] < 1e-3:
                continue
            inv = fk.closed_form_inverse(xs, ys)
            np.testing.assert_allclose(inv, np.linalg.inv(target), atol=1e-8)

    def test_closed_form_k1_reduces_to_rank_one(self, rng):
        y = rng.standard_normal(3)
        x = rng.standard_normal(3)
        np.testing.assert_allclose(
            fk.closed_form_inverse([x], [y]), fk.rank_one_inverse(y, x), atol=1e-12
        )

    def test_chain_and_closed_agree(self, rng):
        f = tight_c2_frame()
        y = fk.canonical_dual(f).frame.matrix
        a = fk.chain_inverse(f.matrix[:, :2], y[:, :2])
        b = fk.closed_form_inverse(f.matrix[:, :2], y[:, :2])
        assert max_abs(a - b) <= 1e-10

    def test_failing_prefix_is_identified(self):
        e1 = np.array([1.0, 0.0])
        e2 = np.array([0.0, 1.0])
        # first factor fine, second prefix singular
        with pytest.raises(PrefixNotInvertible) as err:
            fk.chain_inverse([e1, e2], [0.5 * e1, e2])
        assert err.value.prefix == 2

    def test_closed_form_singular_raises(self):
        e1 = np.array([1.0, 0.0])
        with pytest.raises(NotInvertible):
            fk.closed_form_inverse([e1], [e1])


class TestReconstruct:
    def test_garbage_at_erased_positions(self):
        f = tight_c2_frame()
        comp = fk.compensating_dual_system(f, [1, 2])
        x = np.array([1.0, 0.0])
        coeffs = fk.analysis(f, x)
        coeffs[0] = 999.0
        coeffs[1] = 999.0
        np.testing.assert_allclose(fk.reconstruct(comp, coeffs), x, atol=1e-9)

    def test_zero_coefficients(self):
        comp = fk.compensating_dual_system(tight_c2_frame(), [1])
        np.testing.assert_allclose(
            fk.reconstruct(comp, np.zeros(4)), np.zeros(2), atol=1e-15
        )

    def test_hundred_random_signals(self, rng):
        f = random_frame(rng, 3, 6)
        e = random_admissible_erasure(rng, f, 2)
        comp = fk.compensating_dual_operator(f, e)
        for _ in range(100):
            x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            coeffs = fk.analysis(f, x)
            coeffs[e.zero_based()] = 999.0
            err = np.linalg.norm(fk.reconstruct(comp, coeffs) - x)
            assert err <= 1e-9 * (1 + np.linalg.norm(x))

    def test_nan_at_erased_positions_is_never_read(self):
        f = tight_c2_frame()
        comp = fk.compensating_dual_system(f, [1, 2])
        x = np.array([0.25, -1.5])
        coeffs = fk.analysis(f, x)
        coeffs[0] = np.nan
        coeffs[1] = np.inf
        np.testing.assert_allclose(fk.reconstruct(comp, coeffs), x, atol=1e-9)

    def test_length_check(self):
        comp = fk.compensating_dual_system(tight_c2_frame(), [1])
        with pytest.raises(DimensionMismatch):
            fk.reconstruct(comp, np.zeros(5))


class TestCrossAlgorithmProperties:
    def test_coefficient_identity(self, rng):
        # <v_n, x_{n_i}> = -alpha_{ni} for every survivor and erased index
        for _ in range(10):
            f = random_frame(rng, 3, 6)
            e = random_admissible_erasure(rng, f, 2)
            comp = fk.compensating_dual_system(f, e)
            for n in e.survivors(f.count):
                v = comp.vector(n)
                for i, pos in enumerate(e.indices):
                    lhs = np.vdot(f.matrix[:, pos - 1], v)
                    assert abs(lhs + comp.alphas[n][i]) <= 1e-9

    def test_all_methods_agree(self, rng):
        for _ in range(25):
            n = int(rng.integers(2, 5))
            m = n + int(rng.integers(1, 4))
            f = random_frame(rng, n, m)
            k = int(rng.integers(1, m - n + 1))
            e = random_admissible_erasure(rng, f, k)
            methods = ["system", "operator", "chain", "closed"]
            if k == 1:
                methods.append("single")
            duals = [fk.compensating_dual(f, e, method=meth) for meth in methods]
            for other in duals[1:]:
                assert max_abs(duals[0].matrix - other.matrix) <= 1e-8

    def test_single_method_requires_one_index(self):
        with pytest.raises(ValueError):
            fk.compensating_dual(tight_c2_frame(), [1, 2], method="single")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            fk.compensating_dual(tight_c2_frame(), [1], method="sideways")
