import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from balmat.algebra import transpose
from balmat.balance import classify_balance
from balmat.core import TolerancePolicy, constant_matrix, identity, matrix_from_rows
from balmat.discrepancy import (
    discrepancy_report,
    fairness_propagation_check,
    fairness_transfer_check,
    find_balanced_interior,
    interior,
    one_fair_row_check,
)
from balmat.errors import DimensionError, HypothesisError, InvalidInputError

import oracles

unit_up = st.floats(min_value=1.0, max_value=100.0, allow_nan=False, allow_infinity=False)


def sym2(a, b):
    return matrix_from_rows([[a, b], [b, a]])


class TestDiscrepancyReport:
    def test_constant_matrix(self):
        rep = discrepancy_report(constant_matrix(3, 3, 1.0), fair_eps=0.1)
        assert rep.max_row_deviation == 0.0 and rep.max_col_deviation == 0.0
        assert rep.fair_rows and rep.fair_cols
        assert rep.fair_row_indices == frozenset({0, 1, 2})

    def test_fair_at_wide_threshold(self):
        rep = discrepancy_report(sym2(2, 1), fair_eps=0.6)
        assert rep.row_means == (1.5, 1.5)
        assert rep.max_row_deviation == 0.5
        assert rep.fair_rows

    def test_unfair_at_tight_threshold(self):
        rep = discrepancy_report(sym2(2, 1), fair_eps=0.4)
        assert not rep.fair_rows
        assert rep.fair_row_indices == frozenset()

    def test_requires_positive_eps(self):
        with pytest.raises(InvalidInputError):
            discrepancy_report(identity(2), fair_eps=0.0)

    def test_transpose_swaps_fields(self):
        rng = random.Random(3)
        m = matrix_from_rows([[rng.uniform(1, 9) for _ in range(4)] for _ in range(3)])
        rep = discrepancy_report(m, fair_eps=0.5)
        rep_t = discrepancy_report(transpose(m), fair_eps=0.5)
        assert rep_t.row_sums == rep.col_sums
        assert rep_t.col_sums == rep.row_sums
        assert rep_t.row_means == rep.col_means
        assert rep_t.max_row_deviation == rep.max_col_deviation
        assert rep_t.fair_rows == rep.fair_cols
        a_rows = m.to_rows()
        _, col_devs = oracles.line_deviation_lists(a_rows)
        fair_cols_of_a = frozenset(j for j, d in enumerate(col_devs) if d < 0.5)
        assert rep_t.fair_row_indices == fair_cols_of_a

    @given(
        st.integers(min_value=1, max_value=5),
        st.integers(min_value=1, max_value=5),
        st.integers(min_value=0, max_value=10_000),
    )
    def test_matches_definition(self, n, m, seed):
        rng = random.Random(seed)
        rows = [[rng.uniform(-10, 10) for _ in range(m)] for _ in range(n)]
        rep = discrepancy_report(matrix_from_rows(rows), fair_eps=1.0)
        row_devs, col_devs = oracles.line_deviation_lists(rows)
        assert rep.max_row_deviation == pytest.approx(max(row_devs), abs=1e-12)
        assert rep.max_col_deviation == pytest.approx(max(col_devs), abs=1e-12)
        assert list(rep.row_sums) == pytest.approx([sum(r) for r in rows], abs=1e-9)


class TestFairnessTransfer:
    def test_constant(self):
        rec = fairness_transfer_check(constant_matrix(3, 3, 1.0), fair_eps=0.1)
        assert rec.holds

    def test_symmetric_2x2(self):
        rec = fairness_transfer_check(sym2(2, 1), fair_eps=0.6)
        assert rec.holds
        assert rec.lhs == 0.5 and rec.rhs == 0.5

    def test_unbalanced_rejected(self):
        with pytest.raises(HypothesisError) as e:
            fairness_transfer_check(matrix_from_rows([[1, 2], [3, 4]]))
        assert e.value.hypothesis == "not-balanced"

    def test_nonpositive_rejected(self):
        with pytest.raises(HypothesisError) as e:
            fairness_transfer_check(identity(2))
        assert e.value.hypothesis == "not-positive"

    @given(unit_up, unit_up)
    def test_exact_2x2_row_deviation_equals_column_deviation(self, a, b):
        rep = discrepancy_report(sym2(a, b), fair_eps=1.0)
        assert abs(rep.max_row_deviation - rep.max_col_deviation) <= 1e-12

    @given(unit_up, unit_up)
    def test_exact_2x2_transfer_holds_outside_ambiguous_band(self, a, b):
        # rows are tested at eps but columns at 2*eps, so thresholds inside
        # [dev, 2*dev) split the two verdicts by construction; pick one eps
        # above the deviation and one below half of it
        dev = abs(a - b) / 2.0
        assert fairness_transfer_check(sym2(a, b), fair_eps=dev + 1.0).holds
        if dev > 0:
            assert fairness_transfer_check(sym2(a, b), fair_eps=dev / 2.5).holds


class TestOneFairRow:
    def test_both_rows_fair_not_applicable(self):
        assert one_fair_row_check(sym2(2, 1), fair_eps=0.6, unfair_theta=6.0) is None

    def test_constant_not_applicable(self):
        assert one_fair_row_check(constant_matrix(3, 3, 1.0), fair_eps=0.1) is None

    def test_requires_theta_above_eps(self):
        with pytest.raises(InvalidInputError):
            one_fair_row_check(sym2(2, 1), fair_eps=0.5, unfair_theta=0.5)

    def test_2x2_tolerance_band_configuration(self):
        # slightly off-balance so the two row deviations differ: 0.5 vs 0.52
        m = matrix_from_rows([[2.0, 1.0], [0.98, 2.02]])
        tol = TolerancePolicy(rtol=0.05, atol=1e-9)
        rec = one_fair_row_check(m, tol, fair_eps=0.51, unfair_theta=5.1)
        assert rec is not None
        assert rec.holds  # the other row is fair at the widened 2*eps budget

    def test_engineered_single_fair_row(self):
        # constant first row, rotations of (m+theta, m-theta, m, m) below:
        # balanced up to ~4*m*theta in the column square sums
        theta, m_val, n = 1.0, 40.0, 4
        w = [m_val + theta, m_val - theta] + [m_val] * (n - 2)
        c = math.sqrt(sum(v * v for v in w) / n)
        rows = [[c] * n] + [[w[(j + i) % n] for j in range(n)] for i in range(1, n)]
        m = matrix_from_rows(rows)
        tol = TolerancePolicy(rtol=0.05, atol=1e-9)
        assert classify_balance(m, tol).fully_balanced
        rec = one_fair_row_check(m, tol, fair_eps=0.1, unfair_theta=theta)
        assert rec is not None and rec.holds
        assert rec.rhs >= rec.lhs  # column deviation reached theta - slack


class TestFairnessPropagation:
    def test_constant(self):
        assert fairness_propagation_check(constant_matrix(3, 3, 1.0), fair_eps=0.1).holds

    def test_symmetric_2x2(self):
        rec = fairness_propagation_check(sym2(2, 1), fair_eps=0.6)
        assert rec.holds

    def test_vacuous_when_no_fair_row(self):
        rec = fairness_propagation_check(sym2(9, 1), fair_eps=0.1)
        assert rec.holds

    def test_unbalanced_rejected(self):
        with pytest.raises(HypothesisError):
            fairness_propagation_check(matrix_from_rows([[1, 2], [3, 4]]))


class TestInterior:
    def test_constant_block(self):
        sub = interior(constant_matrix(3, 3, 1.0), 0, 2, 1, 2)
        assert sub == constant_matrix(2, 2, 1.0)

    def test_row_slice(self):
        assert interior(matrix_from_rows([[1, 2], [3, 4]]), 0, 1, 0, 2) == matrix_from_rows([[1, 2]])

    def test_out_of_bounds(self):
        with pytest.raises(DimensionError):
            interior(constant_matrix(3, 3, 1.0), 5, 1, 0, 1)
        with pytest.raises(DimensionError):
            interior(constant_matrix(3, 3, 1.0), 0, 0, 0, 1)


class TestFindBalancedInterior:
    def test_constant(self):
        match = find_balanced_interior(constant_matrix(3, 3, 1.0), min_dim=2)
        assert match is not None
        assert match.matrix == constant_matrix(2, 2, 1.0)
        assert match.report.fully_balanced

    def test_identity_top_left_block(self):
        match = find_balanced_interior(identity(3), min_dim=2)
        assert match is not None
        assert match.rows == (0, 1) and match.cols == (0, 1)
        assert match.matrix == identity(2)

    def test_largest_first(self):
        match = find_balanced_interior(constant_matrix(4, 4, 2.0), min_dim=2)
        assert match is not None
        assert len(match.rows) == 3  # proper interior, largest dimension first

    def test_self_consistency(self):
        tol = TolerancePolicy(rtol=1e-6, atol=1e-9)
        match = find_balanced_interior(identity(4), tol, min_dim=2)
        assert match is not None
        assert classify_balance(match.matrix, tol).fully_balanced

    def test_unbalanced_rejected(self):
        with pytest.raises(HypothesisError):
            find_balanced_interior(matrix_from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]]), min_dim=2)

    def test_non_square_rejected(self):
        with pytest.raises(DimensionError):
            find_balanced_interior(constant_matrix(2, 3, 1.0), min_dim=2)

    def test_min_dim_validation(self):
        with pytest.raises(InvalidInputError):
            find_balanced_interior(constant_matrix(3, 3, 1.0), min_dim=1)
        with pytest.raises(InvalidInputError):
            find_balanced_interior(constant_matrix(3, 3, 1.0), min_dim=3)

    def test_hadamard_type_4x4(self):
        # scaled +-1 sign pattern: exhaustive scan is its own oracle, and
        # this family does contain balanced proper interiors
        s = 2.5
        m = matrix_from_rows(
            [
                [s, s, s, s],
                [s, -s, s, -s],
                [s, s, -s, -s],
                [s, -s, -s, s],
            ]
        )
        assert classify_balance(m).fully_balanced
        match = find_balanced_interior(m, min_dim=2)
        assert match is not None
        assert classify_balance(match.matrix).fully_balanced

    def test_non_contiguous_mode(self):
        # diag(1,-1,1) style sign pattern: balanced, and index-subset search
        # must agree with the contiguous one on an easy instance
        m = matrix_from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        found = find_balanced_interior(m, min_dim=2, contiguous=False)
        assert found is not None
        assert classify_balance(found.matrix).fully_balanced

    def test_zero_blocks_never_match(self):
        # off-diagonal 2x2 blocks of the identity are all-zero and must not
        # count as balanced interiors
        match = find_balanced_interior(identity(4), min_dim=2)
        assert match is not None
        assert not match.matrix.is_zero
