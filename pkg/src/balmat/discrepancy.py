"""Row/column discrepancy, fairness classification, and interior search.

The discrepancy of a line (row or column) is its plain entry sum. A line is
*fair* at threshold eps when every entry sits strictly within eps of the
line's mean; it is *unfair* when some entry deviates by at least a larger
threshold theta. For balanced matrices, fairness transfers between rows and
columns, and the interior search looks for balanced submatrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from balmat import _kernels
from balmat.balance import BalanceReport, classify_balance
from balmat.core import DEFAULT_TOL, CheckRecord, Matrix, TolerancePolicy
from balmat.errors import DimensionError, HypothesisError, InvalidInputError

#: Tolerance widening applied when a fairness verdict is transported to the
#: other axis: the argument passes through two approximations (line means
#: agree, then entries agree), so the receiving side gets twice the budget.
TRANSFER_FACTOR = 2.0


@dataclass(frozen=True)
class DiscrepancyReport:
    """Line sums, means, worst deviations, and fairness verdicts at one eps."""

    row_sums: tuple[float, ...]
    col_sums: tuple[float, ...]
    row_means: tuple[float, ...]
    col_means: tuple[float, ...]
    max_row_deviation: float
    max_col_deviation: float
    fair_rows: bool
    fair_cols: bool
    fair_row_indices: frozenset[int]
    fair_eps: float


def discrepancy_report(a: Matrix, fair_eps: float) -> DiscrepancyReport:
    """Compute sums, means, deviations, and fairness at threshold `fair_eps`."""
    if not fair_eps > 0:
        raise InvalidInputError(f"fair_eps must be positive, got {fair_eps}")
    row_sums, col_sums, row_means, col_means, row_devs, col_devs = _kernels.line_stats(
        a.entries, a.n_rows, a.n_cols
    )
    fair_rows_idx = frozenset(i for i, d in enumerate(row_devs) if d < fair_eps)
    return DiscrepancyReport(
        row_sums=tuple(row_sums),
        col_sums=tuple(col_sums),
        row_means=tuple(row_means),
        col_means=tuple(col_means),
        max_row_deviation=max(row_devs),
        max_col_deviation=max(col_devs),
        fair_rows=max(row_devs) < fair_eps,
        fair_cols=max(col_devs) < fair_eps,
        fair_row_indices=fair_rows_idx,
        fair_eps=fair_eps,
    )


def _require_positive(a: Matrix) -> None:
    if any(e <= 0.0 for e in a.entries):
        raise HypothesisError("not-positive", f"minimum entry is {min(a.entries)}")


def _require_balanced(a: Matrix, tol: TolerancePolicy, label: str = "input") -> BalanceReport:
    report = classify_balance(a, tol)
    if not report.fully_balanced:
        raise HypothesisError(
            "not-balanced",
            f"{label} has defects (h={report.horizontal_defect:.3g}, v={report.vertical_defect:.3g})",
        )
    return report


def fairness_transfer_check(
    a: Matrix, tol: TolerancePolicy = DEFAULT_TOL, fair_eps: float = 0.1
) -> CheckRecord:
    """Row fairness at eps should coincide with column fairness at 2*eps.

    Requires a positive, fully balanced matrix. The record's lhs/rhs carry
    the worst row and column deviations for diagnosis.
    """
    _require_positive(a)
    _require_balanced(a, tol)
    rep = discrepancy_report(a, fair_eps)
    cols_fair_slack = rep.max_col_deviation < TRANSFER_FACTOR * fair_eps
    holds = rep.fair_rows == cols_fair_slack
    return CheckRecord.verdict(
        "fairness_transfer", holds, rep.max_row_deviation, rep.max_col_deviation
    )


def one_fair_row_check(
    a: Matrix,
    tol: TolerancePolicy = DEFAULT_TOL,
    fair_eps: float = 0.1,
    unfair_theta: float = 1.0,
) -> CheckRecord | None:
    """If exactly one row is fair, the columns must carry a large deviation.

    Returns None (not applicable) when the premise fails, i.e. when the
    number of individually fair rows differs from one. For 2x2 matrices a
    balanced matrix cannot have exactly one fair row, so there the check
    verifies instead that the remaining row is fair at the widened 2*eps
    budget. For larger shapes the conclusion is that some column deviation
    reaches theta minus the slack eaten by fairness (eps) and by the spread
    of the row means.
    """
    if not unfair_theta > fair_eps:
        raise InvalidInputError(f"unfair_theta ({unfair_theta}) must exceed fair_eps ({fair_eps})")
    _require_positive(a)
    _require_balanced(a, tol)
    rep = discrepancy_report(a, fair_eps)
    if len(rep.fair_row_indices) != 1:
        return None
    if a.n_rows == 2 and a.n_cols == 2:
        return CheckRecord.bounded(
            "one_fair_row", rep.max_row_deviation, TRANSFER_FACTOR * fair_eps
        )
    mean_spread = max(rep.row_means) - min(rep.row_means)
    threshold = unfair_theta - fair_eps - mean_spread
    return CheckRecord.bounded("one_fair_row", threshold, rep.max_col_deviation)


def fairness_propagation_check(
    a: Matrix, tol: TolerancePolicy = DEFAULT_TOL, fair_eps: float = 0.1
) -> CheckRecord:
    """One fair row should drag every row to fairness (at the 2*eps budget).

    Conjecture-grade: the result is evidence, never an invariant. Holds
    vacuously when no row is fair at eps.
    """
    _require_balanced(a, tol)
    rep = discrepancy_report(a, fair_eps)
    budget = TRANSFER_FACTOR * fair_eps
    if not rep.fair_row_indices:
        return CheckRecord(
            "fairness_propagation", True, rep.max_row_deviation, budget, -1.0
        )
    return CheckRecord.bounded("fairness_propagation", rep.max_row_deviation, budget)


def interior(
    a: Matrix, row_start: int, row_count: int, col_start: int, col_count: int
) -> Matrix:
    """Contiguous submatrix of `a`."""
    if row_count < 1 or col_count < 1:
        raise DimensionError("interior needs positive row_count and col_count")
    if not (0 <= row_start and row_start + row_count <= a.n_rows):
        raise DimensionError(
            f"rows [{row_start}, {row_start + row_count}) out of range for {a.n_rows} rows"
        )
    if not (0 <= col_start and col_start + col_count <= a.n_cols):
        raise DimensionError(
            f"cols [{col_start}, {col_start + col_count}) out of range for {a.n_cols} columns"
        )
    entries = []
    for i in range(row_start, row_start + row_count):
        base = i * a.n_cols
        entries.extend(a.entries[base + col_start : base + col_start + col_count])
    return Matrix(row_count, col_count, tuple(entries))


def _submatrix(a: Matrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> Matrix:
    entries = tuple(a.entries[i * a.n_cols + j] for i in rows for j in cols)
    return Matrix(len(rows), len(cols), entries)


@dataclass(frozen=True)
class InteriorMatch:
    """A balanced interior: which rows/columns it uses and its report."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: Matrix
    report: BalanceReport


def find_balanced_interior(
    a: Matrix,
    tol: TolerancePolicy = DEFAULT_TOL,
    min_dim: int = 2,
    contiguous: bool = True,
) -> InteriorMatch | None:
    """First balanced proper square interior of a balanced square matrix.

    Scans largest dimension first, then lowest row index, then lowest column
    index, so the result is deterministic. With contiguous=False the scan
    covers arbitrary row/column index subsets (in lexicographic order) at
    combinatorial cost; the default keeps the search polynomial.

    Returns None when no balanced interior exists at the given tolerance;
    such inputs are candidate counterexamples to the claim that every
    balanced matrix contains a balanced subsystem.
    """
    if not a.is_square:
        raise DimensionError(f"interior search needs a square matrix, got {a.n_rows}x{a.n_cols}")
    n = a.n_rows
    if not 2 <= min_dim < n:
        raise InvalidInputError(f"min_dim must satisfy 2 <= min_dim < {n}, got {min_dim}")
    _require_balanced(a, tol)
    for dim in range(n - 1, min_dim - 1, -1):
        if contiguous:
            index_sets = [tuple(range(s, s + dim)) for s in range(n - dim + 1)]
        else:
            index_sets = [tuple(c) for c in combinations(range(n), dim)]
        for rows in index_sets:
            for cols in index_sets:
                sub = _submatrix(a, rows, cols)
                report = classify_balance(sub, tol)
                if report.fully_balanced:
                    return InteriorMatch(rows=rows, cols=cols, matrix=sub, report=report)
    return None
