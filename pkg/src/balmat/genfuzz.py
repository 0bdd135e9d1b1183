"""Seeded matrix generation and randomized theorem/conjecture campaigns.

Balanced matrices form a measure-zero set, so rejection sampling is
hopeless; instead structured families are generated directly on the
balanced manifold (constant, symmetric 2x2, Hadamard-like sign patterns,
scaled orthogonal) with an optional entrywise noise knob to step off it in
a controlled way. Campaigns run a named check over freshly generated
inputs, count pass/violation/not-applicable outcomes, store replayable
counterexamples, and collect defect-vs-error pairs for scaling studies.

Every trial derives its randomness from (campaign seed, trial index), so
reports are reproducible and trials are order-independent.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from balmat import _kernels, algebra, spectral2
from balmat.balance import balance_defect, classify_balance, square_sums
from balmat.core import (
    DEFAULT_TOL,
    CheckRecord,
    Matrix,
    TolerancePolicy,
    approx_eq,
    constant_matrix,
    matrix_from_rows,
)
from balmat.discrepancy import (
    discrepancy_report,
    fairness_propagation_check,
    fairness_transfer_check,
    find_balanced_interior,
    interior,
    one_fair_row_check,
)
from balmat.errors import (
    ConfigurationError,
    HypothesisError,
    SingularMatrixError,
    UnsupportedDimensionError,
)

GENERATOR_KINDS = ("constant", "symmetric2", "hadamard_like", "scaled_orthogonal", "perturbed")

#: Exactly balanced families must come out with defects at or below this.
DEFECT_FLOOR = 1e-12

_MASK64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class GenSpec:
    """Recipe for one generated matrix family.

    noise is the entrywise uniform perturbation radius; kind "perturbed"
    additionally picks a random base family per trial, so noise > 0 with any
    base kind and kind="perturbed" are both ways to leave the balanced
    manifold.
    """

    kind: str
    n: int = 2
    entry_low: float = 1.0
    entry_high: float = 100.0
    noise: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ConfigurationError(f"unknown generator kind {self.kind!r}; known: {GENERATOR_KINDS}")
        if self.n < 1:
            raise ConfigurationError(f"dimension must be at least 1, got {self.n}")
        if not (math.isfinite(self.entry_low) and math.isfinite(self.entry_high)):
            raise ConfigurationError("entry bounds must be finite")
        if self.entry_low < 1.0:
            raise ConfigurationError(f"entry_low must be at least 1, got {self.entry_low}")
        if self.entry_low > self.entry_high:
            raise ConfigurationError(
                f"entry_low ({self.entry_low}) must not exceed entry_high ({self.entry_high})"
            )
        if not (math.isfinite(self.noise) and self.noise >= 0.0):
            raise ConfigurationError(f"noise must be finite and non-negative, got {self.noise}")
        if not 0 <= self.seed <= _MASK64:
            raise ConfigurationError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def _mix(seed: int, index: int) -> int:
    """Derive a per-trial seed; splitmix64-style finalizer."""
    x = (seed * 6364136223846793005 + (index + 1) * 1442695040888963407) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _build_constant(rng: random.Random, spec: GenSpec) -> list[list[float]]:
    lam = rng.uniform(spec.entry_low, spec.entry_high)
    return [[lam] * spec.n for _ in range(spec.n)]


def _build_symmetric2(rng: random.Random, spec: GenSpec) -> list[list[float]]:
    if spec.n != 2:
        raise UnsupportedDimensionError(f"symmetric2 generates 2x2 matrices, requested n={spec.n}")
    a = rng.uniform(spec.entry_low, spec.entry_high)
    b = rng.uniform(spec.entry_low, spec.entry_high)
    return [[a, b], [b, a]]


def _sylvester_signs(n: int) -> list[list[float]]:
    signs = [[1.0]]
    while len(signs) < n:
        top = [row + row for row in signs]
        bottom = [row + [-v for v in row] for row in signs]
        signs = top + bottom
    return signs


def _build_hadamard(rng: random.Random, spec: GenSpec) -> list[list[float]]:
    n = spec.n
    if n & (n - 1) != 0:
        raise UnsupportedDimensionError(
            f"hadamard_like exists for powers of two (1, 2, 4, ...), requested n={n}"
        )
    s = rng.uniform(spec.entry_low, spec.entry_high)
    return [[s * v for v in row] for row in _sylvester_signs(n)]


def _random_orthogonal(rng: random.Random, n: int) -> list[list[float]]:
    """Random orthogonal matrix: Householder QR of a Gaussian sample."""
    if n == 1:
        return [[1.0 if rng.random() < 0.5 else -1.0]]
    a = [[rng.gauss(0.0, 1.0) for _ in range(n)] for _ in range(n)]
    q = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for k in range(n - 1):
        x = [a[i][k] for i in range(k, n)]
        norm = math.sqrt(sum(v * v for v in x))
        if norm == 0.0:
            continue
        alpha = -norm if x[0] >= 0.0 else norm
        v = list(x)
        v[0] -= alpha
        vnorm2 = sum(t * t for t in v)
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        for j in range(k, n):
            w = 0.0
            for t in range(len(v)):
                w += v[t] * a[k + t][j]
            w *= beta
            for t in range(len(v)):
                a[k + t][j] -= w * v[t]
        for i in range(n):
            w = 0.0
            for t in range(len(v)):
                w += q[i][k + t] * v[t]
            w *= beta
            for t in range(len(v)):
                q[i][k + t] -= w * v[t]
    # Fix reflection signs so the implicit R has a positive diagonal.
    for j in range(n):
        if a[j][j] < 0.0:
            for i in range(n):
                q[i][j] = -q[i][j]
    return q


def _build_scaled_orthogonal(rng: random.Random, spec: GenSpec) -> list[list[float]]:
    s = rng.uniform(spec.entry_low, spec.entry_high)
    return [[s * v for v in row] for row in _random_orthogonal(rng, spec.n)]


_BUILDERS = {
    "constant": _build_constant,
    "symmetric2": _build_symmetric2,
    "hadamard_like": _build_hadamard,
    "scaled_orthogonal": _build_scaled_orthogonal,
}


def _bases_for(n: int) -> tuple[str, ...]:
    bases = ["constant"]
    if n == 2:
        bases.append("symmetric2")
    if n & (n - 1) == 0:
        bases.append("hadamard_like")
    bases.append("scaled_orthogonal")
    return tuple(bases)


def _generate_with(rng: random.Random, spec: GenSpec) -> Matrix:
    kind = spec.kind
    if kind == "perturbed":
        kind = rng.choice(_bases_for(spec.n))
    rows = _BUILDERS[kind](rng, spec)
    if spec.noise > 0.0:
        rows = [[v + rng.uniform(-spec.noise, spec.noise) for v in row] for row in rows]
    return matrix_from_rows(rows)


def generate(spec: GenSpec) -> Matrix:
    """Generate one matrix from the spec; deterministic for a fixed seed.

    Equals the first trial of any campaign run with the same spec.
    """
    return _generate_with(random.Random(_mix(spec.seed, 0)), spec)


# ---------------------------------------------------------------------------
# Property registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FuzzContext:
    """Check parameters shared by every trial of a campaign."""

    tol: TolerancePolicy
    fair_eps: float
    unfair_theta: float
    pivot_tol: float
    min_dim: int


@dataclass(frozen=True)
class Counterexample:
    """A violating trial: the generated inputs plus the failed record."""

    matrices: tuple[Matrix, ...]
    record: CheckRecord


@dataclass(frozen=True)
class FuzzReport:
    """Aggregate outcome of one campaign."""

    property_name: str
    trials: int
    passes: int
    violations: int
    not_applicable: int
    worst_slack: float | None
    counterexamples: tuple[Counterexample, ...]
    seed: int
    defect_error_pairs: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class PropertyDef:
    name: str
    description: str
    make_inputs: Callable[[random.Random, GenSpec, FuzzContext], tuple[Matrix, ...]]
    check: Callable[[tuple[Matrix, ...], FuzzContext], CheckRecord | None]
    metrics: Callable[[tuple[Matrix, ...], FuzzContext], tuple[float, float] | None] | None = None


def _gen_one(rng, spec, ctx):
    return (_generate_with(rng, spec),)


def _gen_pair(rng, spec, ctx):
    return (_generate_with(rng, spec), _generate_with(rng, spec))


def _gen_abs_one(rng, spec, ctx):
    # Mirror into the positive orthant; squares (and thus balance) unchanged.
    m = _generate_with(rng, spec)
    return (Matrix(m.n_rows, m.n_cols, tuple(abs(e) for e in m.entries)),)


def _is_2x2(m: Matrix) -> bool:
    return m.shape == (2, 2)


def _is_positive(m: Matrix) -> bool:
    return min(m.entries) > 0.0


def _max_defect(m: Matrix) -> float:
    return max(balance_defect(m, "rows"), balance_defect(m, "columns"))


def _check_closure_add(ms, ctx):
    a, b = ms
    if not (_is_2x2(a) and _is_2x2(b) and _is_positive(a) and _is_positive(b)):
        return None
    rep_a = classify_balance(a, ctx.tol)
    rep_b = classify_balance(b, ctx.tol)
    if not (rep_a.fully_balanced and rep_b.fully_balanced):
        return None
    lhs = _max_defect(algebra.add(a, b))
    rhs = DEFECT_FLOOR + 2.0 * (rep_a.max_defect + rep_b.max_defect)
    return CheckRecord.bounded("closure_add", lhs, rhs)


def _check_closure_mul(ms, ctx):
    a, b = ms
    if not (_is_2x2(a) and _is_2x2(b) and _is_positive(a) and _is_positive(b)):
        return None
    rep_a = classify_balance(a, ctx.tol)
    rep_b = classify_balance(b, ctx.tol)
    if not (rep_a.fully_balanced and rep_b.fully_balanced):
        return None
    lhs = _max_defect(algebra.mul(a, b))
    # Products amplify input defects through the cross terms; 8x is a
    # calibration constant, violations beyond it are findings to study.
    rhs = DEFECT_FLOOR + 8.0 * (rep_a.max_defect + rep_b.max_defect)
    return CheckRecord.bounded("closure_mul", lhs, rhs)


def _check_closure_inverse(ms, ctx):
    a = ms[0]
    if not _is_2x2(a):
        return None
    rep = classify_balance(a, ctx.tol)
    if not rep.fully_balanced or rep.max_defect > DEFECT_FLOOR:
        # Inverse closure is probed only on the exactly balanced manifold,
        # where it is provable; condition-number amplification makes a
        # defect bound meaningless off it.
        return None
    try:
        inv = algebra.inverse2(a, ctx.tol)
    except SingularMatrixError:
        return None
    return CheckRecord.bounded("closure_inverse", _max_defect(inv), DEFECT_FLOOR)


def _check_closure_transpose(ms, ctx):
    a = ms[0]
    rep = classify_balance(a, ctx.tol)
    rep_t = classify_balance(algebra.transpose(a), ctx.tol)
    lhs = max(
        abs(rep_t.horizontal_defect - rep.vertical_defect),
        abs(rep_t.vertical_defect - rep.horizontal_defect),
    )
    return CheckRecord.bounded("closure_transpose", lhs, 0.0)


def _make_scale_inputs(rng, spec, ctx):
    m = _generate_with(rng, spec)
    mag = rng.uniform(1.0, 3.0)
    lam = mag if rng.random() < 0.5 else -mag
    return (m, Matrix(1, 1, (lam,)))


def _check_closure_scale(ms, ctx):
    a, lam_box = ms
    lam = lam_box.entries[0]
    # The defect normalizer max(1, max_sum) must be live on both sides for
    # scale invariance to be exact; entry_low >= 1 and |lam| >= 1 ensure it.
    if max(max(square_sums(a, "rows")), max(square_sums(a, "columns"))) < 1.0:
        return None
    d0 = _max_defect(a)
    d1 = _max_defect(algebra.scale(lam, a))
    return CheckRecord.bounded("closure_scale", abs(d1 - d0), DEFECT_FLOOR)


def _check_det_nonzero(ms, ctx):
    a = ms[0]
    if not a.is_square:
        return None
    if not classify_balance(a, ctx.tol).fully_balanced:
        return None
    moduli = [abs(e) for e in a.entries]
    if _kernels.sums_all_close(moduli, ctx.tol.rtol, ctx.tol.atol):
        return None  # premise requires the entry magnitudes to differ
    det = algebra.det_via_trail(a, ctx.pivot_tol)
    return CheckRecord.bounded("det_nonzero", ctx.pivot_tol, abs(det))


def _check_estimator_exact(ms, ctx):
    a = ms[0]
    if not _is_2x2(a):
        return None
    est = spectral2.estimate_spectrum2(a, ctx.tol)
    s = spectral2.exact_spectrum2(a)
    if s.is_complex:
        return None
    err = max(abs(est.max_estimate - s.max_abs), abs(est.min_estimate - s.min_abs))
    return CheckRecord.bounded("estimator_exact", err, 1e-9 + 2.0 * est.spread)


def _metrics_estimator(ms, ctx):
    a = ms[0]
    if not _is_2x2(a):
        return None
    try:
        est = spectral2.estimate_spectrum2(a, ctx.tol)
    except HypothesisError:
        return None
    s = spectral2.exact_spectrum2(a)
    if s.is_complex:
        return None
    err = max(abs(est.max_estimate - s.max_abs), abs(est.min_estimate - s.min_abs))
    return (_max_defect(a), err)


def _check_estimator_scaling(ms, ctx):
    a = ms[0]
    if not _is_2x2(a):
        return None
    est = spectral2.estimate_spectrum2(a, ctx.tol)
    s = spectral2.exact_spectrum2(a)
    if s.is_complex:
        return None
    err = max(abs(est.max_estimate - s.max_abs), abs(est.min_estimate - s.min_abs))
    denom = _max_defect(a) * max(abs(e) for e in a.entries)
    # Monitoring-only: the campaign's defect/error pairs carry the signal.
    return CheckRecord("estimator_scaling", True, err, denom, -1.0)


def _check_emax_additivity(ms, ctx):
    a, b = ms
    if not (_is_2x2(a) and _is_2x2(b)):
        return None
    return spectral2.emax_additivity_check(a, b, ctx.tol)


def _check_trace_entry(ms, ctx):
    a = ms[0]
    if not _is_2x2(a):
        return None
    return spectral2.trace_entry_check(a, ctx.tol)


def _make_symmetric2_inputs(rng, spec, ctx):
    # Symmetric even under noise, so the quadratic form stays defined.
    a = rng.uniform(spec.entry_low, spec.entry_high)
    b = rng.uniform(spec.entry_low, spec.entry_high)
    if spec.noise > 0.0:
        na = rng.uniform(-spec.noise, spec.noise)
        nb = rng.uniform(-spec.noise, spec.noise)
        nd = rng.uniform(-spec.noise, spec.noise)
        return (matrix_from_rows([[a + na, b + nb], [b + nb, a + nd]]),)
    return (matrix_from_rows([[a, b], [b, a]]),)


_QUAD_GRID = [(float(x), float(y)) for x in range(-2, 3) for y in range(-2, 3)]


def _check_quadform_predict(ms, ctx):
    a = ms[0]
    if not _is_2x2(a):
        return None
    if not approx_eq(a.entries[1], a.entries[2], DEFAULT_TOL):
        return None
    est = spectral2.estimate_spectrum2(a, ctx.tol)
    s = spectral2.exact_spectrum2(a)
    branch = spectral2.quadform_branch_select(a, ctx.tol)
    diag_gap = abs(a.entries[0] - a.entries[3])
    worst = None
    for x, y in _QUAD_GRID:
        f = spectral2.quadform_eval(a, x, y)
        p = spectral2.quadform_predict(s, branch, x, y)
        err = abs(p - f)
        allowed = 1e-9 * max(1.0, abs(f)) + (est.spread + diag_gap) * (
            x * x + y * y + (x + y) * (x + y)
        )
        slack = err - allowed
        if worst is None or slack > worst[0]:
            worst = (slack, err, allowed)
    slack, err, allowed = worst
    return CheckRecord("quadform_predict", slack <= 0, err, allowed, slack)


def _check_fairness_transfer(ms, ctx):
    return fairness_transfer_check(ms[0], ctx.tol, ctx.fair_eps)


def _make_one_fair_row_inputs(rng, spec, ctx):
    """Balanced positive matrix engineered to have exactly one fair row.

    Row 0 is constant; the remaining rows are rotations of a vector with two
    entries nudged +/- theta, so every row has the same square sum and every
    column misses exactly one vector entry. The column imbalance this leaves
    is about 4*m*theta, so campaigns should run with
    rtol >= 4*theta / (n * m) for the balance hypothesis to pass.
    """
    n = spec.n if spec.n >= 3 else 3
    eta = ctx.unfair_theta
    low = max(spec.entry_low, 20.0 * eta)
    high = max(spec.entry_high, 2.0 * low)
    m_val = rng.uniform(low, high)
    w = [m_val + eta, m_val - eta] + [m_val] * (n - 2)
    c = math.sqrt(sum(v * v for v in w) / n)
    rows = [[c] * n]
    for i in range(1, n):
        rows.append([w[(j + i) % n] for j in range(n)])
    return (matrix_from_rows(rows),)


def _check_one_fair_row(ms, ctx):
    return one_fair_row_check(ms[0], ctx.tol, ctx.fair_eps, ctx.unfair_theta)


def _check_fairness_propagation(ms, ctx):
    return fairness_propagation_check(ms[0], ctx.tol, ctx.fair_eps)


def _check_interior_conjecture(ms, ctx):
    a = ms[0]
    if not a.is_square or a.n_rows <= ctx.min_dim:
        return None
    match = find_balanced_interior(a, ctx.tol, ctx.min_dim)
    if match is not None:
        return CheckRecord("interior_conjecture", True, match.report.max_defect, 0.0, -1.0)
    # No balanced interior: report how close the best block came.
    n = a.n_rows
    best = math.inf
    for dim in range(n - 1, ctx.min_dim - 1, -1):
        for r in range(n - dim + 1):
            for c in range(n - dim + 1):
                d = _max_defect(interior(a, r, dim, c, dim))
                if d < best:
                    best = d
    return CheckRecord("interior_conjecture", False, best, 0.0, best)


def _check_interior_fair_corollary(ms, ctx):
    a = ms[0]
    if min(a.n_rows, a.n_cols) < 3:
        return None
    if not classify_balance(a, ctx.tol).fully_balanced:
        return None
    drep = discrepancy_report(a, ctx.fair_eps)
    if not (drep.fair_rows or drep.fair_cols):
        return None
    max_abs = max(abs(e) for e in a.entries)
    widened = TolerancePolicy(
        ctx.tol.rtol,
        ctx.tol.atol + 4.0 * ctx.fair_eps * max_abs * max(a.n_rows, a.n_cols),
    )
    ok = True
    worst = 0.0
    for r_count in range(2, a.n_rows + 1):
        for c_count in range(2, a.n_cols + 1):
            if r_count == a.n_rows and c_count == a.n_cols:
                continue
            for r0 in range(a.n_rows - r_count + 1):
                for c0 in range(a.n_cols - c_count + 1):
                    rep = classify_balance(interior(a, r0, r_count, c0, c_count), widened)
                    if not rep.fully_balanced:
                        ok = False
                        if rep.max_defect > worst:
                            worst = rep.max_defect
    return CheckRecord.verdict("interior_fair_corollary", ok, worst, widened.atol)


def _make_homomorphism_inputs(rng, spec, ctx):
    """Rank-one balanced A (zero eigenvalue) and a fair near-constant B.

    B's fairness deviation stays strictly below fair_eps by construction;
    its residual imbalance is of order noise * entries, so campaigns need
    rtol of roughly fair_eps / entry_low for the balance hypothesis.
    """
    t = rng.uniform(spec.entry_low, spec.entry_high)
    a = constant_matrix(2, 2, t)
    eps = ctx.fair_eps
    base = rng.uniform(spec.entry_low + eps, spec.entry_high + eps)
    off = base + rng.uniform(-0.4, 0.4) * eps
    amp = 0.1 * eps
    b = matrix_from_rows(
        [
            [base + rng.uniform(-amp, amp), off + rng.uniform(-amp, amp)],
            [off + rng.uniform(-amp, amp), base + rng.uniform(-amp, amp)],
        ]
    )
    return (a, b)


def _check_det_homomorphism(ms, ctx):
    a, b = ms
    if not (_is_2x2(a) and _is_2x2(b)):
        return None
    return spectral2.det_homomorphism_check(a, b, ctx.tol, ctx.fair_eps)


def _make_homomorphism_n_inputs(rng, spec, ctx):
    n = spec.n
    t = rng.uniform(spec.entry_low, spec.entry_high)
    a = constant_matrix(n, n, t)
    eps = ctx.fair_eps
    base = rng.uniform(spec.entry_low + eps, spec.entry_high + eps)
    amp = 0.1 * eps
    rows = [[base + rng.uniform(-amp, amp) for _ in range(n)] for _ in range(n)]
    return (a, matrix_from_rows(rows))


def _check_det_homomorphism_n(ms, ctx):
    a, b = ms
    if not (a.is_square and a.shape == b.shape):
        return None
    if min(a.entries) < 1.0 or min(b.entries) < 1.0:
        return None
    if not classify_balance(a, ctx.tol).fully_balanced:
        return None
    if not classify_balance(b, ctx.tol).fully_balanced:
        return None
    det_a = algebra.det_via_trail(a, ctx.pivot_tol)
    if abs(det_a) > ctx.tol.atol:
        return None  # want a provably vanishing smallest eigenvalue
    rep_b = discrepancy_report(b, ctx.fair_eps)
    if not (rep_b.fair_rows or rep_b.fair_cols):
        return None
    det_b = algebra.det_via_trail(b, ctx.pivot_tol)
    det_sum = algebra.det_via_trail(algebra.add(a, b), ctx.pivot_tol)
    lhs = abs(det_sum - (det_a + det_b))
    n = a.n_rows
    max_a = max(a.entries)
    max_b = max(b.entries)
    # Dimensional extrapolation of the 2x2 bound (n*n reduces to 4 there);
    # conjecture-grade, so violations are findings rather than failures.
    rhs = (
        float(n * n) * ctx.fair_eps * max_a * (max_a + max_b) ** (n - 2)
        + ctx.tol.atol
        + ctx.tol.rtol * max(abs(det_sum), abs(det_a + det_b))
    )
    return CheckRecord.bounded("det_homomorphism_n", lhs, rhs)


PROPERTIES: dict[str, PropertyDef] = {
    p.name: p
    for p in (
        PropertyDef(
            "closure_add",
            "sum of positive balanced 2x2 matrices stays balanced",
            _gen_pair,
            _check_closure_add,
        ),
        PropertyDef(
            "closure_mul",
            "product of positive balanced 2x2 matrices stays balanced",
            _gen_pair,
            _check_closure_mul,
        ),
        PropertyDef(
            "closure_inverse",
            "inverse of a nonsingular exactly balanced 2x2 stays balanced",
            _gen_one,
            _check_closure_inverse,
        ),
        PropertyDef(
            "closure_transpose",
            "transpose swaps the horizontal/vertical defects exactly",
            _gen_one,
            _check_closure_transpose,
        ),
        PropertyDef(
            "closure_scale",
            "nonzero scaling leaves the normalized defect unchanged",
            _make_scale_inputs,
            _check_closure_scale,
        ),
        PropertyDef(
            "det_nonzero",
            "balanced matrices with non-constant entry magnitudes are nonsingular",
            _gen_one,
            _check_det_nonzero,
        ),
        PropertyDef(
            "estimator_exact",
            "entry-sum estimates match the eigenvalue magnitudes",
            _gen_one,
            _check_estimator_exact,
            _metrics_estimator,
        ),
        PropertyDef(
            "estimator_scaling",
            "record estimator error against balance defect (monitoring only)",
            _gen_one,
            _check_estimator_scaling,
            _metrics_estimator,
        ),
        PropertyDef(
            "emax_additivity",
            "dominant eigenvalue magnitude is additive for balanced 2x2 sums",
            _gen_pair,
            _check_emax_additivity,
        ),
        PropertyDef(
            "trace_entry",
            "leading entry pins down the trace of a balanced positive 2x2",
            _gen_abs_one,
            _check_trace_entry,
        ),
        PropertyDef(
            "quadform_predict",
            "spectrum-only quadratic form prediction matches direct evaluation",
            _make_symmetric2_inputs,
            _check_quadform_predict,
        ),
        PropertyDef(
            "fairness_transfer",
            "row fairness and column fairness coincide for balanced matrices",
            _gen_abs_one,
            _check_fairness_transfer,
        ),
        PropertyDef(
            "one_fair_row",
            "exactly one fair row forces a large column deviation",
            _make_one_fair_row_inputs,
            _check_one_fair_row,
        ),
        PropertyDef(
            "edos",
            "one fair row propagates fairness to all rows (conjecture)",
            _gen_one,
            _check_fairness_propagation,
        ),
        PropertyDef(
            "interior_conjecture",
            "every balanced matrix contains a balanced interior (conjecture)",
            _gen_one,
            _check_interior_conjecture,
        ),
        PropertyDef(
            "interior_fair_corollary",
            "interiors of fair balanced matrices stay balanced at widened tolerance",
            _gen_one,
            _check_interior_fair_corollary,
        ),
        PropertyDef(
            "det_homomorphism",
            "det(A+B) ~ det(A)+det(B) for vanishing min eigenvalue and fair B",
            _make_homomorphism_inputs,
            _check_det_homomorphism,
        ),
        PropertyDef(
            "det_homomorphism_n",
            "n x n determinant homomorphism (conjecture)",
            _make_homomorphism_n_inputs,
            _check_det_homomorphism_n,
        ),
    )
}


def fuzz_campaign(
    property_name: str,
    spec: GenSpec,
    trials: int,
    tol: TolerancePolicy = DEFAULT_TOL,
    fair_eps: float = 0.1,
    *,
    unfair_theta: float | None = None,
    pivot_tol: float = 1e-10,
    min_dim: int = 2,
    max_counterexamples: int = 100,
) -> FuzzReport:
    """Run a named check over `trials` freshly generated inputs.

    Trials that fail a hypothesis (or a property's applicability premise)
    count as not_applicable. Violating trials are stored as replayable
    counterexamples, capped at `max_counterexamples`. unfair_theta defaults
    to 10 * fair_eps.
    """
    prop = PROPERTIES.get(property_name)
    if prop is None:
        raise ConfigurationError(
            f"unknown property {property_name!r}; known: {', '.join(sorted(PROPERTIES))}"
        )
    if trials < 1:
        raise ConfigurationError(f"trials must be at least 1, got {trials}")
    if max_counterexamples < 1:
        raise ConfigurationError("max_counterexamples must be at least 1")
    theta = 10.0 * fair_eps if unfair_theta is None else unfair_theta
    ctx = FuzzContext(
        tol=tol, fair_eps=fair_eps, unfair_theta=theta, pivot_tol=pivot_tol, min_dim=min_dim
    )
    passes = violations = not_applicable = 0
    worst_slack: float | None = None
    counterexamples: list[Counterexample] = []
    pairs: list[tuple[float, float]] = []
    for index in range(trials):
        rng = random.Random(_mix(spec.seed, index))
        inputs = prop.make_inputs(rng, spec, ctx)
        try:
            record = prop.check(inputs, ctx)
        except HypothesisError:
            not_applicable += 1
            continue
        if record is None:
            not_applicable += 1
        else:
            worst_slack = record.slack if worst_slack is None else max(worst_slack, record.slack)
            if record.holds:
                passes += 1
            else:
                violations += 1
                if len(counterexamples) < max_counterexamples:
                    counterexamples.append(Counterexample(tuple(inputs), record))
        if prop.metrics is not None:
            pair = prop.metrics(inputs, ctx)
            if pair is not None:
                pairs.append(pair)
    return FuzzReport(
        property_name=property_name,
        trials=trials,
        passes=passes,
        violations=violations,
        not_applicable=not_applicable,
        worst_slack=worst_slack,
        counterexamples=tuple(counterexamples),
        seed=spec.seed,
        defect_error_pairs=tuple(pairs),
    )


def replay_counterexample(
    property_name: str,
    matrices: tuple[Matrix, ...],
    tol: TolerancePolicy = DEFAULT_TOL,
    fair_eps: float = 0.1,
    *,
    unfair_theta: float | None = None,
    pivot_tol: float = 1e-10,
    min_dim: int = 2,
) -> CheckRecord | None:
    """Re-run a property's check on stored counterexample inputs."""
    prop = PROPERTIES.get(property_name)
    if prop is None:
        raise ConfigurationError(f"unknown property {property_name!r}")
    theta = 10.0 * fair_eps if unfair_theta is None else unfair_theta
    ctx = FuzzContext(
        tol=tol, fair_eps=fair_eps, unfair_theta=theta, pivot_tol=pivot_tol, min_dim=min_dim
    )
    return prop.check(tuple(matrices), ctx)
