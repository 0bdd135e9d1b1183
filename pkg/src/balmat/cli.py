"""Command-line front door: CSV matrices in, text or JSON reports out.

Exit status: 0 on success, 1 for domain errors (parse failures, dimension
mismatches, unsatisfied hypotheses), 2 for unexpected internal errors.
Hypothesis failures are ordinary outcomes when probing arbitrary matrices,
so they exit with a clear message rather than a traceback.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from dataclasses import dataclass

from balmat import _kernels
from balmat.balance import BalanceReport, classify_balance
from balmat.core import CheckRecord, Matrix, TolerancePolicy, matrix_from_rows
from balmat.algebra import rref_with_trail, det_via_trail
from balmat.discrepancy import (
    DiscrepancyReport,
    discrepancy_report,
    fairness_propagation_check,
    fairness_transfer_check,
    find_balanced_interior,
    one_fair_row_check,
)
from balmat.errors import BalmatError, HypothesisError, ParseError
from balmat.genfuzz import GenSpec, FuzzReport, fuzz_campaign
from balmat.spectral2 import (
    estimate_spectrum2,
    exact_spectrum2,
    quadform_branch_select,
    quadform_eval,
    quadform_predict,
)

COMMANDS = ("check", "spectrum", "quadform", "discrepancy", "det", "interior", "fuzz")


@dataclass
class CliConfig:
    command: str
    input_path: str | None = None
    tol_rtol: float = 1e-6
    tol_atol: float = 1e-9
    fair_eps: float = 0.1
    unfair_theta: float = 1.0
    pivot_tol: float = 1e-10
    min_dim: int = 2
    output_format: str = "text"
    # fuzz-only fields
    fuzz_property: str | None = None
    fuzz_kind: str | None = None
    fuzz_n: int = 2
    fuzz_trials: int = 100
    fuzz_noise: float = 0.0
    fuzz_seed: int = 0
    fuzz_entry_low: float = 1.0
    fuzz_entry_high: float = 100.0

    def tolerance(self) -> TolerancePolicy:
        return TolerancePolicy(rtol=self.tol_rtol, atol=self.tol_atol)


# ---------------------------------------------------------------------------
# Matrix CSV format
# ---------------------------------------------------------------------------


def parse_matrix_csv(text: str) -> Matrix:
    """Parse comma-separated rows into a Matrix.

    Whitespace around fields is ignored; signs and exponents are accepted;
    trailing blank lines are permitted. Ragged rows and non-numeric fields
    raise ParseError with the offending line (and column).
    """
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty matrix input")
    rows: list[list[float]] = []
    for line_no, line in enumerate(lines, start=1):
        if line.strip() == "":
            raise ParseError("blank row inside matrix", line=line_no)
        fields = line.split(",")
        row = []
        for col_no, raw in enumerate(fields, start=1):
            token = raw.strip()
            try:
                row.append(float(token))
            except ValueError:
                raise ParseError(f"not a number: {token!r}", line=line_no, column=col_no) from None
        if rows and len(row) != len(rows[0]):
            raise ParseError(
                f"row has {len(row)} fields, expected {len(rows[0])}", line=line_no
            )
        rows.append(row)
    return matrix_from_rows(rows)


def serialize_csv(a: Matrix) -> str:
    """Render a Matrix as CSV that parse_matrix_csv inverts exactly."""
    return "\n".join(",".join(repr(v) for v in a.row(i)) for i in range(a.n_rows)) + "\n"


# ---------------------------------------------------------------------------
# JSON rendering (17 significant digits, byte-stable)
# ---------------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    if x == 0.0:
        x = 0.0  # avoid "-0", which would not round-trip as a float literal
    return f"{x:.17g}"


def _escape(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def render_json(obj, indent: int = 0) -> str:
    """Serialize dict/list/str/bool/int/float/None with stable formatting.

    Floats carry 17 significant digits so parsing and re-serializing the
    output is byte-identical.
    """
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return _escape(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f"{inner}{_escape(str(k))}: {render_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [f"{inner}{render_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# Report builders (dict form shared by text and JSON renderers)
# ---------------------------------------------------------------------------


def _matrix_dict(a: Matrix):
    return a.to_rows()


def _record_dict(rec: CheckRecord) -> dict:
    return {"name": rec.name, "holds": rec.holds, "lhs": rec.lhs, "rhs": rec.rhs, "slack": rec.slack}


def _balance_dict(rep: BalanceReport) -> dict:
    return {
        "is_zero": rep.is_zero,
        "horizontally_balanced": rep.horizontally_balanced,
        "vertically_balanced": rep.vertically_balanced,
        "fully_balanced": rep.fully_balanced,
        "horizontal_defect": rep.horizontal_defect,
        "vertical_defect": rep.vertical_defect,
        "row_square_sums": list(rep.row_square_sums),
        "col_square_sums": list(rep.col_square_sums),
    }


def _discrepancy_dict(rep: DiscrepancyReport) -> dict:
    return {
        "fair_eps": rep.fair_eps,
        "row_sums": list(rep.row_sums),
        "col_sums": list(rep.col_sums),
        "row_means": list(rep.row_means),
        "col_means": list(rep.col_means),
        "max_row_deviation": rep.max_row_deviation,
        "max_col_deviation": rep.max_col_deviation,
        "fair_rows": rep.fair_rows,
        "fair_cols": rep.fair_cols,
        "fair_row_indices": sorted(rep.fair_row_indices),
    }


def _fuzz_dict(rep: FuzzReport) -> dict:
    return {
        "property": rep.property_name,
        "trials": rep.trials,
        "passes": rep.passes,
        "violations": rep.violations,
        "not_applicable": rep.not_applicable,
        "worst_slack": rep.worst_slack,
        "seed": rep.seed,
        "counterexamples": [
            {"matrices": [_matrix_dict(m) for m in cex.matrices], "record": _record_dict(cex.record)}
            for cex in rep.counterexamples
        ],
        "defect_error_pairs": [[d, e] for d, e in rep.defect_error_pairs],
    }


def _cmd_check(config: CliConfig, a: Matrix) -> dict:
    return _balance_dict(classify_balance(a, config.tolerance()))


def _cmd_spectrum(config: CliConfig, a: Matrix) -> dict:
    tol = config.tolerance()
    est = estimate_spectrum2(a, tol)
    s = exact_spectrum2(a)
    return {
        "exact": {"lambda1": s.lambda1, "lambda2": s.lambda2, "is_complex": s.is_complex},
        "estimate": {
            "max_estimate": est.max_estimate,
            "min_estimate": est.min_estimate,
            "spread": est.spread,
        },
        "error": {
            "max_abs_error": abs(est.max_estimate - s.max_abs),
            "min_abs_error": abs(est.min_estimate - s.min_abs),
        },
    }


_GRID = [(float(x), float(y)) for x in range(-2, 3) for y in range(-2, 3)]


def _cmd_quadform(config: CliConfig, a: Matrix) -> dict:
    tol = config.tolerance()
    branch = quadform_branch_select(a, tol)
    s = exact_spectrum2(a)
    if branch == "b_gt_a":
        coeff_sum_sq = 0.5 * (s.max_abs - s.min_abs)
        coeff_xy = 2.0 * s.min_abs
    else:
        coeff_sum_sq = 0.5 * (s.max_abs + s.min_abs)
        coeff_xy = -2.0 * s.min_abs
    worst = 0.0
    for x, y in _GRID:
        err = abs(quadform_predict(s, branch, x, y) - quadform_eval(a, x, y))
        if err > worst:
            worst = err
    return {
        "branch": branch,
        "coeff_sum_sq": coeff_sum_sq,
        "coeff_xy": coeff_xy,
        "grid": {"low": -2, "high": 2},
        "grid_max_abs_error": worst,
    }


def _cmd_discrepancy(config: CliConfig, a: Matrix) -> dict:
    tol = config.tolerance()
    checks: dict[str, object] = {}

    def run_check(name, fn):
        try:
            rec = fn()
        except HypothesisError as exc:
            checks[name] = {"hypothesis_error": str(exc)}
            return
        checks[name] = {"not_applicable": True} if rec is None else _record_dict(rec)

    run_check("fairness_transfer", lambda: fairness_transfer_check(a, tol, config.fair_eps))
    run_check(
        "one_fair_row",
        lambda: one_fair_row_check(a, tol, config.fair_eps, config.unfair_theta),
    )
    run_check(
        "fairness_propagation", lambda: fairness_propagation_check(a, tol, config.fair_eps)
    )
    return {"report": _discrepancy_dict(discrepancy_report(a, config.fair_eps)), "checks": checks}


def _cmd_det(config: CliConfig, a: Matrix) -> dict:
    value = det_via_trail(a, config.pivot_tol)
    result = rref_with_trail(a, config.pivot_tol)
    return {"determinant": value, "rank": result.rank, "trail_length": len(result.trail)}


def _cmd_interior(config: CliConfig, a: Matrix) -> dict:
    match = find_balanced_interior(a, config.tolerance(), config.min_dim)
    if match is None:
        return {"found": False}
    return {
        "found": True,
        "rows": list(match.rows),
        "cols": list(match.cols),
        "matrix": _matrix_dict(match.matrix),
        "report": _balance_dict(match.report),
    }


def _cmd_fuzz(config: CliConfig) -> dict:
    spec = GenSpec(
        kind=config.fuzz_kind,
        n=config.fuzz_n,
        entry_low=config.fuzz_entry_low,
        entry_high=config.fuzz_entry_high,
        noise=config.fuzz_noise,
        seed=config.fuzz_seed,
    )
    report = fuzz_campaign(
        config.fuzz_property,
        spec,
        config.fuzz_trials,
        config.tolerance(),
        config.fair_eps,
        unfair_theta=config.unfair_theta,
        pivot_tol=config.pivot_tol,
        min_dim=config.min_dim,
    )
    return _fuzz_dict(report)


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list, tuple)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(value)}")
    elif isinstance(obj, (list, tuple)):
        scalar = all(not isinstance(v, (dict, list, tuple)) for v in obj)
        if scalar:
            lines.append(f"{pad}[{', '.join(_scalar_text(v) for v in obj)}]")
        else:
            for value in obj:
                lines.extend(_render_text(value, indent))
    else:
        lines.append(f"{pad}{_scalar_text(obj)}")
    return lines


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (list, tuple)) and not v:
        return "[]"
    if isinstance(v, dict) and not v:
        return "{}"
    if v is None:
        return "none"
    return str(v)


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _params_dict(config: CliConfig) -> dict:
    params = {
        "rtol": config.tol_rtol,
        "atol": config.tol_atol,
        "fair_eps": config.fair_eps,
        "unfair_theta": config.unfair_theta,
        "pivot_tol": config.pivot_tol,
    }
    if config.command == "interior":
        params["min_dim"] = config.min_dim
    if config.command == "fuzz":
        params.update(
            {
                "property": config.fuzz_property,
                "kind": config.fuzz_kind,
                "n": config.fuzz_n,
                "trials": config.fuzz_trials,
                "noise": config.fuzz_noise,
                "seed": config.fuzz_seed,
                "entry_low": config.fuzz_entry_low,
                "entry_high": config.fuzz_entry_high,
            }
        )
    return params


def run(config: CliConfig, out=None, err=None) -> int:
    """Execute one CLI invocation; returns the process exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        if config.command == "fuzz":
            result = _cmd_fuzz(config)
        else:
            with open(config.input_path, "r", encoding="utf-8") as fh:
                a = parse_matrix_csv(fh.read())
            handler = {
                "check": _cmd_check,
                "spectrum": _cmd_spectrum,
                "quadform": _cmd_quadform,
                "discrepancy": _cmd_discrepancy,
                "det": _cmd_det,
                "interior": _cmd_interior,
            }[config.command]
            result = handler(config, a)
    except (BalmatError, OSError) as exc:
        print(f"balmat {config.command}: error: {exc}", file=err)
        return 1
    except Exception:
        print(f"balmat {config.command}: internal error", file=err)
        traceback.print_exc(file=err)
        return 2
    document = {
        "command": config.command,
        "input": config.input_path,
        "params": _params_dict(config),
        "result": result,
    }
    if config.output_format == "json":
        print(render_json(document), file=out)
    else:
        print("\n".join(_render_text(document)), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balmat",
        description="Analyze balance, spectra, discrepancy fairness, and determinants "
        "of dense real matrices; fuzz the underlying theorems.",
    )
    parser.add_argument(
        "--backend-info",
        action="store_true",
        help="print which kernel backend is active and exit",
    )
    sub = parser.add_subparsers(dest="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rtol", type=float, default=1e-6, help="relative tolerance (default 1e-6)")
    common.add_argument("--atol", type=float, default=1e-9, help="absolute tolerance (default 1e-9)")
    common.add_argument("--fair-eps", type=float, default=0.1, help="fairness threshold (default 0.1)")
    common.add_argument("--theta", type=float, default=1.0, help="unfairness threshold (default 1.0)")
    common.add_argument(
        "--pivot-tol", type=float, default=1e-10, help="elimination pivot threshold (default 1e-10)"
    )
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format (default text)"
    )

    file_cmds = {
        "check": "classify balance and report defect metrics",
        "spectrum": "exact 2x2 eigenvalues vs entry-sum estimates",
        "quadform": "spectrum-only quadratic form prediction vs direct evaluation",
        "discrepancy": "row/column discrepancy report and fairness checks",
        "det": "determinant via the elementary-operation trail",
        "interior": "search for a balanced interior submatrix",
    }
    for name, help_text in file_cmds.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help="CSV matrix file (one comma-separated row per line)")
        if name == "interior":
            p.add_argument(
                "--min-dim", type=int, default=2, help="smallest interior dimension (default 2)"
            )

    fuzz = sub.add_parser(
        "fuzz", parents=[common], help="run a randomized theorem/conjecture campaign"
    )
    fuzz.add_argument("--property", required=True, help="registered property name")
    fuzz.add_argument(
        "--kind",
        required=True,
        choices=("constant", "symmetric2", "hadamard_like", "scaled_orthogonal", "perturbed"),
        help="generator family",
    )
    fuzz.add_argument("--n", type=int, default=2, help="matrix dimension (default 2)")
    fuzz.add_argument("--trials", type=int, default=100, help="number of trials (default 100)")
    fuzz.add_argument("--noise", type=float, default=0.0, help="entrywise noise radius (default 0)")
    fuzz.add_argument("--seed", type=int, default=0, help="campaign seed (default 0)")
    fuzz.add_argument("--entry-low", type=float, default=1.0, help="entry range low (default 1)")
    fuzz.add_argument("--entry-high", type=float, default=100.0, help="entry range high (default 100)")
    fuzz.add_argument(
        "--min-dim", type=int, default=2, help="smallest interior dimension (default 2)"
    )
    return parser


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    config = CliConfig(
        command=ns.command,
        input_path=getattr(ns, "input", None),
        tol_rtol=ns.rtol,
        tol_atol=ns.atol,
        fair_eps=ns.fair_eps,
        unfair_theta=ns.theta,
        pivot_tol=ns.pivot_tol,
        min_dim=getattr(ns, "min_dim", 2),
        output_format=ns.format,
    )
    if ns.command == "fuzz":
        config.fuzz_property = ns.property
        config.fuzz_kind = ns.kind
        config.fuzz_n = ns.n
        config.fuzz_trials = ns.trials
        config.fuzz_noise = ns.noise
        config.fuzz_seed = ns.seed
        config.fuzz_entry_low = ns.entry_low
        config.fuzz_entry_high = ns.entry_high
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.backend_info:
        print(f"kernel backend: {_kernels.BACKEND}")
        return 0
    if ns.command is None:
        parser.print_help(sys.stderr)
        return 1
    return run(config_from_args(ns))
