"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the hot kernels (square sums, balance classification, elimination
with trail, 2x2 spectra, line statistics) and one end-to-end fuzz campaign
on both backends, then prints per-operation speedups.

Run from the repository root after building the extension in place:

    python3 setup.py build_ext --inplace
    python3 benchmarks/bench_kernels.py
"""

import random

import subprocess
import sys
import time

from balmat._kernels import _pykernels

try:
    from balmat._kernels import _ckernels
except ImportError:
    _ckernels = None


def bench(fn, *args, repeats=7, inner=200):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(inner):
            fn(*args)
        times.append((time.perf_counter() - start) / inner)
    return min(times)


def kernel_cases():
    rng = random.Random(2024)
    m4 = [rng.uniform(-50, 50) for _ in range(16)]
    m8 = [rng.uniform(-50, 50) for _ in range(64)]
    sums = [rng.uniform(0, 100) for _ in range(8)]
    return [
        ("row_square_sums 8x8", "row_square_sums", (m8, 8, 8)),
        ("col_square_sums 8x8", "col_square_sums", (m8, 8, 8)),
        ("sums_all_close k=8", "sums_all_close", (sums, 1e-6, 1e-9)),
        ("spread_defect k=8", "spread_defect", (sums,)),
        ("spectrum2", "spectrum2", (3.0, 1.5, 1.5, 3.0)),
        ("rref 4x4", "rref", (m4, 4, 4, 1e-10)),
        ("rref 8x8", "rref", (m8, 8, 8, 1e-10)),
        ("line_stats 8x8", "line_stats", (m8, 8, 8)),
    ]


def campaign_time(pure: bool) -> float:
    """One 2000-trial estimator campaign in a fresh interpreter."""
    code = (
        "import time, balmat\n"
        "from balmat.genfuzz import GenSpec, fuzz_campaign\n"
        "spec = GenSpec(kind='symmetric2', seed=7)\n"
        "start = time.perf_counter()\n"
        "fuzz_campaign('estimator_exact', spec, 2000)\n"
        "print(time.perf_counter() - start)\n"
    )
    env = {"BALMAT_PURE_PYTHON": "1"} if pure else {}
    import os

    proc = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={**os.environ, **env},
    )
    return float(proc.stdout.strip())


def main():
    if _ckernels is None:
        print("compiled kernels not built; run: python3 setup.py build_ext --inplace")
        return 1
    print(f"{'kernel':<24}{'python':>12}{'compiled':>12}{'speedup':>10}")
    print("-" * 58)
    for label, name, args in kernel_cases():
        t_py = bench(getattr(_pykernels, name), *args)
        t_c = bench(getattr(_ckernels, name), *args)
        print(f"{label:<24}{t_py * 1e6:>10.2f}us{t_c * 1e6:>10.2f}us{t_py / t_c:>9.1f}x")
    t_py = campaign_time(pure=True)
    t_c = campaign_time(pure=False)
    print("-" * 58)
    print(
        f"{'estimator campaign':<24}{t_py * 1e3:>10.1f}ms{t_c * 1e3:>10.1f}ms"
        f"{t_py / t_c:>9.1f}x"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
