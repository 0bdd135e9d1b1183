# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bit-for-bit equivalent to `_pykernels`.

Keep arithmetic order identical to the pure-Python module; the parity test
suite compares both backends for exact equality. Compiled with
-ffp-contract=off so no fused multiply-adds sneak in.
"""

from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc

OP_SWAP = 0
OP_SCALE = 1
OP_ADDMUL = 2


cdef double* _copy_in(object entries, Py_ssize_t size) except NULL:
    cdef double* buf = <double*> malloc(size * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    for k in range(size):
        buf[k] = entries[k]
    return buf


def row_square_sums(entries, int n, int m):
    """Per-row sums of squared entries."""
    cdef double* a = _copy_in(entries, n * m)
    cdef int i, j
    cdef double s, e
    out = []
    try:
        for i in range(n):
            s = 0.0
            for j in range(m):
                e = a[i * m + j]
                s += e * e
            out.append(s)
    finally:
        free(a)
    return out


def col_square_sums(entries, int n, int m):
    """Per-column sums of squared entries."""
    cdef double* a = _copy_in(entries, n * m)
    cdef int i, j
    cdef double s, e
    out = []
    try:
        for j in range(m):
            s = 0.0
            for i in range(n):
                e = a[i * m + j]
                s += e * e
            out.append(s)
    finally:
        free(a)
    return out


def sums_all_close(sums, double rtol, double atol):
    """Whether every pair of values agrees within atol + rtol*max(|x|,|y|)."""
    cdef Py_ssize_t k = len(sums)
    cdef double* v = _copy_in(sums, k)
    cdef Py_ssize_t r, s
    cdef double sr, ss, hi, diff
    try:
        for r in range(k):
            sr = v[r]
            for s in range(r + 1, k):
                ss = v[s]
                hi = fabs(sr) if fabs(sr) >= fabs(ss) else fabs(ss)
                diff = fabs(sr - ss)
                if diff > atol + rtol * hi:
                    return False
    finally:
        free(v)
    return True


def spread_defect(sums):
    """Normalized spread (max-min)/max(1, max) of a list of non-negative sums."""
    cdef Py_ssize_t k = len(sums)
    cdef double* v = _copy_in(sums, k)
    cdef Py_ssize_t i
    cdef double lo, hi, denom
    try:
        lo = v[0]
        hi = v[0]
        for i in range(k):
            if v[i] < lo:
                lo = v[i]
            if v[i] > hi:
                hi = v[i]
    finally:
        free(v)
    denom = hi if hi > 1.0 else 1.0
    return (hi - lo) / denom


def spectrum2(double a, double b, double c, double d):
    """Eigenvalues of [[a, b], [c, d]] via the stable quadratic formula."""
    cdef double tr = a + d
    cdef double det = a * d - b * c
    cdef double disc = (a - d) * (a - d) + 4.0 * (b * c)
    cdef double s, q, other
    if disc < 0.0:
        # modulus^2 = (tr/2)^2 + |disc|/4 = det, but computed without the
        # cancellation that ad - bc suffers near the real/complex boundary
        return 0.5 * tr, 0.5 * sqrt(tr * tr - disc), True
    s = sqrt(disc)
    q = 0.5 * (tr + s) if tr >= 0.0 else 0.5 * (tr - s)
    if q == 0.0:
        return 0.0, 0.0, False
    other = det / q
    # det/q can land an ulp above q for (near-)repeated roots; keep the
    # magnitude ordering exact
    if fabs(other) > fabs(q):
        return q, other, False
    return other, q, False


def rref(entries, int n, int m, double pivot_tol):
    """Reduced row echelon form with a trail of elementary row operations."""
    cdef double* r = _copy_in(entries, n * m)
    cdef int pivot_row = 0
    cdef int col, i, j, best
    cdef double best_abs, v, pivot, f, x, tmp
    trail = []
    try:
        for col in range(m):
            if pivot_row >= n:
                break
            best = pivot_row
            best_abs = fabs(r[pivot_row * m + col])
            for i in range(pivot_row + 1, n):
                v = fabs(r[i * m + col])
                if v > best_abs:
                    best = i
                    best_abs = v
            if best_abs <= pivot_tol:
                continue
            if best != pivot_row:
                for j in range(m):
                    tmp = r[pivot_row * m + j]
                    r[pivot_row * m + j] = r[best * m + j]
                    r[best * m + j] = tmp
                trail.append((OP_SWAP, pivot_row, best, 0.0))
            pivot = r[pivot_row * m + col]
            if pivot != 1.0:
                f = 1.0 / pivot
                for j in range(m):
                    r[pivot_row * m + j] *= f
                r[pivot_row * m + col] = 1.0
                trail.append((OP_SCALE, pivot_row, pivot_row, f))
            for i in range(n):
                if i == pivot_row:
                    continue
                x = r[i * m + col]
                if x != 0.0:
                    f = -x
                    for j in range(m):
                        r[i * m + j] += f * r[pivot_row * m + j]
                    r[i * m + col] = 0.0
                    trail.append((OP_ADDMUL, i, pivot_row, f))
            pivot_row += 1
        out = [r[i] for i in range(n * m)]
    finally:
        free(r)
    return out, trail, pivot_row


def line_stats(entries, int n, int m):
    """Row/column sums, means, and per-line worst deviation from the mean."""
    cdef double* a = _copy_in(entries, n * m)
    cdef int i, j
    cdef double s, mean, dev, d
    row_sums = []
    row_means = []
    row_devs = []
    col_sums = []
    col_means = []
    col_devs = []
    try:
        for i in range(n):
            s = 0.0
            for j in range(m):
                s += a[i * m + j]
            mean = s / m
            dev = 0.0
            for j in range(m):
                d = fabs(mean - a[i * m + j])
                if d > dev:
                    dev = d
            row_sums.append(s)
            row_means.append(mean)
            row_devs.append(dev)
        for j in range(m):
            s = 0.0
            for i in range(n):
                s += a[i * m + j]
            mean = s / n
            dev = 0.0
            for i in range(n):
                d = fabs(mean - a[i * m + j])
                if d > dev:
                    dev = d
            col_sums.append(s)
            col_means.append(mean)
            col_devs.append(dev)
    finally:
        free(a)
    return row_sums, col_sums, row_means, col_means, row_devs, col_devs
