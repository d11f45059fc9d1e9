"""Small exact linear algebra over a field of scalars (CycNum or TRat).

Scalars must support +, -, *, /, ``is_zero()`` and equality.  Matrices are
plain lists of lists; everything is deterministic (first nonzero pivot).
"""

from __future__ import annotations


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0])
    out = []
    for i in range(n):
        row_a = a[i]
        row = []
        for j in range(m):
            acc = None
            for l in range(k):
                x = row_a[l]
                if x.is_zero():
                    continue
                y = b[l][j]
                if y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            if acc is None:
                acc = row_a[0] - row_a[0]      # a zero of the right type
            row.append(acc)
        out.append(row)
    return out


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_apply(f, a):
    return [[f(x) for x in row] for row in a]


def solve(a, b):
    """Solve A X = B exactly for the unique X.

    A is m x n with full column rank; the system must be consistent (m >= n).
    B is m x k.  Returns the n x k solution.
    """
    m, n = len(a), len(a[0])
    k = len(b[0])
    rows = [list(a[i]) + list(b[i]) for i in range(m)]
    pivot_rows = []
    col = 0
    for col in range(n):
        pivot = None
        for r in range(len(pivot_rows), m):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            raise ValueError("matrix does not have full column rank")
        r0 = len(pivot_rows)
        rows[r0], rows[pivot] = rows[pivot], rows[r0]
        inv = rows[r0][col].inverse() if hasattr(rows[r0][col], "inverse") else None
        if inv is not None:
            rows[r0] = [x * inv for x in rows[r0]]
        else:
            piv = rows[r0][col]
            rows[r0] = [x / piv for x in rows[r0]]
        for r in range(m):
            if r != r0 and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[r0])]
        pivot_rows.append(col)
    # consistency: remaining rows must be zero
    for r in range(n, m):
        for x in rows[r][n:]:
            if not x.is_zero():
                raise ValueError("inconsistent linear system")
    return [rows[i][n:] for i in range(n)]


def invert(a):
    n = len(a)
    zero = a[0][0] - a[0][0]
    one = None
    for row in a:
        for x in row:
            if not x.is_zero():
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        raise ValueError("singular matrix")
    identity = [[one if i == j else zero for j in range(n)] for i in range(n)]
    return solve(a, identity)


def identity_like(a, n=None):
    zero = a[0][0] - a[0][0]
    one = None
    for row in a:
        for x in row:
            if not x.is_zero():
                one = x / x
                break
        if one is not None:
            break
    n = n if n is not None else len(a)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_equal(a, b):
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return False
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))
