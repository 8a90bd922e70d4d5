"""Exact integer and rational linear algebra.

Everything here runs on arbitrary-precision Python ints and Fractions; no
floating point anywhere.  Matrices are plain lists of lists (row major),
vectors are lists or tuples.  These routines back every lattice computation
in the package: Hermite/Smith normal forms with unimodular transforms,
saturated integer kernels, dual lattice bases, and exact linear solving.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

IntMatrix = list  # list[list[int]], row major
RatVector = list  # list[Fraction]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def copy_matrix(m) -> IntMatrix:
    return [list(row) for row in m]


def transpose(m) -> IntMatrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a, b) -> IntMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m, v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def mat_eq(a, b) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]


def _exgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _row_combine(m, u, i, j, col):
    """Unimodular 2-row transform making m[j][col] = 0, m[i][col] = gcd.

    Applies the same transform to the tracking matrix u.
    """
    a, b = m[i][col], m[j][col]
    if b == 0:
        return
    if a == 0:
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]
        return
    if b % a == 0:
        q = b // a
        m[j] = [x - q * y for x, y in zip(m[j], m[i])]
        u[j] = [x - q * y for x, y in zip(u[j], u[i])]
        return
    g, x, y = _exgcd(a, b)
    p, q = a // g, b // g
    # [[x, y], [-q, p]] has determinant 1 and sends (a, b) to (g, 0).
    mi = [x * s + y * t for s, t in zip(m[i], m[j])]
    mj = [-q * s + p * t for s, t in zip(m[i], m[j])]
    m[i], m[j] = mi, mj
    ui = [x * s + y * t for s, t in zip(u[i], u[j])]
    uj = [-q * s + p * t for s, t in zip(u[i], u[j])]
    u[i], u[j] = ui, uj


def hnf(m) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form with transform.

    Returns (H, U) with U unimodular, H = U @ m, H in row echelon form with
    positive pivots and the entries above each pivot reduced into [0, pivot).
    Zero rows are collected at the bottom.
    """
    h = copy_matrix(m)
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = identity(rows)
    r = 0
    for col in range(cols):
        if r == rows:
            break
        for i in range(r + 1, rows):
            _row_combine(h, u, r, i, col)
        if h[r][col] == 0:
            # move a nonzero row up if the combine left a zero pivot
            pivot_row = next((i for i in range(r + 1, rows) if h[i][col] != 0), None)
            if pivot_row is None:
                continue
            h[r], h[pivot_row] = h[pivot_row], h[r]
            u[r], u[pivot_row] = u[pivot_row], u[r]
            for i in range(r + 1, rows):
                _row_combine(h, u, r, i, col)
        if h[r][col] == 0:
            continue
        if h[r][col] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][col] // h[r][col]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def snf(m) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms.

    Returns (S, U, V) with S = U @ m @ V diagonal, d1 | d2 | ..., and U, V
    unimodular.
    """
    s = copy_matrix(m)
    rows = len(s)
    cols = len(s[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def col_combine(i, j, row):
        st = transpose(s)
        vt = transpose(v)
        _row_combine(st, vt, i, j, row)
        s[:] = transpose(st)
        v[:] = transpose(vt)

    t = 0
    while t < min(rows, cols):
        # bring a nonzero entry to (t, t)
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if s[i][j] != 0 and (pivot is None or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            s[t], s[pi] = s[pi], s[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in s:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        while True:
            for i in range(t + 1, rows):
                _row_combine(s, u, t, i, t)
            if all(s[t][j] == 0 for j in range(t + 1, cols)):
                pass
            else:
                for j in range(t + 1, cols):
                    col_combine(t, j, t)
            if all(s[i][t] == 0 for i in range(t + 1, rows)) and all(
                s[t][j] == 0 for j in range(t + 1, cols)
            ):
                break
        # enforce divisibility of the remaining block by the pivot
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if s[i][j] % s[t][t] != 0:
                    s[t] = [x + y for x, y in zip(s[t], s[i])]
                    u[t] = [x + y for x, y in zip(u[t], u[i])]
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if s[t][t] < 0:
                s[t] = [-x for x in s[t]]
                u[t] = [-x for x in u[t]]
            t += 1
    return s, u, v


def invariant_factors(m) -> list[int]:
    """Nonzero diagonal of the Smith form, in divisibility order."""
    s, _, _ = snf(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i] != 0]


def rank(m) -> int:
    """Rank over Q, computed by fraction-free elimination."""
    return len(_echelon_pivots(copy_matrix(m))[1])


def _echelon_pivots(a):
    """Fraction-free (Bareiss) row echelon; returns (matrix, pivot column list).

    Mutates and returns its argument.  Only the pivot structure is meaningful
    to callers that ignore the returned matrix.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    prev = 1
    for col in range(cols):
        pr = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        for i in range(r + 1, rows):
            for j in range(col + 1, cols):
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = a[r][col]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    return a, pivots


def det(m) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for col in range(n - 1):
        pr = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pr is None:
            return 0
        if pr != col:
            a[col], a[pr] = a[pr], a[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (a[col][col] * a[i][j] - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = a[col][col]
    return sign * a[n - 1][n - 1]


def is_unimodular(m) -> bool:
    return len(m) == (len(m[0]) if m else 0) and abs(det(m)) == 1


def solve_square(n, rhs):
    """Solve the square integer system n @ x = rhs exactly.

    rhs entries may be ints or Fractions.  Returns a tuple of Fractions, or
    None if n is singular.  Uses fraction-free elimination on an augmented
    integer matrix, so it stays fast for matrices in the tens of rows.
    """
    size = len(n)
    if size == 0:
        return ()
    dens = [Fraction(x).denominator for x in rhs]
    aug = [list(row) + [0] for row in n]
    for i in range(size):
        f = Fraction(rhs[i])
        d = dens[i]
        if d != 1:
            aug[i] = [x * d for x in aug[i][:-1]] + [f.numerator]
        else:
            aug[i][size] = f.numerator
    prev = 1
    for col in range(size):
        pr = next((i for i in range(col, size) if aug[i][col] != 0), None)
        if pr is None:
            return None
        if pr != col:
            aug[col], aug[pr] = aug[pr], aug[col]
        for i in range(col + 1, size):
            for j in range(col + 1, size + 1):
                aug[i][j] = (aug[col][col] * aug[i][j] - aug[i][col] * aug[col][j]) // prev
            aug[i][col] = 0
        prev = aug[col][col]
    x = [Fraction(0)] * size
    for i in range(size - 1, -1, -1):
        acc = Fraction(aug[i][size])
        for j in range(i + 1, size):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return tuple(x)


def solve_linear(m, v):
    """One exact rational solution x of m @ x = v, or None if inconsistent.

    Deterministic pivoting: plain row echelon over Q, first nonzero pivot per
    column, free variables set to zero.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(v[i])] for i, row in enumerate(m)]
    if rows != len(v):
        raise ValueError("dimension mismatch")
    pivots = []
    r = 0
    for col in range(cols):
        pr = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][col]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for row_idx, col in enumerate(pivots):
        x[col] = a[row_idx][cols]
    return tuple(x)


def kernel_saturated(m) -> IntMatrix:
    """Basis of the saturated integer kernel {v in Z^n : m @ v = 0}.

    The rows form a lattice basis of (ker over Q) intersected with Z^n, so
    the Smith form of the result has all invariant factors 1.  The basis is
    canonical: it is transformed so that its restriction to the free columns
    of the row echelon form of m is in Hermite normal form, then each row is
    sign-normalized to a positive leading entry.  Whenever the classical
    fundamental system of solutions is integral, that is exactly what comes
    back, in free-column order.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    _, pivot_cols = _echelon_pivots(copy_matrix(m))
    r = len(pivot_cols)
    free_cols = [j for j in range(cols) if j not in set(pivot_cols)]
    if not free_cols:
        return []
    _, _, v = snf(m)
    basis = [[v[i][j] for i in range(cols)] for j in range(r, cols)]
    # canonicalize: HNF the restriction to the free columns
    restr = [[row[j] for j in free_cols] for row in basis]
    _, w = hnf(restr)
    basis = mat_mul(w, basis)
    out = []
    for row in basis:
        lead = next((x for x in row if x != 0), 1)
        out.append([-x for x in row] if lead < 0 else list(row))
    return out


def dual_basis(basis):
    """Dual basis under the standard pairing.

    Input rows b_1..b_d (integers or rationals) must form a full-rank square
    system; the output rows e_1..e_d satisfy <e_i, b_j> = delta_ij.
    """
    d = len(basis)
    if d == 0:
        return []
    if any(len(row) != d for row in basis):
        raise ValueError("not a full-rank lattice basis")
    a = [[Fraction(x) for x in row] for row in basis]
    inv = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]
    for col in range(d):
        pr = next((i for i in range(col, d) if a[i][col] != 0), None)
        if pr is None:
            raise ValueError("not a full-rank lattice basis")
        a[col], a[pr] = a[pr], a[col]
        inv[col], inv[pr] = inv[pr], inv[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        inv[col] = [x / f for x in inv[col]]
        for i in range(d):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    # rows of the transposed inverse pair to the identity against the input
    return [[inv[j][i] for j in range(d)] for i in range(d)]


def gcd_list(values) -> int:
    g = 0
    for x in values:
        g = gcd(g, abs(x))
    return g


def minors_gcd(m, size: int) -> int:
    """gcd of all size x size minors; 0 if every minor vanishes."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    g = 0
    for rsel in itertools.combinations(range(rows), size):
        for csel in itertools.combinations(range(cols), size):
            sub = [[m[i][j] for j in csel] for i in rsel]
            g = gcd(g, abs(det(sub)))
    return g
