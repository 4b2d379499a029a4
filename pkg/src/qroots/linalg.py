"""Exact linear algebra over the integers and rationals.

Everything here is sized for quivers with a handful of vertices, so the
n**3 algorithms below use exact arithmetic throughout: Fractions for
congruence and inversion, fraction-free (Bareiss) elimination for ranks
and determinants of integer matrices.  No floating point.
"""
from __future__ import annotations

from fractions import Fraction

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m))


def mat_vec(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def vec_mat(v, m):
    n = len(v)
    return tuple(sum(v[i] * m[i][j] for i in range(n)) for j in range(len(m[0])))


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_neg(m):
    return tuple(tuple(-x for x in row) for row in m)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def invert_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix whose inverse is again integral.

    Gauss-Jordan over Fractions, then a denominator check.  Raises
    ValueError if the matrix is singular or the inverse is not integral.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            x = a[i][j]
            if x.denominator != 1:
                raise ValueError("inverse is not integral")
            row.append(int(x))
        inv.append(tuple(row))
    return tuple(inv)


def det_bareiss(m: IntMatrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_bareiss(rows) -> int:
    """Exact rank of an integer matrix (list of row lists, any shape)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        # every lower row must be rescaled, even with a zero in the pivot
        # column, or later exact divisions by `prev` silently truncate
        for i in range(row + 1, len(a)):
            for j in range(col + 1, ncols):
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) // prev
            a[i][col] = 0
        prev = a[row][col]
        rank += 1
        row += 1
        if row == len(a):
            break
    return rank


def signature(m) -> tuple[int, int, int]:
    """Inertia (pos, neg, zero) of a symmetric matrix, by exact congruence.

    Symmetric elimination over Fractions.  Zero diagonal pivots with a
    nonzero off-diagonal partner are cured by adding that row and column
    (a congruence), which keeps the law of inertia applicable throughout.
    """
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                for r in range(n):
                    a[r][k], a[r][swap] = a[r][swap], a[r][k]
                a[k], a[swap] = a[swap], a[k]
            else:
                part = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if part is None:
                    zero += 1
                    continue
                for r in range(n):
                    a[r][k] += a[r][part]
                for c in range(n):
                    a[k][c] += a[part][c]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / p
                for c in range(n):
                    a[i][c] -= f * a[k][c]
                for r in range(n):
                    a[r][i] -= f * a[r][k]
    return pos, neg, zero


def char_poly(m: IntMatrix) -> tuple[int, ...]:
    """Characteristic polynomial coefficients (c_0, ..., c_n), c_n = 1.

    Faddeev-LeVerrier over Fractions; coefficients of an integer matrix
    are integers, which the conversion asserts.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]  # leading
    mk = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    am = a
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    out = []
    for c in reversed(coeffs):
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)  # (c_0, ..., c_n) with c_n = 1


def eval_poly(coeffs, x):
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def largest_real_root(coeffs, lo, hi, width) -> Fraction:
    """Largest real root of the polynomial in [lo, hi], located by scanning
    for the outermost sign change and bisecting to the given width.

    Exact rational bisection; assumes a root exists in the interval.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    steps = 256
    a = b = None
    prev_x = hi
    prev_v = eval_poly(coeffs, hi)
    if prev_v == 0:
        return hi
    for i in range(1, steps + 1):
        x = hi - (hi - lo) * i / steps
        v = eval_poly(coeffs, x)
        if v == 0:
            return x
        if (v < 0) != (prev_v < 0):
            a, b = x, prev_x
            break
        prev_x, prev_v = x, v
    if a is None:
        raise ValueError("no sign change located")
    va = eval_poly(coeffs, a)
    while b - a > width:
        mid = (a + b) / 2
        vm = eval_poly(coeffs, mid)
        if vm == 0:
            return mid
        if (vm < 0) == (va < 0):
            a, va = mid, vm
        else:
            b = mid
    return (a + b) / 2


def count_real_roots_above(coeffs, bound) -> int:
    """Number of distinct real roots > bound, by a Sturm chain (exact)."""
    p0 = [Fraction(c) for c in coeffs]
    p1 = [Fraction(i * c) for i, c in enumerate(coeffs)][1:]

    def strip(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def rem(p, q):
        p = p[:]
        while len(p) >= len(q) and strip(p):
            f = p[-1] / q[-1]
            shift = len(p) - len(q)
            for i, c in enumerate(q):
                p[i + shift] -= f * c
            p = strip(p)
        return p

    chain = [strip(p0[:]), strip(p1)]
    while chain[-1]:
        r = rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])

    def sign_changes(x):
        signs = []
        for p in chain:
            if not p:
                continue
            v = eval_poly(p, x)
            if v != 0:
                signs.append(v > 0)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    # +infinity: sign of leading coefficient
    signs_inf = []
    for p in chain:
        if p:
            signs_inf.append(p[-1] > 0)
    changes_inf = sum(1 for s, t in zip(signs_inf, signs_inf[1:]) if s != t)
    return sign_changes(Fraction(bound)) - changes_inf


def kernel_vector(m) -> tuple[Fraction, ...] | None:
    """A nonzero rational kernel vector of a square matrix, or None."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        for r in range(n):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    v = [Fraction(0)] * n
    v[c0] = Fraction(1)
    for r, col in enumerate(pivots):
        v[col] = -a[r][c0]
    return tuple(v)


def primitive_integer_vector(v) -> IntVector:
    """Scale a rational vector to a primitive integer vector (gcd 1),
    signed so that the first nonzero entry is positive."""
    from math import gcd, lcm

    den = lcm(*[f.denominator for f in v]) if v else 1
    ints = [int(f * den) for f in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
