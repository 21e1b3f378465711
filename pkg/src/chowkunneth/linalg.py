"""Small dense exact linear algebra over Fraction.

Matrices are tuples of tuples (immutable, hashable); all arithmetic is
exact. Sizes here are tiny (pairing blocks of cohomology rings), so
plain Gaussian elimination is the right tool.
"""

from fractions import Fraction


def mat(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_mul(a, b):
    if not a or not b:
        return ()
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def transpose(a):
    if not a:
        return ()
    return tuple(tuple(a[i][j] for i in range(len(a))) for j in range(len(a[0])))


def solve(a, rhs_cols):
    """Solve a @ X = B for square a; B given as a matrix of columns stacked
    row-wise (same row count as a). Returns X, or None if a is singular."""
    n = len(a)
    if n == 0:
        return ()
    width = len(rhs_cols[0])
    aug = [list(a[i]) + list(rhs_cols[i]) for i in range(n)]
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        row += 1
    return tuple(tuple(aug[i][n : n + width]) for i in range(n))


def inverse(a):
    return solve(a, identity(len(a)))


def rank(a):
    if not a or not a[0]:
        return 0
    rows = [list(r) for r in a]
    n, m = len(rows), len(rows[0])
    rk = 0
    for col in range(m):
        piv = None
        for r in range(rk, n):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = Fraction(1) / rows[rk][col]
        rows[rk] = [x * inv for x in rows[rk]]
        for r in range(n):
            if r != rk and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        rk += 1
        if rk == n:
            break
    return rk


def congruence_diagonalize(m):
    """Rational congruence diagonalization of a symmetric matrix.

    Returns (q, d) with q invertible and q^T m q = d diagonal. No square
    roots: diagonal entries stay arbitrary nonzero rationals (or zero on
    a degenerate input, which callers reject separately).
    """
    n = len(m)
    a = [list(row) for row in m]
    q = [list(row) for row in identity(n)]

    def add_col(dst, src, f):
        # simultaneous column+row operation keeps symmetry
        for i in range(n):
            a[i][dst] += f * a[i][src]
        for i in range(n):
            a[dst][i] += f * a[src][i]
        for i in range(n):
            q[i][dst] += f * q[i][src]

    def swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            a[i][r], a[j][r] = a[j][r], a[i][r]
        for r in range(n):
            q[r][i], q[r][j] = q[r][j], q[r][i]

    for k in range(n):
        if a[k][k] == 0:
            piv = None
            for j in range(k + 1, n):
                if a[j][j] != 0:
                    piv = j
                    break
            if piv is not None:
                swap(k, piv)
            else:
                # all remaining diagonal entries vanish; pull in an
                # off-diagonal one (char 0, so 2*a[k][j] != 0)
                found = None
                for j in range(k + 1, n):
                    if a[k][j] != 0:
                        found = j
                        break
                if found is None:
                    continue  # row is entirely zero: degenerate block
                add_col(k, found, Fraction(1))
        if a[k][k] == 0:
            continue
        for j in range(k + 1, n):
            if a[k][j] != 0:
                add_col(j, k, -a[k][j] / a[k][k])
    return tuple(tuple(r) for r in q), tuple(tuple(r) for r in a)
