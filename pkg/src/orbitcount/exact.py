"""Exact rational linear algebra and quadratic-irrational comparisons.

Everything in here is exact: matrices and vectors are tuples of Python ints
or fractions.Fraction, never floats.  Floats may be used internally only to
seed an integer guess that is then corrected by exact comparisons.
"""

import math
from fractions import Fraction


def frac(x):
    """Parse a rational from an int, Fraction or a 'p/q' string."""
    if isinstance(x, (int, Fraction)):
        return scalar(Fraction(x))
    if isinstance(x, str):
        return scalar(Fraction(x.strip()))
    raise TypeError(f"not a rational: {x!r}")


def frac_str(x):
    """Render a rational as 'p' or 'p/q' (exact, diffable)."""
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def scalar(x):
    """Normalise a rational to a plain int when the denominator is 1."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return x


def vec(xs):
    return tuple(scalar(Fraction(x)) for x in xs)


def mat(rows):
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(scalar(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(scalar(sum(x * y for x, y in zip(row, v))) for row in a)


def vec_mat(v, a):
    return tuple(scalar(sum(v[i] * a[i][j] for i in range(len(v)))) for j in range(len(a[0])))


def dot(u, v):
    return scalar(sum(x * y for x, y in zip(u, v)))


def transpose(a):
    return tuple(zip(*a))


def det(m):
    """Exact determinant by fraction-free style Gaussian elimination."""
    n = len(m)
    a = [list(map(Fraction, row)) for row in m]
    sign = 1
    acc = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        acc *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return scalar(sign * acc)


def solve(a, b):
    """Solve a x = b exactly; returns None when a is singular."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col] / p
                for c in range(col, n + 1):
                    m[r][c] -= f * m[col][c]
    return tuple(scalar(m[i][n] / m[i][i]) for i in range(n))


def inverse(a):
    n = len(a)
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        x = solve(a, e)
        if x is None:
            raise ZeroDivisionError("singular matrix")
        cols.append(x)
    return tuple(zip(*cols))


def ldl(gram):
    """Decompose a symmetric matrix as U^T D U with U unit upper triangular.

    Returns (d, u) with d the list of pivots.  Raises ValueError on a zero
    pivot (the decomposition is used for definite forms only).
    """
    n = len(gram)
    a = [list(map(Fraction, row)) for row in gram]
    d = []
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        piv = a[i][i]
        if piv == 0:
            raise ValueError("zero pivot in LDL (form not definite on this basis)")
        d.append(piv)
        u[i][i] = Fraction(1)
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / piv
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] -= a[i][r] * a[i][c] / piv
    return [scalar(x) for x in d], tuple(tuple(scalar(x) for x in row) for row in u)


def definiteness(gram):
    """+1 / -1 when the symmetric matrix is positive / negative definite, else 0.

    Decided exactly via leading principal minors.
    """
    n = len(gram)
    minors = [det([row[: k + 1] for row in gram[: k + 1]]) for k in range(n)]
    if all(m > 0 for m in minors):
        return 1
    if all((m > 0 if k % 2 else m < 0) for k, m in enumerate(minors)):
        return -1
    return 0


def isqrt_frac_floor(f):
    """floor(sqrt(f)) for a nonnegative rational, exact."""
    f = Fraction(f)
    if f < 0:
        raise ValueError("negative radicand")
    p, q = f.numerator, f.denominator
    g = math.isqrt(p * q) // q  # seed, then correct exactly
    while (g + 1) * (g + 1) <= f:
        g += 1
    while g * g > f:
        g -= 1
    return g


def sqrt_sign(p, q, d):
    """Exact sign of p + q*sqrt(d) for rationals p, q and a nonsquare d >= 2."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # opposite signs: compare p^2 with d q^2 and keep the winner's sign
    lhs, rhs = p * p, d * q * q
    if lhs == rhs:
        return 0
    return (1 if p > 0 else -1) if lhs > rhs else (1 if q > 0 else -1)


def gcd_vector(v):
    g = 0
    for x in v:
        g = math.gcd(g, abs(x))
    return g


def clear_denominators(xs):
    """Return (integer tuple, e) with e > 0 minimal such that e*xs is integral."""
    fr = [Fraction(x) for x in xs]
    e = 1
    for f in fr:
        e = e * f.denominator // math.gcd(e, f.denominator)
    return tuple(int(f * e) for f in fr), e


def primitive_integer_row(xs):
    """Scale a nonzero rational row to a primitive integer row; returns (row, s)
    with row = s * xs and s a positive rational."""
    ints, e = clear_denominators(xs)
    g = gcd_vector(ints)
    if g == 0:
        raise ValueError("zero row")
    return tuple(x // g for x in ints), Fraction(e, g)


def unimodular_completion(row):
    """For an integer row a, return U in GL_n(Z) with a U = (g, 0, ..., 0), g = gcd.

    Built from 2x2 determinant-one column operations.
    """
    n = len(row)
    a = list(row)
    ucols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # ucols[j] = column j
    for i in range(1, n):
        if a[i] == 0:
            continue
        g, x, y = _xgcd(a[0], a[i])
        p, q = a[0] // g, a[i] // g
        c0 = [x * ucols[0][r] + y * ucols[i][r] for r in range(n)]
        ci = [-q * ucols[0][r] + p * ucols[i][r] for r in range(n)]
        ucols[0], ucols[i] = c0, ci
        a[0], a[i] = g, 0
    return tuple(tuple(ucols[j][i] for j in range(n)) for i in range(n))


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def random_unimodular(n, rng, steps=12, bound=2):
    """Random element of SL_n(Z) as a product of elementary shears."""
    m = [list(r) for r in identity(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-bound, bound)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return tuple(tuple(r) for r in m)
