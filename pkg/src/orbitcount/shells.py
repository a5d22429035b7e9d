"""Exact enumeration on positive definite quadratic forms.

The reference enumerator is recursive backtracking with exact rational
interval bounds from the form's LDL decomposition.  Vectorised integer paths
(numpy int64) cover the hot cases; floats appear only as seeds for integer
square roots and every accepted point passes an exact integer check.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import definiteness, inverse, isqrt_frac_floor, ldl, mat, scalar


@dataclass(frozen=True)
class GramForm:
    gram: tuple
    dim: int

    def __post_init__(self):
        if len(self.gram) != self.dim or any(len(r) != self.dim for r in self.gram):
            raise ValueError("gram matrix has wrong shape")
        for i in range(self.dim):
            for j in range(self.dim):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix is not symmetric")

    def value(self, x):
        g = self.gram
        n = self.dim
        return scalar(sum(g[i][j] * x[i] * x[j] for i in range(n) for j in range(n)))


def gram_form(rows):
    g = mat(rows)
    return GramForm(gram=g, dim=len(g))


def form_value(gram, x):
    n = len(gram)
    return scalar(sum(gram[i][j] * x[i] * x[j] for i in range(n) for j in range(n)))


def _check_positive_definite(gram):
    if definiteness(gram) != 1:
        raise ValueError("form is not positive definite (exact minor check)")


def is_integer_valued(gram):
    """True when x^t G x is an integer for every integer x."""
    n = len(gram)
    for i in range(n):
        if not isinstance(scalar(Fraction(gram[i][i])), int):
            return False
        for j in range(i + 1, n):
            if not isinstance(scalar(2 * Fraction(gram[i][j])), int):
                return False
    return True


def definite_shell(form, m, shift=None):
    """Complete set {x in Z^n : (x+shift)^t G (x+shift) = m}, lexicographically sorted.

    Exact recursive backtracking; G must be positive definite, m >= 0 rational.
    """
    if isinstance(form, GramForm):
        gram = form.gram
    else:
        gram = mat(form)
    _check_positive_definite(gram)
    m = scalar(Fraction(m))
    if m < 0:
        raise ValueError("negative shell level")
    n = len(gram)
    s = tuple(scalar(Fraction(c)) for c in (shift or (0,) * n))
    d, u = ldl(gram)
    out = []
    x = [0] * n

    def walk(i, remaining):
        # term i of the LDL expansion: d_i * (y_i + sum_{j>i} u_ij y_j)^2, y = x + s
        c = s[i] + sum(u[i][j] * (x[j] + s[j]) for j in range(i + 1, n))
        budget = Fraction(remaining) / d[i]
        if i == 0:
            # exact equality: (x_0 + c)^2 == budget
            num, den = budget.numerator, budget.denominator
            rn, rd = math.isqrt(num), math.isqrt(den)
            if rn * rn != num or rd * rd != den:
                return
            root = Fraction(rn, rd)
            for val in {-c + root, -c - root}:
                f = Fraction(val)
                if f.denominator == 1:
                    x[0] = f.numerator
                    out.append(tuple(x))
            return
        g = isqrt_frac_floor(budget)
        lo = math.floor(-c) - g - 1
        hi = math.ceil(-c) + g + 1
        for v in range(lo, hi + 1):
            t = d[i] * (v + c) ** 2
            if t <= remaining:
                x[i] = v
                walk(i - 1, remaining - t)
        x[i] = 0

    walk(n - 1, m)
    return sorted(out)


def _coordinate_bounds(gram, r):
    # |x_i| <= sqrt(r * (G^-1)_ii) for x^t G x <= r
    ginv = inverse(gram)
    return [isqrt_frac_floor(Fraction(r) * Fraction(ginv[i][i])) for i in range(len(gram))]


def _scaled_integer_gram(gram):
    """(s, sG as int numpy matrix) with s minimal so that s*Q is integer-valued."""
    s = 1
    n = len(gram)
    for i in range(n):
        f = Fraction(gram[i][i])
        s = s * f.denominator // math.gcd(s, f.denominator)
        for j in range(i + 1, n):
            f = 2 * Fraction(gram[i][j])
            s = s * f.denominator // math.gcd(s, f.denominator)
    gi = np.array([[int(Fraction(gram[i][j]) * 2 * s) for j in range(n)] for i in range(n)], dtype=np.int64)
    return s, gi  # x^t gi x = 2 s Q(x)


def ball_points(gram, r):
    """All x in Z^n with 0 < Q(x) <= r, as (points array, 2s*values array, scale s).

    Vectorised over the last coordinate slabs; exact because all arithmetic is
    int64 on scaled integer data.  dim <= 4.
    """
    gram = mat(gram)
    _check_positive_definite(gram)
    n = len(gram)
    if n > 4:
        raise ValueError("ball_points supports dim <= 4")
    s, gi = _scaled_integer_gram(gram)
    bounds = _coordinate_bounds(gram, r)
    target = 2 * s * r
    axes = [np.arange(-b, b + 1, dtype=np.int64) for b in bounds[:-1]]
    if n == 1:
        xs = np.arange(-bounds[0], bounds[0] + 1, dtype=np.int64).reshape(-1, 1)
        vals = gi[0, 0] * xs[:, 0] ** 2
        keep = (vals > 0) & (vals <= target)
        return xs[keep], vals[keep], s
    grids = np.meshgrid(*axes, indexing="ij")
    flat = np.stack([g.ravel() for g in grids], axis=1)  # (#, n-1)
    pts_out, vals_out = [], []
    sub = gi[: n - 1, : n - 1]
    part = np.einsum("ki,ij,kj->k", flat, sub, flat)
    cross = 2 * flat @ gi[: n - 1, n - 1]
    last_diag = gi[n - 1, n - 1]
    for v in range(-bounds[-1], bounds[-1] + 1):
        vals = part + cross * v + last_diag * v * v
        keep = (vals > 0) & (vals <= target)
        if keep.any():
            sel = flat[keep]
            col = np.full((sel.shape[0], 1), v, dtype=np.int64)
            pts_out.append(np.hstack([sel, col]))
            vals_out.append(vals[keep])
    if not pts_out:
        return np.zeros((0, n), dtype=np.int64), np.zeros(0, dtype=np.int64), s
    return np.vstack(pts_out), np.concatenate(vals_out), s


def definite_ball(form, r):
    """Stream of (m, shell) for integer levels 1 <= m <= r; Q must be integer valued.

    Shells are complete and lexicographically sorted; levels with no points are
    skipped.
    """
    gram = form.gram if isinstance(form, GramForm) else mat(form)
    if r < 1:
        return
    if not is_integer_valued(gram):
        raise ValueError("definite_ball requires an integer-valued form (scale levels first)")
    pts, twos_vals, s = ball_points(gram, int(r))
    if len(twos_vals) and np.any(twos_vals % (2 * s)):
        raise AssertionError("non-integer level in integer-valued form")
    vals = twos_vals // (2 * s)
    order = np.argsort(vals, kind="stable")
    pts, vals = pts[order], vals[order]
    idx = 0
    for m in range(1, int(r) + 1):
        chunk = []
        while idx < len(vals) and vals[idx] == m:
            chunk.append(tuple(int(c) for c in pts[idx]))
            idx += 1
        if chunk:
            yield m, sorted(chunk)


def vec_isqrt_exact(a):
    """Vectorised floor(sqrt) with exact integer correction; a nonnegative int64."""
    r = np.floor(np.sqrt(a.astype(np.float64))).astype(np.int64)
    r = np.where((r + 1) * (r + 1) <= a, r + 1, r)
    r = np.where(r * r > a, r - 1, r)
    return r


def shifted_shell_2d(a11, a12, a22, b1, b2, c):
    """Integer solutions of t^t A t + 2 b^t t + c = 0 for positive definite
    integer A; returns sorted (t1, t2) pairs.

    Reduction: with P = a11 t1 + a12 t2 + b1, R = D t2 + beta,
    D = det A, beta = a11 b2 - a12 b1, solutions satisfy R^2 + D P^2 = C.
    """
    dd = a11 * a22 - a12 * a12
    if a11 <= 0 or dd <= 0:
        raise ValueError("form must be positive definite")
    beta = a11 * b2 - a12 * b1
    cc = beta * beta - dd * (a11 * c - b1 * b1)
    if cc < 0:
        return []
    pmax = math.isqrt(cc // dd)
    while dd * (pmax + 1) * (pmax + 1) <= cc:
        pmax += 1
    p = np.arange(-pmax, pmax + 1, dtype=np.int64)
    rem = cc - dd * p * p
    ok = rem >= 0
    p, rem = p[ok], rem[ok]
    r = vec_isqrt_exact(rem)
    sq = r * r == rem
    p, r = p[sq], r[sq]
    out = []
    for rr in (r, -r):
        t2_num = rr - beta
        m2 = t2_num % dd == 0
        t2 = t2_num[m2] // dd
        pp = p[m2]
        t1_num = pp - a12 * t2 - b1
        m1 = t1_num % a11 == 0
        t1 = t1_num[m1] // a11
        out.extend(zip(t1.tolist(), t2[m1].tolist()))
    return sorted(set(out))


def theta_series(gram, r):
    """Exact representation counts T[m] = #{x in Z^n : Q(x) = m} for 0 <= m <= r.

    Q must be integer-valued and positive definite, dim in {2, 3, 4}.  Uses a
    split-and-convolve histogram method (int64 throughout, hence exact).
    """
    gram = mat(gram)
    _check_positive_definite(gram)
    if not is_integer_valued(gram):
        raise ValueError("theta_series requires an integer-valued form")
    n = len(gram)
    r = int(r)
    if n == 2:
        _, vals2, s = ball_points(gram, r)
        counts = np.zeros(r + 1, dtype=np.int64)
        np.add.at(counts, (vals2 // (2 * s)).astype(np.int64), 1)
        counts[0] = 1
        return counts
    if n not in (3, 4):
        raise ValueError("theta_series supports dim 2..4")
    ni = 2
    a = [[Fraction(gram[i][j]) for j in range(ni)] for i in range(ni)]
    xblk = [[Fraction(gram[i][j]) for j in range(ni, n)] for i in range(ni)]
    cblk = [[Fraction(gram[i][j]) for j in range(ni, n)] for i in range(ni, n)]
    ainv = inverse(a)
    mshift = [[scalar(sum(ainv[i][k] * xblk[k][j] for k in range(ni))) for j in range(n - ni)] for i in range(ni)]
    # Schur complement: value of Q on the outer block after completing the square
    schur = [
        [
            scalar(cblk[i][j] - sum(xblk[k][i] * mshift[k][j] for k in range(ni)))
            for j in range(n - ni)
        ]
        for i in range(n - ni)
    ]
    if definiteness(schur) != 1:
        raise AssertionError("Schur complement not positive definite")
    delta = 1
    for row in mshift:
        for v in row:
            delta = delta * Fraction(v).denominator // math.gcd(delta, Fraction(v).denominator)

    # value-grid scale: lcm of denominators of shell values over all shift classes
    sgrid = 1
    classes = {}
    for c0 in range(delta):
        for c1 in range(delta) if n - ni == 2 else [0]:
            w = (c0, c1)[: n - ni]
            sh = tuple(scalar(-sum(mshift[i][j] * w[j] for j in range(n - ni))) for i in range(ni))
            key = tuple(Fraction(x) % 1 for x in sh)
            classes.setdefault(key, key)
    for key in classes:
        probe = form_value(a, [Fraction(k) for k in key])
        sgrid = sgrid * Fraction(probe).denominator // math.gcd(sgrid, Fraction(probe).denominator)
        for i in range(ni):
            lin = scalar(2 * sum(a[i][j] * key[j] for j in range(ni)))
            sgrid = sgrid * Fraction(lin).denominator // math.gcd(sgrid, Fraction(lin).denominator)
    for i in range(n - ni):
        for j in range(n - ni):
            f = Fraction(schur[i][j]) * (2 if i != j else 1)
            sgrid = sgrid * f.denominator // math.gcd(sgrid, f.denominator)
    glen = sgrid * r + 1

    # outer histograms per shift class
    hist_out = {}
    bounds = _coordinate_bounds(schur, r)
    schur_s = [[int(Fraction(schur[i][j]) * sgrid) if i == j else Fraction(schur[i][j]) * sgrid for j in range(n - ni)] for i in range(n - ni)]
    if n - ni == 1:
        ws = np.arange(-bounds[0], bounds[0] + 1, dtype=np.int64)
        wlist = ws.reshape(-1, 1)
    else:
        g0 = np.arange(-bounds[0], bounds[0] + 1, dtype=np.int64)
        g1 = np.arange(-bounds[1], bounds[1] + 1, dtype=np.int64)
        a0, a1 = np.meshgrid(g0, g1, indexing="ij")
        wlist = np.stack([a0.ravel(), a1.ravel()], axis=1)
    # exact scaled outer values: sgrid * schur(w); schur entries * sgrid need not be
    # integral individually, so evaluate with doubled scale then halve exactly
    s2 = [[int(Fraction(schur[i][j]) * 2 * sgrid) for j in range(n - ni)] for i in range(n - ni)]
    s2m = np.array(s2, dtype=np.int64)
    twice_vals = np.einsum("ki,ij,kj->k", wlist, s2m, wlist)
    assert not np.any(twice_vals % 2)
    wvals = twice_vals // 2
    keep = (wvals >= 0) & (wvals <= sgrid * r)
    wlist, wvals = wlist[keep], wvals[keep]
    wmod = [tuple(Fraction(-sum(mshift[i][j] * int(w[j]) for j in range(n - ni))) % 1 for i in range(ni)) for w in wlist]
    for cls, v in zip(wmod, wvals.tolist()):
        h = hist_out.setdefault(cls, np.zeros(glen, dtype=np.int64))
        h[v] += 1

    total = np.zeros(2 * glen, dtype=np.int64)
    abounds_cache = {}
    for cls, hout in hist_out.items():
        # inner histogram: u in Z^2, value = A(u + sigma) with sigma == -cls rep
        sigma = [Fraction(k) for k in cls]
        binner = [scalar(2 * sum(a[i][j] * sigma[j] for j in range(ni))) for i in range(ni)]
        cinner = form_value(a, sigma)
        key = cls
        if key not in abounds_cache:
            abounds_cache[key] = _inner_hist(a, binner, cinner, r, sgrid, glen)
        hin = abounds_cache[key]
        total[: 2 * glen - 1] += np.convolve(hin, hout)
    counts = total[:: sgrid][: r + 1].copy()
    stray = total.copy()
    stray[:: sgrid] = 0
    assert not stray.any(), "mass off the integer grid"
    return counts


def _inner_hist(a, blin, cconst, r, sgrid, glen):
    # histogram of sgrid * (u^t A u + blin . u + cconst) over u in Z^2, value <= sgrid*r
    # bound: A(u + sigma) <= r  =>  u in shifted ellipse; pad the coordinate box by 2
    ainv = inverse(a)
    b0 = isqrt_frac_floor(Fraction(r) * Fraction(ainv[0][0])) + 2
    b1 = isqrt_frac_floor(Fraction(r) * Fraction(ainv[1][1])) + 2
    u0 = np.arange(-b0, b0 + 1, dtype=np.int64)
    u1 = np.arange(-b1, b1 + 1, dtype=np.int64)
    g0, g1 = np.meshgrid(u0, u1, indexing="ij")
    us = np.stack([g0.ravel(), g1.ravel()], axis=1)
    am = np.array([[int(Fraction(a[i][j]) * 2 * sgrid) for j in range(2)] for i in range(2)], dtype=np.int64)
    bm = np.array([int(Fraction(blin[i]) * 2 * sgrid) for i in range(2)], dtype=np.int64)
    c2 = int(Fraction(cconst) * 2 * sgrid)
    twice = np.einsum("ki,ij,kj->k", us, am, us) + us @ bm + c2
    assert not np.any(twice % 2)
    vals = twice // 2
    keep = (vals >= 0) & (vals <= sgrid * r)
    h = np.zeros(glen, dtype=np.int64)
    np.add.at(h, vals[keep], 1)
    return h
