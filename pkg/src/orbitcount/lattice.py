"""Integral points on affine fibers and cone sections, box scans, and the
orbit-complete shell enumeration for real quadratic orders.

cone_section_points realises the level-set geometry directly: build the
affine lattice fiber ell = k, restrict the cone equation to it, and solve the
resulting definite inhomogeneous quadratic by exact shell enumeration.  The
conic parametrisation below is an equivalent fast path for three variables,
used by the bulk series driver and cross-checked against the fiber route.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form

from .algebra import AlgebraElement, element
from .exact import (
    clear_denominators,
    gcd_vector,
    primitive_integer_row,
    scalar,
    sqrt_sign,
    unimodular_completion,
    vec,
)
from .orders import canonical_rep, fundamental_unit, real_quadratic_d
from .shells import definite_shell, shifted_shell_2d


@dataclass(frozen=True)
class AffineLatticeFiber:
    offset: tuple   # rational particular solution of ell(x) = k
    basis: tuple    # integer columns spanning ker(ell) cap Z^n


def affine_fiber(ell, k):
    """The fiber {x in Z^n : ell(x) = k} as offset + Z-span(basis), or None when
    it contains no integral point."""
    ell_int, s = primitive_integer_row(ell)
    # ell . x = k  <=>  ell_int . x = s k, which needs s k integral
    t = Fraction(k) * s
    if t.denominator != 1:
        return None
    t = t.numerator
    n = len(ell_int)
    u = unimodular_completion(ell_int)
    offset = tuple(u[i][0] * t for i in range(n))
    basis = tuple(tuple(u[i][j] for j in range(1, n)) for i in range(n))
    return AffineLatticeFiber(offset=vec(offset), basis=basis)


def _fiber_quadric_data(section, fiber, qtarget):
    """Restrict q(x) = qtarget to x = offset + B t: returns integer (A, b, c)
    with solutions  t^t A t + 2 b^t t + c = 0  (after clearing denominators)."""
    n = section.dim
    nb = n - 1
    bcols = list(zip(*fiber.basis))
    a = [[section.bilinear(bcols[i], bcols[j]) for j in range(nb)] for i in range(nb)]
    b = [section.bilinear(bcols[i], fiber.offset) for i in range(nb)]
    c = section.q_value(fiber.offset) - qtarget
    flat = [x for row in a for x in row] + list(b) + [c]
    ints, _ = clear_denominators(flat)
    k = 0
    a_i = [[0] * nb for _ in range(nb)]
    for i in range(nb):
        for j in range(nb):
            a_i[i][j] = ints[k]
            k += 1
    b_i = ints[k : k + nb]
    c_i = ints[k + nb]
    return a_i, b_i, c_i


def fiber_section_points(section, k, qtarget=0, primitive=True):
    """Complete list of x in Z^n with ell(x) = k and q(x) = qtarget.

    k and qtarget are rationals; requires q|ker(ell) definite.  Points are
    lexicographically sorted; primitive filters gcd = 1.
    """
    fiber = affine_fiber(section.ell, k)
    if fiber is None:
        return []
    a, b, c = _fiber_quadric_data(section, fiber, qtarget)
    nb = section.dim - 1
    # q|W definite: normalise to positive definite
    if a[0][0] < 0:
        a = [[-x for x in row] for row in a]
        b = [-x for x in b]
        c = -c
    if nb == 2:
        sols = shifted_shell_2d(a[0][0], a[0][1], a[1][1], b[0], b[1], c)
    else:
        sols = _shifted_shell_generic(a, b, c)
    out = []
    for t in sols:
        x = tuple(fiber.offset[i] + sum(fiber.basis[i][j] * t[j] for j in range(nb)) for i in range(section.dim))
        x = tuple(int(v) for v in x)
        if primitive and gcd_vector(x) != 1:
            continue
        out.append(x)
    return sorted(out)


def _shifted_shell_generic(a, b, c):
    # exact backtracking fallback for fibers of dimension != 2: complete the
    # square, (t + A^-1 b)^t A (t + A^-1 b) = b^t A^-1 b - c
    nb = len(a)
    from .exact import solve

    shift = solve(a, b)
    m = scalar(
        sum(a[i][j] * shift[i] * shift[j] for i in range(nb) for j in range(nb)) - Fraction(c)
    )
    if m < 0:
        return []
    return [tuple(t) for t in definite_shell(a, m, shift=shift)]


def cone_section_points(section, k):
    """The finite set of primitive x in Z^n with q(x) = 0, ell(x) = k > 0."""
    if k <= 0:
        raise ValueError("level must be positive")
    return fiber_section_points(section, k, qtarget=0, primitive=True)


def conic_parametrization(section):
    """For dim 3: integer quadratic parametrisation of the projective conic
    q = 0 through the base point.

    Returns (phi, psi, content_bound): phi is a 3x3 integer matrix of binary
    quadratic form coefficients (rows = coordinates, columns = coefficients of
    s^2, s t, t^2), psi the positive definite integer form with
    psi(s, t) = scale_e * ell(phi(s, t)), and content_bound an integer N such
    that gcd(phi(s, t)) divides N for coprime (s, t).
    """
    if section.dim != 3:
        raise ValueError("conic parametrisation needs three variables")
    g_flat = [x for row in section.gram for x in row]
    g_int_flat, _ = clear_denominators(g_flat)
    gi = [g_int_flat[3 * i : 3 * i + 3] for i in range(3)]
    v0 = section.base_point
    # complete v0 to a rational basis with two standard vectors
    std = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    pick = []
    for w in std:
        trial = [v0] + pick + [w]
        m = sympy.Matrix(trial)
        if m.rank() == len(trial):
            pick.append(w)
        if len(pick) == 2:
            break
    w1, w2 = pick

    def bil(u, v):
        return sum(gi[i][j] * u[i] * v[j] for i in range(3) for j in range(3))

    # phi(w) = q(w) v0 - 2 B(v0, w) w,  w = s w1 + t w2
    rows = []
    for i in range(3):
        c_ss = bil(w1, w1) * v0[i] - 2 * bil(v0, w1) * w1[i]
        c_st = 2 * bil(w1, w2) * v0[i] - 2 * (bil(v0, w1) * w2[i] + bil(v0, w2) * w1[i])
        c_tt = bil(w2, w2) * v0[i] - 2 * bil(v0, w2) * w2[i]
        rows.append((c_ss, c_st, c_tt))
    phi = tuple(rows)
    # psi = scale_e * ell o phi (integer binary form coefficients)
    e = section.scale_e
    psi = tuple(
        int(sum(Fraction(section.ell[i]) * e * phi[i][j] for i in range(3))) for j in range(3)
    )
    sgn = _binary_form_sign(psi)
    if sgn == 0:
        raise AssertionError("level form indefinite; section preconditions violated")
    if sgn < 0:
        phi = tuple(tuple(-c for c in row) for row in phi)
        psi = tuple(-c for c in psi)
    n_bound = _content_bound(phi)
    return phi, psi, n_bound


def _binary_form_sign(f):
    a, b, c = f
    disc = b * b - 4 * a * c
    if disc >= 0:
        return 0
    return 1 if a > 0 else -1


def _content_bound(phi):
    """Exponent of the cokernel of (deg-2 forms)^3 -> deg-4 forms, (a_i) -> sum a_i phi_i.

    For coprime (s, t), gcd over i of phi_i(s, t) divides this bound.
    """
    cols = []
    for i in range(3):
        f = phi[i]
        for shift in range(3):  # multiply by s^2, s t, t^2
            col = [0] * 5
            for j in range(3):
                col[j + shift] += f[j]
            cols.append(col)
    m = sympy.Matrix(cols).T  # 5 x 9
    if m.rank() < 5:
        raise AssertionError("parametrisation forms share a root; conic degenerate")
    snf = smith_normal_form(m)
    divisors = [abs(snf[i, i]) for i in range(5)]
    return int(divisors[-1])


def conic_points_up_to(section, r_scaled):
    """All primitive x in Z^n, q(x) = 0, with scaled level 1 <= e*ell(x) <= r_scaled.

    Returns (points array (N, 3) int64, levels array int64), each primitive
    point exactly once.  Fast path for the three-variable series driver.
    """
    phi, psi, n_bound = conic_parametrization(section)
    a, b, c = psi
    bound = r_scaled * n_bound
    # enumerate (s, t), s >= 0 (one representative of +-): psi(s,t) <= bound
    disc = 4 * a * c - b * b
    smax = math.isqrt(4 * c * bound // disc) + 2
    pts, lvls = [], []
    phi_m = np.array(phi, dtype=np.int64)
    for s in range(0, smax + 1):
        # c t^2 + b s t + a s^2 - bound <= 0
        dd = b * b * s * s - 4 * c * (a * s * s - bound)
        if dd < 0:
            continue
        root = math.isqrt(dd)
        lo = (-b * s - root) // (2 * c) - 1
        hi = (-b * s + root) // (2 * c) + 2
        ts = np.arange(lo, hi + 1, dtype=np.int64)
        vals = a * s * s + b * s * ts + c * ts * ts
        keep = (vals > 0) & (vals <= bound)
        if s == 0:
            keep &= ts > 0
        ts, vals = ts[keep], vals[keep]
        if len(ts) == 0:
            continue
        co = np.gcd(np.int64(s), ts) == 1
        ts, vals = ts[co], vals[co]
        if len(ts) == 0:
            continue
        mono = np.stack([np.full_like(ts, s * s), s * ts, ts * ts], axis=0)
        xs = phi_m @ mono  # (3, N)
        content = np.gcd.reduce(np.abs(xs), axis=0)
        assert np.all(content > 0)
        assert not np.any(vals % content), "content must divide the level form"
        levels = vals // content
        keep2 = levels <= r_scaled
        if not keep2.any():
            continue
        xs = (xs[:, keep2] // content[keep2]).T
        lv = levels[keep2]
        pts.append(xs)
        lvls.append(lv)
    if not pts:
        return np.zeros((0, 3), dtype=np.int64), np.zeros(0, dtype=np.int64)
    pts = np.vstack(pts)
    lvls = np.concatenate(lvls)
    order = np.lexsort((pts[:, 2], pts[:, 1], pts[:, 0], lvls))
    return pts[order], lvls[order]


def box_scan(order, k, bound):
    """All integral elements with |coordinates| <= bound and |norm| = k.

    Exhaustive over the box, not over orbits; callers must treat the result as
    heuristic with respect to orbit completeness.
    """
    if bound < 1:
        raise ValueError("box bound must be >= 1")
    n = order.dim()
    out = []
    for coords in product(range(-bound, bound + 1), repeat=n):
        if all(c == 0 for c in coords):
            continue
        x = AlgebraElement(coords)
        if abs(order.norm(x)) == k:
            out.append(x)
    return sorted(out, key=lambda e: e.coords)


def indefinite_quadratic_shell(order, k, bound_scale=1):
    """Orbit-complete representatives of {x in Z[sqrt(d)] : norm(x) = k}, k != 0.

    Every norm-one-unit orbit contains a balanced element with
    max(|s1(x)|, |s2(x)|)^2 <= |k| * eps0^2 (slide by unit powers);  the box
    containing all balanced elements is scanned exactly and deduplicated by
    canonical_rep.  bound_scale > 1 widens the window (a saturation check:
    the representative set must not grow).
    """
    if k == 0:
        raise ValueError("k = 0 is not a torsor level")
    d = real_quadratic_d(order)
    if d is None:
        raise ValueError("indefinite_quadratic_shell needs a real quadratic order")
    units = fundamental_unit(order)
    x0, y0 = units.fundamental[0].coords
    # eps0^2 = e1 + e2 sqrt(d)
    e1, e2 = x0 * x0 + d * y0 * y0, 2 * x0 * y0
    e1, e2 = e1 * bound_scale * bound_scale, e2 * bound_scale * bound_scale
    ak = abs(k)
    # bounds: (2a)^2 <= 4 M^2 and 4 d b^2 <= 4 M^2 with M^2 = ak * eps0^2
    amax = _quad_bound(ak * e1, ak * e2, d, 1)
    bmax = _quad_bound(ak * e1, ak * e2, d, d)
    reps = set()
    out = []
    for a in range(-amax, amax + 1):
        for b in range(-bmax, bmax + 1):
            if a * a - d * b * b != k:
                continue
            big = (a * a + d * b * b, 2 * abs(a * b))
            # balanced window: max embedding^2 <= ak * eps0^2
            if sqrt_sign(ak * e1 - big[0], ak * e2 - big[1], d) < 0:
                continue
            r = canonical_rep(element((a, b)), units, order)
            if r.coords not in reps:
                reps.add(r.coords)
                out.append(r)
    return sorted(out, key=lambda e: e.coords)


def _quad_bound(p, q, d, coeff):
    # largest integer v with coeff * v^2 <= p + q sqrt(d)
    approx = int(math.isqrt(max(0, (p + math.isqrt(q * q * d) + 1) // coeff))) + 2
    v = approx
    while v >= 0 and sqrt_sign(p - coeff * v * v, q, d) < 0:
        v -= 1
    return v
