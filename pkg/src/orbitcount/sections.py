"""Quadric hyperplane-section data: a rational quadratic form q, a nonzero
rational linear form ell, a base point on the cone, and the level scaling.

Supported sections have q restricted to ker(ell) definite over R (checked
exactly via principal minors on a kernel basis); levels ell(x) for integral x
lie in (1/e)Z with e read off the denominators of ell.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    definiteness,
    det,
    gcd_vector,
    mat,
    primitive_integer_row,
    scalar,
    unimodular_completion,
    vec,
)


@dataclass(frozen=True)
class QuadricSectionSpec:
    gram: tuple          # symmetric rational matrix of q
    ell: tuple           # rational row vector of the linear form
    base_point: tuple    # integer v0 with q(v0) = 0, ell(v0) > 0
    scale_e: int         # levels of integral points lie in (1/scale_e) Z

    def __post_init__(self):
        g = self.gram
        n = len(g)
        if any(len(r) != n for r in g):
            raise ValueError("gram matrix not square")
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix not symmetric")
        if det(g) == 0:
            raise ValueError("quadratic form is degenerate")
        if all(c == 0 for c in self.ell):
            raise ValueError("linear form is zero")
        if self.q_value(self.base_point) != 0:
            raise ValueError("base point is not on the cone")
        if self.ell_value(self.base_point) <= 0:
            raise ValueError("base point must have positive level")

    @property
    def dim(self):
        return len(self.gram)

    def q_value(self, x):
        g = self.gram
        n = self.dim
        return scalar(sum(g[i][j] * x[i] * x[j] for i in range(n) for j in range(n)))

    def ell_value(self, x):
        return scalar(sum(l * c for l, c in zip(self.ell, x)))

    def bilinear(self, x, y):
        g = self.gram
        n = self.dim
        return scalar(sum(g[i][j] * x[i] * y[j] for i in range(n) for j in range(n)))


def quadric_section(gram_rows, ell_row, base_point=None, search_bound=6):
    """Build and validate a QuadricSectionSpec.

    When base_point is None, a primitive integral cone point with positive
    level is searched in the box |x_i| <= search_bound.
    """
    g = mat(gram_rows)
    ell = vec(ell_row)
    n = len(g)
    ell_int, _ = primitive_integer_row(ell)
    e = 1
    for c in ell:
        f = Fraction(c)
        e = e * f.denominator // math.gcd(e, f.denominator)
    if base_point is None:
        base_point = _search_base_point(g, ell, n, search_bound)
        if base_point is None:
            raise ValueError(f"no primitive cone point with positive level in box {search_bound}")
    spec = QuadricSectionSpec(gram=g, ell=ell, base_point=vec(base_point), scale_e=e)
    w_gram = restricted_gram(spec)
    if definiteness(w_gram) == 0:
        raise ValueError("q restricted to ker(ell) is not definite over R (unsupported)")
    return spec


def _search_base_point(g, ell, n, bound):
    def qv(x):
        return sum(g[i][j] * x[i] * x[j] for i in range(n) for j in range(n))

    def lv(x):
        return sum(l * c for l, c in zip(ell, x))

    best = None
    from itertools import product

    for x in product(range(-bound, bound + 1), repeat=n):
        if all(c == 0 for c in x) or gcd_vector(x) != 1:
            continue
        if qv(x) == 0 and lv(x) > 0:
            if best is None or lv(x) < lv(best) or (lv(x) == lv(best) and x < best):
                best = x
    return best


def kernel_basis(section):
    """Integer basis of the rank n-1 lattice ker(ell) cap Z^n, as columns."""
    ell_int, _ = primitive_integer_row(section.ell)
    u = unimodular_completion(ell_int)
    n = section.dim
    # ell_int . U = (g, 0, ..., 0) with g = 1 for a primitive row
    return tuple(tuple(u[i][j] for j in range(1, n)) for i in range(n))


def restricted_gram(section):
    """Gram matrix of q restricted to ker(ell), on the integral kernel basis."""
    b = kernel_basis(section)
    n = section.dim
    cols = list(zip(*[[b[i][j] for j in range(n - 1)] for i in range(n)]))
    out = []
    for i in range(n - 1):
        row = []
        for j in range(n - 1):
            row.append(section.bilinear(cols[i], cols[j]))
        out.append(tuple(row))
    return tuple(out)


def restricted_definiteness(section):
    return definiteness(restricted_gram(section))
