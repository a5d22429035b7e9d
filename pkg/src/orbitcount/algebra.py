"""Finite-dimensional Q-algebras given by exact structure constants.

An AlgebraSpec fixes a distinguished basis e_1..e_n with rational structure
constants e_i e_j = sum_k c[i][j][k] e_k; elements are coordinate vectors in
that basis.  Norms, inverses and conjugation are all computed exactly.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import det, frac, frac_str, inverse, mat, mat_mul, mat_vec, scalar, solve, vec

NUMBER_FIELD = "number-field"
QUATERNION = "quaternion"


@dataclass(frozen=True)
class AlgebraElement:
    coords: tuple

    def __iter__(self):
        return iter(self.coords)

    def is_integral(self):
        return all(isinstance(x, int) for x in self.coords)

    def is_zero(self):
        return all(x == 0 for x in self.coords)


def element(xs):
    return AlgebraElement(vec(xs))


@dataclass(frozen=True)
class AlgebraSpec:
    dim: int
    table: tuple          # table[i][j] = coordinate tuple of e_i e_j
    unity: tuple
    kind: str
    involution: tuple = None  # optional matrix of the standard involution

    def __post_init__(self):
        if len(self.table) != self.dim or any(
            len(row) != self.dim or any(len(c) != self.dim for c in row) for row in self.table
        ):
            raise ValueError("structure constant table has wrong shape")
        if len(self.unity) != self.dim:
            raise ValueError("unity has wrong length")
        if self.kind not in (NUMBER_FIELD, QUATERNION):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.kind == QUATERNION and self.involution is None:
            raise ValueError("quaternion algebra requires an involution")

    def one(self):
        return AlgebraElement(self.unity)

    def basis_element(self, i):
        return AlgebraElement(tuple(1 if j == i else 0 for j in range(self.dim)))

    def check_axioms(self):
        """Verify associativity and unitality on all basis triples, and that the
        involution (when present) is an order-2 anti-automorphism.  Raises on failure."""
        n = self.dim
        basis = [self.basis_element(i) for i in range(n)]
        one = self.one()
        for i in range(n):
            if alg_mul(one, basis[i], self) != basis[i] or alg_mul(basis[i], one, self) != basis[i]:
                raise ValueError("unity is not a two-sided identity")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = alg_mul(alg_mul(basis[i], basis[j], self), basis[k], self)
                    rhs = alg_mul(basis[i], alg_mul(basis[j], basis[k], self), self)
                    if lhs != rhs:
                        raise ValueError(f"associativity fails on basis triple {(i, j, k)}")
        if self.involution is not None:
            for i in range(n):
                if alg_conj(alg_conj(basis[i], self), self) != basis[i]:
                    raise ValueError("involution is not of order 2")
            for i in range(n):
                for j in range(n):
                    lhs = alg_conj(alg_mul(basis[i], basis[j], self), self)
                    rhs = alg_mul(alg_conj(basis[j], self), alg_conj(basis[i], self), self)
                    if lhs != rhs:
                        raise ValueError("involution is not an anti-automorphism")

    def to_json(self):
        doc = {
            "dim": self.dim,
            "kind": self.kind,
            "structure_constants": [
                [[frac_str(c) for c in cell] for cell in row] for row in self.table
            ],
            "unity": [frac_str(c) for c in self.unity],
        }
        if self.involution is not None:
            doc["involution"] = [[int(c) for c in row] for row in self.involution]
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text):
        doc = json.loads(text)
        table = tuple(
            tuple(vec(frac(c) for c in cell) for cell in row) for row in doc["structure_constants"]
        )
        inv = mat(doc["involution"]) if "involution" in doc else None
        return AlgebraSpec(
            dim=int(doc["dim"]),
            table=table,
            unity=vec(frac(c) for c in doc["unity"]),
            kind=doc["kind"],
            involution=inv,
        )


def algebra_spec(table, unity, kind, involution=None):
    tab = tuple(tuple(vec(c) for c in row) for row in table)
    inv = mat(involution) if involution is not None else None
    return AlgebraSpec(dim=len(tab), table=tab, unity=vec(unity), kind=kind, involution=inv)


def alg_add(a, b):
    return AlgebraElement(tuple(scalar(x + y) for x, y in zip(a.coords, b.coords)))


def alg_sub(a, b):
    return AlgebraElement(tuple(scalar(x - y) for x, y in zip(a.coords, b.coords)))


def alg_scale(c, a):
    return AlgebraElement(tuple(scalar(c * x) for x in a.coords))


def alg_mul(a, b, spec):
    """Bilinear product via structure constants, exact."""
    n = spec.dim
    if len(a.coords) != n or len(b.coords) != n:
        raise ValueError("dimension mismatch")
    out = [0] * n
    table = spec.table
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        row = table[i]
        for j, bj in enumerate(b.coords):
            if bj == 0:
                continue
            c = ai * bj
            cell = row[j]
            for k in range(n):
                t = cell[k]
                if t:
                    out[k] += c * t
    return AlgebraElement(tuple(scalar(x) for x in out))


def left_mul_matrix(a, spec):
    """Matrix of x -> a*x in the distinguished basis (columns are a*e_j)."""
    n = spec.dim
    cols = [alg_mul(a, spec.basis_element(j), spec).coords for j in range(n)]
    return tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))


def alg_conj(a, spec):
    if spec.involution is None:
        raise ValueError("algebra has no involution")
    return AlgebraElement(mat_vec(spec.involution, a.coords))


def alg_norm(a, spec):
    """Norm form: det of left multiplication for number fields, reduced norm
    a * conj(a) for quaternion algebras."""
    if spec.kind == NUMBER_FIELD:
        return det(left_mul_matrix(a, spec))
    p = alg_mul(a, alg_conj(a, spec), spec)
    # a*conj(a) must be a scalar multiple of unity
    i0 = next(i for i, u in enumerate(spec.unity) if u != 0)
    lam = scalar(Fraction(p.coords[i0], 1) / spec.unity[i0])
    if any(scalar(lam * u) != c for u, c in zip(spec.unity, p.coords)):
        raise ValueError("x * conj(x) is not scalar; involution is not standard")
    return lam


def alg_inverse(a, spec):
    """Exact inverse: solve (left multiplication by a) x = 1."""
    m = left_mul_matrix(a, spec)
    x = solve(m, spec.unity)
    if x is None:
        raise ZeroDivisionError("element is not invertible (norm 0)")
    return AlgebraElement(x)


def alg_pow(a, k, spec):
    if k < 0:
        return alg_pow(alg_inverse(a, spec), -k, spec)
    out = spec.one()
    for _ in range(k):
        out = alg_mul(out, a, spec)
    return out


def minimal_polynomial(a, spec):
    """Monic minimal polynomial of a over Q, as a list of Fractions
    [c_0, ..., c_{d-1}, 1] with sum c_k a^k = 0."""
    n = spec.dim
    powers = [spec.one().coords]
    cur = spec.one()
    for _ in range(n):
        cur = alg_mul(cur, a, spec)
        powers.append(cur.coords)
    for d in range(1, n + 1):
        # is a^d a combination of 1, a, ..., a^{d-1}?
        cols = powers[:d]
        target = powers[d]
        sol = _solve_rectangular(cols, target)
        if sol is not None:
            coeffs = [scalar(-c) for c in sol] + [1]
            return coeffs
    raise AssertionError("minimal polynomial not found below algebra dimension")


def _solve_rectangular(cols, target):
    # least-structure exact solve: find x with sum x_i cols[i] = target, or None
    n = len(target)
    d = len(cols)
    m = [[Fraction(cols[j][i]) for j in range(d)] + [Fraction(target[i])] for i in range(n)]
    row = 0
    pivots = []
    for col in range(d):
        piv = next((r for r in range(row, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        for r in range(n):
            if r != row and m[r][col]:
                f = m[r][col] / p
                for c in range(col, d + 1):
                    m[r][c] -= f * m[row][c]
        pivots.append((row, col))
        row += 1
    for r in range(row, n):
        if m[r][d] != 0:
            return None
    x = [Fraction(0)] * d
    for r, c in pivots:
        x[c] = m[r][d] / m[r][c]
    return x


def change_of_basis(spec, basis_rows, kind=None):
    """Algebra presented in a new basis; basis_rows[i] are the coordinates of the
    new basis vectors in the old one.  Exact; raises if the rows are dependent."""
    t = mat(basis_rows)
    tinv = inverse(t)
    n = spec.dim
    new_basis = [AlgebraElement(t[i]) for i in range(n)]
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = alg_mul(new_basis[i], new_basis[j], spec).coords
            row.append(vec(vec_mul_mat(prod, tinv)))
        table.append(tuple(row))
    unity_new = vec(vec_mul_mat(spec.unity, tinv))
    inv_mat = None
    if spec.involution is not None:
        # conj acts on new coordinate columns as (T^t)^-1 C T^t
        tt = tuple(zip(*t))
        ttinv = inverse(tt)
        inv_mat = mat(mat_mul(ttinv, mat_mul(spec.involution, tt)))
    return AlgebraSpec(
        dim=n, table=tuple(table), unity=unity_new, kind=kind or spec.kind, involution=inv_mat
    )


def vec_mul_mat(v, m):
    n = len(m)
    return tuple(scalar(sum(v[i] * m[i][j] for i in range(n))) for j in range(len(m[0])))


def quadratic_field_order(d):
    """The order Z[sqrt(d)] with basis (1, sqrt(d)); d a nonsquare integer."""
    table = [
        [(1, 0), (0, 1)],
        [(0, 1), (d, 0)],
    ]
    return algebra_spec(table, (1, 0), NUMBER_FIELD)


def quaternion_algebra(a, b):
    """Quaternion algebra (a, b / Q) on the basis (1, i, j, k):
    i^2 = a, j^2 = b, ij = k = -ji."""
    one, i, j, k = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    z = (0, 0, 0, 0)

    def s(c, v):
        return tuple(scalar(c * x) for x in v)

    table = [
        [one, i, j, k],
        [i, s(a, one), k, s(a, j)],
        [j, s(-1, k), s(b, one), s(-b, i)],
        [k, s(-a, j), s(b, i), s(-a * b, one)],
    ]
    invol = [(1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)]
    return algebra_spec(table, one, QUATERNION, involution=invol)
