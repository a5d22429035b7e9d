import random
from fractions import Fraction

import pytest

from orbitcount.algebra import (
    AlgebraSpec,
    alg_inverse,
    alg_mul,
    alg_norm,
    element,
    minimal_polynomial,
    quadratic_field_order,
    quaternion_algebra,
)
from orbitcount.presets import order_gauss, order_hurwitz, order_lipschitz, order_zsqrt2

ALL_SPECS = [
    order_zsqrt2().algebra,
    order_gauss().algebra,
    order_lipschitz().algebra,
    order_hurwitz().algebra,
]


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_axioms_on_all_shipped_algebras(spec):
    spec.check_axioms()


def test_mul_examples():
    zs2 = quadratic_field_order(2)
    a = element((2, 3))
    assert alg_mul(zs2.one(), a, zs2) == a
    assert alg_mul(element((0, 1)), element((0, 1)), zs2).coords == (2, 0)
    lip = quaternion_algebra(-1, -1)
    i, j = lip.basis_element(1), lip.basis_element(2)
    assert alg_mul(i, j, lip).coords == (0, 0, 0, 1)


def test_mul_dimension_mismatch():
    zs2 = quadratic_field_order(2)
    with pytest.raises(ValueError):
        alg_mul(element((1, 0, 0)), element((1, 0)), zs2)


def test_norm_examples():
    zs2 = quadratic_field_order(2)
    assert alg_norm(element((3, 2)), zs2) == 1          # 9 - 2*4
    gauss = quadratic_field_order(-1)
    assert alg_norm(element((1, 2)), gauss) == 5
    lip = quaternion_algebra(-1, -1)
    # oracle: reduced norm of a quaternion is the sum of four squares
    assert alg_norm(element((1, 1, 1, 1)), lip) == 1 + 1 + 1 + 1


def test_inverse_examples():
    zs2 = quadratic_field_order(2)
    assert alg_inverse(zs2.one(), zs2) == zs2.one()
    assert alg_inverse(element((3, 2)), zs2).coords == (3, -2)
    lip = quaternion_algebra(-1, -1)
    # oracle: x^-1 = conj(x) / norm(x)
    inv = alg_inverse(element((1, 1, 0, 0)), lip)
    assert inv.coords == (Fraction(1, 2), Fraction(-1, 2), 0, 0)
    with pytest.raises(ZeroDivisionError):
        alg_inverse(element((0, 0)), zs2)


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_norm_multiplicativity_random(spec):
    rng = random.Random(20240811)
    for _ in range(60):
        a = element([Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(spec.dim)])
        b = element([Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(spec.dim)])
        assert alg_norm(alg_mul(a, b, spec), spec) == alg_norm(a, spec) * alg_norm(b, spec)


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_inverse_is_two_sided(spec):
    rng = random.Random(7)
    done = 0
    while done < 20:
        a = element([rng.randint(-5, 5) for _ in range(spec.dim)])
        if a.is_zero() or alg_norm(a, spec) == 0:
            continue
        inv = alg_inverse(a, spec)
        assert alg_mul(a, inv, spec) == spec.one()
        assert alg_mul(inv, a, spec) == spec.one()
        done += 1


def test_minimal_polynomial():
    zs2 = quadratic_field_order(2)
    assert minimal_polynomial(element((0, 1)), zs2) == [-2, 0, 1]
    assert minimal_polynomial(element((1, 0)), zs2) == [-1, 1]
    hur = order_hurwitz().algebra
    w = hur.basis_element(3)
    assert minimal_polynomial(w, hur) == [1, -1, 1]


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_serialization_round_trip(spec):
    assert AlgebraSpec.from_json(spec.to_json()) == spec


def test_rejects_broken_structure_constants():
    # e0*e1 = e0 contradicts e0 being the unity
    bad_unital = [
        [(1, 0), (1, 0)],
        [(0, 1), (2, 0)],
    ]
    spec = AlgebraSpec(dim=2, table=tuple(tuple(map(tuple, r)) for r in bad_unital),
                       unity=(1, 0), kind="number-field")
    with pytest.raises(ValueError):
        spec.check_axioms()
    # e1*e1 = e0 one way but mixed products inconsistent: breaks associativity
    bad_assoc = [
        [(1, 0), (0, 1)],
        [(1, 1), (2, 0)],
    ]
    spec2 = AlgebraSpec(dim=2, table=tuple(tuple(map(tuple, r)) for r in bad_assoc),
                        unity=(1, 0), kind="number-field")
    with pytest.raises(ValueError):
        spec2.check_axioms()
