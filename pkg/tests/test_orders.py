import random

import pytest

from orbitcount.algebra import alg_mul, alg_norm, element
from orbitcount.oracles import pairwise_orbits
from orbitcount.orders import (
    associated,
    canonical_rep,
    finite_units,
    fundamental_unit,
    is_unit,
    norm_gram,
    trace_form_discriminant,
    units_for,
)
from orbitcount.presets import order_gauss, order_hurwitz, order_lipschitz, order_zsqrt2
from orbitcount.shells import definite_shell
from orbitcount.lattice import box_scan


def test_is_unit_examples():
    assert is_unit(element((1, 1)), order_zsqrt2())          # norm -1
    assert is_unit(element((0, 1)), order_gauss())
    assert not is_unit(element((1, 1, 0, 0)), order_lipschitz())  # norm 2


def test_associated_examples():
    zs2 = order_zsqrt2()
    assert associated(element((1, 0)), element((3, 2)), zs2)     # 3 + 2 sqrt2 is a unit
    gauss = order_gauss()
    assert associated(element((1, 1)), element((1, -1)), gauss)  # quotient is -i
    assert not associated(element((1, 0)), element((0, 1)), zs2)  # norms 1 vs -2
    with pytest.raises(ValueError):
        associated(element((0, 0)), element((1, 0)), zs2)


@pytest.mark.parametrize("order,levels", [
    (order_zsqrt2(), range(1, 15)),
    (order_gauss(), range(1, 15)),
])
def test_associated_is_equivalence_relation(order, levels):
    rng = random.Random(99)
    elems = []
    for k in levels:
        elems.extend(box_scan(order, k, 6))
    sample = rng.sample(elems, min(60, len(elems)))
    for x in sample:
        assert associated(x, x, order)
    for _ in range(200):
        x, y, z = rng.choice(sample), rng.choice(sample), rng.choice(sample)
        assert associated(x, y, order) == associated(y, x, order)
        if associated(x, y, order) and associated(y, z, order):
            assert associated(x, z, order)
        if associated(x, y, order):
            assert abs(alg_norm(x, order.algebra)) == abs(alg_norm(y, order.algebra))


def test_finite_units_counts():
    assert len(finite_units(order_gauss()).torsion) == 4
    assert len(finite_units(order_lipschitz()).torsion) == 8
    assert len(finite_units(order_hurwitz()).torsion) == 24
    with pytest.raises(ValueError):
        finite_units(order_zsqrt2())  # indefinite norm form


def test_fundamental_unit():
    zs2 = order_zsqrt2()
    fu = fundamental_unit(zs2)
    assert fu.fundamental[0].coords == (1, 1)
    assert alg_norm(fu.fundamental[0], zs2.algebra) == -1
    assert fu.norm_one_fundamental.coords == (3, 2)
    from orbitcount.algebra import quadratic_field_order
    from orbitcount.orders import OrderSpec

    zs3 = OrderSpec(quadratic_field_order(3), 2, 1)
    fu3 = fundamental_unit(zs3)
    assert fu3.fundamental[0].coords == (2, 1)
    assert alg_norm(fu3.fundamental[0], zs3.algebra) == 1
    with pytest.raises(ValueError):
        fundamental_unit(order_gauss())  # rank 0


def test_discriminants():
    assert trace_form_discriminant(order_zsqrt2()) == 8
    assert trace_form_discriminant(order_gauss()) == -4


def test_canonical_rep_examples():
    zs2 = order_zsqrt2()
    fu = fundamental_unit(zs2)
    # every norm-one unit multiple of 1 lands on the same representative
    base = canonical_rep(element((1, 0)), fu, zs2)
    assert canonical_rep(element((17, 12)), fu, zs2) == base   # (3+2sqrt2)^2
    assert canonical_rep(element((-3, -2)), fu, zs2) == base
    x = element((7, 5))
    assert canonical_rep(canonical_rep(x, fu, zs2), fu, zs2) == canonical_rep(x, fu, zs2)
    gauss = order_gauss()
    ug = finite_units(gauss)
    assert canonical_rep(element((-1, -2)), ug, gauss).coords == (1, 2)


@pytest.mark.parametrize("order", [order_zsqrt2(), order_gauss()])
def test_canonical_rep_unit_invariance(order):
    units = units_for(order)
    rng = random.Random(4)
    norm_one_units = [u for u in units.torsion if alg_norm(u, order.algebra) == 1]
    if units.norm_one_fundamental is not None:
        norm_one_units.append(units.norm_one_fundamental)
    for _ in range(40):
        x = element((rng.randint(-9, 9), rng.randint(-9, 9)))
        if x.is_zero() or alg_norm(x, order.algebra) == 0:
            continue
        r = canonical_rep(x, units, order)
        for u in norm_one_units:
            assert canonical_rep(alg_mul(u, x, order.algebra), units, order) == r


def level_shell(order, k, bound=None):
    """All integral elements of norm exactly k (signed), exhaustively."""
    if order.unit_rank == 0:
        return [element(tuple(v)) for v in definite_shell(norm_gram(order), k)]
    # real quadratic: a box certainly containing the balanced window for small k
    from orbitcount.lattice import indefinite_quadratic_shell

    return indefinite_quadratic_shell(order, k)


def test_canonical_rep_matches_pairwise_oracle_quadratic_orders():
    """Partition by canonical_rep equals the union-find partition by associated()
    on every shell with level <= 200 for the quadratic-order presets."""
    gauss = order_gauss()
    ug = finite_units(gauss)
    for k in range(1, 201):
        shell = [element(tuple(v)) for v in definite_shell(norm_gram(gauss), k)]
        if not shell:
            continue
        by_canon = {}
        for x in shell:
            by_canon.setdefault(canonical_rep(x, ug, gauss).coords, set()).add(x.coords)
        classes = pairwise_orbits(shell, gauss)
        oracle_partition = {frozenset(e.coords for e in cls) for cls in classes}
        assert {frozenset(v) for v in by_canon.values()} == oracle_partition, k

    zs2 = order_zsqrt2()
    fu = fundamental_unit(zs2)
    for k in list(range(1, 31)) + [98, 119, 127, 161, 199]:
        for signed in (k, -k):
            reps = level_shell(zs2, signed)
            if not reps:
                continue
            # representatives of distinct orbits are pairwise non-associated
            for i in range(len(reps)):
                for j in range(i + 1, len(reps)):
                    assert not associated(reps[i], reps[j], zs2)
            # and every box element of that norm joins some listed orbit
            box = [x for x in box_scan(zs2, abs(signed), 40)
                   if alg_norm(x, zs2.algebra) == signed]
            for x in box:
                assert canonical_rep(x, fu, zs2) in reps


def test_canonical_rep_quaternion_spot():
    lip = order_lipschitz()
    units = finite_units(lip)
    for m in (1, 2, 3, 4, 5):
        shell = [element(tuple(v)) for v in definite_shell(norm_gram(lip), m)]
        by_canon = {}
        for x in shell:
            by_canon.setdefault(canonical_rep(x, units, lip).coords, set()).add(x.coords)
        classes = pairwise_orbits(shell, lip)
        assert {frozenset(e.coords for e in c) for c in classes} == {
            frozenset(v) for v in by_canon.values()
        }
        for cls in classes:
            assert len(cls) == len(units.torsion)  # free action


def test_order_and_units_serialization_round_trip():
    from orbitcount.orders import OrderSpec, UnitGroupData

    for order in (order_zsqrt2(), order_gauss(), order_lipschitz(), order_hurwitz()):
        assert OrderSpec.from_json(order.to_json()) == order
    fu = fundamental_unit(order_zsqrt2())
    assert UnitGroupData.from_json(fu.to_json()) == fu
    ug = finite_units(order_gauss())
    assert UnitGroupData.from_json(ug.to_json()) == ug
