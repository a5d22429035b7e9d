"""Scenario drivers: per-level and cumulative orbit-count series for the
three families (norm forms, quadric sections, division-order norm shells),
with primitive/imprimitive aggregation.

Levels are integers after scaling by the family's denominator lcm; the
counting path is exact integer/rational arithmetic throughout.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import AlgebraElement, alg_mul, element, left_mul_matrix
from .exact import gcd_vector, scalar
from .lattice import (
    box_scan,
    cone_section_points,
    conic_points_up_to,
    fiber_section_points,
    indefinite_quadratic_shell,
)
from .oracles import pairwise_orbits
from .orders import (
    OrderSpec,
    canonical_rep,
    finite_units,
    fundamental_unit,
    is_unit,
    norm_gram,
    real_quadratic_d,
)
from .sections import QuadricSectionSpec
from .shells import ball_points, definite_shell, theta_series
from .symmetry import integral_symmetries, orbit_partition, weighted_count

FAMILY_NORMFORM = "normform"
FAMILY_QUADRIC = "quadric"
FAMILY_ALGEBRA = "algebra-norm"

# level-scaling degree: exponent of the level under x -> p x
def level_scaling_degree(family, payload):
    if family == FAMILY_NORMFORM:
        return payload.norm_degree
    if family == FAMILY_QUADRIC:
        return 1
    if family == FAMILY_ALGEBRA:
        return payload.norm_degree
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class ScenarioSpec:
    family: str
    payload: object            # OrderSpec or QuadricSectionSpec
    k_max: int
    mode: tuple = ("exact",)   # ("exact",) or ("box", B)
    count_primitive_only: bool = False
    use_absolute_norm: bool = False
    label: str = ""
    invariants: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.family not in (FAMILY_NORMFORM, FAMILY_QUADRIC, FAMILY_ALGEBRA):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == FAMILY_QUADRIC:
            if not isinstance(self.payload, QuadricSectionSpec):
                raise ValueError("quadric family needs a QuadricSectionSpec payload")
        elif not isinstance(self.payload, OrderSpec):
            raise ValueError(f"{self.family} family needs an OrderSpec payload")
        if self.k_max < 0:
            raise ValueError("k_max must be nonnegative")
        if self.mode[0] not in ("exact", "box"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.family == FAMILY_QUADRIC and self.mode[0] == "box":
            raise ValueError("box mode is not defined for quadric sections (exact support only)")


@dataclass
class CountSeries:
    family: str
    levels: list               # sorted integer levels (after scaling)
    n_prim: list
    n_all: list
    weighted: list             # Fractions; equals n_all when all stabilizers are trivial
    scale_e: int
    exact: list                # per-level exactness flags
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        k = len(self.levels)
        if not (len(self.n_prim) == len(self.n_all) == len(self.weighted) == len(self.exact) == k):
            raise ValueError("ragged series")
        if any(a < 0 or b < 0 for a, b in zip(self.n_prim, self.n_all)):
            raise ValueError("negative count")
        if any(a > b for a, b in zip(self.n_prim, self.n_all)):
            raise ValueError("n_prim exceeds n_all")

    def cumulative_prim(self, r_scaled):
        return sum(c for l, c in zip(self.levels, self.n_prim) if l <= r_scaled)

    def cumulative_all(self, r_scaled):
        return sum(c for l, c in zip(self.levels, self.n_all) if l <= r_scaled)

    def cumulative_weighted(self, r_scaled):
        return scalar(sum((c for l, c in zip(self.levels, self.weighted) if l <= r_scaled), Fraction(0)))


def cumulative(series, r, which="all"):
    """S(r) for r in original (unscaled) units; errors beyond the computed range."""
    r_scaled = Fraction(r) * series.scale_e
    if r_scaled > max(series.levels, default=0):
        raise ValueError(f"r = {r} beyond computed range")
    rs = math.floor(r_scaled)
    if which == "prim":
        return series.cumulative_prim(rs)
    if which == "weighted":
        return series.cumulative_weighted(rs)
    return series.cumulative_all(rs)


def aggregate_levels(prim_levels, prim_counts, d, k_max):
    """Aggregate a primitive per-level series: N_all(k) = sum over p >= 1 with
    p^d | k of N_prim(k / p^d).  Exact; levels are dense integers 1..k_max.
    Sieve order: O(k_max log k_max) for d = 1, O(k_max) for d >= 2."""
    if d < 1:
        raise ValueError("scaling degree must be >= 1")
    cmap = dict(zip(prim_levels, prim_counts))
    out = [0] * (k_max + 1)
    p = 1
    while p ** d <= k_max:
        q = p ** d
        for j in range(1, k_max // q + 1):
            c = cmap.get(j, 0)
            if c:
                out[j * q] += c
        p += 1
    return list(range(1, k_max + 1)), out[1:]


def imprimitive_from_primitive(series, d):
    """CountSeries with the imprimitive column rebuilt from the primitive one:
    the x -> p x identity aggregates counts and weights alike, since scaling is
    an orbit bijection that preserves stabilizers."""
    k_max = max(series.levels, default=0)
    _, n_all = aggregate_levels(series.levels, series.n_prim, d, k_max)
    wmap = dict(zip(series.levels, series.weighted))
    weighted = [Fraction(0)] * (k_max + 1)
    p = 1
    while p ** d <= k_max:
        q = p ** d
        for j in range(1, k_max // q + 1):
            w = _prim_weight(series, wmap, j)
            if w:
                weighted[j * q] += w
        p += 1
    weighted = [scalar(w) for w in weighted[1:]]
    return CountSeries(
        family=series.family, levels=list(range(1, k_max + 1)),
        n_prim=list(series.n_prim), n_all=n_all, weighted=weighted,
        scale_e=series.scale_e, exact=list(series.exact),
        meta=dict(series.meta, aggregated=f"d={d}"),
    )


def _prim_weight(series, wmap, level):
    # for the quadric family the stored weighted column is the primitive weight;
    # the other families have trivial stabilizers, so the primitive weight is n_prim
    if series.family == FAMILY_QUADRIC:
        return wmap.get(level, Fraction(0))
    idx = level - 1
    if 0 <= idx < len(series.n_prim):
        return Fraction(series.n_prim[idx])
    return Fraction(0)


# ---------------------------------------------------------------------------
# norm-form family


def _torsion_matrices(order, units):
    return [tuple(tuple(row) for row in left_mul_matrix(u, order.algebra)) for u in units.torsion]


def _torsion_best(cands):
    best = None
    for c in cands:
        lead = next((v for v in c if v != 0), None)
        if lead is None or lead < 0:
            continue
        if best is None or c < best:
            best = c
    if best is None:
        best = min(cands)
    return best


def _canonical_definite(coords, unit_mats):
    cands = [tuple(sum(m[i][j] * coords[j] for j in range(len(coords))) for i in range(len(coords))) for m in unit_mats]
    return _torsion_best(cands)


def count_normform_level(order, k, mode=("exact",)):
    """Number of norm-one-unit orbits of {x in O : norm(x) = k}, k != 0."""
    if k == 0:
        raise ValueError("k = 0 is not a group torsor level (excluded)")
    if mode[0] == "box":
        sols = box_scan(order, abs(k), mode[1])
        sols = [x for x in sols if order.norm(x) == k]
        if not sols:
            return 0
        return len(pairwise_orbits(sols, order))
    if order.unit_rank == 0:
        kf = Fraction(k)
        if kf <= 0 or kf.denominator != 1:
            return 0
        units = finite_units(order)
        mats = _torsion_matrices(order, units)
        shell = definite_shell(norm_gram(order), kf)
        reps = {_canonical_definite(tuple(x), mats) for x in shell}
        return len(reps)
    if order.unit_rank == 1:
        kf = Fraction(k)
        if kf.denominator != 1:
            return 0
        return len(indefinite_quadratic_shell(order, int(kf)))
    raise ValueError("unit rank >= 2: exact mode unsupported, use box mode")


def normform_series(order, r_max, mode=("exact",), use_absolute_norm=False, units=None):
    """Per-level orbit counts for levels 1..r_max (norm = k, or |norm| = k when
    use_absolute_norm).  Exact mode only; box mode goes through the per-level op.

    units may carry externally supplied (user-asserted) unit data for rank-1
    orders; it is verified before use."""
    r_max = int(r_max)
    levels = list(range(1, r_max + 1))
    if mode[0] == "box":
        pairs = [box_level_counts(order, k, mode[1], use_absolute_norm) for k in levels]
        prim = [p for p, _ in pairs]
        alln = [a for _, a in pairs]
        return CountSeries(
            family=FAMILY_NORMFORM, levels=levels, n_prim=prim, n_all=alln,
            weighted=[Fraction(c) for c in alln], scale_e=1,
            exact=[False] * len(levels), meta={"mode": f"box:{mode[1]}"},
        )
    if order.unit_rank == 0:
        return _definite_normform_series(order, r_max)
    if order.unit_rank == 1:
        return _real_quadratic_series(order, r_max, use_absolute_norm, units=units)
    raise ValueError("unit rank >= 2: exact mode unsupported, use box mode")


def user_asserted_units(order, coords):
    """UnitGroupData built from an externally computed fundamental unit.

    The element must be a non-torsion unit and must actually be fundamental
    (a proper power would silently split orbits, so it is cross-checked
    against the Pell solution, which is always available here)."""
    from .orders import UnitGroupData

    if order.unit_rank != 1 or real_quadratic_d(order) is None:
        raise ValueError("asserted fundamental units apply to real quadratic orders only")
    eps = element(tuple(coords))
    if not is_unit(eps, order):
        raise ValueError(f"asserted fundamental unit {coords} is not a unit of the order")
    if eps.coords[1] == 0:
        raise ValueError("asserted fundamental unit is torsion")
    reference = fundamental_unit(order)
    a, b = (abs(c) for c in eps.coords)
    if (a, b) != tuple(abs(c) for c in reference.fundamental[0].coords):
        raise ValueError(
            f"asserted unit {coords} is not fundamental "
            f"(expected one of +-{reference.fundamental[0].coords} up to sign)"
        )
    spec = order.algebra
    nrm = order.norm(eps)
    eps1 = eps if nrm == 1 else alg_mul(eps, eps, spec)
    return UnitGroupData(
        torsion=(element((1, 0)), element((-1, 0))),
        fundamental=(eps,), complete=True, norm_one_fundamental=eps1,
    )


def _box_level_orbits(order, k, bound, use_absolute_norm):
    sols = box_scan(order, k, bound)
    if not use_absolute_norm:
        sols = [x for x in sols if order.norm(x) == k]
    if not sols:
        return []
    return pairwise_orbits(sols, order)


def box_level_counts(order, k, bound, use_absolute_norm=False):
    """(primitive, all) orbit counts for one level in box mode; a class is
    primitive when its members have coprime coordinates (a unit invariant)."""
    tot_all = tot_prim = 0
    for cls in _box_level_orbits(order, k, bound, use_absolute_norm):
        tot_all += 1
        if gcd_vector(cls[0].coords) == 1:
            tot_prim += 1
    return tot_prim, tot_all


def _definite_normform_series(order, r_max):
    units = finite_units(order)
    mats = _torsion_matrices(order, units)
    gram = norm_gram(order)
    pts, vals2, s = ball_points(gram, r_max)
    if len(vals2) and np.any(vals2 % (2 * s)):
        raise AssertionError("norm values not integral on the order lattice")
    levels_of = vals2 // (2 * s)
    reps_all = [set() for _ in range(r_max + 1)]
    reps_prim = [set() for _ in range(r_max + 1)]
    gcds = np.gcd.reduce(np.abs(pts), axis=1)
    for row, lv, g in zip(pts.tolist(), levels_of.tolist(), gcds.tolist()):
        rep = _canonical_definite(tuple(row), mats)
        reps_all[lv].add(rep)
        if g == 1:
            reps_prim[lv].add(rep)
    levels = list(range(1, r_max + 1))
    n_all = [len(reps_all[k]) for k in levels]
    n_prim = [len(reps_prim[k]) for k in levels]
    return CountSeries(
        family=FAMILY_NORMFORM, levels=levels, n_prim=n_prim, n_all=n_all,
        weighted=[Fraction(c) for c in n_all], scale_e=1,
        exact=[True] * len(levels), meta={"mode": "exact", "units": len(units.torsion)},
    )


def _real_quadratic_series(order, r_max, use_absolute_norm, units=None):
    d = real_quadratic_d(order)
    units_provenance = "computed"
    if units is None:
        units = fundamental_unit(order)
    else:
        units_provenance = "user-asserted"
    x0, y0 = units.fundamental[0].coords
    pell_sign = x0 * x0 - d * y0 * y0
    e1, e2 = x0 * x0 + d * y0 * y0, 2 * x0 * y0  # eps0^2 = e1 + e2 sqrt(d)

    reps_all = [set() for _ in range(r_max + 1)]
    reps_prim = [set() for _ in range(r_max + 1)]
    neg_all = [set() for _ in range(r_max + 1)]
    neg_prim = [set() for _ in range(r_max + 1)]
    want_neg = use_absolute_norm and pell_sign == 1

    amax = _sqrt_upper(e1 * r_max, e2 * r_max, d)
    for a in range(0, amax + 1):
        bmax = math.isqrt((a * a + r_max) // d) + 1
        bs = np.arange(-bmax, bmax + 1, dtype=np.int64)
        if a == 0:
            bs = bs[bs > 0]
        norms = a * a - d * bs * bs
        keep = (np.abs(norms) >= 1) & (np.abs(norms) <= r_max)
        bs, norms = bs[keep], norms[keep]
        if len(bs) == 0:
            continue
        absn = np.abs(norms)
        # balanced window: a^2 + d b^2 + 2|ab| sqrt(d) <= |k| (e1 + e2 sqrt(d))
        ss = absn * e1 - (a * a + d * bs * bs)
        tt = absn * e2 - 2 * np.abs(a * bs)
        ok = ((ss >= 0) & (tt >= 0)) | ((ss >= 0) & (tt < 0) & (ss * ss >= d * tt * tt)) | (
            (ss < 0) & (tt >= 0) & (d * tt * tt > ss * ss)
        )
        bs, norms = bs[ok], norms[ok]
        for b, nv in zip(bs.tolist(), norms.tolist()):
            if nv < 0 and not want_neg:
                # negative levels are out of range; in absolute-norm mode with a
                # norm -1 fundamental unit every orbit has a positive-norm member
                continue
            rep = canonical_rep(element((a, b)), units, order).coords
            target = reps_all if nv > 0 else neg_all
            target_p = reps_prim if nv > 0 else neg_prim
            lv = abs(nv)
            target[lv].add(rep)
            if math.gcd(a, abs(int(b))) == 1:
                target_p[lv].add(rep)
    levels = list(range(1, r_max + 1))
    n_all = [len(reps_all[k]) + len(neg_all[k]) for k in levels]
    n_prim = [len(reps_prim[k]) + len(neg_prim[k]) for k in levels]
    return CountSeries(
        family=FAMILY_NORMFORM, levels=levels, n_prim=n_prim, n_all=n_all,
        weighted=[Fraction(c) for c in n_all], scale_e=1,
        exact=[True] * len(levels),
        meta={"mode": "exact", "pell_sign": pell_sign, "absolute_norm": use_absolute_norm,
              "units": units_provenance},
    )


def _sqrt_upper(p, q, d):
    # integer bound v with v^2 >= p + q sqrt(d), from q sqrt(d) <= isqrt(q^2 d) + 1
    return math.isqrt(p + math.isqrt(q * q * d) + 2) + 2


# ---------------------------------------------------------------------------
# quadric family


def count_quadric_level(section, k, group=None):
    """(orbit count, weighted count) of the primitive level-k section points."""
    if group is None:
        group = integral_symmetries(section)
    pts = cone_section_points(section, k)
    report = orbit_partition(pts, group, level=k)
    return len(report.orbits), weighted_count(report)


def quadric_series(section, r_max, group=None):
    """Primitive orbit counts and weights for scaled levels 1..e*r_max: the
    conic parametrisation with vectorised orbit reduction in three variables,
    the per-level fiber route otherwise."""
    if group is None:
        group = integral_symmetries(section)
    r_scaled = int(Fraction(r_max) * section.scale_e)
    if section.dim != 3:
        return _quadric_series_per_level(section, r_scaled, group)
    pts, lvls = conic_points_up_to(section, r_scaled)
    gmats = [np.array(g, dtype=np.int64) for g in group.elements]
    n = section.dim
    if len(pts):
        best = pts.copy()
        stab = np.zeros(len(pts), dtype=np.int64)
        for gm in gmats:
            img = pts @ gm.T
            stab += np.all(img == pts, axis=1)
            less = _lex_less(img, best)
            best[less] = img[less]
    else:
        best = pts
        stab = np.zeros(0, dtype=np.int64)
    levels = list(range(1, r_scaled + 1))
    n_prim = [0] * (r_scaled + 1)
    weighted = [Fraction(0)] * (r_scaled + 1)
    if len(pts):
        key = np.concatenate([lvls.reshape(-1, 1), best], axis=1)
        uniq, first = np.unique(key, axis=0, return_index=True)
        for row, idx in zip(uniq.tolist(), first.tolist()):
            lv = row[0]
            n_prim[lv] += 1
            weighted[lv] += Fraction(1, int(stab[idx]))
    _, n_all = aggregate_levels(levels, n_prim[1:], 1, r_scaled)
    return CountSeries(
        family=FAMILY_QUADRIC, levels=levels, n_prim=n_prim[1:], n_all=n_all,
        weighted=weighted[1:], scale_e=section.scale_e,
        exact=[True] * r_scaled,
        meta={"mode": "exact", "group_order": group.order,
              "weight_normalisation": "relative (one undetermined global constant)"},
    )


def _quadric_series_per_level(section, r_scaled, group):
    n_prim, weighted = [], []
    for k_scaled in range(1, r_scaled + 1):
        k = Fraction(k_scaled, section.scale_e)
        report = orbit_partition(cone_section_points(section, k), group, level=k)
        n_prim.append(len(report.orbits))
        weighted.append(weighted_count(report))
    levels = list(range(1, r_scaled + 1))
    _, n_all = aggregate_levels(levels, n_prim, 1, r_scaled)
    return CountSeries(
        family=FAMILY_QUADRIC, levels=levels, n_prim=n_prim, n_all=n_all,
        weighted=weighted, scale_e=section.scale_e, exact=[True] * r_scaled,
        meta={"mode": "exact", "group_order": group.order, "route": "per-level",
              "weight_normalisation": "relative (one undetermined global constant)"},
    )


def _lex_less(a, b):
    less = np.zeros(len(a), dtype=bool)
    tie = np.ones(len(a), dtype=bool)
    for c in range(a.shape[1]):
        less |= tie & (a[:, c] < b[:, c])
        tie &= a[:, c] == b[:, c]
    return less


def quadric_all_points_level(section, k, group=None):
    """Direct (non-primitive) analogue of count_quadric_level: all integral
    points of the level-k section, orbit-partitioned.  Small levels only."""
    if group is None:
        group = integral_symmetries(section)
    pts = fiber_section_points(section, k, qtarget=0, primitive=False)
    report = orbit_partition(pts, group, level=k)
    return len(report.orbits), weighted_count(report)


# ---------------------------------------------------------------------------
# division-algebra family


def assert_division_order(order, rng=None, trials=200, shell_bound=6):
    """Probe for zero divisors: random integral products and small norm-zero
    shells.  Raises ValueError on evidence of a matrix-algebra payload."""
    import random

    rng = rng or random.Random(0x5EED)
    spec = order.algebra
    n = spec.dim
    for _ in range(trials):
        a = element([rng.randint(-9, 9) for _ in range(n)])
        b = element([rng.randint(-9, 9) for _ in range(n)])
        if a.is_zero() or b.is_zero():
            continue
        if alg_mul(a, b, spec).is_zero():
            raise ValueError("zero divisors detected: payload is not a division algebra")
    if order.norm_degree == 2:
        g = norm_gram(order)
        from .exact import definiteness

        if definiteness(g) == 1:
            return  # definite norm: x != 0 implies norm > 0, nothing else to probe
    from itertools import product as iproduct

    for coords in iproduct(range(-shell_bound, shell_bound + 1), repeat=n):
        if any(coords) and order.norm(AlgebraElement(coords)) == 0:
            raise ValueError("nonzero element of norm 0: payload is not a division algebra")


def count_algebra_shell(order, m, mode=("exact",)):
    """Number of left unit-orbits of integral elements of reduced norm m.

    Exact mode (definite order): shell size / |units|, with the freeness of the
    action asserted on the enumerated shell.  Box mode: pairwise partition."""
    if m < 1:
        raise ValueError("shell level must be >= 1")
    if mode[0] == "box":
        orbits = _box_level_orbits(order, m, mode[1], use_absolute_norm=True)
        return len(orbits)
    units = finite_units(order)
    shell = definite_shell(norm_gram(order), m)
    if not shell:
        return 0
    nu = len(units.torsion)
    if len(shell) % nu:
        raise ValueError("unit action not free on shell: payload is not a division order")
    return len(shell) // nu


def algebra_series(order, r_max, check_freeness=True):
    """Per-level unit-orbit counts for reduced norms 1..r_max on a definite
    division order: exact theta series divided by the unit count, primitive
    part by Moebius inversion over x -> p x."""
    r_max = int(r_max)
    assert_division_order(order)
    units = finite_units(order)
    nu = len(units.torsion)
    theta = theta_series(norm_gram(order), r_max)
    if check_freeness:
        _assert_free_action(order, units, sample_levels=(1, 2, 3))
    alln = theta[1:].tolist()
    if any(c % nu for c in alln):
        raise ValueError("unit action not free on some shell: not a division order")
    prim_shell = _primitive_shell_sizes(alln, order.norm_degree)
    levels = list(range(1, r_max + 1))
    return CountSeries(
        family=FAMILY_ALGEBRA, levels=levels,
        n_prim=[c // nu for c in prim_shell],
        n_all=[c // nu for c in alln],
        weighted=[Fraction(c // nu) for c in alln],
        scale_e=1, exact=[True] * r_max,
        meta={"mode": "exact", "units": nu},
    )


def _primitive_shell_sizes(all_sizes, d):
    # all(m) = sum over f with f^d | m of prim(m / f^d); invert by subtraction
    r = len(all_sizes)
    prim = [0] * (r + 1)
    for m in range(1, r + 1):
        total = all_sizes[m - 1]
        f = 2
        while f ** d <= m:
            if m % (f ** d) == 0:
                total -= prim[m // f ** d]
            f += 1
        prim[m] = total
    return prim[1:]


def _assert_free_action(order, units, sample_levels):
    spec = order.algebra
    gram = norm_gram(order)
    for m in sample_levels:
        shell = definite_shell(gram, m)
        pts = {tuple(p) for p in shell}
        for p in shell:
            x = AlgebraElement(tuple(p))
            orbit = {alg_mul(u, x, spec).coords for u in units.torsion}
            if len(orbit) != len(units.torsion):
                raise ValueError("unit action not free: payload is not a division order")
            if not orbit <= pts:
                raise AssertionError("unit action does not preserve the shell")


def primitive_algebra_shell_direct(order, m):
    """Primitive shell orbit count by direct enumeration + gcd filter
    (independent of the Moebius route; small m)."""
    units = finite_units(order)
    shell = [p for p in definite_shell(norm_gram(order), m) if gcd_vector(p) == 1]
    nu = len(units.torsion)
    if len(shell) % nu:
        raise ValueError("unit action not free on primitive shell")
    return len(shell) // nu


# ---------------------------------------------------------------------------
# entry point used by the CLI


def run_scenario(scenario):
    """Compute the CountSeries for a validated scenario."""
    fam = scenario.family
    if fam == FAMILY_NORMFORM:
        units = None
        asserted = scenario.invariants.get("fundamental_unit")
        if asserted is not None:
            from .exact import frac

            units = user_asserted_units(scenario.payload, [frac(c) for c in asserted])
        return normform_series(
            scenario.payload, scenario.k_max, mode=scenario.mode,
            use_absolute_norm=scenario.use_absolute_norm, units=units,
        )
    if fam == FAMILY_QUADRIC:
        return quadric_series(scenario.payload, scenario.k_max)
    if fam == FAMILY_ALGEBRA:
        if scenario.mode[0] == "box":
            levels = list(range(1, scenario.k_max + 1))
            counts = [count_algebra_shell(scenario.payload, m, scenario.mode) for m in levels]
            return CountSeries(
                family=FAMILY_ALGEBRA, levels=levels, n_prim=counts, n_all=counts,
                weighted=[Fraction(c) for c in counts], scale_e=1,
                exact=[False] * len(levels), meta={"mode": f"box:{scenario.mode[1]}"},
            )
        return algebra_series(scenario.payload, scenario.k_max)
    raise ValueError(f"unknown family {fam!r}")
