"""Command-line interface: validate | count | fit | oracle-compare | report.

Configs are JSON documents (rationals as "p/q" strings, matrices row-major);
a bare preset name is accepted wherever a config path is expected.  All
emitted CSV/JSON is byte-deterministic across runs and across --jobs.

Exit codes: 0 success, 1 validation failure, 2 box-mode saturation failure,
3 oracle mismatch.
"""

import argparse
import hashlib
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .algebra import AlgebraSpec
from .counting import (
    FAMILY_ALGEBRA,
    FAMILY_NORMFORM,
    FAMILY_QUADRIC,
    CountSeries,
    ScenarioSpec,
    box_level_counts,
    run_scenario,
)
from .exact import frac, frac_str
from .fitting import expected_lambda, fit_power, predicted_constant_ideal, zeta_correction
from .lattice import cone_section_points
from .numtheory import pell
from .embeddings import embeddings
from .oracles import hurwitz_shell_count, ideal_count_series, r4_series, two_squares_primitive
from .orders import OrderSpec, finite_units, real_quadratic_d, trace_form_discriminant
from .presets import PRESET_NAMES, preset_scenario
from .sections import quadric_section
from .validation import validate_scenario

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SATURATION = 2
EXIT_ORACLE = 3


def load_config(path_or_preset, overrides):
    """A config is either a JSON file or a bare preset name."""
    if path_or_preset in PRESET_NAMES and not os.path.exists(path_or_preset):
        doc = {"preset": path_or_preset}
    else:
        with open(path_or_preset) as fh:
            doc = json.load(fh)
    doc = dict(doc)
    doc.update({k: v for k, v in overrides.items() if v is not None})
    doc.setdefault("r_max", 100)
    doc.setdefault("mode", "exact")
    doc.setdefault("primitive_only", False)
    doc.setdefault("absolute_norm", False)
    doc.setdefault("jobs", 1)
    return doc


EXECUTION_KEYS = ("jobs", "out")  # knobs that must not change emitted bytes


def config_hash(doc):
    semantic = {k: v for k, v in doc.items() if k not in EXECUTION_KEYS}
    canon = json.dumps(semantic, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def parse_mode(text):
    if text == "exact":
        return ("exact",)
    if text.startswith("box:"):
        return ("box", int(text.split(":", 1)[1]))
    raise ValueError(f"mode must be 'exact' or 'box:B', got {text!r}")


def scenario_from_config(doc):
    mode = parse_mode(doc["mode"])
    r_max = int(doc["r_max"])
    if "preset" in doc:
        scenario = preset_scenario(
            doc["preset"], r_max, mode=mode,
            count_primitive_only=bool(doc["primitive_only"]),
            use_absolute_norm=bool(doc["absolute_norm"]),
        )
        if "fundamental_unit" in doc:
            scenario.invariants["fundamental_unit"] = doc["fundamental_unit"]
        return scenario
    fam = doc["family"]
    if fam == FAMILY_QUADRIC:
        gram = [[frac(c) for c in row] for row in doc["gram"]]
        ell = [frac(c) for c in doc["ell"]]
        base = doc.get("base_point")
        payload = quadric_section(gram, ell, base_point=tuple(base) if base else None)
    else:
        spec = AlgebraSpec.from_json(json.dumps(doc["algebra"]))
        payload = OrderSpec(
            algebra=spec,
            norm_degree=int(doc["norm_degree"]),
            unit_rank=int(doc["unit_rank"]),
        )
    inv = dict(doc.get("invariants", {}))
    if "fundamental_unit" in doc:
        inv["fundamental_unit"] = doc["fundamental_unit"]
    return ScenarioSpec(
        family=fam, payload=payload, k_max=r_max, mode=mode,
        count_primitive_only=bool(doc["primitive_only"]),
        use_absolute_norm=bool(doc["absolute_norm"]),
        label=doc.get("label", "custom"),
        invariants=inv,
    )


def series_to_csv(series, fh, chash):
    fh.write(f"# config_hash={chash}\n")
    extra = ""
    if series.meta.get("units") == "user-asserted":
        extra = " units=user-asserted"
    fh.write(f"# family={series.family} scale_e={series.scale_e} "
             f"mode={series.meta.get('mode', 'exact')}{extra}\n")
    fh.write("level,n_prim,n_all,weighted_num,weighted_den,exact\n")
    for lv, np_, na, w, ex in zip(series.levels, series.n_prim, series.n_all, series.weighted, series.exact):
        wf = Fraction(w)
        level_txt = frac_str(Fraction(lv, series.scale_e))
        fh.write(f"{level_txt},{np_},{na},{wf.numerator},{wf.denominator},{1 if ex else 0}\n")


def series_from_csv(path):
    levels, n_prim, n_all, weighted, exact = [], [], [], [], []
    family, scale_e, mode, units = "unknown", 1, "exact", "computed"
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if tok.startswith("family="):
                        family = tok.split("=", 1)[1]
                    elif tok.startswith("scale_e="):
                        scale_e = int(tok.split("=", 1)[1])
                    elif tok.startswith("mode="):
                        mode = tok.split("=", 1)[1]
                    elif tok.startswith("units="):
                        units = tok.split("=", 1)[1]
                continue
            if line.startswith("level,"):
                continue
            parts = line.split(",")
            if len(parts) != 6:
                raise ValueError(f"malformed series row: {line!r}")
            levels.append(int(Fraction(frac(parts[0]) * scale_e)))
            n_prim.append(int(parts[1]))
            n_all.append(int(parts[2]))
            weighted.append(Fraction(int(parts[3]), int(parts[4])))
            exact.append(parts[5] == "1")
    return CountSeries(
        family=family, levels=levels, n_prim=n_prim, n_all=n_all,
        weighted=weighted, scale_e=scale_e, exact=exact,
        meta={"mode": mode, "units": units},
    )


def cmd_validate(args):
    doc = load_config(args.config, _overrides(args))
    scenario = scenario_from_config(doc)
    report = validate_scenario(scenario)
    for line in report.lines():
        print(line)
    if not report.ok():
        print("validation FAILED")
        return EXIT_VALIDATION
    print("validation ok")
    return EXIT_OK


def _series_with_jobs(scenario, jobs):
    if (
        jobs > 1
        and scenario.family == FAMILY_NORMFORM
        and scenario.mode[0] == "box"
    ):
        # the one driver that is a plain per-level map; everything else runs
        # single-pass algorithms where extra workers change nothing
        levels = list(range(1, scenario.k_max + 1))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = list(
                pool.map(_box_level_task, [(scenario, k) for k in levels], chunksize=16)
            )
        return CountSeries(
            family=scenario.family, levels=levels,
            n_prim=[p for p, _ in pairs], n_all=[a for _, a in pairs],
            weighted=[Fraction(a) for _, a in pairs], scale_e=1,
            exact=[False] * len(levels), meta={"mode": f"box:{scenario.mode[1]}"},
        )
    return run_scenario(scenario)


def _box_level_task(payload):
    scenario, k = payload
    return box_level_counts(
        scenario.payload, k, scenario.mode[1], scenario.use_absolute_norm
    )


def cmd_count(args):
    doc = load_config(args.config, _overrides(args))
    scenario = scenario_from_config(doc)
    report = validate_scenario(scenario)
    if not report.ok():
        for line in report.lines():
            print(line, file=sys.stderr)
        return EXIT_VALIDATION
    if scenario.mode[0] == "box" and not args.allow_heuristic:
        sat = _saturation_check(scenario)
        if not sat:
            print("box saturation not reached (counts changed when the box doubled); "
                  "pass --allow-heuristic to emit anyway", file=sys.stderr)
            return EXIT_SATURATION
    series = _series_with_jobs(scenario, int(doc["jobs"]))
    chash = config_hash(doc)
    out_path = _out_path(args, doc, "counts.csv")
    with open(out_path, "w") as fh:
        series_to_csv(series, fh, chash)
    print(out_path)
    return EXIT_OK


def _saturation_check(scenario):
    """Box-mode orbit counts on probe levels must be stable when the box doubles."""
    b = scenario.mode[1]
    for k in range(1, min(scenario.k_max, 20) + 1):
        c1 = box_level_counts(scenario.payload, k, b, scenario.use_absolute_norm
                              or scenario.family == FAMILY_ALGEBRA)
        c2 = box_level_counts(scenario.payload, k, 2 * b, scenario.use_absolute_norm
                              or scenario.family == FAMILY_ALGEBRA)
        if c1 != c2:
            return False
    return True


def cmd_fit(args):
    doc = load_config(args.config, _overrides(args))
    scenario = scenario_from_config(doc)
    series = series_from_csv(args.series)
    r_top = max(series.levels) / series.scale_e
    window = (r_top / 10, r_top)
    lam_expected = expected_lambda(scenario)
    if scenario.family == FAMILY_QUADRIC:
        column = "weighted"
    else:
        column = "prim" if scenario.count_primitive_only else "all"
    free = fit_power(series, window=window, which=column)
    fixed = fit_power(series, window=window, fixed_lambda=float(lam_expected), which=column)
    report = fixed if args.fixed_lambda else free
    report.expected_lambda = lam_expected
    report.extras["lambda_hat_free"] = free.lambda_hat
    report.extras["c_hat_fixed_lambda"] = fixed.c_hat
    report.extras["config_hash"] = config_hash(doc)
    report.extras["fitted_column"] = column
    if series.meta.get("units") == "user-asserted":
        report.extras["units"] = "user-asserted"
    _attach_predictions(report, scenario, args)
    text = report.to_json()
    out_path = _out_path(args, doc, "fit.json")
    with open(out_path, "w") as fh:
        fh.write(text + "\n")
    print(text)
    return EXIT_OK


def _attach_predictions(report, scenario, args):
    if scenario.family == FAMILY_NORMFORM and scenario.invariants.get("class_number") == 1:
        order = scenario.payload
        minpoly = scenario.invariants.get("minpoly")
        emb = embeddings(minpoly) if minpoly else None
        if emb is not None:
            disc = trace_form_discriminant(order)
            if order.unit_rank == 1:
                d = real_quadratic_d(order)
                x, y, _ = pell(d)
                reg = math.log(x + y * math.sqrt(d))
            else:
                reg = 1.0
            omega = 2 if order.unit_rank == 1 else len(finite_units(order).torsion)
            report.predicted_c = predicted_constant_ideal(
                emb.r1, emb.r2, reg, scenario.invariants["class_number"], omega, int(disc),
                degree=order.algebra.dim,
            )
            report.predicted_c_provenance = (
                f"ideal-count leading coefficient: r1={emb.r1}, r2={emb.r2}, "
                f"R={reg:.6f}, h={scenario.invariants['class_number']} (preset-asserted), "
                f"omega={omega}, disc={int(disc)}"
            )
    if getattr(args, "zeta", False):
        from .counting import level_scaling_degree

        d = level_scaling_degree(scenario.family, scenario.payload)
        if d >= 2:
            report.zeta_factor = zeta_correction(d)


def cmd_oracle_compare(args):
    doc = load_config(args.config, _overrides(args))
    scenario = scenario_from_config(doc)
    label = scenario.label
    r = scenario.k_max
    if args.series:
        series = series_from_csv(args.series)
    else:
        series = run_scenario(scenario)
    pipeline, oracle, what = _oracle_columns(scenario, series, r)
    if pipeline is None:
        print(f"no oracle applicable to scenario {label!r}", file=sys.stderr)
        return EXIT_VALIDATION
    diffs = [(k + 1, a, b) for k, (a, b) in enumerate(zip(pipeline, oracle)) if a != b]
    if not diffs:
        print(f"oracle-compare {label}: {what}: zero diffs over {len(pipeline)} levels")
        return EXIT_OK
    k, a, b = diffs[0]
    print(f"oracle-compare {label}: first divergence at level {k}: pipeline={a} oracle={b} "
          f"({len(diffs)} differing levels)")
    return EXIT_ORACLE


def _oracle_columns(scenario, series, r):
    label = scenario.label
    if label == "gauss":
        return series.n_all, ideal_count_series(-4, r), "per-level orbit counts vs ideal counts (D=-4)"
    if label == "zsqrt2":
        return series.n_all, ideal_count_series(8, r), "per-level orbit counts vs ideal counts (D=8)"
    if label == "model-quadric":
        pts = [len(cone_section_points(scenario.payload, k)) for k in range(1, r + 1)]
        oracle = [two_squares_primitive(k) for k in range(1, r + 1)]
        return pts, oracle, "per-level primitive point counts vs two-squares scan"
    if label == "lipschitz":
        eight_s = [8 * c for c in series.n_all]
        return eight_s, r4_series(r), "8 * orbit counts vs Jacobi r4"
    if label == "hurwitz":
        tw = [24 * c for c in series.n_all]
        oracle = [hurwitz_shell_count(m) for m in range(1, r + 1)]
        return tw, oracle, "24 * orbit counts vs direct half-integer shell enumeration"
    return None, None, ""


def cmd_report(args):
    rc = cmd_validate(args)
    if rc != EXIT_OK:
        return rc
    rc = cmd_count(args)
    if rc != EXIT_OK:
        return rc
    doc = load_config(args.config, _overrides(args))
    args.series = _out_path(args, doc, "counts.csv")
    rc = cmd_fit(args)
    if rc != EXIT_OK:
        return rc
    return cmd_oracle_compare(args)


def _out_path(args, doc, name):
    out_dir = args.out or "."
    os.makedirs(out_dir, exist_ok=True)
    stem = doc.get("preset") or doc.get("label", "scenario")
    return os.path.join(out_dir, f"{stem}-{name}")


def _overrides(args):
    return {
        "r_max": args.rmax,
        "mode": args.mode,
        "primitive_only": True if args.primitive_only else None,
        "jobs": args.jobs,
    }


def build_parser():
    p = argparse.ArgumentParser(
        prog="orbitcount",
        description="Count unit-group and symmetry-group orbits of integral points "
        "on norm-form level sets, quadric sections and division-order norm shells.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn in (
        ("validate", cmd_validate),
        ("count", cmd_count),
        ("fit", cmd_fit),
        ("oracle-compare", cmd_oracle_compare),
        ("report", cmd_report),
    ):
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=True,
                        help=f"config JSON path or preset name ({', '.join(PRESET_NAMES)})")
        sp.add_argument("--rmax", type=int, default=None)
        sp.add_argument("--mode", default=None, help="exact | box:B")
        sp.add_argument("--primitive-only", action="store_true", dest="primitive_only")
        sp.add_argument("--allow-heuristic", action="store_true")
        sp.add_argument("--jobs", type=int, default=None)
        sp.add_argument("--out", default=None, help="output directory")
        if name in ("fit", "oracle-compare"):
            sp.add_argument("--series", default=None, help="counts CSV (from the count command)")
        if name == "fit":
            sp.add_argument("--fixed-lambda", action="store_true",
                            help="report the fixed-exponent constant fit as the main result")
            sp.add_argument("--zeta", action="store_true",
                            help="attach the zeta aggregation factor for the family")
        sp.set_defaults(fn=fn)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    for attr, default in (("series", None), ("fixed_lambda", False), ("zeta", False)):
        if not hasattr(args, attr):
            setattr(args, attr, default)
    try:
        return args.fn(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
