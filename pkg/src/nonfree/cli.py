"""Command line interface.

Four subcommands: ``lattice`` (subgroup structure), ``action`` (classify a
measured action), ``measure`` (analyze an invariant measure on the subgroup
lattice), ``thoma`` (coloring model probabilities). All reports are
canonical JSON so identical invocations produce identical bytes.

Exit codes: 0 success, 1 bad input, 2 resource bound exceeded,
3 mathematical precondition violated. NONFREE_MAX_ORDER caps the order of
any group the command will work with.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .actions import (
    MeasuredAction,
    action_from_json,
    adjoint_action,
    classify_action,
    fixed_mass,
    koopman_rank,
    pushforward_measure,
)
from .characters import (
    character_from_action,
    check_character_axioms,
    decompose_character,
    measure_character,
)
from .errors import (
    InputError,
    MathPreconditionError,
    OrderBoundExceeded,
    ResourceBoundError,
)
from .groupoid import GROUPOID_PAIR_BOUND, GroupoidSpace, diagonal_span_report
from .jsonio import canonical_dumps, format_fraction, parse_fraction
from .lattice import enumerate_subgroups, lattice_report
from .measures import (
    InvariantMeasure,
    en_measure_report,
    ergodic_decomposition,
    measure_from_json,
    measure_to_json,
    normalization_pushforward,
    orbit_uniform,
    reducely_en_test,
    tnf_measure_report,
)
from .perm import group_from_json
from .registry import group_names, named_group
from .thoma import ColoringModel, fixing_probability, mc_fixing_probability, young_report

GROUPOID_REPORT_BOUND = 512


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _max_order():
    raw = os.environ.get("NONFREE_MAX_ORDER")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"NONFREE_MAX_ORDER must be an integer, got {raw!r}")


def _resolve_group(spec):
    if spec.startswith("@"):
        group = group_from_json(_load_json(spec[1:]))
    else:
        group = named_group(spec)
    cap = _max_order()
    if cap is not None and group.order > cap:
        raise OrderBoundExceeded(
            f"group order {group.order} exceeds NONFREE_MAX_ORDER={cap}"
        )
    return group


def _resolve_action(group, spec):
    if spec.startswith("@"):
        return action_from_json(group, _load_json(spec[1:]))
    if spec == "natural":
        return MeasuredAction.natural(group)
    if spec == "regular":
        from .perm import Subgroup

        trivial = Subgroup(group, (group.identity_index,))
        return MeasuredAction.coset_action(group, trivial)
    if spec.startswith("cosets:"):
        lattice = enumerate_subgroups(group)
        idx = _parse_index(spec[7:], len(lattice.subgroups), "subgroup")
        return MeasuredAction.coset_action(group, lattice.subgroups[idx])
    if spec == "adjoint":
        lattice = enumerate_subgroups(group)
        return adjoint_action(lattice)
    if spec.startswith("adjoint:"):
        lattice = enumerate_subgroups(group)
        idx = _parse_index(spec[8:], len(lattice.orbits), "orbit")
        return adjoint_action(lattice, lattice.orbits[idx])
    raise InputError(
        f"unknown action {spec!r}; expected natural, regular, cosets:K, "
        "adjoint, adjoint:K, or @file.json"
    )


def _resolve_measure(lattice, spec):
    if spec.startswith("@"):
        return measure_from_json(lattice, _load_json(spec[1:]))
    if spec == "uniform":
        n = len(lattice.subgroups)
        return InvariantMeasure(lattice, {i: Fraction(1, n) for i in range(n)})
    if spec.startswith("orbit:"):
        idx = _parse_index(spec[6:], len(lattice.orbits), "orbit")
        return orbit_uniform(lattice, lattice.orbits[idx][0])
    raise InputError(
        f"unknown measure {spec!r}; expected uniform, orbit:K, or @file.json"
    )


def _parse_index(text, bound, what):
    try:
        idx = int(text)
    except ValueError:
        raise InputError(f"{what} index must be an integer, got {text!r}")
    if not 0 <= idx < bound:
        raise InputError(f"{what} index {idx} out of range [0, {bound})")
    return idx


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "__dataclass_fields__"):
        return {
            k: _jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__
        }
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def _group_summary(group):
    return {
        "name": group.name,
        "degree": group.degree,
        "order": group.order,
        "classes": len(group.classes),
    }


def _emit(args, report):
    text = canonical_dumps(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_lattice(args):
    group = _resolve_group(args.group)
    lattice = enumerate_subgroups(group)
    return {
        "command": "lattice",
        "version": __version__,
        "inputs": {"group": args.group},
        "results": {
            "group": _group_summary(group),
            "lattice": lattice_report(lattice),
        },
    }


def cmd_action(args):
    group = _resolve_group(args.group)
    action = _resolve_action(group, args.action)
    lattice = enumerate_subgroups(group)
    cls = classify_action(action)
    nu = pushforward_measure(action, lattice)
    char = character_from_action(action)
    axioms = check_character_axioms(char)
    dec = decompose_character(char)
    results = {
        "group": _group_summary(group),
        "action": {
            "points": action.n_points,
            "support_size": len(action.support),
            "measure": [format_fraction(m) for m in action.mu],
        },
        "classification": _jsonable(cls),
        "fixed_mass_by_class": [
            {
                "class_index": k,
                "class_size": len(cls_),
                "mass": format_fraction(fixed_mass(action, cls_[0])),
            }
            for k, cls_ in enumerate(group.classes)
        ],
        "stabilizer_distribution": measure_to_json(nu),
        "diagonal_span": _jsonable(diagonal_span_report(action)),
        "koopman": _jsonable(koopman_rank(action)),
        "character": {
            "values_by_class": [format_fraction(v) for v in char.rational_values()],
            "axioms_pass": axioms.all_pass,
            "psd_rank": axioms.elimination.rank if axioms.elimination else None,
            "weights": [format_fraction(w) for w in dec.weights],
            "indecomposable": dec.indecomposable,
        },
    }
    n_pairs = sum(
        len({int(y) for y in action.act[:, x].tolist() if action.mu[int(y)] > 0})
        for x in action.support
    )
    if n_pairs <= GROUPOID_REPORT_BOUND:
        groupoid = GroupoidSpace(action)
        from .groupoid import matrix_coefficient

        coeffs_ok = all(
            matrix_coefficient(groupoid, cls_[0]) == fixed_mass(action, cls_[0])
            for cls_ in group.classes
        )
        results["groupoid"] = {
            "pairs": groupoid.n_pairs,
            "matrix_coefficients_match_fixed_mass": coeffs_ok,
        }
    else:
        results["groupoid"] = {"skipped": f"{n_pairs} pairs exceeds report bound"}
    return {
        "command": "action",
        "version": __version__,
        "inputs": {"group": args.group, "action": args.action},
        "results": results,
    }


def cmd_measure(args):
    group = _resolve_group(args.group)
    lattice = enumerate_subgroups(group)
    nu = _resolve_measure(lattice, args.measure)
    en = en_measure_report(nu)
    tnf = tnf_measure_report(nu)
    parts = ergodic_decomposition(nu)
    push = normalization_pushforward(nu)
    char = measure_character(nu)
    axioms = check_character_axioms(char)
    dec = decompose_character(char)
    results = {
        "group": _group_summary(group),
        "measure": measure_to_json(nu),
        "en_report": _jsonable(en),
        "tnf_report": _jsonable(tnf),
        "reducely_extremely_nonfree": reducely_en_test(nu),
        "ergodic_decomposition": [
            {
                "orbit": lattice.orbit_of(part.support[0]),
                "weight": format_fraction(w),
                "support": list(part.support),
            }
            for w, part in parts
        ],
        "normalization_pushforward": measure_to_json(push),
        "character": {
            "values_by_class": [format_fraction(v) for v in char.rational_values()],
            "axioms_pass": axioms.all_pass,
            "psd_rank": axioms.elimination.rank if axioms.elimination else None,
            "weights": [format_fraction(w) for w in dec.weights],
            "indecomposable": dec.indecomposable,
        },
    }
    return {
        "command": "measure",
        "version": __version__,
        "inputs": {"group": args.group, "measure": args.measure},
        "results": results,
    }


def cmd_thoma(args):
    try:
        alpha = [parse_fraction(t) for t in args.alpha.split(",") if t]
    except ValueError as exc:
        raise InputError(f"bad alpha list: {exc}")
    model = ColoringModel(alpha)
    try:
        lengths = [int(t) for t in args.cycle_type.split(",") if t]
    except ValueError:
        raise InputError(f"bad cycle type {args.cycle_type!r}")
    exact = fixing_probability(model, lengths)
    n = args.points if args.points is not None else sum(lengths)
    if n < sum(lengths):
        raise InputError("--points is smaller than the cycle type total")
    results = {
        "alpha": [format_fraction(a) for a in model.alpha],
        "gamma": format_fraction(model.gamma),
        "cycle_type": sorted(lengths, reverse=True),
        "points": n,
        "exact_fixing_probability": format_fraction(exact),
    }
    if args.trials:
        cycles = []
        at = 0
        for k in lengths:
            cycles.append(tuple(range(at, at + k)))
            at += k
        est = mc_fixing_probability(model, n, cycles, args.trials, args.seed)
        results["monte_carlo"] = {
            "estimate": est.estimate,
            "stderr": est.stderr,
            "trials": est.trials,
            "seed": est.seed,
        }
    if args.young:
        rows = young_report(model, n)
        results["young"] = [
            {
                "cycle_type": list(r.cycle_type),
                "fixes_probability": format_fraction(r.fixes_probability),
                "membership_mass": format_fraction(r.membership_mass),
                "preserves_probability": format_fraction(r.preserves_probability),
                "block_swap_discrepancy": format_fraction(r.block_swap_discrepancy),
            }
            for r in rows
        ]
    return {
        "command": "thoma",
        "version": __version__,
        "inputs": {
            "alpha": args.alpha,
            "cycle_type": args.cycle_type,
            "points": n,
            "trials": args.trials,
            "seed": args.seed,
        },
        "results": results,
    }


def build_parser():
    parser = _Parser(prog="nonfree", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report to this path")
        p.add_argument(
            "--format", choices=["json"], default="json", help="output format"
        )

    p = sub.add_parser("lattice", help="subgroup lattice of a group")
    p.add_argument("--group", required=True, help="registry name or @file.json")
    common(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("action", help="classify a measured action")
    p.add_argument("--group", required=True, help="registry name or @file.json")
    p.add_argument(
        "--action",
        default="natural",
        help="natural | regular | cosets:K | adjoint | adjoint:K | @file.json",
    )
    common(p)
    p.set_defaults(func=cmd_action)

    p = sub.add_parser("measure", help="analyze an invariant subgroup measure")
    p.add_argument("--group", required=True, help="registry name or @file.json")
    p.add_argument(
        "--measure",
        default="uniform",
        help="uniform | orbit:K | @file.json",
    )
    common(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("thoma", help="coloring model probabilities")
    p.add_argument("--alpha", required=True, help="comma list of fractions")
    p.add_argument(
        "--cycle-type", required=True, dest="cycle_type", help="comma list of lengths"
    )
    p.add_argument("--points", type=int, help="number of points (default: type total)")
    p.add_argument("--trials", type=int, default=0, help="Monte Carlo trials")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument(
        "--young", action="store_true", help="include the stabilizer table (points <= 6)"
    )
    common(p)
    p.set_defaults(func=cmd_thoma)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.func(args)
        _emit(args, report)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceBoundError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return 2
    except MathPreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
