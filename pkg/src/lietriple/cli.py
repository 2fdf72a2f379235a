"""Command-line interface.

Subcommands:

    simulate  integrate a configured system, write the trajectory file
              and (by default) the companion figures
    verify    run the seeded property-check suite and print the report
    inertia   assemble and print the inertia form of a body description
    maps      apply one of the canonical bundle maps to a point

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 numerical failure.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import maps
from .errors import ConfigError, LieTripleError, MembershipError, NumericalError
from .fileio import (
    load_config,
    parse_body,
    run_simulation,
    write_trajectory,
)
from .groups import abelian_group, heisenberg5_group, so3_group
from .rigidbody import InertiaForm, inertia_from_body
from .verification import run_verification

__all__ = ["main"]


def _fmt_vector(v):
    return "[" + ", ".join(format(float(x), ".17g") for x in v) + "]"


def _fmt_matrix(m, indent="  "):
    return "\n".join(
        indent + " ".join(format(float(x), ".12g").rjust(14) for x in row)
        for row in m
    )


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------


def cmd_simulate(args):
    cfg = load_config(args.config)
    try:
        record = run_simulation(cfg)
    except (NumericalError, MembershipError) as e:
        print(f"integration failed: {e}", file=sys.stderr)
        return 3
    default = "trajectory.jsonl" if cfg.format == "json-lines" else "trajectory.csv"
    path = Path(cfg.path if cfg.path else default)
    write_trajectory(record, path, fmt=cfg.format, stride=cfg.stride)
    written = [path]
    if cfg.plots and not args.no_plots:
        from .plots import render_trajectory_figures

        written += render_trajectory_figures(record, path)
    for p in written:
        print(p)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args):
    report = run_verification(seed=args.seed, samples=args.samples)
    print(report.as_text())
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# inertia
# ---------------------------------------------------------------------------


def cmd_inertia(args):
    try:
        doc = json.loads(Path(args.config).read_text())
    except OSError as e:
        raise ConfigError(f"cannot read {args.config}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"{args.config} is not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ConfigError("inertia input must be a JSON object")
    system = doc.get("system", doc)
    if not isinstance(system, dict):
        raise ConfigError("config section 'system' must be an object")
    if "inertia" in system:
        try:
            form = InertiaForm(np.asarray(system["inertia"], dtype=float))
        except ValueError as e:
            raise ConfigError(f"invalid inertia matrix: {e}") from e
    else:
        form = inertia_from_body(parse_body(system))
    print("inertia form:")
    print(_fmt_matrix(form.matrix))
    print("eigenvalues:", _fmt_vector(form.eigenvalues))
    if form.rank < form.dim:
        print(
            f"warning: singular form (rank {form.rank} of {form.dim}); "
            "not usable as a kinetic energy",
            file=sys.stderr,
        )
    return 0


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------

# map name -> (function, domain point type)
_MAP_TABLE = {
    "kappa": (maps.kappa, maps.PointTTG),
    "alpha": (maps.alpha, maps.PointTTsG),
    "alpha_inv": (maps.alpha_inv, maps.PointTsTG),
    "beta": (maps.beta, maps.PointTTsG),
    "beta_inv": (maps.beta_inv, maps.PointTsTsG),
    "gamma": (maps.gamma, maps.PointTsTsG),
    "gamma_inv": (maps.gamma_inv, maps.PointTsTG),
}

_BUNDLES = {
    maps.PointTTG: ("TTG", ("X", "Y", "Z")),
    maps.PointTTsG: ("TT*G", ("A", "X", "B")),
    maps.PointTsTG: ("T*TG", ("X", "A", "B")),
    maps.PointTsTsG: ("T*T*G", ("A", "B", "X")),
}


def _resolve_group(token):
    if token == "so3":
        return so3_group()
    if token == "heisenberg5":
        return heisenberg5_group()
    if token.startswith("abelian:"):
        try:
            n = int(token.split(":", 1)[1])
        except ValueError:
            n = 0
        if n < 1:
            raise ConfigError("abelian algebra needs a positive dimension, "
                              "e.g. --algebra abelian:4")
        return abelian_group(n)
    raise ConfigError(
        f"unknown algebra {token!r}; use so3, heisenberg5 or abelian:<n>"
    )


def _point_line(point):
    name, slots = _BUNDLES[type(point)]
    parts = [f"{s}={_fmt_vector(getattr(point, s))}" for s in slots]
    return f"{name:6s} {'  '.join(parts)}"


def cmd_maps(args):
    fn, domain = _MAP_TABLE[args.name]
    spec = _resolve_group(args.algebra)
    try:
        data = json.loads(args.point)
    except json.JSONDecodeError as e:
        raise ConfigError(f"--point is not valid JSON: {e}") from e
    if not isinstance(data, list) or len(data) != 3:
        raise ConfigError(
            "--point must be a JSON array of the three fiber vectors, "
            'e.g. "[[1,0,0],[0,1,0],[0,0,0]]"'
        )
    try:
        fibers = [np.asarray(v, dtype=float) for v in data]
    except (TypeError, ValueError) as e:
        raise ConfigError(f"--point entries must be numeric vectors: {e}") from e
    point = domain(spec.identity(), *fibers)
    image = fn(spec.algebra, point)
    print(f"{args.name} over {spec.name} at the identity")
    print(f"  in   {_point_line(point)}")
    print(f"  out  {_point_line(image)}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="lietriple",
        description="Trivialized bundle maps and reduced rigid-body dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="integrate a configured system")
    p.add_argument("--config", required=True, help="path to a JSON config file")
    p.add_argument(
        "--no-plots", action="store_true",
        help="skip rendering the companion figures",
    )
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run the property-check suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100,
                   help="random samples per property")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inertia", help="print the inertia form of a body")
    p.add_argument("--config", required=True,
                   help="JSON file with a body description (or a full config)")
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("maps", help="apply a canonical bundle map to a point")
    p.add_argument("name", choices=sorted(_MAP_TABLE))
    p.add_argument("--point", required=True,
                   help="JSON array of the three fiber vectors")
    p.add_argument("--algebra", default="so3",
                   help="so3 (default), heisenberg5, or abelian:<n>")
    p.set_defaults(func=cmd_maps)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NumericalError as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return 3
    except LieTripleError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
