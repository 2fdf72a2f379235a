"""Configuration ingestion and trajectory file formats.

Configurations are JSON documents.  Trajectories are written either as
CSV (header row, comma separators, LF line endings) or as JSON lines;
all floating-point values are rendered with 17 significant digits so a
file re-parsed reproduces the in-memory record bit-exactly.

Config schema::

    {
      "algebra": "so3" | {"dim": n, "c": [[[...]]], "name": "..."},
      "system": {"inertia": [[...]]}
              | {"points": [[mass, [x, y, z]], ...]}
              | {"preset": "cube" | "box" | "sphere", "mass": m,
                 "side": s | "dims": [a, b, c] | "radius": r},
      "initial": {"A0": [...] | "X0": [...], "g0": [[...]] (optional)},
      "integrator": {"method": "rk4" | "midpoint" | "rkmk4" | "lie-euler",
                     "dt": 1e-3, "steps": 1000, "reproject_every": 100},
      "output": {"path": "run.csv", "format": "csv" | "json-lines",
                 "stride": 1}
    }

Exactly one of A0/X0 must be given; attitude output (and g0) requires a
reconstructing method (rkmk4 or lie-euler), which in turn requires the
built-in "so3" algebra so that a matrix group is available.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .algebra import LieAlgebraStructure, so3, validate_structure
from .errors import ConfigError, LieTripleError
from .groups import GroupElement, GroupSpec, so3_group
from .mechanics import (
    TrajectoryRecord,
    integrate_reduced,
    integrate_with_reconstruction,
    reduced_hamiltonian_field,
)
from .rigidbody import BodySpec, InertiaForm, inertia_from_body, rigid_body_hamiltonian

__all__ = [
    "SimulationConfig",
    "REDUCED_METHODS",
    "RECONSTRUCTING_METHODS",
    "load_config",
    "parse_config",
    "parse_body",
    "run_simulation",
    "write_trajectory",
    "read_trajectory",
]

REDUCED_METHODS = ("rk4", "midpoint")
RECONSTRUCTING_METHODS = ("rkmk4", "lie-euler")

FLOAT_FORMAT = ".17g"


@dataclass(frozen=True)
class SimulationConfig:
    """A fully validated simulation setup with resolved objects."""

    algebra: LieAlgebraStructure
    group: Optional[GroupSpec]
    inertia: InertiaForm
    A0: np.ndarray
    g0: Optional[GroupElement]
    method: str
    dt: float
    steps: int
    reproject_every: int
    path: Optional[str]
    format: str
    stride: int
    plots: bool

    @property
    def reconstruct(self):
        return self.method in RECONSTRUCTING_METHODS


def _require(cond, message):
    if not cond:
        raise ConfigError(message)


def _as_mapping(doc, key):
    value = doc.get(key)
    _require(isinstance(value, dict), f"config section {key!r} must be an object")
    return value


def _is_so3(alg):
    return alg.dim == 3 and np.array_equal(alg.c, so3().c)


def _parse_algebra(value):
    if value == "so3":
        return so3()
    _require(
        isinstance(value, dict) and "dim" in value and "c" in value,
        "algebra must be the literal \"so3\" or an object with dim and c",
    )
    try:
        alg = LieAlgebraStructure(
            int(value["dim"]), np.asarray(value["c"], dtype=float),
            name=str(value.get("name", "custom")),
        )
    except (ValueError, TypeError) as e:
        raise ConfigError(f"invalid structure constants: {e}") from e
    report = validate_structure(alg)
    _require(
        report.passed,
        "structure constants fail validation: antisymmetry residual "
        f"{report.antisymmetry_residual:.3e}, Jacobi residual "
        f"{report.jacobi_residual:.3e}",
    )
    return alg


def parse_body(system):
    """Build a BodySpec from the "points" or "preset" form of a config."""
    _require(isinstance(system, dict), "system must be an object")
    if "points" in system:
        try:
            rows = [(float(m), p) for m, p in system["points"]]
            return BodySpec.from_points(rows)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid body points: {e}") from e
    if "preset" in system:
        name = system["preset"]
        try:
            mass = float(system["mass"])
            if name == "cube":
                return BodySpec.cube(mass, float(system["side"]))
            if name == "box":
                return BodySpec.box(mass, system["dims"])
            if name == "sphere":
                return BodySpec.sphere(mass, float(system["radius"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"invalid {name!r} preset: {e}") from e
        raise ConfigError(f"unknown body preset {name!r}")
    raise ConfigError("system must provide one of: inertia, points, preset")


def _parse_system(system, alg):
    _require(isinstance(system, dict), "system must be an object")
    keys = [k for k in ("inertia", "points", "preset") if k in system]
    _require(
        len(keys) == 1,
        "system must provide exactly one of: inertia, points, preset",
    )
    if keys[0] == "inertia":
        try:
            form = InertiaForm(np.asarray(system["inertia"], dtype=float))
        except ValueError as e:
            raise ConfigError(f"invalid inertia matrix: {e}") from e
        _require(
            form.dim == alg.dim,
            f"inertia matrix is {form.dim}x{form.dim} but the algebra has "
            f"dimension {alg.dim}",
        )
    else:
        _require(
            _is_so3(alg),
            "body point clouds and presets require the so3 algebra",
        )
        form = inertia_from_body(parse_body(system))
    _require(form.is_definite, "inertia form must be positive definite")
    return form


def parse_config(doc):
    """Validate a configuration mapping and resolve it to objects."""
    _require(isinstance(doc, dict), "config root must be an object")
    alg = _parse_algebra(doc.get("algebra", "so3"))
    inertia = _parse_system(_as_mapping(doc, "system"), alg)

    initial = _as_mapping(doc, "initial")
    given = [k for k in ("A0", "X0") if k in initial]
    _require(len(given) == 1, "initial must provide exactly one of A0, X0")
    try:
        vec = alg.coords(np.asarray(initial[given[0]], dtype=float))
    except LieTripleError as e:
        raise ConfigError(str(e)) from e
    A0 = inertia.matrix @ vec if given[0] == "X0" else vec

    integ = _as_mapping(doc, "integrator")
    method = integ.get("method", "rk4")
    _require(
        method in REDUCED_METHODS + RECONSTRUCTING_METHODS,
        f"unknown integrator method {method!r}",
    )
    try:
        dt = float(integ["dt"])
        steps = int(integ["steps"])
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"integrator needs numeric dt and steps: {e}") from e
    _require(dt > 0.0, "dt must be positive")
    _require(steps >= 1, "steps must be at least 1")
    reproject_every = int(integ.get("reproject_every", 100))
    _require(reproject_every >= 0, "reproject_every must be >= 0")

    group = None
    g0 = None
    if method in RECONSTRUCTING_METHODS:
        _require(
            _is_so3(alg),
            "attitude reconstruction requires the so3 algebra",
        )
        group = so3_group()
        if "g0" in initial:
            try:
                g0 = GroupElement(np.asarray(initial["g0"], dtype=float), group)
            except (ValueError, LieTripleError) as e:
                raise ConfigError(f"invalid initial attitude g0: {e}") from e
    else:
        _require(
            "g0" not in initial,
            "g0 is only meaningful with a reconstructing method "
            "(rkmk4 or lie-euler)",
        )

    output = doc.get("output", {})
    _require(isinstance(output, dict), "config section 'output' must be an object")
    fmt = output.get("format", "csv")
    _require(fmt in ("csv", "json-lines"), f"unknown output format {fmt!r}")
    stride = int(output.get("stride", 1))
    _require(stride >= 1, "output stride must be at least 1")
    path = output.get("path")
    _require(path is None or isinstance(path, str), "output path must be a string")

    return SimulationConfig(
        algebra=alg,
        group=group,
        inertia=inertia,
        A0=A0,
        g0=g0,
        method=method,
        dt=dt,
        steps=steps,
        reproject_every=reproject_every,
        path=path,
        format=fmt,
        stride=stride,
        plots=bool(output.get("plots", True)),
    )


def load_config(path):
    """Read and parse a JSON configuration file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file {path} is not valid JSON: {e}") from e
    return parse_config(doc)


def run_simulation(cfg):
    """Integrate the configured system and return the trajectory record."""
    h = rigid_body_hamiltonian(cfg.inertia)

    def rhs(B):
        return reduced_hamiltonian_field(cfg.algebra, h, B)

    if cfg.reconstruct:
        return integrate_with_reconstruction(
            cfg.group,
            cfg.algebra,
            rhs,
            cfg.g0,
            cfg.A0,
            cfg.dt,
            cfg.steps,
            method=cfg.method,
            hamiltonian=h,
            reproject_every=cfg.reproject_every,
        )
    return integrate_reduced(
        cfg.algebra, rhs, cfg.A0, cfg.dt, cfg.steps,
        method=cfg.method, hamiltonian=h,
    )


# ---------------------------------------------------------------------------
# Trajectory files
# ---------------------------------------------------------------------------


def _columns(record):
    n = record.A.shape[1]
    names = ["t"]
    if record.has_attitude:
        d = record.g.shape[1]
        names += [f"g{i}{j}" for i in range(d) for j in range(d)]
    names += [f"A_{i + 1}" for i in range(n)]
    names += [f"X_{i + 1}" for i in range(n)]
    names += ["energy", "casimir"]
    return names


def _row_values(record, k):
    vals = [record.t[k]]
    if record.has_attitude:
        vals += list(record.g[k].ravel())
    vals += list(record.A[k])
    vals += list(record.X[k])
    vals += [record.energy[k], record.casimir[k]]
    return vals


def _fmt(x):
    return format(float(x), FLOAT_FORMAT)


def write_trajectory(record, path, fmt="csv", stride=1):
    """Write a trajectory record to disk; returns the path written."""
    if stride < 1:
        raise ValueError("stride must be at least 1")
    path = Path(path)
    rows = range(0, record.rows, stride)
    if fmt == "csv":
        lines = [",".join(_columns(record))]
        for k in rows:
            lines.append(",".join(_fmt(v) for v in _row_values(record, k)))
        path.write_text("\n".join(lines) + "\n", newline="\n")
    elif fmt == "json-lines":
        lines = []
        for k in rows:
            obj = {
                "t": float(record.t[k]),
                "A": [float(v) for v in record.A[k]],
                "X": [float(v) for v in record.X[k]],
                "energy": float(record.energy[k]),
                "casimir": float(record.casimir[k]),
            }
            if record.has_attitude:
                obj["g"] = [[float(v) for v in row] for row in record.g[k]]
            lines.append(json.dumps(obj))
        path.write_text("\n".join(lines) + "\n", newline="\n")
    else:
        raise ValueError(f"unknown trajectory format {fmt!r}")
    return path


def _record_from_arrays(t, g, A, X, energy, casimir):
    return TrajectoryRecord(
        t=np.asarray(t, dtype=float),
        A=np.asarray(A, dtype=float),
        X=np.asarray(X, dtype=float),
        energy=np.asarray(energy, dtype=float),
        casimir=np.asarray(casimir, dtype=float),
        g=None if g is None else np.asarray(g, dtype=float),
    )


def read_trajectory(path, fmt=None):
    """Read a trajectory file back into a TrajectoryRecord.

    The format is inferred from the extension unless given ("csv" or
    "json-lines"); values round-trip bit-exactly.
    """
    path = Path(path)
    if fmt is None:
        fmt = "json-lines" if path.suffix in (".jsonl", ".ndjson") else "csv"
    text = path.read_text()
    lines = [line for line in text.split("\n") if line]
    if fmt == "json-lines":
        objs = [json.loads(line) for line in lines]
        g = [o["g"] for o in objs] if "g" in objs[0] else None
        return _record_from_arrays(
            [o["t"] for o in objs],
            g,
            [o["A"] for o in objs],
            [o["X"] for o in objs],
            [o["energy"] for o in objs],
            [o["casimir"] for o in objs],
        )
    header = lines[0].split(",")
    data = np.array(
        [[float(v) for v in line.split(",")] for line in lines[1:]]
    )
    col = {name: i for i, name in enumerate(header)}
    n = sum(1 for name in header if name.startswith("A_"))
    g = None
    if "g00" in col:
        d = int(round(np.sqrt(sum(1 for c in header if c.startswith("g")))))
        gcols = [col[f"g{i}{j}"] for i in range(d) for j in range(d)]
        g = data[:, gcols].reshape(-1, d, d)
    A = data[:, [col[f"A_{i + 1}"] for i in range(n)]]
    X = data[:, [col[f"X_{i + 1}"] for i in range(n)]]
    return _record_from_arrays(
        data[:, col["t"]], g, A, X, data[:, col["energy"]], data[:, col["casimir"]]
    )
