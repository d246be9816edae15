"""Parameter sweeps, figure presets, the validation report and file output."""

import csv
import enum
import io
import json
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .clifford import RepTag, build_rep, verify_algebra
from .engines import ALL_ENGINES, Engine, compute
from .errors import QxZeroError, ResonantEdgeError, TunnelError
from .grid import random_grid
from .kinematics import PhysicalScenario
from .matching import Model, resolve_rep
from .units import UNITS

AGREEMENT_TOL = 1e-9
UNITARITY_TOL = 1e-10
T2_TOL = 1e-10
NONNEG_TOL = 1e-12

CSV_COLUMNS = (
    "phi_rad",
    "d_nm",
    "E_meV",
    "V0_meV",
    "engine",
    "rep",
    "T1",
    "T2",
    "R1",
    "R2",
    "unitarity_resid",
    "cond",
    "status",
)


class Variable(enum.Enum):
    ANGLE = "angle"
    WIDTH = "width"
    ENERGY = "energy"

    @property
    def field(self):
        return {"angle": "angle_phi", "width": "width_d", "energy": "energy_E"}[self.value]


@dataclass(frozen=True)
class SweepSpec:
    variable: Variable
    start: float
    stop: float
    count: int
    fixed: PhysicalScenario
    model: Model = Model.FOUR_BY_FOUR
    rep_tag: RepTag = RepTag.FOUR_REP_A
    engines: tuple = ALL_ENGINES

    def __post_init__(self):
        object.__setattr__(self, "variable", Variable(self.variable))
        model, tag = resolve_rep(self.model, self.rep_tag)
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "rep_tag", tag)
        engines = tuple(sorted({Engine(e) for e in self.engines}, key=lambda e: e.value))
        if not engines:
            raise ValueError("at least one engine is required")
        object.__setattr__(self, "engines", engines)
        if self.count < 2:
            raise ValueError("a sweep needs at least 2 points")
        lo, hi = min(self.start, self.stop), max(self.start, self.stop)
        if self.variable is Variable.ANGLE and not (-math.pi / 2 < lo and hi < math.pi / 2):
            raise ValueError("angle range must lie inside (-pi/2, pi/2)")
        if self.variable is not Variable.ANGLE and not lo > 0:
            raise ValueError(f"{self.variable.value} range must be positive")

    def values(self):
        return np.linspace(self.start, self.stop, self.count)


@dataclass
class Row:
    value: float
    scenario: PhysicalScenario
    engine: Engine
    rep: str
    T1: float = math.nan
    T2: float = math.nan
    R1: float = math.nan
    R2: float = math.nan
    unitarity_resid: float = math.nan
    cond: float = math.nan
    status: str = "ok"

    @property
    def ok(self):
        return self.status == "ok"

    def coefficients(self):
        return (self.T1, self.T2, self.R1, self.R2)


@dataclass
class SweepResult:
    rows: list
    metadata: dict = field(default_factory=dict)

    def engine_rows(self, engine):
        engine = Engine(engine)
        return [r for r in self.rows if r.engine is engine]

    def column(self, name, engine=Engine.CLOSED_FORM):
        return np.array([getattr(r, name) for r in self.engine_rows(engine)])


def _flag_disagreement(point_rows):
    good = [r for r in point_rows if r.ok]
    worst = 0.0
    for i, a in enumerate(good):
        for b in good[i + 1 :]:
            worst = max(worst, abs((a.T1 + _z(a.T2)) - (b.T1 + _z(b.T2))))
            worst = max(worst, abs((a.R1 + _z(a.R2)) - (b.R1 + _z(b.R2))))
            if Engine.SCHRODINGER not in (a.engine, b.engine):
                worst = max(worst, *(abs(x - y) for x, y in zip(a.coefficients(), b.coefficients())))
    if worst > AGREEMENT_TOL:
        for r in good:
            r.status = "DISAGREE"
    return worst


def _z(x):
    return 0.0 if math.isnan(x) else x


def evaluate(scenario, engine, model, rep_tag, value=math.nan):
    """One row; errors are recorded in ``status`` instead of raised."""
    row = Row(value=value, scenario=scenario, engine=Engine(engine), rep=RepTag(rep_tag).value)
    try:
        coeffs, cond = compute(scenario, engine, model, rep_tag)
    except (ResonantEdgeError, QxZeroError) as exc:
        row.status = f"SKIPPED: {exc}"
        return row
    except TunnelError as exc:
        row.status = f"ERROR: {type(exc).__name__}: {exc}"
        return row
    row.T1, row.T2, row.R1, row.R2 = coeffs
    row.unitarity_resid = sum(_z(c) for c in coeffs) - 1.0
    row.cond = cond
    return row


def run_sweep(spec):
    rows = []
    for value in spec.values():
        value = float(value)
        try:
            scenario = spec.fixed.with_(**{spec.variable.field: value})
        except TunnelError as exc:
            rows.extend(
                Row(value, spec.fixed, e, spec.rep_tag.value, status=f"ERROR: {exc}") for e in spec.engines
            )
            continue
        point = [evaluate(scenario, e, spec.model, spec.rep_tag, value) for e in spec.engines]
        _flag_disagreement(point)
        rows.extend(point)
    return SweepResult(rows=rows, metadata=_metadata(spec))


def _metadata(spec):
    fixed = spec.fixed
    return {
        "software": {"package": "lltunnel", "version": __version__},
        "variable": spec.variable.value,
        "range": {"start": spec.start, "stop": spec.stop, "count": spec.count},
        "scenario": asdict(fixed),
        "mass_m": fixed.mass_m,
        "fermi_velocity": fixed.fermi_velocity_v,
        "model": spec.model.value,
        "representation": spec.rep_tag.value,
        "engines": [e.value for e in spec.engines],
        "unit_system": UNITS.as_dict(),
    }


def _preset_table():
    def angle(E, V0, rep):
        return SweepSpec(Variable.ANGLE, -1.2, 1.2, 481, PhysicalScenario(E, V0, 10.0, 0.0), Model.FOUR_BY_FOUR, rep)

    def width(E, V0):
        return SweepSpec(Variable.WIDTH, 0.1, 30.0, 300, PhysicalScenario(E, V0, 10.0, 0.0), Model.FOUR_BY_FOUR, "a")

    return {
        "fig2_3": angle(80.0, 70.0, "a"),
        "fig4": angle(40.0, 50.0, "a"),
        "fig5_left": width(80.0, 70.0),
        "fig5_right": width(70.0, 80.0),
        "fig6": angle(80.0, 70.0, "b"),
    }


PRESETS = tuple(_preset_table())


def preset(name, mass_m=None, fermi_velocity=None):
    """The SweepSpec behind a named figure preset.

    Presets use m = 1 free electron mass and v = 1e6 m/s unless overridden.
    """
    table = _preset_table()
    if name not in table:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(table)}")
    spec = table[name]
    changes = {}
    if mass_m is not None:
        changes["mass_m"] = mass_m
    if fermi_velocity is not None:
        changes["fermi_velocity_v"] = fermi_velocity
    if changes:
        spec = SweepSpec(
            spec.variable, spec.start, spec.stop, spec.count, spec.fixed.with_(**changes),
            spec.model, spec.rep_tag, spec.engines,
        )
    return spec


def _fmt(x):
    if isinstance(x, float) or isinstance(x, np.floating):
        return "nan" if math.isnan(x) else f"{x:.11e}"
    return str(x)


def _row_record(row):
    s = row.scenario
    return {
        "phi_rad": s.angle_phi,
        "d_nm": s.width_d,
        "E_meV": s.energy_E,
        "V0_meV": s.barrier_V0,
        "engine": row.engine.value,
        "rep": row.rep,
        "T1": row.T1,
        "T2": row.T2,
        "R1": row.R1,
        "R2": row.R2,
        "unitarity_resid": row.unitarity_resid,
        "cond": row.cond,
        "status": row.status,
    }


def to_csv(result):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in result.rows:
        rec = _row_record(row)
        w.writerow([_fmt(rec[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def _json_safe(x):
    if isinstance(x, float) and math.isnan(x):
        return None
    return x


def to_json(result):
    rows = [{k: _json_safe(v) for k, v in _row_record(r).items()} for r in result.rows]
    return json.dumps({"metadata": result.metadata, "rows": rows}, indent=2, sort_keys=True) + "\n"


def emit(result, fmt, path):
    """Write ``result`` as csv or json. Output bytes depend only on the result."""
    path = Path(path)
    text = {"csv": to_csv, "json": to_json}[fmt](result)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {fmt} output to {path}: {exc}") from exc
    return path


def read_csv(path):
    """Parse a CSV written by :func:`emit` back into dicts of floats/strings."""
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        for rec in csv.DictReader(fh):
            for k in CSV_COLUMNS:
                if k not in ("engine", "rep", "status"):
                    rec[k] = float(rec[k])
            out.append(rec)
    return out


# -- validation ---------------------------------------------------------------


@dataclass
class Check:
    name: str
    worst: float
    tol: float

    @property
    def passed(self):
        return bool(self.worst < self.tol)


@dataclass
class ValidationReport:
    checks: list
    points: int
    seed: int
    seconds: float

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def as_dict(self):
        return {
            "passed": self.passed,
            "points": self.points,
            "seed": self.seed,
            "seconds": self.seconds,
            "checks": [
                {"name": c.name, "worst": c.worst, "tol": c.tol, "passed": c.passed} for c in self.checks
            ],
        }


def _grid_coefficients(grid):
    """Everything the invariant classes need, computed once per grid point."""
    out = []
    for s in grid:
        mirror = s.with_(angle_phi=-s.angle_phi)
        rec = {
            "schrodinger": compute(s, Engine.SCHRODINGER)[0],
            "closed_2x2": compute(s, Engine.CLOSED_FORM, Model.TWO_BY_TWO)[0],
            "oracle_2x2": compute(s, Engine.ORACLE, Model.TWO_BY_TWO)[0],
        }
        for tag in ("a", "b"):
            rec[f"closed_{tag}"] = compute(s, Engine.CLOSED_FORM, Model.FOUR_BY_FOUR, tag)[0]
            rec[f"oracle_{tag}"] = compute(s, Engine.ORACLE, Model.FOUR_BY_FOUR, tag)[0]
            rec[f"mirror_{tag}"] = compute(mirror, Engine.ORACLE, Model.FOUR_BY_FOUR, tag)[0]
        out.append(rec)
    return out


def validate(points=200, seed=42):
    """Run every invariant class on a random grid and report worst residuals."""
    t0 = time.perf_counter()
    grid = random_grid(points, seed)
    data = _grid_coefficients(grid)

    def worst(f):
        return max(f(rec) for rec in data)

    def summed(c):
        return (c[0] + _z(c[1]), c[2] + _z(c[3]))

    checks = []
    for tag in RepTag:
        rep = build_rep(tag)
        checks.append(Check(f"algebra[{tag.value}]", verify_algebra(rep, raise_on_failure=False).worst, 1e-12))
    for key in ("oracle_2x2", "closed_2x2", "oracle_a", "oracle_b", "closed_a", "closed_b"):
        checks.append(Check(f"unitarity[{key}]", worst(lambda r: abs(sum(r[key]) - 1.0)), UNITARITY_TOL))

    engines = ("schrodinger", "closed_2x2", "oracle_2x2")

    def triple(rec):
        vals = [summed(rec[e]) for e in engines]
        return max(abs(a[i] - b[i]) for a in vals for b in vals for i in (0, 1))

    checks.append(Check("triple-oracle agreement (T, R)", worst(triple), AGREEMENT_TOL))
    for tag in ("a", "b"):
        for eng in ("oracle", "closed"):
            checks.append(
                Check(
                    f"spin-sum reduction[{eng}_{tag}]",
                    worst(lambda r: max(abs(x - y) for x, y in zip(summed(r[f"{eng}_{tag}"]), summed(r["oracle_2x2"])))),
                    AGREEMENT_TOL,
                )
            )
        checks.append(
            Check(
                f"closed form vs oracle[{tag}]",
                worst(lambda r: max(abs(x - y) for x, y in zip(r[f"closed_{tag}"], r[f"oracle_{tag}"]))),
                AGREEMENT_TOL,
            )
        )
        checks.append(
            Check(
                f"zero spin-flip transmission[{tag}]",
                worst(lambda r: max(abs(r[f"closed_{tag}"][1]), abs(r[f"oracle_{tag}"][1]))),
                T2_TOL,
            )
        )
        checks.append(
            Check(
                f"phi -> -phi symmetry[{tag}]",
                worst(lambda r: max(abs(x - y) for x, y in zip(r[f"oracle_{tag}"], r[f"mirror_{tag}"]))),
                AGREEMENT_TOL,
            )
        )
    checks.append(
        Check(
            "non-negativity",
            worst(lambda r: max(-c for k, v in r.items() for c in v if not math.isnan(c))),
            NONNEG_TOL,
        )
    )
    return ValidationReport(checks=checks, points=points, seed=seed, seconds=time.perf_counter() - t0)
