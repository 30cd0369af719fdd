"""Scenario files: parsing, writing and seeded generation.

A scenario is one JSON document with a ``name`` and exactly one of

* ``"workload"``: ``{"tasks": [{"id", "mi", "mb"}...],
  "resources": [{"id", "mips", "mbps"}...], "rounding": "exact"}``
* ``"etc"``: ``{"tasks": [ids], "resources": [ids], "rows": [[...]...]}``

Numbers may be JSON integers, decimal literals (read exactly, never as
binary floats) or ``"p/q"`` strings.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources as _resources
from typing import Any, Sequence

from .etc import RoundingMode, derive_etc
from .model import EtcMatrix, InvalidResourceError, ResourceSpec, TaskSpec, as_fraction


class ScenarioError(ValueError):
    """A scenario document that is malformed or violates an invariant."""

    def __init__(self, message: str, location: str = "") -> None:
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


@dataclass(frozen=True)
class Scenario:
    name: str
    tasks: tuple[TaskSpec, ...] = ()
    resources: tuple[ResourceSpec, ...] = ()
    rounding: RoundingMode = RoundingMode.EXACT
    matrix: EtcMatrix | None = None

    def __post_init__(self) -> None:
        has_workload = bool(self.tasks) or bool(self.resources)
        if (self.matrix is None) == (not has_workload):
            raise ScenarioError("scenario needs exactly one of a workload or an ETC matrix")
        if has_workload and not (self.tasks and self.resources):
            raise ScenarioError("workload needs at least one task and one resource")
        object.__setattr__(self, "rounding", RoundingMode(self.rounding))

    @property
    def form(self) -> str:
        return "etc" if self.matrix is not None else "workload"

    def etc(self, rounding: RoundingMode | None = None) -> EtcMatrix:
        """The ETC matrix; workload scenarios are derived with ``rounding``
        (defaulting to the scenario's own mode)."""
        if self.matrix is not None:
            return self.matrix
        return derive_etc(self.tasks, self.resources, rounding or self.rounding)


# -- parsing ---------------------------------------------------------------

def _number(value: Any, where: str, *, positive: bool = False) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, str)):
        raise ScenarioError(f"expected a number, got {json.dumps(value)}", where)
    try:
        q = as_fraction(value, what=where)
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"not a number: {value!r}", where) from exc
    if q < 0 or (positive and q == 0):
        raise ScenarioError(f"must be {'positive' if positive else 'non-negative'}, got {value}",
                            where)
    return q


def _require(obj: dict, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise ScenarioError("expected an object", where)
    if key not in obj:
        raise ScenarioError(f"missing field {key!r}", where)
    return obj[key]


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise ScenarioError("expected a list", where)
    return value


def _ids(values: list, where: str) -> list[str]:
    ids = []
    for k, v in enumerate(values):
        if not isinstance(v, (str, int)) or isinstance(v, bool):
            raise ScenarioError("id must be a string", f"{where}[{k}]")
        ids.append(str(v))
    if len(set(ids)) != len(ids):
        raise ScenarioError("ids must be unique", where)
    return ids


def _parse_etc(doc: Any) -> EtcMatrix:
    tasks = _ids(_list(_require(doc, "tasks", "etc"), "etc.tasks"), "etc.tasks")
    res = _ids(_list(_require(doc, "resources", "etc"), "etc.resources"), "etc.resources")
    rows = _list(_require(doc, "rows", "etc"), "etc.rows")
    if not tasks or not res:
        raise ScenarioError("need at least one task and one resource", "etc")
    if len(rows) != len(tasks):
        raise ScenarioError(f"{len(rows)} rows for {len(tasks)} tasks", "etc.rows")
    parsed = []
    for i, row in enumerate(rows):
        row = _list(row, f"etc.rows[{i}]")
        if len(row) != len(res):
            raise ScenarioError(f"{len(row)} entries for {len(res)} resources", f"etc.rows[{i}]")
        parsed.append([_number(v, f"etc.rows[{i}][{j}]") for j, v in enumerate(row)])
    return EtcMatrix.from_rows(parsed, tasks, res)


def _parse_workload(doc: Any) -> tuple[tuple[TaskSpec, ...], tuple[ResourceSpec, ...], RoundingMode]:
    raw_tasks = _list(_require(doc, "tasks", "workload"), "workload.tasks")
    raw_res = _list(_require(doc, "resources", "workload"), "workload.resources")
    rounding = doc.get("rounding", "exact")
    try:
        rounding = RoundingMode(rounding)
    except ValueError:
        raise ScenarioError(f"unknown rounding mode {rounding!r}", "workload.rounding") from None
    if not raw_tasks or not raw_res:
        raise ScenarioError("need at least one task and one resource", "workload")
    tids = _ids([_require(t, "id", f"workload.tasks[{k}]") for k, t in enumerate(raw_tasks)],
                "workload.tasks")
    rids = _ids([_require(r, "id", f"workload.resources[{k}]") for k, r in enumerate(raw_res)],
                "workload.resources")
    tasks = []
    for k, t in enumerate(raw_tasks):
        w = f"workload.tasks[{k}]"
        tasks.append(TaskSpec(k, _number(_require(t, "mi", w), f"{w}.mi"),
                              _number(_require(t, "mb", w), f"{w}.mb"), tids[k]))
    resources = []
    for k, r in enumerate(raw_res):
        w = f"workload.resources[{k}]"
        try:
            resources.append(ResourceSpec(
                k, _number(_require(r, "mips", w), f"{w}.mips", positive=True),
                _number(_require(r, "mbps", w), f"{w}.mbps", positive=True), rids[k]))
        except InvalidResourceError as exc:
            raise ScenarioError(str(exc), w) from exc
    return tuple(tasks), tuple(resources), rounding


def parse_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document.

    Raises :class:`ScenarioError` carrying a line/column (JSON syntax) or a
    field path such as ``etc.rows[2][1]``.
    """
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ScenarioError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ScenarioError("top level must be an object")
    name = _require(doc, "name", "")
    if not isinstance(name, str) or not name:
        raise ScenarioError("must be a non-empty string", "name")
    if ("workload" in doc) == ("etc" in doc):
        raise ScenarioError("exactly one of 'workload' or 'etc' is required")
    if "etc" in doc:
        return Scenario(name, matrix=_parse_etc(doc["etc"]))
    tasks, resources, rounding = _parse_workload(doc["workload"])
    return Scenario(name, tasks, resources, rounding)


# -- writing ---------------------------------------------------------------

def number_literal(q: Fraction) -> str:
    """JSON token for an exact rational: integer, finite decimal or ``"p/q"``."""
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return json.dumps(f"{q.numerator}/{q.denominator}")
    places = max(twos, fives)
    scaled = abs(q.numerator) * 10**places // q.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def dump_scenario(s: Scenario) -> str:
    """Serialise deterministically; :func:`parse_scenario` reads it back exactly."""
    q = json.dumps
    lines = ["{", f'  "name": {q(s.name)},']
    if s.matrix is not None:
        etc = s.matrix
        lines += [
            '  "etc": {',
            f'    "tasks": [{", ".join(q(t) for t in etc.task_names)}],',
            f'    "resources": [{", ".join(q(r) for r in etc.resource_names)}],',
            '    "rows": [',
            ",\n".join(f'      [{", ".join(number_literal(v) for v in row)}]' for row in etc.et),
            "    ]",
            "  }",
        ]
    else:
        lines += ['  "workload": {', '    "tasks": [']
        lines.append(",\n".join(
            f'      {{"id": {q(t.label)}, "mi": {number_literal(t.instruction_volume)}, '
            f'"mb": {number_literal(t.data_volume)}}}' for t in s.tasks))
        lines += ["    ],", '    "resources": [']
        lines.append(",\n".join(
            f'      {{"id": {q(r.label)}, "mips": {number_literal(r.processing_speed)}, '
            f'"mbps": {number_literal(r.bandwidth)}}}' for r in s.resources))
        lines += ["    ],", f'    "rounding": {q(s.rounding.value)}', "  }"]
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- generation ------------------------------------------------------------

DEFAULT_RANGES = {
    "mi": (10, 500),
    "mb": (10, 600),
    "mips": (30, 300),
    "mbps": (5, 300),
}


def generate_workload(seed: int, n: int, m: int, *, mi: Sequence[int] = DEFAULT_RANGES["mi"],
                      mb: Sequence[int] = DEFAULT_RANGES["mb"],
                      mips: Sequence[int] = DEFAULT_RANGES["mips"],
                      mbps: Sequence[int] = DEFAULT_RANGES["mbps"],
                      rounding: RoundingMode = RoundingMode.EXACT,
                      name: str | None = None) -> Scenario:
    """Random integer workload drawn uniformly from inclusive ranges.

    The same ``seed`` always gives the same scenario.
    """
    if n < 1 or m < 1:
        raise ValueError("need at least one task and one resource")
    for label, (lo, hi) in (("mi", mi), ("mb", mb), ("mips", mips), ("mbps", mbps)):
        if lo <= 0 or hi <= 0:
            raise ValueError(f"{label} range must be positive, got [{lo}, {hi}]")
        if lo > hi:
            raise ValueError(f"{label} range is empty: [{lo}, {hi}]")
    rng = random.Random(seed)
    tasks = tuple(TaskSpec(i, rng.randint(*mi), rng.randint(*mb), f"T{i + 1}") for i in range(n))
    resources = tuple(ResourceSpec(j, rng.randint(*mips), rng.randint(*mbps), f"R{j + 1}")
                      for j in range(m))
    return Scenario(name or f"gen-s{seed}-n{n}-m{m}", tasks, resources, rounding)


# -- bundled fixtures --------------------------------------------------------

def bundled_names() -> list[str]:
    files = _resources.files("ramm").joinpath("scenarios")
    return sorted(p.name for p in files.iterdir() if p.name.endswith(".json"))


def load_bundled(name: str) -> Scenario:
    """Load a scenario shipped with the package, e.g. ``"p1"`` or ``"p1.json"``."""
    if not name.endswith(".json"):
        name += ".json"
    path = _resources.files("ramm").joinpath("scenarios", name)
    if not path.is_file():
        raise FileNotFoundError(f"no bundled scenario {name!r}")
    return parse_scenario(path.read_text(encoding="utf-8"))
