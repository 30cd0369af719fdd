"""Domain types shared by every module: specs, the ETC matrix, schedules.

All time quantities are :class:`fractions.Fraction` so that sums and
comparisons are exact; a float never decides an argmin.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence

Duration = Fraction

ZERO = Fraction(0)


class InvalidResourceError(ValueError):
    """A resource with non-positive processing speed or bandwidth."""


class MalformedOrderError(ValueError):
    """An assignment order that does not map every task exactly once."""


def as_duration(value, *, what: str = "value") -> Fraction:
    """Convert ``value`` to an exact non-negative :class:`Fraction`.

    Accepts ints, rationals, :class:`~decimal.Decimal`, numeric strings
    (``"2.5"``, ``"7/3"``) and floats. Floats go through their shortest
    repr so ``0.1`` means one tenth, not the nearest binary double.
    """
    q = as_fraction(value, what=what)
    if q < 0:
        raise ValueError(f"{what} must be non-negative, got {q}")
    return q


def as_fraction(value, *, what: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise TypeError(f"{what} must be a number, got bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (numbers.Rational, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"{what} must be finite, got {value}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{what}: cannot parse {value!r} as a rational") from exc
    raise TypeError(f"{what} must be a number, got {type(value).__name__}")


@dataclass(frozen=True)
class TaskSpec:
    """Workload of one task: instruction volume (MI) and data volume (Mb)."""

    index: int
    instruction_volume: Fraction
    data_volume: Fraction
    name: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "instruction_volume",
            as_duration(self.instruction_volume, what="instruction_volume"))
        object.__setattr__(
            self, "data_volume", as_duration(self.data_volume, what="data_volume"))

    @property
    def label(self) -> str:
        return self.name if self.name is not None else f"T{self.index + 1}"


@dataclass(frozen=True)
class ResourceSpec:
    """Capability of one resource: processing speed (MIPS) and bandwidth (Mbps)."""

    index: int
    processing_speed: Fraction
    bandwidth: Fraction
    name: str | None = None

    def __post_init__(self) -> None:
        speed = as_fraction(self.processing_speed, what="processing_speed")
        bw = as_fraction(self.bandwidth, what="bandwidth")
        if speed <= 0 or bw <= 0:
            raise InvalidResourceError(
                f"resource {self.label}: processing_speed and bandwidth must be > 0 "
                f"(got {speed}, {bw})")
        object.__setattr__(self, "processing_speed", speed)
        object.__setattr__(self, "bandwidth", bw)

    @property
    def label(self) -> str:
        return self.name if self.name is not None else f"R{self.index + 1}"


def check_contiguous(ids: Iterable[int], what: str) -> None:
    ids = list(ids)
    if sorted(ids) != list(range(len(ids))):
        raise ValueError(f"{what} ids must be unique and form 0..{len(ids) - 1}, got {ids}")


def _default_labels(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{k + 1}" for k in range(count))


@dataclass(frozen=True)
class EtcMatrix:
    """Expected execution time of every task (row) on every resource (column)."""

    et: tuple[tuple[Fraction, ...], ...]
    task_names: tuple[str, ...] = ()
    resource_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(
            tuple(as_duration(v, what=f"ET[{i}][{j}]") for j, v in enumerate(row))
            for i, row in enumerate(self.et))
        if not rows or not rows[0]:
            raise ValueError("ETC matrix needs at least one task and one resource")
        m = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError(f"ETC row {i} has {len(row)} entries, expected {m}")
        object.__setattr__(self, "et", rows)
        tnames = tuple(self.task_names) or _default_labels("T", len(rows))
        rnames = tuple(self.resource_names) or _default_labels("R", m)
        if len(tnames) != len(rows):
            raise ValueError(f"{len(tnames)} task names for {len(rows)} rows")
        if len(rnames) != m:
            raise ValueError(f"{len(rnames)} resource names for {m} columns")
        if len(set(tnames)) != len(tnames) or len(set(rnames)) != len(rnames):
            raise ValueError("task and resource names must be unique")
        object.__setattr__(self, "task_names", tnames)
        object.__setattr__(self, "resource_names", rnames)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], task_names: Sequence[str] = (),
                  resource_names: Sequence[str] = ()) -> EtcMatrix:
        return cls(tuple(tuple(r) for r in rows), tuple(task_names), tuple(resource_names))

    @property
    def n(self) -> int:
        return len(self.et)

    @property
    def m(self) -> int:
        return len(self.et[0])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.m):
            raise IndexError(f"ETC index ({i}, {j}) out of range for {self.n}x{self.m}")
        return self.et[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.et)

    def permute_tasks(self, perm: Sequence[int]) -> EtcMatrix:
        """Row ``k`` of the result is row ``perm[k]`` of this matrix."""
        return EtcMatrix(tuple(self.et[p] for p in perm),
                         tuple(self.task_names[p] for p in perm), self.resource_names)


@dataclass(frozen=True)
class ReadyTimes:
    """Accumulated committed load per resource during a mapping loop."""

    rt: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rt", tuple(as_duration(v, what="ready time") for v in self.rt))

    @classmethod
    def zeros(cls, m: int) -> ReadyTimes:
        return cls((ZERO,) * m)

    def __len__(self) -> int:
        return len(self.rt)

    def __getitem__(self, j: int) -> Fraction:
        return self.rt[j]

    def add(self, j: int, amount: Fraction) -> ReadyTimes:
        rt = list(self.rt)
        rt[j] += amount
        return ReadyTimes(tuple(rt))

    def idle(self) -> list[int]:
        return [j for j, v in enumerate(self.rt) if v == 0]


@dataclass(frozen=True)
class Assignment:
    task: int
    resource: int
    start: Fraction
    finish: Fraction

    @property
    def duration(self) -> Fraction:
        return self.finish - self.start


@dataclass(frozen=True)
class Schedule:
    """Policy output: assignments in production order plus the ETC they came from."""

    assignments: tuple[Assignment, ...]
    makespan: Fraction
    etc: EtcMatrix = field(repr=False)

    def by_resource(self) -> list[list[Assignment]]:
        rows: list[list[Assignment]] = [[] for _ in range(self.etc.m)]
        for a in self.assignments:
            if 0 <= a.resource < self.etc.m:
                rows[a.resource].append(a)
        return rows

    def mapping(self) -> tuple[int, ...]:
        """Resource index per task index (requires a complete schedule)."""
        out = [-1] * self.etc.n
        for a in self.assignments:
            out[a.task] = a.resource
        return tuple(out)

    def order(self) -> list[tuple[int, int]]:
        return [(a.task, a.resource) for a in self.assignments]


def build_schedule(order: Sequence[tuple[int, int]], etc: EtcMatrix) -> Schedule:
    """Lay out ``(task, resource)`` pairs back-to-back per resource from time 0.

    Raises :class:`IndexError` for ids outside the matrix and
    :class:`MalformedOrderError` unless every task appears exactly once.
    """
    seen = set()
    for task, res in order:
        if not (0 <= task < etc.n):
            raise IndexError(f"task id {task} out of range 0..{etc.n - 1}")
        if not (0 <= res < etc.m):
            raise IndexError(f"resource id {res} out of range 0..{etc.m - 1}")
        if task in seen:
            raise MalformedOrderError(f"task {etc.task_names[task]} assigned more than once")
        seen.add(task)
    if len(seen) != etc.n:
        missing = [etc.task_names[i] for i in range(etc.n) if i not in seen]
        raise MalformedOrderError(f"tasks never assigned: {', '.join(missing)}")

    clock = [ZERO] * etc.m
    out = []
    for task, res in order:
        start = clock[res]
        finish = start + etc.et[task][res]
        clock[res] = finish
        out.append(Assignment(task, res, start, finish))
    return Schedule(tuple(out), max(clock), etc)


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str


def validate_schedule(s: Schedule, etc: EtcMatrix) -> list[Diagnostic]:
    """Check ``s`` against ``etc``; an empty list means the schedule is feasible.

    Kinds reported: ``unknown-task``, ``unknown-resource``, ``duplicate-task``,
    ``missing-task``, ``negative-start``, ``wrong-duration``, ``gap``,
    ``overlap`` and ``wrong-makespan``.
    """
    diags: list[Diagnostic] = []
    counts = [0] * etc.n
    clock = [ZERO] * etc.m
    max_finish = ZERO

    for a in s.assignments:
        max_finish = max(max_finish, a.finish)
        if not (0 <= a.task < etc.n):
            diags.append(Diagnostic("unknown-task", f"task id {a.task} not in ETC matrix"))
            continue
        name = etc.task_names[a.task]
        counts[a.task] += 1
        if counts[a.task] == 2:
            diags.append(Diagnostic("duplicate-task", f"{name} assigned more than once"))
        if not (0 <= a.resource < etc.m):
            diags.append(Diagnostic("unknown-resource",
                                    f"{name} on resource id {a.resource} not in ETC matrix"))
            continue
        rname = etc.resource_names[a.resource]
        if a.start < 0:
            diags.append(Diagnostic("negative-start", f"{name} starts at {a.start}"))
        expected = etc.et[a.task][a.resource]
        if a.finish - a.start != expected:
            diags.append(Diagnostic(
                "wrong-duration",
                f"{name} on {rname} lasts {a.finish - a.start}, ET is {expected}"))
        prev = clock[a.resource]
        if a.start > prev:
            diags.append(Diagnostic("gap", f"{rname} idle from {prev} to {a.start} before {name}"))
        elif a.start < prev:
            diags.append(Diagnostic("overlap",
                                    f"{name} starts at {a.start} on {rname}, busy until {prev}"))
        clock[a.resource] = a.finish

    for i, c in enumerate(counts):
        if c == 0:
            diags.append(Diagnostic("missing-task", f"{etc.task_names[i]} never assigned"))
    if s.makespan != max_finish:
        diags.append(Diagnostic("wrong-makespan",
                                f"makespan is {s.makespan}, latest finish is {max_finish}"))
    return diags
