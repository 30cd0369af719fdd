"""Expected execution and completion times.

``ET[i][j] = MI_i / MIPS_j + Mb_i / Mbps_j`` and ``CT[i][j] = ET[i][j] + RT_j``.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Sequence

from .model import EtcMatrix, InvalidResourceError, ReadyTimes, ResourceSpec, TaskSpec, check_contiguous


class RoundingMode(str, enum.Enum):
    EXACT = "exact"
    CEIL = "ceil"
    NEAREST = "nearest"
    FLOOR = "floor"


def round_duration(value: Fraction, mode: RoundingMode) -> Fraction:
    mode = RoundingMode(mode)
    if mode is RoundingMode.EXACT:
        return value
    if mode is RoundingMode.CEIL:
        return Fraction(math.ceil(value))
    if mode is RoundingMode.FLOOR:
        return Fraction(math.floor(value))
    # half-up: 2.5 -> 3 (Python's round() would give 2)
    return Fraction(math.floor(value + Fraction(1, 2)))


def execution_time(task: TaskSpec, resource: ResourceSpec) -> Fraction:
    if resource.processing_speed <= 0 or resource.bandwidth <= 0:
        raise InvalidResourceError(f"resource {resource.label} has zero speed or bandwidth")
    return (task.instruction_volume / resource.processing_speed
            + task.data_volume / resource.bandwidth)


def derive_etc(tasks: Sequence[TaskSpec], resources: Sequence[ResourceSpec],
               mode: RoundingMode = RoundingMode.EXACT) -> EtcMatrix:
    """Build the ETC matrix from workload and resource specs.

    Rows and columns follow the specs' ``index`` fields, not list order.
    """
    if not tasks or not resources:
        raise ValueError("need at least one task and one resource")
    check_contiguous((t.index for t in tasks), "task")
    check_contiguous((r.index for r in resources), "resource")
    tasks = sorted(tasks, key=lambda t: t.index)
    resources = sorted(resources, key=lambda r: r.index)
    rows = [[round_duration(execution_time(t, r), mode) for r in resources] for t in tasks]
    return EtcMatrix.from_rows(rows, [t.label for t in tasks], [r.label for r in resources])


def completion_time(etc: EtcMatrix, ready: ReadyTimes, i: int, j: int) -> Fraction:
    if len(ready) != etc.m:
        raise ValueError(f"{len(ready)} ready times for {etc.m} resources")
    return etc[i, j] + ready[j]


def completion_matrix(etc: EtcMatrix, ready: ReadyTimes) -> list[list[Fraction]]:
    if len(ready) != etc.m:
        raise ValueError(f"{len(ready)} ready times for {etc.m} resources")
    rt = ready.rt
    return [[et + rt[j] for j, et in enumerate(row)] for row in etc.et]
