from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import Schedule


@dataclass(frozen=True)
class ScheduleMetrics:
    """Makespan, per-resource load and utilisation, per-task waiting time.

    ``imbalance`` is ``(max load - min load) / max load``: 0 when every
    resource carries the same load, 1 when at least one sits idle.
    """

    makespan: Fraction
    loads: tuple[Fraction, ...]
    imbalance: Fraction
    waiting: tuple[Fraction, ...]
    utilization: tuple[Fraction, ...]


def compute_metrics(s: Schedule) -> ScheduleMetrics:
    loads = [Fraction(0)] * s.etc.m
    waiting = [Fraction(0)] * s.etc.n
    for a in s.assignments:
        loads[a.resource] += a.duration
        waiting[a.task] = a.start
    makespan = max(loads)
    if makespan == 0:
        imbalance = Fraction(0)
        utilization = [Fraction(0)] * len(loads)
    else:
        imbalance = (makespan - min(loads)) / makespan
        utilization = [load / makespan for load in loads]
    return ScheduleMetrics(makespan, tuple(loads), imbalance, tuple(waiting), tuple(utilization))
