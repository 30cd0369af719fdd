"""Exhaustive optimal makespan for small instances.

Release times are all zero and schedules have no gaps, so the order of
tasks within a resource does not matter: it is enough to enumerate the
``m**n`` task-to-resource mappings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .model import EtcMatrix, Schedule, build_schedule

DEFAULT_LIMIT = 10**7


class InstanceTooLargeError(ValueError):
    def __init__(self, n: int, m: int, limit: int) -> None:
        self.n, self.m, self.limit = n, m, limit
        super().__init__(
            f"{m}^{n} mappings exceed the enumeration limit of {limit}")


@dataclass(frozen=True)
class OracleResult:
    optimal_makespan: Fraction
    witness: tuple[int, ...]
    explored: int

    def schedule(self, etc: EtcMatrix) -> Schedule:
        return build_schedule(list(enumerate(self.witness)), etc)


def scale_to_integers(etc: EtcMatrix) -> tuple[list[list[int]], int]:
    """Multiply every entry by the LCM of the denominators."""
    denom = 1
    for row in etc.et:
        for v in row:
            denom = math.lcm(denom, v.denominator)
    return [[int(v * denom) for v in row] for row in etc.et], denom


def optimal_makespan(etc: EtcMatrix, limit: int = DEFAULT_LIMIT, *,
                     backend: str | None = None) -> OracleResult:
    """Minimum makespan over all mappings, with the lexicographically least witness.

    Raises :class:`InstanceTooLargeError` when ``m**n`` exceeds ``limit``.
    """
    if etc.m ** etc.n > limit:
        raise InstanceTooLargeError(etc.n, etc.m, limit)
    scaled, denom = scale_to_integers(etc)
    best, witness, explored = kernel.best_mapping(scaled, backend=backend)
    return OracleResult(Fraction(best, denom), tuple(witness), explored)
