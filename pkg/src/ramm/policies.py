"""Batch-mode mapping heuristics for independent tasks on unrelated machines.

Every policy is a pure function ``EtcMatrix -> Schedule``. A resource is
*busy* once its ready time is positive; there is no wall clock, only the
load committed so far in the mapping loop. Ties always go to the lowest
task index, then the lowest resource index.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Callable

from .model import EtcMatrix, Schedule, build_schedule


class PolicyId(str, enum.Enum):
    MIN_MIN = "min_min"
    MAX_MIN = "max_min"
    IMPROVED_MAX_MIN = "improved_max_min"
    RAMM = "ramm"

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    PolicyId.MIN_MIN: "Min-Min",
    PolicyId.MAX_MIN: "Max-Min",
    PolicyId.IMPROVED_MAX_MIN: "Imp Max-Min",
    PolicyId.RAMM: "RAMM",
}


class DivertVariant(str, enum.Enum):
    """How a policy reacts when the chosen task's best resource is busy.

    ``PAPER_CONSISTENT`` re-selects which task goes to the idle resource;
    ``STRICT`` moves the chosen task itself (or, for Improved Max-Min,
    never diverts at all).
    """

    PAPER_CONSISTENT = "paper_consistent"
    STRICT = "strict"


def _argmin_ct(row, rt) -> int:
    best_j = 0
    best = row[0] + rt[0]
    for j in range(1, len(rt)):
        ct = row[j] + rt[j]
        if ct < best:
            best, best_j = ct, j
    return best_j


def min_min(etc: EtcMatrix) -> Schedule:
    et = etc.et
    rt = [Fraction(0)] * etc.m
    remaining = list(range(etc.n))
    order = []
    while remaining:
        best = None
        for i in remaining:
            j = _argmin_ct(et[i], rt)
            ct = et[i][j] + rt[j]
            if best is None or ct < best[0]:
                best = (ct, i, j)
        _, i, j = best
        order.append((i, j))
        rt[j] += et[i][j]
        remaining.remove(i)
    return build_schedule(order, etc)


def max_min(etc: EtcMatrix, *, textbook: bool = False) -> Schedule:
    """Largest-completion-time task first.

    By default each task goes to its minimum *execution* time resource and
    the task whose completion time there is largest is mapped first; this
    ignores ready times when placing work, which is what leaves slower
    resources idle. ``textbook=True`` uses the common formulation instead:
    pick the task whose minimum completion time is largest and place it on
    the resource achieving that minimum.
    """
    et = etc.et
    rt = [Fraction(0)] * etc.m
    remaining = list(range(etc.n))
    zeros = [Fraction(0)] * etc.m
    order = []
    while remaining:
        best = None
        for i in remaining:
            j = _argmin_ct(et[i], rt if textbook else zeros)
            ct = et[i][j] + rt[j]
            if best is None or ct > best[0]:
                best = (ct, i, j)
        _, i, j = best
        order.append((i, j))
        rt[j] += et[i][j]
        remaining.remove(i)
    return build_schedule(order, etc)


def improved_max_min(etc: EtcMatrix,
                     variant: DivertVariant = DivertVariant.PAPER_CONSISTENT) -> Schedule:
    """Largest execution time task first, onto its minimum completion time resource.

    With ``PAPER_CONSISTENT``, when that resource is busy and some resource
    is still idle, the idle resource with the smallest completion time for
    the chosen task instead receives the remaining task that runs longest
    on it.
    """
    variant = DivertVariant(variant)
    et = etc.et
    rt = [Fraction(0)] * etc.m
    remaining = list(range(etc.n))
    order = []
    while remaining:
        k = max(remaining, key=lambda i: (max(et[i]), -i))
        j = _argmin_ct(et[k], rt)
        if variant is DivertVariant.PAPER_CONSISTENT and rt[j] > 0:
            idle = [r for r in range(etc.m) if rt[r] == 0]
            if idle:
                j = min(idle, key=lambda r: (et[k][r] + rt[r], r))
                k = max(remaining, key=lambda i: (et[i][j], -i))
        order.append((k, j))
        rt[j] += et[k][j]
        remaining.remove(k)
    return build_schedule(order, etc)


def ramm(etc: EtcMatrix, variant: DivertVariant = DivertVariant.PAPER_CONSISTENT) -> Schedule:
    """Resource Aware Min-Min.

    Each round takes the task with the smallest execution time and its
    minimum completion time resource. If that resource is already busy
    while another sits idle, work is diverted to the idle one: under
    ``PAPER_CONSISTENT`` the idle resource gets whichever remaining task
    completes soonest on it; under ``STRICT`` the chosen task moves to the
    idle resource with the next smallest completion time. Once every
    resource is busy the chosen task simply goes to its minimum completion
    time resource.
    """
    variant = DivertVariant(variant)
    et = etc.et
    rt = [Fraction(0)] * etc.m
    remaining = list(range(etc.n))
    order = []
    while remaining:
        k = min(remaining, key=lambda i: (min(et[i]), i))
        j = _argmin_ct(et[k], rt)
        if rt[j] > 0:
            idle = [r for r in range(etc.m) if rt[r] == 0]
            if idle and variant is DivertVariant.PAPER_CONSISTENT:
                # rt is zero on idle resources, so CT there is ET
                _, j, k = min((et[i][r], r, i) for r in idle for i in remaining)
            elif idle:
                j = min(idle, key=lambda r: (et[k][r], r))
        order.append((k, j))
        rt[j] += et[k][j]
        remaining.remove(k)
    return build_schedule(order, etc)


def run_policy(policy: PolicyId | str, etc: EtcMatrix,
               variant: DivertVariant = DivertVariant.PAPER_CONSISTENT) -> Schedule:
    policy = PolicyId(policy)
    fn: Callable[..., Schedule] = POLICIES[policy]
    if policy in (PolicyId.IMPROVED_MAX_MIN, PolicyId.RAMM):
        return fn(etc, DivertVariant(variant))
    return fn(etc)


POLICIES = {
    PolicyId.MIN_MIN: min_min,
    PolicyId.MAX_MIN: max_min,
    PolicyId.IMPROVED_MAX_MIN: improved_max_min,
    PolicyId.RAMM: ramm,
}
