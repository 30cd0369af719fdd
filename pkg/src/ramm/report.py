"""Cross-policy comparison reports as a text table, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

from .metrics import ScheduleMetrics, compute_metrics
from .model import EtcMatrix, Schedule
from .oracle import DEFAULT_LIMIT, OracleResult, optimal_makespan
from .policies import DivertVariant, PolicyId, run_policy

FORMATS = ("text", "csv", "json")
CSV_COLUMNS = ("scenario", "policy", "variant", "makespan", "imbalance", "loads", "assignments")

_VARIANT_POLICIES = (PolicyId.IMPROVED_MAX_MIN, PolicyId.RAMM)


@dataclass(frozen=True)
class PolicyOutcome:
    policy: PolicyId
    variant: DivertVariant | None
    schedule: Schedule
    metrics: ScheduleMetrics


@dataclass(frozen=True)
class ComparisonReport:
    scenario: str
    etc: EtcMatrix
    outcomes: tuple[PolicyOutcome, ...]
    oracle: OracleResult | None = None


def evaluate(policy: PolicyId | str, etc: EtcMatrix,
             variant: DivertVariant = DivertVariant.PAPER_CONSISTENT) -> PolicyOutcome:
    policy = PolicyId(policy)
    schedule = run_policy(policy, etc, variant)
    used = DivertVariant(variant) if policy in _VARIANT_POLICIES else None
    return PolicyOutcome(policy, used, schedule, compute_metrics(schedule))


def compare(name: str, etc: EtcMatrix, policies: Iterable[PolicyId | str] = tuple(PolicyId),
            variant: DivertVariant = DivertVariant.PAPER_CONSISTENT, *,
            with_oracle: bool = False, limit: int = DEFAULT_LIMIT) -> ComparisonReport:
    """Run each policy on the same matrix, optionally alongside the exhaustive optimum."""
    outcomes = tuple(evaluate(p, etc, variant) for p in policies)
    oracle = optimal_makespan(etc, limit) if with_oracle else None
    return ComparisonReport(name, etc, outcomes, oracle)


def format_number(q: Fraction) -> str:
    """Integers as-is; anything else as a decimal with at most six places."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    with localcontext() as ctx:
        ctx.prec = max(28, len(str(abs(q.numerator) // q.denominator)) + 10)
        d = (Decimal(q.numerator) / Decimal(q.denominator)).quantize(
            Decimal("0.000001"), rounding=ROUND_HALF_UP)
    text = format(d, "f").rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _json_number(q: Fraction):
    text = format_number(q)
    return int(text) if "." not in text else float(text)


def _reports(r: ComparisonReport | Sequence[ComparisonReport]) -> list[ComparisonReport]:
    return [r] if isinstance(r, ComparisonReport) else list(r)


def _assignment_tokens(s: Schedule) -> list[str]:
    etc = s.etc
    return [f"{etc.task_names[a.task]}:{etc.resource_names[a.resource]}:"
            f"{format_number(a.start)}:{format_number(a.finish)}" for a in s.assignments]


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
    out = []
    for r in [header] + rows:
        cells = [r[0].ljust(widths[0])] + [v.rjust(w) for v, w in zip(r[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
    return out


def _policy_columns(reports: list[ComparisonReport]) -> list[PolicyId]:
    cols: list[PolicyId] = []
    for r in reports:
        for o in r.outcomes:
            if o.policy not in cols:
                cols.append(o.policy)
    return cols


def _emit_text(reports: list[ComparisonReport]) -> str:
    cols = _policy_columns(reports)
    with_oracle = any(r.oracle is not None for r in reports)
    header = ["Problem"] + [p.title for p in cols] + (["Optimal"] if with_oracle else [])
    rows = []
    imb_rows = []
    if cols or with_oracle:
        for r in reports:
            by_policy = {o.policy: o for o in r.outcomes}
            row = [r.scenario] + [format_number(by_policy[p].metrics.makespan)
                                  if p in by_policy else "-" for p in cols]
            if with_oracle:
                row.append(format_number(r.oracle.optimal_makespan) if r.oracle else "-")
            rows.append(row)
            imb_rows.append([r.scenario] + [format_number(by_policy[p].metrics.imbalance)
                                            if p in by_policy else "-" for p in cols])
    lines = ["Makespan"] + _table(header, rows)
    if cols:
        lines += ["", "Load imbalance"] + _table(["Problem"] + [p.title for p in cols], imb_rows)
    return "\n".join(lines) + "\n"


def _emit_csv(reports: list[ComparisonReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        for o in r.outcomes:
            w.writerow([r.scenario, o.policy.value, o.variant.value if o.variant else "-",
                        format_number(o.metrics.makespan), format_number(o.metrics.imbalance),
                        ";".join(format_number(x) for x in o.metrics.loads),
                        ";".join(_assignment_tokens(o.schedule))])
        if r.oracle is not None:
            s = r.oracle.schedule(r.etc)
            m = compute_metrics(s)
            w.writerow([r.scenario, "optimal", "-", format_number(m.makespan),
                        format_number(m.imbalance), ";".join(format_number(x) for x in m.loads),
                        ";".join(_assignment_tokens(s))])
    return buf.getvalue()


def _schedule_json(s: Schedule, m: ScheduleMetrics) -> dict:
    etc = s.etc
    return {
        "makespan": _json_number(m.makespan),
        "imbalance": _json_number(m.imbalance),
        "loads": {etc.resource_names[j]: _json_number(x) for j, x in enumerate(m.loads)},
        "assignments": [
            {"task": etc.task_names[a.task], "resource": etc.resource_names[a.resource],
             "start": _json_number(a.start), "finish": _json_number(a.finish)}
            for a in s.assignments],
    }


def _emit_json(reports: list[ComparisonReport]) -> str:
    doc = []
    for r in reports:
        entry = {"scenario": r.scenario, "policies": []}
        for o in r.outcomes:
            entry["policies"].append({
                "policy": o.policy.value,
                "variant": o.variant.value if o.variant else None,
                **_schedule_json(o.schedule, o.metrics)})
        if r.oracle is not None:
            s = r.oracle.schedule(r.etc)
            entry["optimal"] = {"explored": r.oracle.explored,
                                **_schedule_json(s, compute_metrics(s))}
        doc.append(entry)
    return json.dumps({"reports": doc}, indent=2) + "\n"


def emit_report(r: ComparisonReport | Sequence[ComparisonReport], format: str = "text") -> str:
    """Render one report or several (one table row per scenario)."""
    reports = _reports(r)
    if format == "text":
        return _emit_text(reports)
    if format == "csv":
        return _emit_csv(reports)
    if format == "json":
        return _emit_json(reports)
    raise ValueError(f"unknown report format {format!r}; expected one of {FORMATS}")
