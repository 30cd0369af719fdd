"""``ramm`` command line: run, compare, oracle, gen.

Exit codes: 0 success, 1 usage error, 2 input error, 3 enumeration limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import kernel
from .etc import RoundingMode
from .gantt import render_gantt
from .metrics import compute_metrics
from .oracle import DEFAULT_LIMIT, InstanceTooLargeError, optimal_makespan
from .policies import DivertVariant, PolicyId
from .report import FORMATS, ComparisonReport, compare, emit_report, format_number
from .scenario import (DEFAULT_RANGES, Scenario, ScenarioError, bundled_names, dump_scenario,
                       generate_workload, load_bundled, parse_scenario)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

POLICY_CHOICES = {p.value.replace("_", "-"): p for p in PolicyId}
VARIANT_CHOICES = {v.value.replace("_", "-"): v for v in DivertVariant}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_scenario(path: str) -> Scenario:
    """Read a scenario file; a bare bundled name such as ``p1.json`` also works
    when no file of that name exists."""
    p = Path(path)
    if p.is_file():
        try:
            return parse_scenario(p.read_text(encoding="utf-8"))
        except ScenarioError as exc:
            raise InputError(f"{path}: {exc}") from exc
    stem = p.name if p.name.endswith(".json") else p.name + ".json"
    if p.parent == Path(".") and stem in bundled_names():
        return load_bundled(stem)
    raise InputError(f"{path}: file not found")


def _scenario_etc(s: Scenario, rounding: str | None):
    try:
        return s.etc(RoundingMode(rounding) if rounding else None)
    except ValueError as exc:
        raise InputError(f"{s.name}: {exc}") from exc


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    scenario = load_scenario(args.scenario)
    etc = _scenario_etc(scenario, args.rounding)
    report = compare(scenario.name, etc, [POLICY_CHOICES[args.policy]],
                     VARIANT_CHOICES[args.variant])
    if args.format != "text":
        _write(emit_report(report, args.format), args.output)
        return EXIT_OK
    outcome = report.outcomes[0]
    if args.gantt == "svg":
        _write(render_gantt(outcome.schedule, "svg"), args.output)
        return EXIT_OK
    m = outcome.metrics
    variant = f" ({outcome.variant.value})" if outcome.variant else ""
    lines = [f"{scenario.name}: {outcome.policy.title}{variant}", "",
             render_gantt(outcome.schedule, "ascii").rstrip("\n"), "",
             f"makespan   {format_number(m.makespan)}",
             "loads      " + " ".join(
                 f"{etc.resource_names[j]}={format_number(x)}" for j, x in enumerate(m.loads)),
             f"imbalance  {format_number(m.imbalance)}",
             "waiting    " + " ".join(
                 f"{etc.task_names[i]}={format_number(w)}" for i, w in enumerate(m.waiting))]
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_compare(args) -> int:
    scenarios = [load_scenario(p) for p in args.scenarios]
    policies = [POLICY_CHOICES[p] for p in args.policies] if args.policies else list(PolicyId)
    variant = VARIANT_CHOICES[args.variant]

    def one(s: Scenario) -> ComparisonReport:
        return compare(s.name, _scenario_etc(s, args.rounding), policies, variant,
                       with_oracle=args.with_oracle, limit=args.limit)

    # map() preserves argument order
    with ThreadPoolExecutor(max_workers=min(4, len(scenarios))) as pool:
        reports = list(pool.map(one, scenarios))
    _write(emit_report(reports, args.format), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    scenario = load_scenario(args.scenario)
    etc = _scenario_etc(scenario, args.rounding)
    result = optimal_makespan(etc, args.limit)
    if args.format == "text":
        s = result.schedule(etc)
        m = compute_metrics(s)
        mapping = " ".join(f"{etc.task_names[i]}->{etc.resource_names[j]}"
                           for i, j in enumerate(result.witness))
        text = (f"{scenario.name}: optimal makespan {format_number(result.optimal_makespan)}\n"
                f"witness    {mapping}\n"
                f"loads      " + " ".join(f"{etc.resource_names[j]}={format_number(x)}"
                                          for j, x in enumerate(m.loads)) + "\n"
                f"explored   {result.explored} mappings ({kernel.BACKEND} kernel)\n")
    else:
        text = emit_report(ComparisonReport(scenario.name, etc, (), result), args.format)
    _write(text, args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        scenario = generate_workload(
            args.seed, args.tasks, args.resources, mi=args.mi, mb=args.mb, mips=args.mips,
            mbps=args.mbps, rounding=RoundingMode(args.rounding or "exact"), name=args.name)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _write(dump_scenario(scenario), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramm", description="Batch task-mapping heuristics on ETC matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, variant=True):
        p.add_argument("--rounding", choices=[r.value for r in RoundingMode],
                       help="override the rounding of workload scenarios")
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        if variant:
            p.add_argument("--variant", choices=list(VARIANT_CHOICES),
                           default="paper-consistent")

    run = sub.add_parser("run", help="schedule one scenario with one policy")
    run.add_argument("scenario")
    run.add_argument("--policy", choices=list(POLICY_CHOICES), default="ramm")
    run.add_argument("--gantt", choices=("ascii", "svg"), default="ascii")
    common(run)
    run.set_defaults(func=cmd_run)

    cmp_ = sub.add_parser("compare", help="run every policy on each scenario")
    cmp_.add_argument("scenarios", nargs="+")
    cmp_.add_argument("--policies", nargs="+", choices=list(POLICY_CHOICES))
    cmp_.add_argument("--with-oracle", action="store_true")
    cmp_.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    common(cmp_)
    cmp_.set_defaults(func=cmd_compare)

    orc = sub.add_parser("oracle", help="exhaustive optimal makespan")
    orc.add_argument("scenario")
    orc.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    common(orc, variant=False)
    orc.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="write a seeded random workload scenario")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--tasks", type=int, required=True)
    gen.add_argument("--resources", type=int, required=True)
    for key in ("mi", "mb", "mips", "mbps"):
        gen.add_argument(f"--{key}", type=int, nargs=2, metavar=("LO", "HI"),
                         default=DEFAULT_RANGES[key])
    gen.add_argument("--rounding", choices=[r.value for r in RoundingMode])
    gen.add_argument("--name")
    gen.add_argument("--out", help="output path (default stdout)")
    gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"ramm: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InstanceTooLargeError as exc:
        print(f"ramm: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as exc:
        print(f"ramm: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
