"""Command-line surface: solve, verify, analyze, enumerate, generate, bench.

Every number is printed as an exact fraction "p/q"; a 12-significant-digit
decimal is shown alongside for orientation only.  Exit codes: 0 on success,
1 when a check fails or an instance is infeasible, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import analysis, dutycycle, radsc, reductions
from .core import (
    Instance,
    Schedule,
    coverage_gaps_at,
    evaluate_lifetime,
    format_instance,
    format_schedule,
    max_lifetime_bound,
    parse_instance,
    parse_schedule,
)
from .roundrobin import round_robin, rr_prime

DEFAULT_FUZZ_SEED = 271828
SEED_ENV_VAR = "STRIPCOVER_SEED"


def exact(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def approx(value: Fraction) -> str:
    """Decimal display, 12 significant digits, round half to even."""
    with localcontext() as ctx:
        ctx.prec = 12
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def show(value: Fraction) -> str:
    return f"{exact(value)} (~ {approx(value)})"


@dataclass
class Report:
    command: str
    inputs: list[tuple[str, str]] = field(default_factory=list)
    results: list[tuple[str, Fraction]] = field(default_factory=list)
    checks: list[tuple[str, bool]] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    def add_input(self, path: str) -> None:
        digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        self.inputs.append((path, digest))

    def result(self, label: str, value: Fraction) -> None:
        self.results.append((label, value))

    def check(self, name: str, ok: bool) -> None:
        self.checks.append((name, ok))

    def note(self, line: str) -> None:
        self.lines.append(line)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def render(self) -> str:
        out = [f"command: {self.command}"]
        for path, digest in self.inputs:
            out.append(f"input {path} sha256={digest}")
        for label, value in self.results:
            out.append(f"{label} = {show(value)}")
        out.extend(self.lines)
        for name, ok in self.checks:
            out.append(f"[{'PASS' if ok else 'FAIL'}] {name}")
        return "\n".join(out)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": [{"path": p, "sha256": d} for p, d in self.inputs],
            "results": [
                {"label": label, "exact": exact(v), "approx": approx(v)}
                for label, v in self.results
            ],
            "checks": [{"name": name, "pass": ok} for name, ok in self.checks],
        }


def _load_instance(path: str) -> Instance:
    return parse_instance(Path(path).read_text())


def _load_schedule(path: str, n: int) -> Schedule:
    sched = parse_schedule(Path(path).read_text())
    if sched.n == 0:
        # An empty schedule file stands for "all sensors inactive".
        return Schedule([0] * n, [0] * n)
    return sched


def random_instance(
    rng: random.Random,
    n: int,
    battery_min: int = 1,
    battery_max: int = 9,
    location_denominator: int = 960,
) -> Instance:
    """Seeded instance with grid locations; the grid makes ties common."""
    locations = [
        Fraction(rng.randint(0, location_denominator), location_denominator) for _ in range(n)
    ]
    batteries = [Fraction(rng.randint(battery_min, battery_max)) for _ in range(n)]
    return Instance(locations, batteries)


# --- subcommands -------------------------------------------------------------


def cmd_solve_radsc(args) -> int:
    report = Report("solve-radsc")
    report.add_input(args.instance)
    inst = _load_instance(args.instance)
    solution = radsc.solve(inst)
    report.result("lifetime", solution.lifetime)
    report.note(f"witness pair = {solution.witness_pair}")
    report.note("radii: " + " ".join(exact(r) for r in solution.assignment.radii))
    if args.proper:
        proper = radsc.make_proper(inst, solution.lifetime)
        report.note("proper radii: " + " ".join(exact(r) for r in proper.radii))
    if args.oracle:
        best = max(
            (c.value for c in radsc.candidate_lifetimes(inst) if radsc.is_feasible(inst, c.value)),
            default=None,
        )
        report.check("binary search agrees with the linear candidate scan", best == solution.lifetime)
    print(report.render())
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    report = Report("verify")
    report.add_input(args.instance)
    report.add_input(args.schedule)
    inst = _load_instance(args.instance)
    sched = _load_schedule(args.schedule, inst.n)
    lifetime = evaluate_lifetime(inst, sched)
    report.result("lifetime", lifetime)
    report.result("upper bound 2*sum(b)", max_lifetime_bound(inst))
    gaps = coverage_gaps_at(inst, sched, lifetime)
    if gaps:
        a, b = gaps[0]
        report.note(f"first uncovered region at t = {exact(lifetime)}: ({exact(a)}, {exact(b)})")
    print(report.render())
    return 0


def cmd_round_robin(args) -> int:
    report = Report("round-robin")
    report.add_input(args.instance)
    inst = _load_instance(args.instance)
    result = round_robin(inst)
    report.result("lifetime", result.lifetime)
    report.result("lower bound (rr-prime)", result.rr_prime)
    report.note("solo radii: " + " ".join(exact(r) for r in result.per_sensor_radii))
    report.note("activations: " + " ".join(exact(t) for t in result.schedule.activations))
    report.check(
        "verifier agrees with the analytic lifetime",
        evaluate_lifetime(inst, result.schedule) == result.lifetime,
    )
    print(report.render())
    return 0 if report.passed else 1


def cmd_duty_cycle(args) -> int:
    report = Report("duty-cycle")
    report.add_input(args.instance)
    inst = _load_instance(args.instance)
    result = dutycycle.best_partition(inst, n_limit=args.max_n)
    shifts_1based = [tuple(i + 1 for i in shift) for shift in result.partition.shifts]
    report.result("total lifetime", result.total)
    report.note(f"best partition (1-based sensors): {shifts_1based}")
    for shift, t in zip(shifts_1based, result.shift_lifetimes):
        report.note(f"  shift {shift}: {show(t)}")
    report.check(
        "verifier agrees with the summed shift lifetimes",
        evaluate_lifetime(inst, result.schedule) == result.total,
    )
    print(report.render())
    return 0 if report.passed else 1


def cmd_analyze(args) -> int:
    report = Report("analyze")
    report.add_input(args.instance)
    report.add_input(args.schedule)
    inst = _load_instance(args.instance)
    sched = _load_schedule(args.schedule, inst.n)
    result = analysis.analyze_schedule(inst, sched)
    report.result("lifetime", result.lifetime)
    report.result("round-robin lifetime", result.round_robin_lifetime)
    for number, sa in enumerate(result.strips, 1):
        strip = sa.strip
        sensors = [i + 1 for i in strip.indices]
        report.note(
            f"strip {number}: t in [{exact(strip.start)}, {exact(strip.start + strip.duration)})"
            f" sensors {sensors}"
        )
        report.note(f"  duration = {show(strip.duration)}")
        report.note(f"  strip round-robin = {show(sa.rr_strip)}")
        report.note(f"  rr-prime before split = {show(sa.rr_prime_pruned)}")
        report.note(f"  rr-prime after split = {show(sa.rr_prime_children / sa.scale)}")
        report.note(f"  delta = {show(sa.delta)}; unit optimum 2/delta = {show(sa.unit_optimum)}")
        report.note(f"  ratio rr-prime / unit optimum = {show(sa.rr_prime_children / sa.unit_optimum)}")
        for name, ok in sa.checks:
            report.check(f"strip {number}: {name}", ok)
    for name, ok in result.checks:
        report.check(name, ok)
    print(report.render())
    return 0 if report.passed else 1


def _write_or_print(text: str, path: Path | None, label: str) -> None:
    if path is None:
        print(f"# {label}")
        print(text, end="")
    else:
        path.write_text(text)
        print(f"wrote {path}")


def cmd_gen(args) -> int:
    if args.kind == "partition":
        values = [int(v) for v in args.values.split(",")]
        p = reductions.PartitionInput(values)
        inst = reductions.partition_to_instance(p)
        prefix = Path(args.out) if args.out else None
        _write_or_print(
            format_instance(inst),
            prefix.with_suffix(".instance") if prefix else None,
            "instance",
        )
        if args.split is not None:
            chosen = sorted({int(v) - 1 for v in args.split.split(",")})  # 1-based on the CLI
            rest = sorted(set(range(len(values))) - set(chosen))
            sched = reductions.certificate_to_schedule(p, (chosen, rest))
            _write_or_print(
                format_schedule(sched),
                prefix.with_suffix(".schedule") if prefix else None,
                "schedule",
            )
        return 0
    if args.kind == "random":
        rng = random.Random(args.seed)
        inst = random_instance(rng, args.n, args.battery_min, args.battery_max)
        prefix = Path(args.out) if args.out else None
        _write_or_print(
            format_instance(inst),
            prefix.with_suffix(".instance") if prefix else None,
            "instance",
        )
        return 0
    raise AssertionError(f"unknown gen kind {args.kind}")


# Pinned expectations for `bench`.  Each entry is recomputed from scratch on
# every run; any mismatch makes the command exit nonzero.
BENCH_EXPECTED: dict[str, object] = {
    "two-sensor instance: solver lifetime": Fraction(4),
    "two-sensor instance: round-robin lifetime": Fraction(8, 3),
    "two-sensor instance: optimum / round-robin": Fraction(3, 2),
    "duty-cycle witness: verified staggered schedule": Fraction(8),
    "duty-cycle witness: round-robin lifetime": Fraction(16, 3),
    "duty-cycle witness: best duty-cycle total": Fraction(16, 3),
    "duty-cycle witness: optimum / best duty cycle": Fraction(3, 2),
    "certificate: verified lifetime": Fraction(40),
    "certificate: battery upper bound": Fraction(40),
    "unit split: child locations": (
        Fraction(1, 12),
        Fraction(3, 12),
        Fraction(5, 12),
        Fraction(13, 24),
        Fraction(17, 24),
        Fraction(21, 24),
        Fraction(25, 24),
    ),
    "unit split: child radii": (Fraction(1, 12),) * 7,
    "unit split: child schedule lifetime": Fraction(12),
}


def _bench_actuals() -> dict[str, object]:
    actual: dict[str, object] = {}

    two = Instance([Fraction(1, 4), Fraction(3, 4)], [1, 1])
    solved = radsc.solve(two).lifetime
    rr = round_robin(two).lifetime
    actual["two-sensor instance: solver lifetime"] = solved
    actual["two-sensor instance: round-robin lifetime"] = rr
    actual["two-sensor instance: optimum / round-robin"] = solved / rr

    witness = Instance([Fraction(1, 4), Fraction(3, 4), Fraction(3, 4)], [2, 1, 1])
    staggered = Schedule(
        [Fraction(1, 4)] * 3,
        [0, 0, 4],
    )
    verified = evaluate_lifetime(witness, staggered)
    rr_w = round_robin(witness).lifetime
    best = dutycycle.best_partition(witness).total
    actual["duty-cycle witness: verified staggered schedule"] = verified
    actual["duty-cycle witness: round-robin lifetime"] = rr_w
    actual["duty-cycle witness: best duty-cycle total"] = best
    actual["duty-cycle witness: optimum / best duty cycle"] = verified / best

    p = reductions.PartitionInput([1, 2, 3, 4])
    inst = reductions.partition_to_instance(p)
    sched = reductions.certificate_to_schedule(p, ((1, 2), (0, 3)))
    actual["certificate: verified lifetime"] = evaluate_lifetime(inst, sched)
    actual["certificate: battery upper bound"] = max_lifetime_bound(inst)

    strip = analysis.Strip(
        (0, 1),
        Instance([Fraction(1, 4), Fraction(19, 24)], [3, 4]),
        [Fraction(1, 4), Fraction(1, 3)],
        12,
        0,
    )
    children, sigma = analysis.unit_battery_reduction(strip)
    actual["unit split: child locations"] = children.locations
    actual["unit split: child radii"] = sigma
    actual["unit split: child schedule lifetime"] = analysis.unit_lifetime(children, sigma)
    return actual


def _fuzz_once(rng: random.Random) -> list[tuple[str, bool]]:
    n = rng.randint(1, 8)
    inst = random_instance(rng, n)
    checks = []
    result = round_robin(inst)
    checks.append(("rr-prime <= round-robin", result.rr_prime <= result.lifetime))
    checks.append(("round-robin >= total battery", result.lifetime >= inst.total_battery))
    checks.append(("round-robin <= 2 * total battery", result.lifetime <= max_lifetime_bound(inst)))
    checks.append(
        ("verifier matches round-robin", evaluate_lifetime(inst, result.schedule) == result.lifetime)
    )
    solution = radsc.solve(inst)
    checks.append(("solver lifetime within the battery bound", solution.lifetime <= max_lifetime_bound(inst)))
    checks.append(("solver lifetime is feasible", radsc.is_feasible(inst, solution.lifetime)))
    oracle = max(
        c.value for c in radsc.candidate_lifetimes(inst) if radsc.is_feasible(inst, c.value)
    )
    checks.append(("solver agrees with the linear candidate scan", oracle == solution.lifetime))
    for _ in range(3):
        smaller = solution.lifetime * Fraction(rng.randint(1, 999), 1000)
        checks.append(("feasibility is monotone downward", radsc.is_feasible(inst, smaller)))
    return checks


def cmd_bench(args) -> int:
    report = Report("bench")
    actual = _bench_actuals()
    for name, expected in BENCH_EXPECTED.items():
        got = actual[name]
        report.check(name, got == expected)
        if isinstance(got, Fraction):
            report.result(name, got)
        else:
            report.note(f"{name}: {' '.join(exact(v) for v in got)}")
    if args.fuzz:
        seed = args.seed if args.seed is not None else int(os.environ.get(SEED_ENV_VAR, DEFAULT_FUZZ_SEED))
        rng = random.Random(seed)
        report.note(f"fuzz: {args.fuzz} instances, seed {seed}")
        for index in range(args.fuzz):
            for name, ok in _fuzz_once(rng):
                if not ok:
                    report.check(f"fuzz {index}: {name}", ok)
        report.check("fuzz suite", report.passed)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render())
    return 0 if report.passed else 1


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stripcover",
        description="Exact barrier-coverage scheduling tools for sensors on [0, 1].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve-radsc", help="optimal radii when all sensors start at time 0")
    s.add_argument("instance")
    s.add_argument("--proper", action="store_true", help="also print the properized radii")
    s.add_argument("--oracle", action="store_true", help="cross-check against a linear scan")
    s.set_defaults(func=cmd_solve_radsc)

    s = sub.add_parser("verify", help="exact lifetime of a schedule")
    s.add_argument("instance")
    s.add_argument("schedule")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("round-robin", help="one-sensor-at-a-time schedule and lower bound")
    s.add_argument("instance")
    s.set_defaults(func=cmd_round_robin)

    s = sub.add_parser("duty-cycle", help="best shift partition by exhaustive search")
    s.add_argument("instance")
    s.add_argument("--max-n", type=int, default=10, help="enumeration size limit (default 10)")
    s.set_defaults(func=cmd_duty_cycle)

    s = sub.add_parser("analyze", help="strip decomposition with machine-checked inequalities")
    s.add_argument("instance")
    s.add_argument("schedule")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("gen", help="emit instances (and schedules) in the text formats")
    gen_sub = s.add_subparsers(dest="kind", required=True)
    g = gen_sub.add_parser("partition", help="hard instance from positive integers")
    g.add_argument("--values", required=True, help="comma-separated positive integers")
    g.add_argument("--split", help="comma-separated 1-based indices of the first half")
    g.add_argument("--out", help="path prefix; writes PREFIX.instance / PREFIX.schedule")
    g.set_defaults(func=cmd_gen)
    g = gen_sub.add_parser("random", help="seeded random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--battery-min", type=int, default=1)
    g.add_argument("--battery-max", type=int, default=9)
    g.add_argument("--out", help="path prefix; writes PREFIX.instance")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="recompute the pinned reference table")
    s.add_argument("--json", action="store_true", help="machine-readable output")
    s.add_argument("--fuzz", type=int, default=0, help="also run N random instances of checks")
    s.add_argument("--seed", type=int, default=None, help=f"fuzz seed (default ${SEED_ENV_VAR} or {DEFAULT_FUZZ_SEED})")
    s.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except radsc.InfeasibleInstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
