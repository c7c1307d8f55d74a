"""Command-line interface: generate, solve, bound, verify, bench.

Exit codes: 0 success, 1 semantic failure (infeasible schedule),
2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import generators
from .greedy import bounds_report, lower_bound, solve_greedy
from .instance import Instance, InstanceError, classify, parse_instance, serialize_instance
from .pd2 import NotD2Error, lemma1_bound, solve_pd2
from .exact import solve_exact
from .schedule import (
    check_feasible,
    makespan,
    render_gantt,
    schedule_from_json,
    schedule_to_json,
)


class CliError(Exception):
    """Usage or precondition failure; maps to exit code 2."""


def _read_instance(path: str) -> Instance:
    try:
        return parse_instance(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except InstanceError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.kind == "random":
            inst = generators.gen_random(args.n, args.m, args.p, args.seed)
            cmd = f"gen random --n {args.n} --m {args.m} --p {args.p} --seed {args.seed}"
        elif args.kind == "d2":
            inst = generators.gen_d2(args.a, args.b, args.pendants, args.seed)
            cmd = f"gen d2 --a {args.a} --b {args.b} --pendants {args.pendants} --seed {args.seed}"
        else:
            params = generators.TightParams(k=args.k, l=args.l, s=args.s)
            inst = generators.gen_tight(params)
            cmd = f"gen tight --k {args.k} --l {args.l} --s {args.s}"
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    text = serialize_instance(inst, comments=[f"crossdock {cmd}"])
    cls = classify(inst)
    summary = (
        f"n={inst.n} m={inst.m} arcs={len(inst.arcs)} "
        f"is_d2={str(cls.is_d2).lower()} has_pendant_b={str(cls.has_pendant_b).lower()}"
    )
    if args.out:
        Path(args.out).write_text(text)
        print(args.out)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    if args.alg == "greedy":
        sched = solve_greedy(inst)
    elif args.alg == "pd2":
        try:
            sched, _trace = solve_pd2(inst)
        except NotD2Error as exc:
            raise CliError(f"pd2 requires every A out-degree 2: {exc}") from exc
    else:
        try:
            sched = solve_exact(inst, max_n=args.exact_limit).schedule
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    print(f"makespan {makespan(sched)}")
    if args.alg == "greedy":
        rep = bounds_report(inst)
        print(f"q {rep.q}")
        print(f"lower_bound {rep.lower_bound}")
        print(f"greedy_upper {rep.greedy_upper}")
        print(f"ratio_bound {rep.ratio_bound.numerator}/{rep.ratio_bound.denominator}")
    if args.out:
        Path(args.out).write_text(schedule_to_json(sched))
    if args.gantt:
        sys.stdout.write(render_gantt(inst, sched))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    rep = bounds_report(inst)
    print(f"q {rep.q}")
    print(f"lower_bound {rep.lower_bound} (corrected, authoritative)")
    flag = " [exceeds corrected bound]" if rep.lower_bound_printed > rep.lower_bound else ""
    print(f"lower_bound_printed {rep.lower_bound_printed}{flag}")
    print(f"greedy_upper {rep.greedy_upper}")
    print(f"ratio_bound {rep.ratio_bound.numerator}/{rep.ratio_bound.denominator}")
    if classify(inst).is_d2:
        print(f"lemma1_bound {lemma1_bound(inst)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _read_instance(args.infile)
    try:
        sched = schedule_from_json(Path(args.schedule).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {args.schedule}: {exc}") from exc
    except ValueError as exc:
        raise CliError(f"{args.schedule}: {exc}") from exc
    report = check_feasible(inst, sched)
    if report.ok:
        print(f"feasible, makespan {makespan(sched)}")
        return 0
    for v in report.violations:
        print(v)
    return 1


def _cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise CliError(f"not a directory: {args.dir}")
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    for a in algs:
        if a not in ("greedy", "pd2", "exact"):
            raise CliError(f"unknown algorithm {a!r}")

    rows = []
    for path in sorted(p for p in directory.iterdir() if p.is_file()):
        try:
            inst = parse_instance(path.read_text())
        except (OSError, InstanceError) as exc:
            print(f"skipping {path.name}: {exc}", file=sys.stderr)
            continue
        lb = lower_bound(inst)
        rep = bounds_report(inst)
        exact_mk = None
        results: dict[str, tuple[int, float]] = {}
        for alg in sorted(set(algs)):
            t0 = time.perf_counter()
            try:
                if alg == "greedy":
                    mk = makespan(solve_greedy(inst))
                elif alg == "pd2":
                    mk = makespan(solve_pd2(inst)[0])
                else:
                    mk = solve_exact(inst, max_n=args.exact_limit).optimal_makespan
            except NotD2Error:
                print(f"skipping pd2 on {path.name}: not in the two-successor class", file=sys.stderr)
                continue
            except ValueError as exc:
                print(f"skipping {alg} on {path.name}: {exc}", file=sys.stderr)
                continue
            elapsed_ms = (time.perf_counter() - t0) * 1000.0
            results[alg] = (mk, elapsed_ms)
            if alg == "exact":
                exact_mk = mk
        for alg, (mk, elapsed_ms) in sorted(results.items()):
            ratio = ""
            if exact_mk is not None:
                frac = Fraction(mk, exact_mk)
                ratio = f"{frac.numerator}/{frac.denominator}"
            rows.append(
                {
                    "instance": path.name,
                    "n": inst.n,
                    "m": inst.m,
                    "arcs": len(inst.arcs),
                    "algorithm": alg,
                    "makespan": mk,
                    "lower_bound": lb,
                    "greedy_upper": rep.greedy_upper if alg == "greedy" else "",
                    "ratio": ratio,
                    "ratio_bound": f"{rep.ratio_bound.numerator}/{rep.ratio_bound.denominator}",
                    "wall_time_ms": f"{elapsed_ms:.3f}",
                }
            )

    header = [
        "instance", "n", "m", "arcs", "algorithm", "makespan",
        "lower_bound", "greedy_upper", "ratio", "ratio_bound", "wall_time_ms",
    ]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header)
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print("| " + " | ".join(header) + " |")
        print("| " + " | ".join("---" for _ in header) + " |")
        for row in rows:
            print("| " + " | ".join(str(row[h]) for h in header) + " |")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossdock")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    g_rand = gen_sub.add_parser("random", help="arc-Bernoulli instance")
    g_rand.add_argument("--n", type=int, required=True)
    g_rand.add_argument("--m", type=int, required=True)
    g_rand.add_argument("--p", type=float, required=True)
    g_rand.add_argument("--seed", type=int, required=True)
    g_rand.add_argument("--out")
    g_d2 = gen_sub.add_parser("d2", help="two-successor-class instance")
    g_d2.add_argument("--a", type=int, required=True)
    g_d2.add_argument("--b", type=int, required=True)
    g_d2.add_argument("--pendants", type=int, default=0)
    g_d2.add_argument("--seed", type=int, required=True)
    g_d2.add_argument("--out")
    g_tight = gen_sub.add_parser("tight", help="worst-case ratio family")
    g_tight.add_argument("--k", type=int, required=True)
    g_tight.add_argument("--l", type=int, required=True)
    g_tight.add_argument("--s", type=int, required=True)
    g_tight.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    solve = sub.add_parser("solve", help="solve an instance")
    solve.add_argument("--alg", choices=("greedy", "pd2", "exact"), required=True)
    solve.add_argument("--in", dest="infile", required=True)
    solve.add_argument("--out")
    solve.add_argument("--gantt", action="store_true")
    solve.add_argument("--exact-limit", type=int, default=10)
    solve.set_defaults(func=_cmd_solve)

    bound = sub.add_parser("bound", help="print bounds and the ratio certificate")
    bound.add_argument("--in", dest="infile", required=True)
    bound.set_defaults(func=_cmd_bound)

    verify = sub.add_parser("verify", help="check a schedule against an instance")
    verify.add_argument("--in", dest="infile", required=True)
    verify.add_argument("--schedule", required=True)
    verify.set_defaults(func=_cmd_verify)

    bench = sub.add_parser("bench", help="solve a directory of instances")
    bench.add_argument("--dir", required=True)
    bench.add_argument("--algs", default="greedy,pd2,exact")
    bench.add_argument("--format", choices=("csv", "md"), default="md")
    bench.add_argument("--exact-limit", type=int, default=10)
    bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
