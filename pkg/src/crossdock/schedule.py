"""Schedule semantics: feasibility, makespan, release times, machine-2 completion.

Machine 1 has no precedence constraints of its own, so a schedule is
explored through permutations of the A-operations, run back-to-back from
time 0.  Given that assignment, machine 2 is completed by the
earliest-release-date (ERD) rule, which is makespan-optimal; a factorial
brute-force over machine-2 orders serves as the independent check.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .instance import Instance, degree_profile

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class Schedule:
    start_a: tuple[int, ...]
    start_b: tuple[int, ...]


@dataclass(frozen=True)
class FeasibilityReport:
    ok: bool
    violations: tuple[str, ...]


def validate_permutation(inst: Instance, pi: Permutation) -> None:
    if sorted(pi) != list(range(1, inst.n + 1)):
        raise ValueError(f"not a permutation of 1..{inst.n}: {pi}")


def makespan(sched: Schedule) -> int:
    return max(*sched.start_a, *sched.start_b, -1) + 1


def release_times(inst: Instance, pi: Permutation) -> tuple[int, ...]:
    """Earliest feasible start of each B-operation, machine-2 load aside.

    With A-operation pi_i starting at i-1, B_j is ready at the larger of
    its in-degree (its predecessors alone occupy machine 1 that long) and
    the latest predecessor completion; 0 when it has no predecessors.
    """
    validate_permutation(inst, pi)
    prof = degree_profile(inst)
    pos = {a: idx for idx, a in enumerate(pi)}
    r = list(prof.in_deg)
    for i, j in inst.arcs:
        done = pos[i] + 1
        if done > r[j - 1]:
            r[j - 1] = done
    return tuple(r)


def complete_m2_erd(inst: Instance, pi: Permutation) -> Schedule:
    """Complete machine 2 by the ERD rule for the given machine-1 order.

    B-operations run in non-decreasing release time (ties by index), each
    at the earliest moment past its release and the previous completion.
    """
    r = release_times(inst, pi)
    start_a = [0] * inst.n
    for idx, a in enumerate(pi):
        start_a[a - 1] = idx
    order = sorted(range(1, inst.m + 1), key=lambda j: (r[j - 1], j))
    start_b = [0] * inst.m
    t = 0
    for j in order:
        t = max(t, r[j - 1])
        start_b[j - 1] = t
        t += 1
    return Schedule(start_a=tuple(start_a), start_b=tuple(start_b))


def best_m2_bruteforce(inst: Instance, pi: Permutation) -> Schedule:
    """Try every machine-2 order; oracle for the ERD rule's optimality.

    Returns the schedule of the lexicographically smallest optimal order.
    Limited to m <= 9.
    """
    if inst.m > 9:
        raise ValueError(f"brute force limited to m <= 9, got m={inst.m}")
    r = release_times(inst, pi)
    start_a = [0] * inst.n
    for idx, a in enumerate(pi):
        start_a[a - 1] = idx
    best_mk = None
    best_starts = None
    for order in itertools.permutations(range(1, inst.m + 1)):
        t = 0
        starts = [0] * inst.m
        for j in order:
            t = max(t, r[j - 1])
            starts[j - 1] = t
            t += 1
        mk = max(t, inst.n)
        if best_mk is None or mk < best_mk:
            best_mk = mk
            best_starts = starts
    assert best_starts is not None
    return Schedule(start_a=tuple(start_a), start_b=tuple(best_starts))


def check_feasible(inst: Instance, sched: Schedule) -> FeasibilityReport:
    """Collect every violation: overlaps, negative starts, broken arcs."""
    violations: list[str] = []
    if len(sched.start_a) != inst.n or len(sched.start_b) != inst.m:
        violations.append(
            f"size mismatch: expected {inst.n} A-starts and {inst.m} B-starts, "
            f"got {len(sched.start_a)} and {len(sched.start_b)}"
        )
        return FeasibilityReport(ok=False, violations=tuple(violations))
    for label, starts in (("A", sched.start_a), ("B", sched.start_b)):
        for k, s in enumerate(starts, start=1):
            if s < 0:
                violations.append(f"negative start: {label}{k} at {s}")
    seen_a: dict[int, int] = {}
    for i, s in enumerate(sched.start_a, start=1):
        if s in seen_a:
            violations.append(f"machine-1 overlap: A{seen_a[s]} and A{i} both at {s}")
        else:
            seen_a[s] = i
    seen_b: dict[int, int] = {}
    for j, s in enumerate(sched.start_b, start=1):
        if s in seen_b:
            violations.append(f"machine-2 overlap: B{seen_b[s]} and B{j} both at {s}")
        else:
            seen_b[s] = j
    for i, j in sorted(inst.arcs):
        if sched.start_b[j - 1] < sched.start_a[i - 1] + 1:
            violations.append(f"precedence violation on arc ({i},{j})")
    return FeasibilityReport(ok=not violations, violations=tuple(violations))


def render_gantt(inst: Instance, sched: Schedule) -> str:
    """Two-row fixed-width chart, one cell per time unit, '.' for idle."""
    report = check_feasible(inst, sched)
    if not report.ok:
        raise ValueError("cannot render infeasible schedule: " + "; ".join(report.violations))
    horizon = makespan(sched)
    row_a = ["."] * horizon
    row_b = ["."] * horizon
    for i, s in enumerate(sched.start_a, start=1):
        row_a[s] = f"A{i}"
    for j, s in enumerate(sched.start_b, start=1):
        row_b[s] = f"B{j}"
    width = max(len(c) for c in row_a + row_b)
    line_a = "M1 | " + " ".join(c.ljust(width) for c in row_a).rstrip()
    line_b = "M2 | " + " ".join(c.ljust(width) for c in row_b).rstrip()
    return line_a + "\n" + line_b + "\n"


def schedule_to_json(sched: Schedule) -> str:
    return json.dumps(
        {
            "makespan": makespan(sched),
            "start_a": list(sched.start_a),
            "start_b": list(sched.start_b),
        },
        indent=2,
    ) + "\n"


def schedule_from_json(text: str) -> Schedule:
    try:
        data = json.loads(text)
        start_a = tuple(int(x) for x in data["start_a"])
        start_b = tuple(int(x) for x in data["start_b"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed schedule file: {exc}") from exc
    return Schedule(start_a=start_a, start_b=start_b)
