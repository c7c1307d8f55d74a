"""Degree-greedy solver and its worst-case ratio certificate.

Machine-1 operations are ordered by descending out-degree; ties fall back
to the ratio of the out-degree to the total in-degree of the successors,
compared exactly by cross-multiplication.  The certificate bounds the
greedy makespan by max{q+m, n}, where q is the shortest order prefix
whose out-degree sum exceeds the arc total minus m, and divides by a
proven lower bound on the optimum.

The lower bound deserves a note.  The published form max{m+dminA, n+dminB}
can exceed the optimum (n=1, m=3, a single arc gives 4 versus an optimum
of 3), so certificates here use max{n+dminA, m+dminB}: the last machine-1
completion (at least n) is followed by at least dminA successors, and
machine 2 carries m operations none of which can start before dminB.
Reports carry the published form alongside, flagged, for comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .instance import Instance, degree_profile
from .schedule import Permutation, Schedule, complete_m2_erd


@dataclass(frozen=True)
class BoundsReport:
    q: int
    d_min_a: int
    d_min_b: int
    lower_bound: int
    lower_bound_printed: int
    greedy_upper: int
    ratio_bound: Fraction


def greedy_order(inst: Instance) -> Permutation:
    """Order A-operations by out-degree, then by the successor-weight ratio.

    A-operations with no successors sort last; all comparisons are exact.
    """
    prof = degree_profile(inst)

    def key(i: int):
        d = prof.out_deg[i - 1]
        if d == 0:
            ratio = Fraction(0)
        else:
            denom = sum(prof.in_deg[j - 1] for j in prof.succ[i])
            ratio = Fraction(d, denom)
        return (-d, -ratio, i)

    return tuple(sorted(range(1, inst.n + 1), key=key))


def solve_greedy(inst: Instance) -> Schedule:
    return complete_m2_erd(inst, greedy_order(inst))


def compute_q(inst: Instance, pi: Permutation) -> int:
    """Smallest q with sum of the first q out-degrees > total arcs - m."""
    prof = degree_profile(inst)
    total = sum(prof.out_deg)
    prefix = 0
    for q, a in enumerate(pi, start=1):
        prefix += prof.out_deg[a - 1]
        if prefix > total - inst.m:
            return q
    raise AssertionError("unreachable: inequality holds at q=n since m >= 1")


def lower_bound(inst: Instance) -> int:
    prof = degree_profile(inst)
    return max(inst.n + min(prof.out_deg), inst.m + min(prof.in_deg))


def lower_bound_printed_form(inst: Instance) -> int:
    """The bound as published; can exceed the optimum, kept for reporting."""
    prof = degree_profile(inst)
    return max(inst.m + min(prof.out_deg), inst.n + min(prof.in_deg))


def bounds_report(inst: Instance) -> BoundsReport:
    prof = degree_profile(inst)
    pi = greedy_order(inst)
    q = compute_q(inst, pi)
    lb = lower_bound(inst)
    upper = max(q + inst.m, inst.n)
    return BoundsReport(
        q=q,
        d_min_a=min(prof.out_deg),
        d_min_b=min(prof.in_deg),
        lower_bound=lb,
        lower_bound_printed=lower_bound_printed_form(inst),
        greedy_upper=upper,
        ratio_bound=Fraction(upper, lb),
    )


def bounds_report_to_json(report: BoundsReport) -> str:
    return json.dumps(
        {
            "q": report.q,
            "d_min_a": report.d_min_a,
            "d_min_b": report.d_min_b,
            "lower_bound": report.lower_bound,
            "lower_bound_printed": report.lower_bound_printed,
            "greedy_upper": report.greedy_upper,
            "ratio_bound": [report.ratio_bound.numerator, report.ratio_bound.denominator],
        },
        indent=2,
    ) + "\n"
