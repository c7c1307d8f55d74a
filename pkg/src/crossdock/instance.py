"""Problem instances: bipartite precedence graphs between the two machines.

An instance of the cross-docking scheduling problem consists of n unload
operations A_1..A_n on machine 1, m assembly operations B_1..B_m on
machine 2, and a set of arcs (i, j) meaning B_j cannot start before A_i
has finished.  All durations are one time unit.  Indices are 1-based, in
memory and on disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class InstanceError(ValueError):
    """Raised on invalid instance data or a malformed instance file."""


@dataclass(frozen=True)
class Instance:
    n: int
    m: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not isinstance(self.arcs, frozenset):
            object.__setattr__(self, "arcs", frozenset(self.arcs))
        if self.n < 1 or self.m < 1:
            raise InstanceError(f"n and m must be positive, got n={self.n}, m={self.m}")
        for i, j in self.arcs:
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise InstanceError(f"arc ({i},{j}) out of range for n={self.n}, m={self.m}")

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class DegreeProfile:
    """Adjacency views: out-degrees of the A side, in-degrees of the B side.

    ``out_deg[i-1]`` is the number of B-operations depending on A_i;
    ``in_deg[j-1]`` is the number of A-operations B_j waits for.  ``succ``
    and ``pred`` map 1-based indices to sorted tuples of neighbours.
    """

    out_deg: tuple[int, ...]
    in_deg: tuple[int, ...]
    succ: dict[int, tuple[int, ...]]
    pred: dict[int, tuple[int, ...]]


@dataclass(frozen=True)
class Classification:
    is_d2: bool
    has_pendant_b: bool


def degree_profile(inst: Instance) -> DegreeProfile:
    succ: dict[int, list[int]] = {i: [] for i in range(1, inst.n + 1)}
    pred: dict[int, list[int]] = {j: [] for j in range(1, inst.m + 1)}
    for i, j in inst.arcs:
        succ[i].append(j)
        pred[j].append(i)
    return DegreeProfile(
        out_deg=tuple(len(succ[i]) for i in range(1, inst.n + 1)),
        in_deg=tuple(len(pred[j]) for j in range(1, inst.m + 1)),
        succ={i: tuple(sorted(v)) for i, v in succ.items()},
        pred={j: tuple(sorted(v)) for j, v in pred.items()},
    )


def classify(inst: Instance) -> Classification:
    prof = degree_profile(inst)
    return Classification(
        is_d2=all(d == 2 for d in prof.out_deg),
        has_pendant_b=any(d == 0 for d in prof.in_deg),
    )


def parse_instance(text: str) -> Instance:
    """Parse the line-oriented instance format.

    Comment lines start with "c ", the single header line is
    "p cdock <n> <m>", and each arc line is "a <i> <j>".  Duplicate arcs
    and out-of-range indices are errors, reported with their line number.
    """
    n = m = None
    arcs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise InstanceError(f"duplicate header, line {lineno}")
            if len(fields) != 4 or fields[1] != "cdock":
                raise InstanceError(f"malformed header, line {lineno}")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise InstanceError(f"malformed header, line {lineno}") from None
            if n < 1 or m < 1:
                raise InstanceError(f"n and m must be positive, line {lineno}")
        elif fields[0] == "a":
            if n is None:
                raise InstanceError(f"arc before header, line {lineno}")
            if len(fields) != 3:
                raise InstanceError(f"malformed arc line, line {lineno}")
            try:
                i, j = int(fields[1]), int(fields[2])
            except ValueError:
                raise InstanceError(f"malformed arc line, line {lineno}") from None
            if not (1 <= i <= n and 1 <= j <= m):
                raise InstanceError(f"index out of range, line {lineno}")
            if (i, j) in arcs:
                raise InstanceError(f"duplicate arc, line {lineno}")
            arcs.add((i, j))
        else:
            raise InstanceError(f"unrecognized line type {fields[0]!r}, line {lineno}")
    if n is None or m is None:
        raise InstanceError("missing header")
    return Instance(n=n, m=m, arcs=frozenset(arcs))


def serialize_instance(inst: Instance, comments: Iterable[str] = ()) -> str:
    """Emit the canonical text form: comments, header, arcs in (i, j) order.

    parse_instance(serialize_instance(x)) == x for every valid instance.
    """
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cdock {inst.n} {inst.m}")
    lines.extend(f"a {i} {j}" for i, j in inst.sorted_arcs())
    return "\n".join(lines) + "\n"
