"""Exact solver for instances where every A-operation has two successors.

The algorithm repeatedly takes the pending B-operation of minimal current
in-degree (zero-degree ones go straight onto machine 2), runs its
remaining predecessors on machine 1, and updates degrees.  The resulting
schedule meets the class lower bound max{n+2, m} (max{n+2, m+1} without
pendant B-operations), hence is optimal.

The event trace decomposes into blocks: a block opens whenever the picked
degree exceeds the current block's label, and the label equals the number
of machine-1 operations the block runs before its first machine-2
operation (the block's offset).  The machine-2 operations precedence-forced
past the block's last machine-1 completion (the overhang) number 1 or 2
for labels >= 2, which is what makes the stitched schedule tight.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass

from .instance import Instance, degree_profile
from .schedule import Schedule


class NotD2Error(ValueError):
    """Instance outside the two-successor class; carries the offending index."""

    def __init__(self, a_index: int, out_deg: int):
        self.a_index = a_index
        self.out_deg = out_deg
        super().__init__(f"A{a_index} has out-degree {out_deg}, expected 2")


@dataclass(frozen=True)
class ZeroPick:
    b_index: int


@dataclass(frozen=True)
class DegPick:
    b_index: int
    picked_degree: int
    a_batch: tuple[int, ...]


@dataclass(frozen=True)
class Pd2Trace:
    events: tuple[ZeroPick | DegPick, ...]


@dataclass(frozen=True)
class Block:
    label: int
    a_ops: tuple[int, ...]
    b_ops: tuple[int, ...]
    offset_len: int
    overhang_len: int


def _require_d2(inst: Instance) -> None:
    prof = degree_profile(inst)
    for i, d in enumerate(prof.out_deg, start=1):
        if d != 2:
            raise NotD2Error(i, d)


def solve_pd2(inst: Instance) -> tuple[Schedule, Pd2Trace]:
    """Run the degree-driven exact algorithm; returns schedule and trace.

    A lazy min-heap on (current degree, index) realizes both steps: stale
    entries are skipped, zero-degree pops are direct machine-2 picks, and
    positive-degree pops trigger the predecessor batch on machine 1.
    """
    _require_d2(inst)
    prof = degree_profile(inst)
    pred = {j: set(prof.pred[j]) for j in range(1, inst.m + 1)}
    deg = {j: prof.in_deg[j - 1] for j in range(1, inst.m + 1)}
    alive_a = set(range(1, inst.n + 1))
    done_b: set[int] = set()
    heap = [(deg[j], j) for j in range(1, inst.m + 1)]
    heapq.heapify(heap)

    m1_seq: list[int] = []
    m2_seq: list[int] = []
    events: list[ZeroPick | DegPick] = []

    while heap:
        d, j = heapq.heappop(heap)
        if j in done_b or d != deg[j]:
            continue
        done_b.add(j)
        m2_seq.append(j)
        if d == 0:
            events.append(ZeroPick(b_index=j))
            continue
        batch = tuple(sorted(pred[j]))
        events.append(DegPick(b_index=j, picked_degree=d, a_batch=batch))
        m1_seq.extend(batch)
        for a in batch:
            alive_a.discard(a)
            for t in prof.succ[a]:
                if t in done_b or a not in pred[t]:
                    continue
                pred[t].discard(a)
                deg[t] -= 1
                heapq.heappush(heap, (deg[t], t))

    # A-operations whose successors were all completed via other batches
    # never enter a batch; append them (ascending) to keep machine 1 full.
    m1_seq.extend(sorted(alive_a))

    start_a = [0] * inst.n
    for pos, a in enumerate(m1_seq):
        start_a[a - 1] = pos
    start_b = [0] * inst.m
    t = 0
    for j in m2_seq:
        ready = max((start_a[i - 1] + 1 for i in prof.pred[j]), default=0)
        t = max(t, ready)
        start_b[j - 1] = t
        t += 1
    sched = Schedule(start_a=tuple(start_a), start_b=tuple(start_b))
    return sched, Pd2Trace(events=tuple(events))


def lemma1_bound(inst: Instance) -> int:
    """Class lower bound: max{n+2, m} with pendant B-operations, else max{n+2, m+1}."""
    _require_d2(inst)
    prof = degree_profile(inst)
    if any(d == 0 for d in prof.in_deg):
        return max(inst.n + 2, inst.m)
    return max(inst.n + 2, inst.m + 1)


def blocks(inst: Instance, trace: Pd2Trace) -> tuple[Block, ...]:
    """Cut the trace into blocks and measure each laid out in isolation."""
    prof = degree_profile(inst)
    seen_a: set[int] = set()
    seen_b: set[int] = set()
    for ev in trace.events:
        if ev.b_index in seen_b or not (1 <= ev.b_index <= inst.m):
            raise ValueError(f"trace/instance mismatch at B{ev.b_index}")
        seen_b.add(ev.b_index)
        if isinstance(ev, DegPick):
            if len(ev.a_batch) != ev.picked_degree:
                raise ValueError(f"batch size mismatch at B{ev.b_index}")
            for a in ev.a_batch:
                if a in seen_a or a not in prof.pred[ev.b_index]:
                    raise ValueError(f"trace/instance mismatch at A{a}")
                seen_a.add(a)
    if seen_b != set(range(1, inst.m + 1)):
        raise ValueError("trace does not cover every B-operation")

    groups: list[tuple[int, list[int], list[int]]] = []  # (label, a_ops, b_ops)
    current: tuple[int, list[int], list[int]] | None = None
    for ev in trace.events:
        if isinstance(ev, ZeroPick):
            if current is None:
                current = (0, [], [])
                groups.append(current)
            current[2].append(ev.b_index)
        else:
            if current is None or ev.picked_degree > current[0]:
                current = (ev.picked_degree, [], [])
                groups.append(current)
            current[1].extend(ev.a_batch)
            current[2].append(ev.b_index)

    result = []
    for label, a_ops, b_ops in groups:
        pos = {a: k for k, a in enumerate(a_ops)}
        n_a = len(a_ops)
        t = 0
        starts = []
        overhang = 0
        for j in b_ops:
            ready = max((pos[i] + 1 for i in prof.pred[j] if i in pos), default=0)
            # precedence-forced past the block's machine-1 tail; operations
            # merely queued behind machine 2 do not count
            if n_a and ready >= n_a:
                overhang += 1
            t = max(t, ready)
            starts.append(t)
            t += 1
        offset = min(starts) if starts else 0
        offset = min(offset, n_a)
        result.append(
            Block(
                label=label,
                a_ops=tuple(a_ops),
                b_ops=tuple(b_ops),
                offset_len=offset,
                overhang_len=overhang,
            )
        )
    return tuple(result)


def trace_to_json(trace: Pd2Trace) -> str:
    events = []
    for ev in trace.events:
        if isinstance(ev, ZeroPick):
            events.append({"type": "zero", "b": ev.b_index})
        else:
            events.append(
                {
                    "type": "deg",
                    "b": ev.b_index,
                    "degree": ev.picked_degree,
                    "a_batch": list(ev.a_batch),
                }
            )
    return json.dumps({"events": events}, indent=2) + "\n"


def blocks_to_json(blks: tuple[Block, ...]) -> str:
    return json.dumps(
        [
            {
                "label": b.label,
                "a_ops": list(b.a_ops),
                "b_ops": list(b.b_ops),
                "offset_len": b.offset_len,
                "overhang_len": b.overhang_len,
            }
            for b in blks
        ],
        indent=2,
    ) + "\n"
