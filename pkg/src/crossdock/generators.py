"""Reproducible instance generators.

All randomness comes from ``random.Random(seed)`` (the stdlib Mersenne
Twister), so a (parameters, seed) pair reproduces the same instance on
any platform.  Arcs are always drawn in a fixed traversal order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .instance import Instance


@dataclass(frozen=True)
class TightParams:
    """Parameters of the worst-case family for the greedy ratio bound."""

    k: int
    l: int
    s: int

    def __post_init__(self) -> None:
        if self.l < 1 or self.k < self.l:
            raise ValueError(f"need k >= l >= 1, got k={self.k}, l={self.l}")
        if self.s < 3:
            raise ValueError(f"need s >= 3, got s={self.s}")


def gen_random(n: int, m: int, p: float, seed: int) -> Instance:
    """Arc-Bernoulli bipartite instance: each of the n*m arcs kept with prob p."""
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n}, m={m}")
    rng = random.Random(seed)
    arcs = set()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if rng.random() < p:
                arcs.add((i, j))
    return Instance(n=n, m=m, arcs=frozenset(arcs))


def gen_d2(a_count: int, b_count: int, pendant_count: int, seed: int) -> Instance:
    """Instance in the two-successor class.

    Each A-operation receives two distinct successors sampled uniformly
    from the first b_count - pendant_count B-operations; the remaining
    B-operations are excluded from sampling and stay pendant.  Sampling
    may leave further B-operations uncovered.
    """
    if a_count < 1 or b_count < 1:
        raise ValueError(f"counts must be positive, got a={a_count}, b={b_count}")
    if pendant_count < 0 or b_count - pendant_count < 2:
        raise ValueError(
            f"need at least 2 non-pendant B-operations, got b={b_count}, pendants={pendant_count}"
        )
    rng = random.Random(seed)
    pool = range(1, b_count - pendant_count + 1)
    arcs = set()
    for i in range(1, a_count + 1):
        for j in rng.sample(pool, 2):
            arcs.add((i, j))
    return Instance(n=a_count, m=b_count, arcs=frozenset(arcs))


def gen_tight(params: TightParams) -> Instance:
    """Worst-case family TF(k, l, s) for the greedy ratio certificate.

    A-side layout: A_1..A_k pair off with the first 2k B-operations
    (A_i -> B_{2i-1}, B_{2i}); A_{k+1}..A_{k+l} each point at all of the
    last s B-operations; A_{k+l+1}..A_n each point at one of them.
    Greedy runs the middle group first and realizes makespan 2k+s+l+1
    against an optimum of 2k+s+1.
    """
    k, l, s = params.k, params.l, params.s
    n = k + l + s
    m = 2 * k + s
    arcs = set()
    for i in range(1, k + 1):
        arcs.add((i, 2 * i - 1))
        arcs.add((i, 2 * i))
    for i in range(k + 1, k + l + 1):
        for j in range(2 * k + 1, m + 1):
            arcs.add((i, j))
    for t in range(1, s + 1):
        arcs.add((k + l + t, 2 * k + t))
    return Instance(n=n, m=m, arcs=frozenset(arcs))
