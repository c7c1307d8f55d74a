import pytest

from crossdock import Instance

# Worked example: 6 unload operations, 7 orders, every A with two successors.
EX1_ARCS = frozenset(
    {
        (1, 2), (1, 3),
        (2, 2), (2, 3),
        (3, 2), (3, 3),
        (4, 4), (4, 5),
        (5, 3), (5, 6),
        (6, 5), (6, 6),
    }
)

EX1_TEXT = (
    "p cdock 6 7\n"
    "a 1 2\na 1 3\na 2 2\na 2 3\na 3 2\na 3 3\n"
    "a 4 4\na 4 5\na 5 3\na 5 6\na 6 5\na 6 6\n"
)

EX1_GREEDY_PI = (4, 6, 5, 1, 2, 3)


@pytest.fixture
def ex1() -> Instance:
    return Instance(n=6, m=7, arcs=EX1_ARCS)


@pytest.fixture
def cex() -> Instance:
    # Counterexample to the swapped lower-bound form: optimum is 3, the
    # swapped form evaluates to 4.
    return Instance(n=1, m=3, arcs=frozenset({(1, 1)}))
