import random

import pytest

from latclass import corpus
from latclass.lattice import FiniteLattice, chain, diamond_m3, pentagon_n5


# The six-element nullity lattice written out as an explicit document, with
# the same element order the table enumeration produces.
A2_DOC = {
    "name": "a2-nullity",
    "elements": ["∅", "{0}", "{0,a}", "{0,c}", "{0,b,c}", "{0,a,b,c}"],
    "covers": [[0, 1], [1, 2], [1, 3], [3, 4], [2, 5], [4, 5]],
}

# readable index aliases for the six elements
EMPTY, ZERO, A, C, BC, ALL = range(6)


@pytest.fixture(scope="session")
def a2():
    from latclass.lattice import load_lattice
    return load_lattice(A2_DOC)


@pytest.fixture(scope="session")
def named_lattices():
    return corpus.named_lattices()


@pytest.fixture(scope="session")
def named_spaces():
    return corpus.named_spaces()


@pytest.fixture(scope="session")
def random_lattices():
    rng = random.Random(20260823)
    return [corpus.random_lattice(rng, max_size=10, name=f"rand{i}")
            for i in range(200)]


@pytest.fixture(scope="session")
def small_random_lattices():
    """Lattices small enough for the subset-enumeration oracle."""
    rng = random.Random(17)
    return [corpus.random_lattice(rng, max_size=8, name=f"small{i}")
            for i in range(100)]


@pytest.fixture(scope="session")
def downset_lattices():
    rng = random.Random(99)
    return [corpus.random_downset_lattice(rng, name=f"down{i}")
            for i in range(200)]


@pytest.fixture(scope="session")
def random_spaces():
    rng = random.Random(4242)
    return [corpus.random_space(rng, max_points=8) for _ in range(200)]


@pytest.fixture(scope="session")
def hom_fixtures():
    return corpus.hom_fixtures()


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in sorted(RESULTS):
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] {label}")
