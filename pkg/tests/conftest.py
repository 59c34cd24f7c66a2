import random

import pytest

from gammalab.core import PoGammaStructure, chain_order, discrete_order
from gammalab.enumerate import EnumConfig, corpus, random_structure


def minimum_chain(n, g=1):
    """n-chain 0 < 1 < ... with every table equal to min."""
    op = bytes(min(a, b) for _ in range(g) for a in range(n) for b in range(n))
    return PoGammaStructure(n, g, op, chain_order(n))


def left_zero(n=2):
    return PoGammaStructure(n, 1, bytes(a for a in range(n) for b in range(n)), discrete_order(n))


def right_zero(n=2):
    return PoGammaStructure(n, 1, bytes(b for a in range(n) for b in range(n)), discrete_order(n))


def trivial(g=1):
    return PoGammaStructure(1, g, bytes(g), b"\x01")


@pytest.fixture
def chain2():
    return minimum_chain(2)


@pytest.fixture
def chain3():
    return minimum_chain(3, g=2)


@pytest.fixture
def lz2():
    return left_zero(2)


@pytest.fixture(scope="session")
def small_corpus():
    """All po-Gamma-semigroups with n <= 3, g <= 2, every compatible order, up to isomorphism."""
    return corpus(3, 2)


@pytest.fixture(scope="session")
def random4():
    return [random_structure(EnumConfig(4, 1 + i % 2), i) for i in range(200)]


@pytest.fixture(scope="session")
def mixed_corpus(small_corpus, random4):
    return small_corpus + random4


@pytest.fixture
def rng():
    return random.Random(20261017)


# acceptance criteria report their verdict lines here; printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
