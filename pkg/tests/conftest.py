import random

import pytest
from hypothesis import strategies as st

from kacfactors.weights import Weight, parse_weight

RUNNING = "15,11,10,7,6,4,3|3,5,7,8,10,15"


def random_dominant(rng: random.Random, mmax=6, nmax=6, lo=-20, hi=20, rmax=4) -> Weight:
    """A dominant weight with m, n in 1..max and r <= rmax atypical pairs."""
    m = rng.randint(1, mmax)
    n = rng.randint(1, nmax)
    r = rng.randint(0, min(m, n, rmax))
    vals = rng.sample(range(lo, hi + 1), m + n - r)
    shared, even_only, odd_only = vals[:r], vals[r:m], vals[m:]
    return Weight(sorted(shared + even_only, reverse=True), sorted(shared + odd_only))


def corpus(seed: int, count: int, **kw) -> list[Weight]:
    rng = random.Random(seed)
    return [random_dominant(rng, **kw) for _ in range(count)]


@st.composite
def dominant_weights(draw, mmax=5, nmax=5, lo=-15, hi=15, rmax=4):
    m = draw(st.integers(1, mmax))
    n = draw(st.integers(1, nmax))
    r = draw(st.integers(0, min(m, n, rmax)))
    vals = draw(
        st.lists(st.integers(lo, hi), min_size=m + n - r, max_size=m + n - r, unique=True)
    )
    shared, even_only, odd_only = vals[:r], vals[r:m], vals[m:]
    return Weight(sorted(shared + even_only, reverse=True), sorted(shared + odd_only))


@pytest.fixture
def lam():
    return parse_weight(RUNNING)


def _atypical_only(values) -> Weight:
    return Weight(sorted(values, reverse=True), sorted(values))


def totally_q(r: int) -> Weight:
    """One free integer between neighbouring atypical values, so ell_{s,t} = t - s."""
    return _atypical_only([1 + 2 * i for i in range(r)])


def totally_c(r: int) -> Weight:
    return _atypical_only(range(1, r + 1))


def totally_n(r: int) -> Weight:
    return _atypical_only([1 + 3 * i for i in range(r)])


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
