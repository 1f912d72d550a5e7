from math import comb, factorial

import pytest
from hypothesis import given, settings

from kacfactors.errors import DegreeMismatch, ThetaOutOfRange
from kacfactors.nqc import Relation, nqc_table
from kacfactors.theta import (
    ambient_size,
    count_theta,
    enumerate_direct,
    enumerate_recursive,
    m_set,
    theta_ambient,
    theta_restrict,
    theta_set,
    theta_valid,
)
from kacfactors.weights import Weight

from conftest import corpus, dominant_weights, totally_c, totally_n, totally_q

RUNNING_THETA = {
    (0, 0, 0, 0), (1, 0, 0, 0), (1, 2, 0, 0), (0, 0, 1, 0), (1, 0, 1, 0), (1, 2, 1, 0), (1, 0, 3, 0),
    (0, 0, 0, 1), (1, 0, 0, 1), (1, 2, 0, 1), (0, 0, 1, 1), (1, 0, 1, 1), (1, 2, 1, 1), (1, 0, 3, 1),
}


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def test_running_direct(lam):
    assert set(enumerate_direct(lam)) == RUNNING_THETA


def test_running_recursive(lam):
    assert set(enumerate_recursive(lam)) == RUNNING_THETA
    assert count_theta(lam) == 14


def test_membership_examples(lam):
    assert theta_valid(lam, (1, 0, 3, 0)) == []
    bad = theta_valid(lam, (0, 2, 0, 0))
    assert bad and {v.s for v in bad} == {2}
    assert [(v.condition, v.p) for v in bad] == [("C3", 1)]


def test_membership_errors(lam):
    with pytest.raises(DegreeMismatch):
        theta_valid(lam, (0, 0, 0))
    with pytest.raises(ThetaOutOfRange):
        theta_valid(lam, (0, 3, 0, 0))


@given(dominant_weights(rmax=5))
def test_zero_always_member(w):
    r = nqc_table(w).r
    assert theta_valid(w, (0,) * r) == []


@pytest.mark.parametrize("r", range(0, 7))
def test_ambient_size(r):
    assert ambient_size(r) == factorial(r + 1)
    assert sum(1 for _ in theta_ambient(r)) == factorial(r + 1)


def test_r1_base_case():
    w = Weight((4, 1), (1, 7))
    assert enumerate_direct(w) == [(0,), (1,)] == enumerate_recursive(w)


@pytest.mark.parametrize("r", range(1, 7))
def test_totally_q_catalan(r):
    w = totally_q(r)
    rels = nqc_table(w).rel_rows
    assert all(x is Relation.Q for row in rels for x in row if x is not None)
    assert len(theta_set(w)) == catalan(r + 1) == count_theta(w)
    assert set(enumerate_recursive(w)) == set(enumerate_direct(w))


@pytest.mark.parametrize("r", range(1, 7))
def test_totally_c(r):
    w = totally_c(r)
    expected = {tuple(range(1, p + 1)) + (0,) * (r - p) for p in range(r + 1)}
    assert set(theta_set(w)) == expected
    assert set(enumerate_recursive(w)) == expected
    assert count_theta(w) == r + 1


@pytest.mark.parametrize("r", range(1, 7))
def test_totally_n(r):
    from itertools import product

    w = totally_n(r)
    expected = set(product((0, 1), repeat=r))
    assert set(theta_set(w)) == expected
    assert set(enumerate_recursive(w)) == expected
    assert count_theta(w) == 2**r


def test_theta_restrict():
    assert theta_restrict((1, 0, 3, 0), {2, 3, 4}) == (0, 3, 0)
    assert theta_restrict((1, 0, 3, 0), range(1, 5)) == (1, 0, 3, 0)


def test_m_set_running(lam):
    # a_4 = 5 - theta_4 takes the values 5 and 4 in the listed tuples
    assert m_set(nqc_table(lam)) == [4, 5]


def test_direct_equals_recursive_random():
    for w in corpus(301, 500):
        direct = enumerate_direct(w)
        assert direct == enumerate_recursive(w), w
        assert count_theta(w) == len(direct)


def test_recursive_larger_degree():
    # recursion takes over beyond the direct-enumeration range
    for w in corpus(302, 40, mmax=8, nmax=8, lo=-25, hi=25, rmax=8):
        assert set(enumerate_recursive(w)) == set(enumerate_direct(w))


@settings(max_examples=150)
@given(dominant_weights(rmax=4))
def test_theta_depends_only_on_table(w):
    # rebuilding a weight from its table alone gives the same set
    table = nqc_table(w)
    r = table.r
    vals, x = [], 0
    for s in range(1, r + 1):
        if s > 1:
            gap = table.ell(s - 1, s)  # free integers strictly between neighbours
            x += gap + 1
        vals.append(x)
    rebuilt = Weight(sorted(vals, reverse=True), sorted(vals))
    assert nqc_table(rebuilt).rel_rows == table.rel_rows
    assert theta_set(rebuilt) == theta_set(w)
