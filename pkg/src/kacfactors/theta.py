"""The index set Theta^lambda of composition factors.

``Theta_r`` is the set of r-tuples with ``0 <= theta_s <= s``.  The subset
``Theta^lambda`` is cut out by conditions on the relation table of the
weight; :func:`theta_valid` reports every failing condition.  Two
independent enumerators are provided: a filter over all of ``Theta_r`` and a
recursion on restricted weights, split by the value of the last entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Optional, Sequence

from .nqc import NqcTable, Relation, nqc_table, restrict
from .operators import _require_dominant, check_theta
from .weights import Weight, atypical_data

C, N, Q = Relation.C, Relation.N, Relation.Q

# Direct filtering walks (r+1)! candidates.
DIRECT_MAX_R = 7


@dataclass(frozen=True)
class Violation:
    condition: str  # C1a, C1b, C2, C3 or C4
    s: int
    p: Optional[int]
    detail: str


def _violations_at(table: NqcTable, theta: Sequence[int], s: int) -> list[Violation]:
    ts = theta[s - 1]
    if ts == 0:
        return []
    c = table.c
    a = s + 1 - ts
    out = []
    if a >= 2 and c(a - 1, s) is C:
        out.append(Violation("C1a", s, None, f"c_{a - 1},{s} = c"))
    if c(a, s) is N:
        out.append(Violation("C1b", s, None, f"c_{a},{s} = n"))
    for p in range(a, s):
        tp = theta[p - 1]
        bound = ts - s + p
        if tp > bound:
            out.append(Violation("C2", s, p, f"theta_{p} = {tp} > {bound}"))
        elif tp == bound and c(p, s) is not C:
            out.append(Violation("C2", s, p, f"theta_{p} = {bound} but c_{p},{s} = {c(p, s)}"))
        cps = c(p, s)
        if p == a and cps is Q:
            # the exception clause replaces the existence condition here
            if tp != 0:
                out.append(Violation("C4", s, p, f"c_{p},{s} = q forces theta_{p} = 0"))
        elif cps is not N and tp == 0:
            if not any(
                c(p, q) is Q and theta[q - 1] >= q + 1 - p for q in range(p + 1, s + 1)
            ):
                out.append(
                    Violation("C3", s, p, f"theta_{p} = 0 and no q-related p' covers {p}")
                )
    return out


def theta_valid(lam: Weight, theta: Sequence[int]) -> list[Violation]:
    """All violated membership conditions of ``theta`` (empty list: member)."""
    _require_dominant(lam)
    table = nqc_table(lam)
    theta = check_theta(theta, table.r)
    out = []
    for s in range(1, table.r + 1):
        out.extend(_violations_at(table, theta, s))
    return out


def theta_ambient(r: int) -> Iterable[tuple[int, ...]]:
    """``Theta_r`` in lexicographic order; it has ``(r+1)!`` elements."""
    return product(*(range(s + 1) for s in range(1, r + 1)))


def ambient_size(r: int) -> int:
    return factorial(r + 1)


def enumerate_direct(lam: Weight) -> list[tuple[int, ...]]:
    _require_dominant(lam)
    table = nqc_table(lam)
    r = table.r
    return [
        th
        for th in theta_ambient(r)
        if not any(_violations_at(table, th, s) for s in range(1, r + 1))
    ]


def theta_restrict(theta: Sequence[int], S: Iterable[int]) -> tuple[int, ...]:
    """Sub-tuple of ``theta`` on the 1-based index set ``S``, order preserved."""
    keep = set(S)
    return tuple(x for i, x in enumerate(theta, start=1) if i in keep)


def m_set(table: NqcTable) -> list[int]:
    """Admissible values of ``a_r = r + 1 - theta_r``."""
    r = table.r
    return [
        s
        for s in range(1, r + 2)
        if (s == 1 or table.c(s - 1, r) is not C) and (s == r + 1 or table.c(s, r) is not N)
    ]


def _sub(lam: Weight, s: int, t: int) -> frozenset:
    if s > t:
        return frozenset({()})
    return _recursive(restrict(lam, s, t))


def _block(lam: Weight, table: NqcTable, s: int) -> frozenset:
    """The part of Theta^lambda with ``theta_r = r + 1 - s``."""
    r = table.r
    if s == r + 1:
        return frozenset(head + (0,) for head in _sub(lam, 1, r - 1))
    if s >= 2:
        tails = [x for x in _sub(lam, s, r) if x[-1] == r + 1 - s]
        return frozenset(head + tail for head in _sub(lam, 1, s - 1) for tail in tails)
    # s == 1: theta_r = r reaches every earlier index, so the conditions at
    # index r are checked on each candidate rather than read off a product.
    assert table.c(1, r) is not N, "a_r = 1 needs c_1,r in {q, c}"
    out = set()
    for head in _sub(lam, 1, r - 1):
        th = head + (r,)
        if not _violations_at(table, th, r):
            out.add(th)
    return frozenset(out)


@lru_cache(maxsize=4096)
def _recursive(lam: Weight) -> frozenset:
    table = nqc_table(lam)
    if table.r == 0:
        return frozenset({()})
    out: set = set()
    for s in m_set(table):
        part = _block(lam, table, s)
        assert out.isdisjoint(part), "blocks of the decomposition overlap"
        out |= part
    return frozenset(out)


def enumerate_recursive(lam: Weight) -> list[tuple[int, ...]]:
    _require_dominant(lam)
    return sorted(_recursive(lam))


@lru_cache(maxsize=4096)
def _count(lam: Weight) -> int:
    table = nqc_table(lam)
    r = table.r
    if r == 0:
        return 1
    total = 0
    for s in m_set(table):
        if s == r + 1:
            total += _count(restrict(lam, 1, r - 1)) if r > 1 else 1
        elif s >= 2:
            left = _count(restrict(lam, 1, s - 1))
            tail = restrict(lam, s, r)
            tail_table = nqc_table(tail)
            full = len(_block(tail, tail_table, 1)) if 1 in m_set(tail_table) else 0
            total += left * full
        else:
            total += len(_block(lam, table, 1))
    return total


def count_theta(lam: Weight) -> int:
    """``#Theta^lambda`` via the block decomposition."""
    _require_dominant(lam)
    return _count(lam)


def theta_set(lam: Weight) -> list[tuple[int, ...]]:
    """Theta^lambda, sorted; direct filtering for small degree, recursion above."""
    r = atypical_data(lam).r
    if r <= DIRECT_MAX_R:
        return enumerate_direct(lam)
    return enumerate_recursive(lam)
