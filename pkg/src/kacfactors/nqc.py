"""nqc-relations between atypical roots and the integer step sizes built on them.

Everything here is a count of integers missing from the entry set S(w) of a
weight.  ``ell(w, s, t)`` counts the missing integers between the s-th and
t-th atypical values; comparing it with ``t - s`` gives the relation symbol
(n, q or c).  The step sizes ``k_step``, ``k_low`` and ``k_hat`` locate the
nu-th missing integer above or below an atypical value.

Atypical indices ``s, t`` are 1-based and refer to the labelling of
:func:`kacfactors.weights.atypical_data`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet

from .errors import IndexOutOfRange, NonRegular
from .weights import Weight, atypical_data, is_regular


class Relation(str, enum.Enum):
    N = "n"  # normally related
    Q = "q"  # quasi-critically related
    C = "c"  # critically related

    def __str__(self) -> str:
        return self.value


# -- counting primitives ----------------------------------------------------


def missing_between(S: AbstractSet[int], a: int, b: int) -> int:
    """``#([a, b] \\ S)``, with ``[a, b]`` empty when ``a > b``."""
    if a > b:
        return 0
    return (b - a + 1) - sum(1 for x in S if a <= x <= b)


def nth_missing_above(S: AbstractSet[int], v: int, nu: int) -> int:
    """Smallest ``k > 0`` with ``#([v, v+k] \\ S) == nu``."""
    if nu <= 0:
        return 0
    x, seen = v, 0
    while True:
        x += 1
        if x not in S:
            seen += 1
            if seen == nu:
                return x - v


def nth_missing_below(S: AbstractSet[int], v: int, nu: int) -> int:
    """Smallest ``k > 0`` with ``#([v-k, v] \\ S) == nu``; 0 when ``nu == 0``."""
    if nu <= 0:
        return 0
    x, seen = v, 0
    while True:
        x -= 1
        if x not in S:
            seen += 1
            if seen == nu:
                return v - x


def _classify(ell_st: int, gap: int) -> Relation:
    if ell_st > gap:
        return Relation.N
    if ell_st == gap:
        return Relation.Q
    return Relation.C


def _check_index(r: int, *idx: int) -> None:
    for i in idx:
        if not 1 <= i <= r:
            raise IndexOutOfRange(f"atypical index {i} outside 1..{r}")


def _check_pair(r: int, s: int, t: int) -> None:
    _check_index(r, s, t)
    if s > t:
        raise IndexOutOfRange(f"c_{{{s},{t}}} is only defined for s <= t")


# -- the table --------------------------------------------------------------


@dataclass(frozen=True)
class NqcTable:
    """ell and relation tables of a weight, plus the c-chain bounds p and plow.

    ``ell_rows[s-1][t-1]`` and ``rel_rows[s-1][t-1]`` hold the entries for
    ``s <= t``; entries below the diagonal are ``None``.
    """

    r: int
    ell_rows: tuple
    rel_rows: tuple
    p: tuple[int, ...]
    plow: tuple[int, ...]

    def ell(self, s: int, t: int) -> int:
        _check_pair(self.r, s, t)
        return self.ell_rows[s - 1][t - 1]

    def c(self, s: int, t: int) -> Relation:
        _check_pair(self.r, s, t)
        return self.rel_rows[s - 1][t - 1]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "rel": [[None if x is None else x.value for x in row] for row in self.rel_rows],
            "ell": [list(row) for row in self.ell_rows],
            "p": list(self.p),
            "plow": list(self.plow),
        }


@lru_cache(maxsize=4096)
def nqc_table(w: Weight) -> NqcTable:
    if not is_regular(w):
        raise NonRegular(f"{w} is not regular")
    data = atypical_data(w)
    r = data.r
    S = frozenset(w.entries)
    vals = data.values
    ell_rows, rel_rows = [], []
    for s in range(r):
        erow, rrow = [], []
        for t in range(r):
            if t < s:
                erow.append(None)
                rrow.append(None)
            else:
                e = missing_between(S, vals[s], vals[t])
                erow.append(e)
                rrow.append(_classify(e, t - s))
        ell_rows.append(tuple(erow))
        rel_rows.append(tuple(rrow))

    p, plow = [], []
    for s in range(1, r + 1):
        q = s
        while q < r and rel_rows[s - 1][q] is Relation.C:
            q += 1
        p.append(q)
        q = s
        while q > 1 and rel_rows[q - 2][s - 1] is Relation.C:
            q -= 1
        plow.append(q)
    return NqcTable(r, tuple(ell_rows), tuple(rel_rows), tuple(p), tuple(plow))


def ell(w: Weight, s: int, t: int) -> int:
    return nqc_table(w).ell(s, t)


def relation(w: Weight, s: int, t: int) -> Relation:
    return nqc_table(w).c(s, t)


def p_upper(w: Weight, s: int) -> int:
    table = nqc_table(w)
    _check_index(table.r, s)
    return table.p[s - 1]


def p_lower(w: Weight, s: int) -> int:
    table = nqc_table(w)
    _check_index(table.r, s)
    return table.plow[s - 1]


# -- step sizes -------------------------------------------------------------


def _value(w: Weight, s: int) -> int:
    data = atypical_data(w)
    _check_index(data.r, s)
    return data.values[s - 1]


def k_hat(w: Weight, s: int, nu: int) -> int:
    """Distance from the s-th atypical value to the nu-th free integer above it."""
    return nth_missing_above(frozenset(w.entries), _value(w, s), nu)


def k_step(w: Weight, s: int) -> int:
    """Raising step ``k_s`` of a dominant weight."""
    table = nqc_table(w)
    _check_index(table.r, s)
    return k_hat(w, s, table.p[s - 1] + 1 - s)


def k_low(w: Weight, s: int, nu: int = 1) -> int:
    """Lowering step: distance to the nu-th free integer below the s-th atypical value."""
    return nth_missing_below(frozenset(w.entries), _value(w, s), nu)


def k_step_sequential(w: Weight) -> tuple[int, ...]:
    """All raising steps by the growing-set procedure.

    Atypical values are handled from the largest down; each one walks upward
    through the current set to the first free integer, which is then added
    to the set.  Valid for regular weights that need not be dominant.
    """
    if not is_regular(w):
        raise NonRegular(f"{w} is not regular")
    data = atypical_data(w)
    S = set(w.entries)
    ks = [0] * data.r
    for idx in sorted(range(data.r), key=lambda i: -data.values[i]):
        v = x = data.values[idx]
        while x in S:
            x += 1
        ks[idx] = x - v
        S.add(x)
    return tuple(ks)


def restrict(w: Weight, s: int, t: int) -> Weight:
    """Keep only the entries from the s-th up to the t-th atypical entry.

    The result is a (t-s+1)-fold atypical dominant weight of a smaller
    gl(k|l) whose relation table is the (s..t) block of the original one.
    """
    data = atypical_data(w)
    _check_pair(data.r, s, t)
    m = w.m
    lo_even = data.mpos[t - 1]
    hi_even = data.mpos[s - 2] if s > 1 else m + 1
    lo_odd = data.npos[s - 2] if s > 1 else m
    hi_odd = data.npos[t - 1]
    even = [x for i, x in enumerate(w.even, start=1) if lo_even <= i < hi_even]
    odd = [x for eta, x in enumerate(w.odd, start=1) if lo_odd < m + eta <= hi_odd]
    return Weight(even, odd)
