"""Integral weights of gl(m|n) as integer tuples.

A weight is stored in the rho-shifted notation

    (l_1, ..., l_m || l_{m+1}, ..., l_{m+n})

in which dominance means the even part is strictly decreasing and the odd
part strictly increasing.  The partition notation (the usual coordinates with
respect to the epsilon basis) is available through :func:`to_partition` and
:func:`from_partition`.

Positions are 1-based throughout and run over ``1..m+n``; position ``m+k``
is the k-th odd entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NonRegular, ParseError


@dataclass(frozen=True)
class Weight:
    even: tuple[int, ...]
    odd: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "even", tuple(int(x) for x in self.even))
        object.__setattr__(self, "odd", tuple(int(x) for x in self.odd))

    @property
    def m(self) -> int:
        return len(self.even)

    @property
    def n(self) -> int:
        return len(self.odd)

    @property
    def entries(self) -> tuple[int, ...]:
        return self.even + self.odd

    def entry(self, pos: int) -> int:
        """Entry at 1-based position ``pos``."""
        if not 1 <= pos <= self.m + self.n:
            raise IndexError(f"position {pos} outside 1..{self.m + self.n}")
        return self.entries[pos - 1]

    def add_at(self, positions: Iterable[int], delta: int) -> "Weight":
        """Return a copy with ``delta`` added at each 1-based position."""
        vals = list(self.entries)
        for pos in positions:
            vals[pos - 1] += delta
        return Weight(vals[: self.m], vals[self.m :])

    def __str__(self) -> str:
        return format_weight(self)


@dataclass(frozen=True)
class PartitionWeight:
    even: tuple[int, ...]
    odd: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "even", tuple(int(x) for x in self.even))
        object.__setattr__(self, "odd", tuple(int(x) for x in self.odd))

    @property
    def m(self) -> int:
        return len(self.even)

    @property
    def n(self) -> int:
        return len(self.odd)

    @property
    def coords(self) -> tuple[int, ...]:
        return self.even + self.odd

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class AtypicalData:
    """Atypical roots of a weight as position pairs.

    ``mpos[s-1]`` and ``npos[s-1]`` are the even and odd positions of the
    s-th atypical root, ``values[s-1]`` the common entry there.
    """

    r: int
    mpos: tuple[int, ...]
    npos: tuple[int, ...]
    values: tuple[int, ...]


@dataclass(frozen=True)
class EntrySets:
    S: frozenset
    T: frozenset
    Tbar: frozenset
    t: Weight
    tbar: Weight


def from_partition(pw: PartitionWeight) -> Weight:
    m = pw.m
    even = [x + (m + 1 - i) for i, x in enumerate(pw.even, start=1)]
    odd = [-x + eta for eta, x in enumerate(pw.odd, start=1)]
    return Weight(even, odd)


def to_partition(w: Weight) -> PartitionWeight:
    m = w.m
    even = [x - (m + 1 - i) for i, x in enumerate(w.even, start=1)]
    odd = [eta - x for eta, x in enumerate(w.odd, start=1)]
    return PartitionWeight(even, odd)


def is_dominant(w: Weight) -> bool:
    return all(a > b for a, b in zip(w.even, w.even[1:])) and all(
        a < b for a, b in zip(w.odd, w.odd[1:])
    )


def is_regular(w: Weight) -> bool:
    return len(set(w.even)) == w.m and len(set(w.odd)) == w.n


def dominant_conjugate(w: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of a regular ``w``."""
    if not is_regular(w):
        raise NonRegular(f"{format_weight(w)} has a repeated entry within one part")
    return Weight(sorted(w.even, reverse=True), sorted(w.odd))


def atypical_data(w: Weight) -> AtypicalData:
    """Pairs of equal even/odd entries, labelled 1..r.

    Labels follow decreasing even position, so that for a dominant weight the
    common values increase with the label.  On the raw intermediates produced
    by the lowering operators the positions keep their original labels.
    """
    odd_at = {}
    for eta, x in enumerate(w.odd, start=1):
        odd_at.setdefault(x, w.m + eta)
    pairs = [
        (i, odd_at[x], x) for i, x in enumerate(w.even, start=1) if x in odd_at
    ]
    pairs.sort(key=lambda p: -p[0])
    return AtypicalData(
        r=len(pairs),
        mpos=tuple(p[0] for p in pairs),
        npos=tuple(p[1] for p in pairs),
        values=tuple(p[2] for p in pairs),
    )


def degree(w: Weight) -> int:
    """Degree of atypicality."""
    return len(set(w.even) & set(w.odd))


def atypicality_matrix(w: Weight) -> list[list[int]]:
    return [[x - y for y in w.odd] for x in w.even]


def entry_sets(w: Weight) -> EntrySets:
    if not is_regular(w):
        raise NonRegular(f"{format_weight(w)} is not regular")
    data = atypical_data(w)
    atyp = set(data.mpos) | set(data.npos)
    m = w.m
    t_even = [x for i, x in enumerate(w.even, start=1) if i in atyp]
    t_odd = [x for eta, x in enumerate(w.odd, start=1) if m + eta in atyp]
    tb_even = [x for i, x in enumerate(w.even, start=1) if i not in atyp]
    tb_odd = [x for eta, x in enumerate(w.odd, start=1) if m + eta not in atyp]
    S = frozenset(w.entries)
    T = frozenset(data.values)
    return EntrySets(
        S=S, T=T, Tbar=S - T, t=Weight(t_even, t_odd), tbar=Weight(tb_even, tb_odd)
    )


def shift(w: Weight, c: int) -> Weight:
    """Translate every entry by ``c`` (tensoring with a one-dimensional module)."""
    return Weight([x + c for x in w.even], [x + c for x in w.odd])


# -- text formats -----------------------------------------------------------


def _parse_ints(text: str, where: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        raise ParseError(f"empty {where} part")
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse {where} part {text!r} as integers") from None


def parse_weight(text: str) -> Weight:
    """Parse ``"15,11,10|3,5,7"`` (shifted notation; ``||`` also accepted)."""
    text = text.strip().replace("||", "|")
    if text.count("|") != 1:
        raise ParseError(f"expected exactly one '|' separator in {text!r}")
    left, right = text.split("|")
    return Weight(_parse_ints(left, "even"), _parse_ints(right, "odd"))


def parse_partition(text: str) -> PartitionWeight:
    """Parse ``"8,5,5/-2,-3"`` (partition notation)."""
    text = text.strip()
    if text.count("/") != 1:
        raise ParseError(f"expected exactly one '/' separator in {text!r}")
    left, right = text.split("/")
    return PartitionWeight(_parse_ints(left, "even"), _parse_ints(right, "odd"))


def parse(text: str, notation: str = "shifted") -> Weight:
    if notation == "shifted":
        return parse_weight(text)
    if notation == "partition":
        return from_partition(parse_partition(text))
    raise ParseError(f"unknown notation {notation!r}")


def format_weight(w: Weight) -> str:
    return ",".join(map(str, w.even)) + "|" + ",".join(map(str, w.odd))


def format_partition(pw: PartitionWeight) -> str:
    return ",".join(map(str, pw.even)) + "/" + ",".join(map(str, pw.odd))
