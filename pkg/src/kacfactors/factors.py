"""Composition factors of Kac-modules.

:func:`composition_factors` lowers ``lam`` once for every element of
Theta^lambda.  The other direction, Brundan's criterion, says ``mu`` is a
factor of K(lam) exactly when some 0/1 raising of ``mu`` gives back ``lam``.
:func:`brundan_witness` checks that for one pair, and
:func:`primitive_set_oracle` uses it to search for every ``mu`` below
``lam``.  The oracle never touches Theta or the lowering operators, so the
two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional, Sequence

from .errors import DimensionMismatch, ThetaNotInThetaLambda
from .nqc import k_step, missing_between, nqc_table
from .operators import _require_dominant, lower_theta, raise_theta
from .weights import (
    Weight,
    atypical_data,
    entry_sets,
    format_weight,
    to_partition,
    format_partition,
)
from .theta import theta_set, theta_valid


@dataclass(frozen=True)
class FactorSet:
    lam: Weight
    factors: tuple = field(default_factory=tuple)  # (theta, mu) pairs

    @property
    def weights(self) -> list[Weight]:
        return [mu for _, mu in self.factors]

    def __len__(self) -> int:
        return len(self.factors)

    def to_dict(self) -> dict:
        return {
            "lambda": format_weight(self.lam),
            "factors": [
                {
                    "theta": list(theta),
                    "weight": format_weight(mu),
                    "partition": format_partition(to_partition(mu)),
                    "multiplicity": 1,
                }
                for theta, mu in self.factors
            ],
        }


@dataclass(frozen=True)
class RaisingWitness:
    theta_prime: tuple[int, ...]
    check: bool


def _sort_key(pair):
    theta, mu = pair
    return atypical_data(mu).values, mu.entries


def composition_factors(lam: Weight) -> FactorSet:
    """Highest weights of all composition factors of K(lam), one per theta."""
    _require_dominant(lam)
    pairs = [(th, lower_theta(lam, th).result) for th in theta_set(lam)]
    pairs.sort(key=_sort_key)
    return FactorSet(lam, tuple(pairs))


def _same_shape(lam: Weight, mu: Weight) -> None:
    if (lam.m, lam.n) != (mu.m, mu.n):
        raise DimensionMismatch(
            f"gl({lam.m}|{lam.n}) weight compared with gl({mu.m}|{mu.n}) weight"
        )


def _witness_tuple(lam_T: frozenset, mu: Weight) -> Optional[tuple[int, ...]]:
    data = atypical_data(mu)
    r = data.r
    ks = [k_step(mu, s) for s in range(1, r + 1)]
    for tp in product((0, 1), repeat=r):
        if {v + f * k for v, f, k in zip(data.values, tp, ks)} == lam_T:
            return tp
    return None


def brundan_witness(lam: Weight, mu: Weight) -> Optional[RaisingWitness]:
    """A 0/1 tuple raising ``mu`` to ``lam``, or None when there is none."""
    _same_shape(lam, mu)
    _require_dominant(lam)
    _require_dominant(mu)
    # raising only moves atypical pairs, so the other entries must agree
    if entry_sets(lam).tbar != entry_sets(mu).tbar:
        return None
    tp = _witness_tuple(frozenset(atypical_data(lam).values), mu)
    if tp is None:
        return None
    return RaisingWitness(tp, raise_theta(mu, tp) == lam)


def multiplicity(lam: Weight, mu: Weight) -> int:
    """``[K(lam) : L(mu)]``, which is always 0 or 1."""
    return 0 if brundan_witness(lam, mu) is None else 1


def _reachable_values(T: Sequence[int], Tbar: frozenset, r: int, lo: int) -> list[int]:
    """Integers that can be an atypical value of a raising preimage.

    A value either stays put (so lies in T) or is raised to some y in T.  A
    raising step passes at most r-1 free integers and at most r-1 other
    atypical values, hence at most 2r-2 integers outside Tbar.
    """
    out = set(T)
    for y in T:
        x = y - 1
        while x >= lo:
            if missing_between(Tbar, x + 1, y - 1) > 2 * r - 2:
                break
            if x not in Tbar:
                out.add(x)
            x -= 1
    return sorted(v for v in out if v >= lo)


def primitive_set_oracle(lam: Weight, search_margin: Optional[int] = None) -> set[Weight]:
    """Brute-force every dominant ``mu`` with ``lam = R_theta'(mu)``.

    Candidates share the non-atypical entries of ``lam`` and take their r
    atypical values from ``[min S - margin, max S]``.  Meant for small degree.
    """
    _require_dominant(lam)
    es = entry_sets(lam)
    r = len(es.T)
    if r == 0:
        return {lam}
    if search_margin is None:
        search_margin = r * (lam.m + lam.n)
    lo = min(es.S) - search_margin
    pool = [v for v in _reachable_values(sorted(es.T), es.Tbar, r, lo) if v <= max(es.S)]
    even_rest, odd_rest = es.tbar.even, es.tbar.odd
    found = set()
    for vals in combinations(pool, r):
        mu = Weight(
            sorted(even_rest + vals, reverse=True),
            sorted(odd_rest + vals),
        )
        tp = _witness_tuple(es.T, mu)
        if tp is not None and raise_theta(mu, tp) == lam:
            found.add(mu)
    return found


@dataclass(frozen=True)
class ThetaPrimeData:
    a: tuple[int, ...]
    pi: tuple[int, ...]
    N: tuple[int, ...]  # N_s, or -1 where theta_s == 0
    theta_prime: tuple[int, ...]


def theta_prime_data(lam: Weight, theta: Sequence[int]) -> ThetaPrimeData:
    """The 0/1 tuple that raises ``L'_theta(lam)`` back to ``lam``, with its ingredients."""
    if theta_valid(lam, theta):
        raise ThetaNotInThetaLambda(f"{tuple(theta)} is not in Theta^lambda for {lam}")
    table = nqc_table(lam)
    r = table.r
    theta = tuple(theta)
    a = tuple(s + 1 - theta[s - 1] for s in range(1, r + 1))

    def n_sp(s: int, p: int) -> int:
        return sum(
            1 for q in range(a[s - 1], p) if theta[q - 1] != 0 and a[q - 1] == a[s - 1]
        )

    N = []
    for s in range(1, r + 1):
        if theta[s - 1] == 0:
            N.append(-1)
            continue
        ns = n_sp(s, s)
        assert ns == s - a[s - 1] - table.ell(a[s - 1], s), (lam, theta, s)
        # counts of first appearances only grow with p
        assert all(n_sp(s, p) <= ns for p in range(a[s - 1], s)), (lam, theta, s)
        N.append(ns)

    pi = tuple(
        sum(1 for p in range(s, r + 1) if theta[p - 1] != 0 and a[p - 1] == s)
        for s in range(1, r + 1)
    )
    tp = tuple(
        int(any(p <= s < p + pi[p - 1] for p in range(1, s + 1))) for s in range(1, r + 1)
    )
    return ThetaPrimeData(a, pi, tuple(N), tp)


def theta_prime_for(lam: Weight, theta: Sequence[int]) -> tuple[int, ...]:
    return theta_prime_data(lam, theta).theta_prime


def theta_prime_from_trace(lam: Weight, theta: Sequence[int]) -> tuple[int, ...]:
    """Raising tuple read off the lowering trace.

    Marks the atypical labels of the lowered weight whose value was actually
    moved.  Unlike :func:`theta_prime_for` this stays correct when a lowered
    value passes below smaller atypical values, which relabels them.
    """
    if theta_valid(lam, theta):
        raise ThetaNotInThetaLambda(f"{tuple(theta)} is not in Theta^lambda for {lam}")
    trace = lower_theta(lam, theta)
    before = atypical_data(lam).values
    landed = {v - k for v, k, t in zip(before, trace.kk, trace.theta) if t}
    return tuple(int(v in landed) for v in atypical_data(trace.result).values)
