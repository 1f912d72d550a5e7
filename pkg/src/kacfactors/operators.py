"""Raising and lowering operators on atypical weights.

A single step moves one atypical pair (both its even and odd entry) by the
same amount: up by ``k_s`` for raising, down to the nearest free integer for
lowering.  The composite operators apply one power per atypical root and
sort into dominant form only at the end, so the raw intermediates keep every
atypical pair at its original positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DegreeMismatch, NotAtypicalPair, NotDominant, ThetaOutOfRange
from .nqc import _check_index, k_step, k_step_sequential, nth_missing_below
from .weights import (
    Weight,
    atypical_data,
    dominant_conjugate,
    format_weight,
    is_dominant,
)


@dataclass(frozen=True)
class LoweringTrace:
    theta: tuple[int, ...]
    intermediates: tuple[Weight, ...]
    kk: tuple[int, ...]
    result: Weight

    def to_dict(self) -> dict:
        return {
            "theta": list(self.theta),
            "intermediates": [format_weight(w) for w in self.intermediates],
            "kk": list(self.kk),
            "result": format_weight(self.result),
        }


def lower_at(w: Weight, mpos: int, npos: int, nu: int = 1) -> Weight:
    """Apply the nu-th power of the lowering operator at the pair (mpos, npos).

    Both entries drop to the nu-th integer below them that is not an entry
    of ``w``.
    """
    v = w.entry(mpos)
    if mpos > w.m or npos <= w.m or w.entry(npos) != v:
        raise NotAtypicalPair(f"positions ({mpos}, {npos}) are not an atypical pair of {w}")
    k = nth_missing_below(frozenset(w.entries), v, nu)
    return w.add_at((mpos, npos), -k)


def lower_once(w: Weight, s: int) -> Weight:
    return lower_power(w, s, 1)


def lower_power(w: Weight, s: int, nu: int) -> Weight:
    if nu < 0:
        raise ValueError("nu must be non-negative")
    data = atypical_data(w)
    _check_index(data.r, s)
    return lower_at(w, data.mpos[s - 1], data.npos[s - 1], nu)


def raise_once(w: Weight, s: int) -> Weight:
    data = atypical_data(w)
    _check_index(data.r, s)
    k = k_step_sequential(w)[s - 1]
    return w.add_at((data.mpos[s - 1], data.npos[s - 1]), k)


def _require_dominant(w: Weight) -> None:
    if not is_dominant(w):
        raise NotDominant(f"{w} is not dominant")


def raise_theta(mu: Weight, theta_prime: Sequence[int]) -> Weight:
    """Closed form of the composite raising operator for a 0/1 tuple."""
    _require_dominant(mu)
    data = atypical_data(mu)
    if len(theta_prime) != data.r:
        raise DegreeMismatch(f"theta' has length {len(theta_prime)}, weight has degree {data.r}")
    if any(x not in (0, 1) for x in theta_prime):
        raise ValueError(f"theta' must be a 0/1 tuple, got {tuple(theta_prime)}")
    out = mu
    for s, flag in enumerate(theta_prime, start=1):
        if flag:
            out = out.add_at((data.mpos[s - 1], data.npos[s - 1]), k_step(mu, s))
    return dominant_conjugate(out)


def check_theta(theta: Sequence[int], r: int) -> tuple[int, ...]:
    theta = tuple(int(x) for x in theta)
    if len(theta) != r:
        raise DegreeMismatch(f"theta has length {len(theta)}, weight has degree {r}")
    for s, x in enumerate(theta, start=1):
        if not 0 <= x <= s:
            raise ThetaOutOfRange(f"theta_{s} = {x} outside 0..{s}")
    return theta


def lower_theta(lam: Weight, theta: Sequence[int]) -> LoweringTrace:
    _require_dominant(lam)
    data = atypical_data(lam)
    theta = check_theta(theta, data.r)
    current = lam
    inter, kk = [lam], []
    for s, nu in enumerate(theta, start=1):
        mpos, npos = data.mpos[s - 1], data.npos[s - 1]
        nxt = lower_at(current, mpos, npos, nu)
        kk.append(current.entry(mpos) - nxt.entry(mpos))
        current = nxt
        inter.append(current)
    return LoweringTrace(theta, tuple(inter), tuple(kk), dominant_conjugate(current))
