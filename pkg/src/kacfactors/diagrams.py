"""Composite Young diagrams and boundary strip labelings.

A dominant weight in partition coordinates ``(l_1..l_m / l'_1..l'_n)`` is
drawn as two Young diagrams: the covariant part with rows ``l_1..l_m`` and
the contravariant part with rows ``-l'_n..-l'_1``.  Both must be partitions,
which is arranged by tensoring with a one-dimensional module (adding a
constant to every shifted entry).  The constant is kept as ``shift``.

Lowering a weight removes cells.  :func:`strip_labeling` follows the
lowering stage by stage, labels the removed cells with the atypical label of
the stage and checks that each removed region is a rim strip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import StripInvariantViolation, ThetaNotInThetaLambda
from .operators import _require_dominant, lower_theta
from .theta import theta_valid
from .weights import Weight, dominant_conjugate, format_weight, shift, to_partition

COV, CONTRA = "covariant", "contravariant"
PARTS = (COV, CONTRA)
LABEL_CHARS = "123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class CompositeDiagram:
    covariant: tuple[int, ...]
    contravariant: tuple[int, ...]
    shift: int

    def part(self, name: str) -> tuple[int, ...]:
        return self.covariant if name == COV else self.contravariant

    def cells(self, name: str) -> set[tuple[int, int]]:
        """1-based (row, column) cells of one part."""
        return {(i, j) for i, row in enumerate(self.part(name), start=1) for j in range(1, row + 1)}

    def to_dict(self) -> dict:
        return {
            "covariant": list(self.covariant),
            "contravariant": list(self.contravariant),
            "shift": self.shift,
        }


@dataclass(frozen=True)
class StripLabeling:
    diagram: CompositeDiagram
    cells: dict = field(default_factory=dict)  # (part, row, col) -> label
    counts: dict = field(default_factory=dict)  # label -> {part: count}
    remaining: Optional[Weight] = None

    def count(self, part: str) -> int:
        return sum(1 for key in self.cells if key[0] == part)

    def to_dict(self) -> dict:
        return {
            "diagram": self.diagram.to_dict(),
            "remaining": format_weight(self.remaining) if self.remaining is not None else None,
            "cells": [
                {"part": p, "row": i, "col": j, "label": s}
                for (p, i, j), s in sorted(self.cells.items())
            ],
            "counts": {str(s): dict(v) for s, v in sorted(self.counts.items())},
        }


def required_shift(w: Weight, margin: int = 0) -> int:
    """Smallest ``c >= 0`` leaving both parts of ``w + c`` at least ``margin`` deep."""
    pw = to_partition(w)
    need = [0]
    if pw.even:
        need.append(margin - pw.even[-1])
    if pw.odd:
        need.append(margin + pw.odd[0])
    return max(need)


def diagram_at_shift(w: Weight, c: int) -> CompositeDiagram:
    _require_dominant(w)
    pw = to_partition(shift(w, c))
    cov = pw.even
    contra = tuple(-x for x in reversed(pw.odd))
    if (cov and cov[-1] < 0) or (contra and contra[-1] < 0):
        raise ValueError(f"shift {c} leaves a negative row for {w}")
    return CompositeDiagram(cov, contra, c)


def build_diagram(lam: Weight, margin: int = 0) -> CompositeDiagram:
    return diagram_at_shift(lam, required_shift(lam, margin))


# -- strip validation -------------------------------------------------------


def _is_partition(rows: Sequence[int]) -> bool:
    return all(x >= 0 for x in rows) and all(a >= b for a, b in zip(rows, rows[1:]))


def _connected(cells: set) -> bool:
    if not cells:
        return True
    start = next(iter(cells))
    seen, todo = {start}, [start]
    while todo:
        i, j = todo.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


def rim_strip_problem(outer: set, inner: set) -> Optional[str]:
    """None when ``outer \\ inner`` is a rim strip of ``outer``, else the reason."""
    if not inner <= outer:
        return "removal adds cells"
    diff = outer - inner
    if not _connected(diff):
        return "removed cells are not connected"
    for i, j in diff:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= diff:
            return f"removed cells contain a 2x2 block at ({i}, {j})"
    return None


def strip_labeling(lam: Weight, theta: Sequence[int]) -> StripLabeling:
    """Label the cells removed by each lowering stage of ``L'_theta``."""
    _require_dominant(lam)
    if theta_valid(lam, theta):
        raise ThetaNotInThetaLambda(f"{tuple(theta)} is not in Theta^lambda for {lam}")
    trace = lower_theta(lam, theta)
    stages = [dominant_conjugate(w) for w in trace.intermediates]
    c = max(required_shift(w) for w in stages)
    diagrams = [diagram_at_shift(w, c) for w in stages]
    cells: dict = {}
    counts: dict = {}
    for s, (before, after) in enumerate(zip(diagrams, diagrams[1:]), start=1):
        if trace.theta[s - 1] == 0:
            continue
        for part in PARTS:
            if not _is_partition(after.part(part)):
                raise StripInvariantViolation(f"stage {s}: {part} part is not a partition")
            outer, inner = before.cells(part), after.cells(part)
            problem = rim_strip_problem(outer, inner)
            if problem:
                raise StripInvariantViolation(f"stage {s}, {part} part: {problem}")
            for i, j in outer - inner:
                cells[(part, i, j)] = s
            counts.setdefault(s, {})[part] = len(outer - inner)
    return StripLabeling(diagrams[0], cells, counts, trace.result)


# -- rendering --------------------------------------------------------------


def _label_char(s: int) -> str:
    return LABEL_CHARS[s - 1] if 1 <= s <= len(LABEL_CHARS) else "*"


def render_ascii(diagram: CompositeDiagram, labeling: Optional[StripLabeling] = None) -> str:
    """Draw the contravariant part above-left and the covariant part below-right.

    The contravariant part is turned so that its rows become columns read
    from the right, matching the usual picture of a composite diagram.
    Plain cells are ``#``; labelled cells show their label.
    """
    labels = labeling.cells if labeling is not None else {}
    contra, cov = diagram.contravariant, diagram.covariant
    n = len(contra)
    H = contra[0] if contra else 0
    W = n
    height = H + len(cov)
    width = W + (cov[0] if cov else 0)
    grid = [[" "] * width for _ in range(height)]
    for j, length in enumerate(contra):
        for i in range(length):
            ch = labels.get((CONTRA, j + 1, i + 1))
            grid[H - 1 - i][W - 1 - j] = _label_char(ch) if ch else "#"
    for i, length in enumerate(cov):
        for j in range(length):
            ch = labels.get((COV, i + 1, j + 1))
            grid[H + i][W + j] = _label_char(ch) if ch else "#"
    lines = ["".join(row).rstrip() for row in grid]
    return "\n".join(lines) + "\n"
