"""Permissible codes and their bijection with Theta^lambda.

A code for an r-fold atypical weight is a row of r columns.  Each column is
either the zero column ``(0,)`` or a strictly increasing list of labels from
``1..r``; its first entry is the top label.  :func:`validate_code` checks the
rules (i) to (vii) together with the strengthened (vii') and reports every
failure.  Text form: columns joined by ``;`` and labels by ``,``, for example
``1,3;3;3;0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InvalidCode, MalformedCode, ParseError
from .nqc import NqcTable, Relation, nqc_table
from .operators import _require_dominant, check_theta
from .theta import theta_valid
from .errors import ThetaNotInThetaLambda
from .weights import Weight

C, N, Q = Relation.C, Relation.N, Relation.Q

ZERO = (0,)
RULES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "vii'")


@dataclass(frozen=True)
class Code:
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(int(x) for x in c) for c in self.columns))

    @property
    def r(self) -> int:
        return len(self.columns)

    def column(self, s: int) -> tuple[int, ...]:
        return self.columns[s - 1]

    def top(self, s: int) -> int:
        return self.columns[s - 1][0]

    def columns_with(self, label: int) -> list[int]:
        return [s for s, col in enumerate(self.columns, start=1) if label in col]

    def __str__(self) -> str:
        return format_code(self)


@dataclass(frozen=True)
class RuleViolation:
    rule: str
    columns: tuple[int, ...]
    labels: tuple[int, ...]
    message: str


def parse_code(text: str) -> Code:
    text = text.strip()
    if not text:
        return Code(())
    cols = []
    for part in text.split(";"):
        try:
            cols.append(tuple(int(tok) for tok in part.split(",")))
        except ValueError:
            raise ParseError(f"cannot parse code column {part!r}") from None
    return Code(tuple(cols))


def format_code(code: Code) -> str:
    return ";".join(",".join(map(str, col)) for col in code.columns)


def _check_shape(code: Code, r: int) -> None:
    if code.r != r:
        raise MalformedCode(f"code has {code.r} columns, weight has degree {r}")
    for s, col in enumerate(code.columns, start=1):
        if not col:
            raise MalformedCode(f"column {s} is empty")
        if 0 in col and col != ZERO:
            raise MalformedCode(f"column {s} mixes 0 with other labels")
        if any(not 0 <= x <= r for x in col):
            raise MalformedCode(f"column {s} has a label outside 0..{r}")
        if any(a >= b for a, b in zip(col, col[1:])):
            raise MalformedCode(f"column {s} is not strictly increasing")


# -- the rules --------------------------------------------------------------


def _rule_i(code: Code, c, s: int) -> list[RuleViolation]:
    top = code.top(s)
    if top == 0 or top == s:
        return []
    if top < s:
        return [RuleViolation("i", (s,), (top,), f"top label {top} of column {s} is below {s}")]
    if any(c(s, t) is Q and code.top(t) == top for t in range(s + 1, code.r + 1)):
        return []
    return [
        RuleViolation(
            "i", (s,), (top,), f"top label {top} of column {s} needs a q-related column with that top"
        )
    ]


def _rule_iii(code: Code, c, s: int) -> list[RuleViolation]:
    out = []
    col = code.column(s)
    for i, x in enumerate(col):
        for t in col[i + 1 :]:
            if not (t > x and code.top(t) == t and c(x, t) is C):
                out.append(
                    RuleViolation("iii", (s,), (x, t), f"label {t} cannot sit below {x} in column {s}")
                )
    return out


def _rule_vii(code: Code, s: int, strong: bool) -> list[RuleViolation]:
    col = code.column(s)
    if len(col) < 2:
        return []
    nxt = code.column(s + 1) if s < code.r else ()
    need = col[1:] if strong else col[-1:]
    missing = tuple(x for x in need if x not in nxt)
    if not missing:
        return []
    rule = "vii'" if strong else "vii"
    return [RuleViolation(rule, (s, s + 1), missing, f"labels {missing} of column {s} missing from the next column")]


def _rule_ii(code: Code, c) -> list[RuleViolation]:
    out = []
    r = code.r
    for t in range(2, r + 1):
        a = code.top(t)
        if a < t:
            continue
        s = t - 1
        while s >= 1 and c(s, t) is C:
            if a not in code.column(s)[1:]:
                out.append(
                    RuleViolation("ii", (s, t), (a,), f"label {a} must appear below the top of column {s}")
                )
            s -= 1
    return out


def _rule_iv(code: Code) -> list[RuleViolation]:
    out = []
    for x in range(1, code.r + 1):
        where = code.columns_with(x)
        if len(where) < 2:
            continue
        below = {}
        for s in where:
            col = code.column(s)
            i = col.index(x)
            below[s] = col[i + 1] if i + 1 < len(col) else None
        for t in {b for b in below.values() if b is not None}:
            bad = tuple(s for s in where if below[s] != t)
            if bad:
                out.append(
                    RuleViolation("iv", bad, (x, t), f"{t} sits right below {x} in some but not all columns")
                )
    return out


def _rule_v(code: Code, c) -> list[RuleViolation]:
    out = []
    r = code.r
    for s, t, u in combinations(range(1, r + 1), 3):
        if c(s, t) is Q and c(t, u) is Q:
            a = code.top(s)
            if a != 0 and code.top(u) == a and code.top(t) == 0:
                out.append(RuleViolation("v", (s, t, u), (a,), f"column {t} must be nonzero"))
    return out


def _rule_vi(code: Code) -> list[RuleViolation]:
    out = []
    for s, t, u, v in combinations(range(1, code.r + 1), 4):
        a, b = code.top(s), code.top(t)
        if a == 0 or b == 0 or code.top(u) != a or code.top(v) != b:
            continue
        if a < b:
            cols, lab = (s, u), b
        elif a > b:
            cols, lab = (t, v), a
        else:
            continue
        if any(lab not in code.column(x) for x in cols):
            out.append(RuleViolation("vi", (s, t, u, v), (a, b), f"columns {cols} must contain {lab}"))
    return out


def _violations(table: NqcTable, code: Code) -> list[RuleViolation]:
    c = table.c
    r = code.r
    out = []
    for s in range(1, r + 1):
        out += _rule_i(code, c, s)
    out += _rule_ii(code, c)
    for s in range(1, r + 1):
        out += _rule_iii(code, c, s)
    out += _rule_iv(code)
    out += _rule_v(code, c)
    out += _rule_vi(code)
    for s in range(1, r + 1):
        out += _rule_vii(code, s, strong=False)
    for s in range(1, r + 1):
        out += _rule_vii(code, s, strong=True)
    return out


def validate_code(lam: Weight, code: Code) -> list[RuleViolation]:
    """Every rule the code breaks, in rule order; an empty list means permissible."""
    _require_dominant(lam)
    table = nqc_table(lam)
    _check_shape(code, table.r)
    order = {name: i for i, name in enumerate(RULES)}
    return sorted(_violations(table, code), key=lambda v: order[v.rule])


# -- enumeration ------------------------------------------------------------


def _column_options(table: NqcTable, right: list[tuple[int, ...]], s: int) -> list[tuple[int, ...]]:
    """Candidate columns s given columns s+1..r, pruned by rules (i), (iii), (vii')."""
    r = table.r
    c = table.c

    def top(t):
        return right[t - s - 1][0]

    tops = [s] + sorted(
        {top(t) for t in range(s + 1, r + 1) if c(s, t) is Q and top(t) > s}
    )
    nxt = right[0] if right else ()
    opts = [ZERO]
    for a in tops:
        # labels below the top must reappear in the next column and head their own column
        extra = [
            t for t in nxt if t > a and t != 0 and top(t) == t and c(a, t) is C
        ]
        for k in range(len(extra) + 1):
            for tail in combinations(extra, k):
                col = (a,) + tail
                if all(c(x, y) is C for i, x in enumerate(col) for y in col[i + 1 :]):
                    opts.append(col)
    return opts


def enumerate_codes(lam: Weight) -> list[Code]:
    """All permissible codes, sorted by their column tuples."""
    _require_dominant(lam)
    table = nqc_table(lam)
    r = table.r
    found = []

    def extend(right: list[tuple[int, ...]], s: int) -> None:
        if s == 0:
            code = Code(tuple(right))
            if not _violations(table, code):
                found.append(code)
            return
        for col in _column_options(table, right, s):
            extend([col] + right, s - 1)

    extend([], r)
    return sorted(found, key=lambda code: code.columns)


# -- bijection with Theta ---------------------------------------------------


def code_to_theta(lam: Weight, code: Code) -> tuple[int, ...]:
    """theta_s = s + 1 - (first column holding s), or 0 when s does not occur."""
    bad = validate_code(lam, code)
    if bad:
        raise InvalidCode(f"{format_code(code)}: rule {bad[0].rule}: {bad[0].message}")
    theta = []
    for s in range(1, code.r + 1):
        where = code.columns_with(s)
        theta.append(s + 1 - min(where) if where else 0)
    return tuple(theta)


def theta_to_code(lam: Weight, theta: Sequence[int]) -> Code:
    _require_dominant(lam)
    table = nqc_table(lam)
    theta = check_theta(theta, table.r)
    if theta_valid(lam, theta):
        raise ThetaNotInThetaLambda(f"{theta} is not in Theta^lambda for {lam}")
    r = table.r
    cols: list[set] = [set() for _ in range(r)]
    for s in range(1, r + 1):
        if theta[s - 1] == 0:
            continue
        a = s + 1 - theta[s - 1]
        cols[s - 1].add(s)
        cols[a - 1].add(s)
        for p in range(a + 1, s):
            rel = table.c(p, s)
            if rel is C or (rel is Q and not any(p <= x < s for x in cols[p - 1])):
                cols[p - 1].add(s)
    return Code(tuple(tuple(sorted(col)) if col else ZERO for col in cols))


def codes_with_theta(lam: Weight) -> list[tuple[Code, tuple[int, ...]]]:
    return [(code, code_to_theta(lam, code)) for code in enumerate_codes(lam)]
