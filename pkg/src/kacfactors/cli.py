"""Command-line interface: ``kacfactors <command> WEIGHT [options]``.

Commands: factors, theta, codes, nqc, diagram, verify.  When WEIGHT is
omitted or ``-``, weights are read from stdin, one per line, and each is
processed in turn.  Exit status: 0 on success, 1 on a parse or validation
error, 2 when a verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, TextIO

from .codes import code_to_theta, enumerate_codes, format_code, theta_to_code
from .diagrams import (
    PARTS,
    build_diagram,
    diagram_at_shift,
    render_ascii,
    strip_labeling,
)
from .errors import KacError, ParseError, VerificationFailure
from .factors import brundan_witness, composition_factors, primitive_set_oracle
from .nqc import nqc_table
from .operators import lower_theta
from .theta import enumerate_direct, enumerate_recursive, theta_valid
from .weights import Weight, atypical_data, format_partition, format_weight, parse, to_partition

ORACLE_MAX_R = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_theta(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse theta {text!r}") from None


def _dump(obj, out: TextIO, batch: bool) -> None:
    if batch:
        out.write(json.dumps(obj, sort_keys=False) + "\n")
    else:
        out.write(json.dumps(obj, indent=2) + "\n")


# -- commands ---------------------------------------------------------------


def cmd_factors(lam: Weight, args, out: TextIO, batch: bool) -> int:
    fs = composition_factors(lam)
    traces = {th: lower_theta(lam, th) for th, _ in fs.factors} if args.trace else {}
    failures = []
    if args.verify:
        failures = _check_witnesses(lam, fs) + _check_oracle(lam, fs, args.margin)
    if args.format == "json":
        data = fs.to_dict()
        if args.trace:
            for item, (th, _) in zip(data["factors"], fs.factors):
                item["trace"] = traces[th].to_dict()
        if args.verify:
            data["verify"] = {"passed": not failures, "failures": failures}
        _dump(data, out, batch)
    else:
        r = atypical_data(lam).r
        out.write(f"lambda = {format_weight(lam)}  r = {r}  factors = {len(fs)}\n")
        for th, mu in fs.factors:
            out.write(f"  {_fmt_theta(th):<16} {format_weight(mu):<40} {format_partition(to_partition(mu))}\n")
            if args.trace:
                for w in traces[th].intermediates:
                    out.write(f"      {format_weight(w)}\n")
        if args.verify:
            out.write("verify: PASS\n" if not failures else "".join(f"FAIL {f}\n" for f in failures))
    return 2 if failures else 0


def _fmt_theta(th) -> str:
    return "(" + ",".join(map(str, th)) + ")"


def cmd_theta(lam: Weight, args, out: TextIO, batch: bool) -> int:
    if args.theta is not None:
        th = _parse_theta(args.theta)
        bad = theta_valid(lam, th)
        if args.format == "json":
            _dump(
                {
                    "theta": list(th),
                    "member": not bad,
                    "violations": [
                        {"condition": v.condition, "s": v.s, "p": v.p, "detail": v.detail} for v in bad
                    ],
                },
                out,
                batch,
            )
        else:
            out.write(f"{_fmt_theta(th)} {'is' if not bad else 'is not'} in Theta^lambda\n")
            for v in bad:
                out.write(f"  {v.condition} at s={v.s}{'' if v.p is None else f', p={v.p}'}: {v.detail}\n")
        return 0
    thetas = enumerate_direct(lam) if atypical_data(lam).r <= 7 else enumerate_recursive(lam)
    if args.format == "json":
        _dump({"lambda": format_weight(lam), "theta": [list(t) for t in thetas]}, out, batch)
    else:
        out.write(f"lambda = {format_weight(lam)}  |Theta| = {len(thetas)}\n")
        for t in thetas:
            out.write(f"  {_fmt_theta(t)}\n")
    return 0


def cmd_codes(lam: Weight, args, out: TextIO, batch: bool) -> int:
    rows = []
    for code in enumerate_codes(lam):
        th = code_to_theta(lam, code)
        mu = lower_theta(lam, th).result
        rows.append((code, th, mu))
    if args.format == "json":
        _dump(
            {
                "lambda": format_weight(lam),
                "codes": [
                    {"code": format_code(c), "theta": list(t), "weight": format_weight(m)}
                    for c, t, m in rows
                ],
            },
            out,
            batch,
        )
    else:
        out.write(f"lambda = {format_weight(lam)}  codes = {len(rows)}\n")
        for c, t, m in rows:
            out.write(f"  {format_code(c):<20} {_fmt_theta(t):<16} {format_weight(m)}\n")
    return 0


def cmd_nqc(lam: Weight, args, out: TextIO, batch: bool) -> int:
    table = nqc_table(lam)
    if args.format == "json":
        data = table.to_dict()
        data["lambda"] = format_weight(lam)
        _dump(data, out, batch)
        return 0
    r = table.r
    out.write(f"lambda = {format_weight(lam)}  r = {r}\n")
    out.write("     " + " ".join(f"{t:>3}" for t in range(1, r + 1)) + "\n")
    for s in range(1, r + 1):
        cells = [
            "  ." if t < s else f"{table.c(s, t).value:>2}{table.ell(s, t)}" for t in range(1, r + 1)
        ]
        out.write(f"{s:>3}  " + " ".join(cells) + "\n")
    out.write("p    = " + " ".join(map(str, table.p)) + "\n")
    out.write("plow = " + " ".join(map(str, table.plow)) + "\n")
    return 0


def cmd_diagram(lam: Weight, args, out: TextIO, batch: bool) -> int:
    if args.theta is not None:
        labeling = strip_labeling(lam, _parse_theta(args.theta))
        diagram = labeling.diagram
    else:
        labeling = None
        diagram = build_diagram(lam, args.margin or 0)
    if args.format == "json":
        data = labeling.to_dict() if labeling else {"diagram": diagram.to_dict()}
        data["lambda"] = format_weight(lam)
        _dump(data, out, batch)
    else:
        out.write(render_ascii(diagram, labeling))
    return 0


def _check_witnesses(lam, fs) -> list[str]:
    return [
        f"no raising witness for factor {format_weight(mu)} (theta {_fmt_theta(th)})"
        for th, mu in fs.factors
        if brundan_witness(lam, mu) is None
    ]


def _check_oracle(lam, fs, margin) -> list[str]:
    if atypical_data(lam).r > ORACLE_MAX_R:
        return []
    found = primitive_set_oracle(lam, margin)
    if found == set(fs.weights):
        return []
    return [f"oracle found {len(found)} weights, formula gives {len(fs)}"]


def verify_weight(lam: Weight, margin: Optional[int] = None) -> list[tuple[str, bool, str]]:
    """Run every cross-check on one weight; each entry is (name, passed, detail)."""
    results = []
    fs = composition_factors(lam)
    bad = _check_witnesses(lam, fs)
    results.append(("raising witnesses", not bad, "; ".join(bad)))
    if atypical_data(lam).r <= ORACLE_MAX_R:
        bad = _check_oracle(lam, fs, margin)
        results.append(("oracle equality", not bad, "; ".join(bad)))
    direct, rec = enumerate_direct(lam), enumerate_recursive(lam)
    results.append(("direct and recursive theta", direct == rec, f"{len(direct)} vs {len(rec)}"))
    codes = enumerate_codes(lam)
    thetas = sorted(code_to_theta(lam, c) for c in codes)
    ok = thetas == direct and all(theta_to_code(lam, code_to_theta(lam, c)) == c for c in codes)
    results.append(("code bijection", ok, f"{len(codes)} codes"))
    ok, detail = True, ""
    for th in direct:
        lab = strip_labeling(lam, th)
        rest = diagram_at_shift(lab.remaining, lab.diagram.shift)
        for part in PARTS:
            left = lab.diagram.cells(part) - {(i, j) for (p, i, j) in lab.cells if p == part}
            if left != rest.cells(part):
                ok, detail = False, f"theta {_fmt_theta(th)}, {part} part"
    results.append(("diagram pipeline", ok, detail))
    return results


def cmd_verify(lam: Weight, args, out: TextIO, batch: bool) -> int:
    results = verify_weight(lam, args.margin)
    failed = [name for name, ok, _ in results if not ok]
    if args.format == "json":
        _dump(
            {
                "lambda": format_weight(lam),
                "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in results],
                "passed": not failed,
            },
            out,
            batch,
        )
    else:
        out.write(f"lambda = {format_weight(lam)}\n")
        for name, ok, detail in results:
            out.write(f"  {'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if not ok and detail else "") + "\n")
    if failed:
        raise VerificationFailure(", ".join(failed))
    return 0


COMMANDS: dict[str, Callable] = {
    "factors": cmd_factors,
    "theta": cmd_theta,
    "codes": cmd_codes,
    "nqc": cmd_nqc,
    "diagram": cmd_diagram,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kacfactors", description="Composition factors of gl(m|n) Kac-modules.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "factors": "list the composition factors",
        "theta": "list Theta^lambda, or test one tuple with --theta",
        "codes": "list the permissible codes with their theta and factor",
        "nqc": "print the relation table",
        "diagram": "draw the composite Young diagram",
        "verify": "cross-check the formula against independent computations",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("weight", nargs="?", default="-", help="e.g. 15,11,10|3,5,7 ('-' or omitted: read stdin)")
        p.add_argument("--notation", choices=("shifted", "partition"), default="shifted")
        formats = ("ascii", "json") if name == "diagram" else ("text", "json")
        p.add_argument("--format", choices=formats, default=formats[0])
        if name in ("factors", "verify", "diagram"):
            p.add_argument("--margin", type=int, default=None, help="oracle search margin / diagram slack")
        if name in ("theta", "diagram"):
            p.add_argument("--theta", default=None, help="comma separated tuple, e.g. 1,0,3,0")
        if name == "factors":
            p.add_argument("--verify", action="store_true", help="check witnesses and, for r <= 3, the oracle")
            p.add_argument("--trace", action="store_true", help="show lowering intermediates")
    return parser


def _run_one(text: str, args, out: TextIO, err: TextIO, batch: bool) -> int:
    try:
        lam = parse(text, args.notation)
        return COMMANDS[args.command](lam, args, out, batch)
    except VerificationFailure as exc:
        err.write(f"verification failed for {text.strip()}: {exc}\n")
        return 2
    except KacError as exc:
        err.write(f"error: {text.strip()}: {exc}\n")
        return 1


def main(argv: Optional[list[str]] = None, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.weight != "-":
        return _run_one(args.weight, args, out, err, batch=False)
    status = 0
    for line in stdin:
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        status = max(status, _run_one(line, args, out, err, batch=True))
    return status


if __name__ == "__main__":
    sys.exit(main())
