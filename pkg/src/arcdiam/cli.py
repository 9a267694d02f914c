"""Command-line front end.

    arcdiam generate {hamming Q | flag D Q} [--variant V] [--out PATH] [--format edgelist|json]
    arcdiam certify  {hamming Q | flag D Q | edges PATH} [--variant V] [--mode orbit|brute|both]
                     [--budget N] [--frobenius] [--no-timing]
    arcdiam bounds   --delta-min A --delta-max B [--format csv|md|json]
    arcdiam scan     --eps A/B --d-max D [--q-max Q] [--format csv|md|json]

Exit codes: 0 success, 1 certificate mismatch, 2 invalid parameters,
3 I/O failure, 4 brute-force budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .bounds import bound_report, scan, _fmt_fraction
from .certify import certify, family_meta, parse_params
from .constructions import FlagAdjacencyVariant
from .edgelist import format_edgelist, format_json, parse_edgelist
from .errors import ArcDiamError, BudgetExceeded, EpsOutOfRange
from .gf import is_prime_power

EXIT_OK, EXIT_MISMATCH, EXIT_PARAMS, EXIT_IO, EXIT_BUDGET = 0, 1, 2, 3, 4

BOUND_COLUMNS = ["delta", "moore", "moore_refined", "brown", "mms", "ans", "ss",
                 "hamming", "mms_approx", "ans_approx", "hamming_approx",
                 "flag", "flag_witness"]
SCAN_COLUMNS = ["d", "q", "delta", "order_n", "epsilon_threshold",
                "bound_value", "strict", "gap_lower", "decided_bits"]


class ParamError(Exception):
    pass


def _family_params(args) -> tuple:
    variant = FlagAdjacencyVariant.parse(args.variant).value
    nums = args.params
    if args.family == "hamming":
        if len(nums) != 1:
            raise ParamError("hamming takes one parameter: q")
        q = int(nums[0])
        if q < 2:
            raise ParamError("hamming needs q >= 2")
        return "hamming2", {"q": q}
    if args.family == "flag":
        if len(nums) != 2:
            raise ParamError("flag takes two parameters: d q")
        d, q = int(nums[0]), int(nums[1])
        if d < 3:
            raise ParamError("flag needs d >= 3")
        if not is_prime_power(q):
            raise ParamError(f"q = {q} is not a prime power")
        return "flag_graph", {"d": d, "q": q, "variant": variant}
    raise ParamError(f"unknown family {args.family}")


def _decimal(x: Optional[Fraction], digits: int = 6) -> str:
    if x is None:
        return ""
    return f"{float(x):.{digits}f}"


def _exact(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return _fmt_fraction(x)
    return str(x)


def bounds_rows(lo: int, hi: int) -> List[dict]:
    rows = []
    for delta in range(lo, hi + 1):
        r = bound_report(delta)
        w = r.flag_witness
        rows.append({
            "delta": delta,
            "moore": r.moore_upper,
            "moore_refined": r.moore_refined_upper,
            "brown": _exact(r.brown_lower),
            "mms": _exact(r.mms_lower),
            "ans": _exact(r.ans_lower),
            "ss": r.ss_lower.format() if r.ss_lower is not None else "",
            "hamming": _exact(r.hamming_lower),
            "mms_approx": _decimal(r.mms_lower),
            "ans_approx": _decimal(r.ans_lower),
            "hamming_approx": _decimal(r.hamming_lower),
            "flag": r.flag_lower.format() if r.flag_lower is not None else "",
            "flag_witness": f"d={w[0]} q={w[1]} n={w[2]}" if w else "",
        })
    return rows


def scan_rows(eps: Fraction, d_max: int, q_max: int) -> List[dict]:
    return [{
        "d": r.d, "q": r.q, "delta": r.delta, "order_n": r.order_n,
        "epsilon_threshold": _fmt_fraction(r.epsilon_threshold),
        "bound_value": r.bound_value.format(),
        "strict": str(r.strict).lower(),
        "gap_lower": _decimal(r.gap_lower, 3),
        "decided_bits": r.decided_bits,
    } for r in scan(eps, d_max, q_max)]


def render_table(rows: List[dict], columns: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    if fmt == "md":
        out = ["| " + " | ".join(columns) + " |",
               "|" + "|".join("---" for _ in columns) + "|"]
        out += ["| " + " | ".join(str(r[c]) for c in columns) + " |" for r in rows]
        return "\n".join(out) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _parse_eps(text: str) -> Fraction:
    try:
        eps = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParamError(f"bad eps {text!r}; expected a/b")
    if not 0 < eps <= 1:
        raise ParamError(f"eps = {text} must lie in (0, 1]")
    return eps


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arcdiam", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def family_args(p, with_edges=False):
        choices = ["hamming", "flag"] + (["edges"] if with_edges else [])
        p.add_argument("family", choices=choices)
        p.add_argument("params", nargs="+")
        p.add_argument("--variant", default="degree-consistent",
                       choices=[v.value for v in FlagAdjacencyVariant])

    g = sub.add_parser("generate", help="write a graph as an edge list or JSON")
    family_args(g)
    g.add_argument("--out", default="-")
    g.add_argument("--format", choices=["edgelist", "json"], default="edgelist")

    c = sub.add_parser("certify", help="certify a family member, JSON on stdout")
    family_args(c, with_edges=True)
    c.add_argument("--mode", choices=["orbit", "brute", "both"], default="orbit")
    c.add_argument("--budget", type=int, default=120)
    c.add_argument("--frobenius", action="store_true",
                   help="add the field automorphism to the flag-graph generators")
    c.add_argument("--no-timing", action="store_true")

    b = sub.add_parser("bounds", help="tabulate the diameter-2 bounds")
    b.add_argument("--delta-min", type=int, required=True)
    b.add_argument("--delta-max", type=int, required=True)
    b.add_argument("--format", choices=["csv", "md", "json"], default="csv")

    s = sub.add_parser("scan", help="odd-degree flag-graph parameter scan")
    s.add_argument("--eps", required=True)
    s.add_argument("--d-max", type=int, required=True)
    s.add_argument("--q-max", type=int, default=9)
    s.add_argument("--format", choices=["csv", "md", "json"], default="csv")
    return ap


def _write(text: str, path: str, stdout) -> None:
    if path == "-":
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_generate(args, stdout) -> int:
    family, params = _family_params(args)
    from .certify import build_family

    g = build_family(family, params)
    meta = family_meta(family, params)
    text = format_edgelist(g, meta) if args.format == "edgelist" else format_json(g, meta)
    try:
        _write(text, args.out, stdout)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_certify(args, stdout) -> int:
    graph = None
    if args.family == "edges":
        if len(args.params) != 1:
            raise ParamError("edges takes one parameter: PATH")
        try:
            with open(args.params[0], encoding="utf-8") as fh:
                graph, meta = parse_edgelist(fh.read())
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        family = meta.get("family")
        if family not in ("hamming2", "flag_graph"):
            raise ParamError("edge list header lacks a known family")
        params = parse_params(family, meta.get("params", ""))
    else:
        family, params = _family_params(args)
    try:
        cert = certify(family, params, mode=args.mode, budget=args.budget,
                       frobenius=args.frobenius, graph=graph)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.no_timing:
        cert.timing = None
    stdout.write(json.dumps(cert.to_dict(), indent=2) + "\n")
    return EXIT_OK if cert.passed else EXIT_MISMATCH


def _cmd_bounds(args, stdout) -> int:
    if not 1 <= args.delta_min <= args.delta_max:
        raise ParamError("need 1 <= delta-min <= delta-max")
    stdout.write(render_table(bounds_rows(args.delta_min, args.delta_max),
                              BOUND_COLUMNS, args.format))
    return EXIT_OK


def _cmd_scan(args, stdout) -> int:
    eps = _parse_eps(args.eps)
    stdout.write(render_table(scan_rows(eps, args.d_max, args.q_max),
                              SCAN_COLUMNS, args.format))
    return EXIT_OK


COMMANDS = {"generate": _cmd_generate, "certify": _cmd_certify,
            "bounds": _cmd_bounds, "scan": _cmd_scan}


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, stdout)
    except (ParamError, EpsOutOfRange, ArcDiamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
