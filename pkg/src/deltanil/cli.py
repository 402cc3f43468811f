"""deltanil command line: alpha | uas | class | ucs | oracle | check.

Exit status is 0 on success, 1 when a computed invariant fails (or a
guaranteed oracle comparison disagrees) and 2 on bad usage.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

from .alpha import alpha_table
from .checks import run_suite
from .errors import InternalMismatch, InvalidGroupType, NotExponentShaped, OrderExceedsGuard, StepOutOfRange
from .group import GroupType, group_type
from .oracle import DEFAULT_MAX_ORDER, compare_report
from .render import FORMATS, render_exponent_matrix, render_hypercenter, render_report
from .series import hypercenter_description, nilpotency_class, ucs_report, uas_via_alpha

COMMANDS = ("alpha", "uas", "class", "ucs", "oracle", "check")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RenderOptions:
    what: str
    format: str = "text"
    max_order: int = DEFAULT_MAX_ORDER
    step: Optional[int] = None
    seed: int = 0
    count: int = 200
    output: Optional[str] = None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deltanil", description="Nilpotency class and upper central series of Delta(G) = 1 + J.")
    sub = parser.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        need_group = name != "check"
        sp.add_argument("--type", dest="exponents", type=_int_list, required=need_group,
                        help="exponents n_1 < ... < n_s, comma separated")
        sp.add_argument("--ranks", type=_int_list, default=None, help="ranks r_1..r_s (default all 1)")
        sp.add_argument("-p", type=int, required=need_group, help="the prime")
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="oracle guard on |Delta|")
        sp.add_argument("-t", dest="step", type=int, default=None, help="step selector for alpha and ucs")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--count", type=int, default=200, help="fuzzed types for check")
        sp.add_argument("-o", "--output", default=None)
        sp.add_argument("-v", "--verbose", action="store_true")
    return parser


def parse_args(argv) -> tuple[Optional[GroupType], RenderOptions, argparse.Namespace]:
    ns = build_parser().parse_args(argv)
    g = None
    if ns.exponents is not None:
        if ns.p is None:
            raise UsageError("-p is required with --type")
        try:
            g = group_type(ns.p, ns.exponents, ns.ranks)
        except InvalidGroupType as exc:
            raise UsageError(str(exc))
    if ns.step is not None and ns.step < 0:
        raise UsageError("-t must be non-negative")
    opts = RenderOptions(ns.what, ns.format, ns.max_order, ns.step, ns.seed, ns.count, ns.output)
    return g, opts, ns


def _alpha(g: GroupType, opts: RenderOptions) -> str:
    tab = alpha_table(g)
    steps = [opts.step] if opts.step is not None else list(range(tab.t_max + 1))
    if opts.format == "json":
        return json.dumps({"n": list(g.exponents), "t_max": tab.t_max,
                           "alpha": {str(t): tab.slice(t).tolist() for t in steps}}, indent=2)
    parts = []
    for t in steps:
        grid = tab.slice(t)
        if opts.format == "latex":
            body = "\\\\\n".join("&".join(str(x) for x in row) for row in grid)
            parts.append(f"\\alpha(\\cdot,\\cdot,{t})=\\left[\\begin{{array}}{{{'c' * g.s}}}\n{body}\n\\end{{array}}\\right]")
        else:
            parts.append(f"t={t}\n" + "\n".join(" ".join(f"{x:2d}" for x in row) for row in grid))
    return "\n\n".join(parts)


def _uas(g: GroupType, opts: RenderOptions) -> str:
    uas = uas_via_alpha(g)
    if opts.format == "json":
        return json.dumps({"n": list(g.exponents), "length": len(uas),
                           "uas": [[list(r) for r in m.beta] for m in uas]}, indent=2)
    parts = [f"length = {len(uas)}"]
    for t, m in enumerate(uas, start=1):
        parts.append(f"J_{t}:\n" + render_exponent_matrix(m, opts.format))
    return "\n\n".join(parts)


def _class(g: GroupType, opts: RenderOptions) -> str:
    res = nilpotency_class(g)
    if opts.format == "json":
        return json.dumps({"p": g.p, "type": list(g.exponents), "ranks": list(g.ranks),
                           "class": res.value, "case": res.applicability.tag.value})
    return f"class = {res.value}\ncase: {res.applicability.tag.value} ({res.applicability.notes})"


def _ucs(g: GroupType, opts: RenderOptions) -> str:
    if opts.step is None:
        return render_report(ucs_report(g), opts.format)
    return render_hypercenter(hypercenter_description(g, opts.step), opts.format)


def run(g: Optional[GroupType], opts: RenderOptions) -> tuple[str, int]:
    if opts.what == "check":
        results = run_suite(opts.seed, opts.count)
        status = 0 if all(r.ok for r in results) else 1
        if opts.format == "json":
            return json.dumps([r.__dict__ for r in results], indent=2), status
        return "\n".join(r.line() for r in results), status
    if opts.what == "oracle":
        rep = compare_report(g, opts.max_order)
        status = 1 if (rep.violates_guarantee or not rep.bound_holds) else 0
        return render_report(rep, opts.format), status
    fn = {"alpha": _alpha, "uas": _uas, "class": _class, "ucs": _ucs}[opts.what]
    return fn(g, opts), 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        g, opts, ns = parse_args(argv)
    except UsageError as exc:
        print(f"deltanil: usage error: {exc} (try 'deltanil <command> -h')", file=sys.stderr)
        return 2
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        text, status = run(g, opts)
    except (StepOutOfRange, OrderExceedsGuard) as exc:
        print(f"deltanil: usage error: {exc}", file=sys.stderr)
        return 2
    except (InternalMismatch, NotExponentShaped) as exc:
        print(f"deltanil: assertion failed: {exc}", file=sys.stderr)
        return 1
    if opts.output:
        with open(opts.output, "w") as fh:
            fh.write(text.rstrip("\n") + "\n")
    else:
        print(text.rstrip("\n"))
    return status


if __name__ == "__main__":
    sys.exit(main())
