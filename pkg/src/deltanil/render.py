"""Text, LaTeX and JSON renderings of exponent matrices and reports.

Exponent-matrix cells use the usual shorthand: "0" for the zero cell
(beta = n_j), "*" for the full cell (beta = 0) and "p^k" otherwise.
"""
from __future__ import annotations

import json
from typing import Union

from .group import Applicability, Case, GroupType, classify_applicability, group_type, sigma
from .oracle import OracleReport, StepComparison
from .series import ExponentMatrix, HypercenterDescription, SeriesReport

FORMATS = ("text", "latex", "json")


def cell_token(m: ExponentMatrix, i: int, j: int, latex: bool = False) -> str:
    b = m[i, j]
    if b == m.g.n(j):
        return "0"
    if b == 0:
        return "*"
    if b == 1:
        return "p"
    return f"p^{{{b}}}" if latex else f"p^{b}"


def exponent_matrix_json(m: ExponentMatrix) -> dict:
    return {"beta": [list(row) for row in m.beta], "n": list(m.g.exponents)}


def render_exponent_matrix(m: ExponentMatrix, fmt: str = "text") -> str:
    s = m.g.s
    rows = [[cell_token(m, i, j, fmt == "latex") for j in range(1, s + 1)] for i in range(1, s + 1)]
    if fmt == "text":
        return "\n".join(" ".join(r) for r in rows)
    if fmt == "latex":
        body = "\\\\\n".join("&".join(r) for r in rows)
        return f"\\left[\\begin{{array}}{{{'c' * s}}}\n{body}\n\\end{{array}}\\right]"
    if fmt == "json":
        return json.dumps(exponent_matrix_json(m))
    raise ValueError(f"unknown format {fmt!r}")


def _var(a: int, b: int, r: int, latex: bool) -> str:
    sub = f"{a}{b}" if r < 10 else f"{a},{b}"
    return f"c_{{{sub}}}" if latex else f"c{sub}"


def _pow(e: int, latex: bool) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "p"
    return f"p^{{{e}}}" if latex else f"p^{e}"


def hypercenter_entries(desc: HypercenterDescription, latex: bool = False) -> list[list[str]]:
    """Symbolic r x r matrix C + 1 of a generic element of the hypercenter.

    Off-diagonal entries read p^e c_ab (or 0 when e reaches the cell modulus);
    diagonal entries are the anchor term pc_rr + 1 plus a free part p^e c_aa.
    """
    g = desc.g
    blocks = g.blocks()
    r = len(blocks)
    grid = desc.entry_exponents()
    anchor = _pow(1, latex) + _var(r, r, r, latex) + "+1"
    out = []
    for a in range(r):
        row = []
        for b in range(r):
            e = grid[a][b]
            nb = g.n(blocks[b])
            if e is None:
                row.append(anchor)
            elif a == b:
                if e >= nb:
                    row.append(anchor)
                elif e <= 1:
                    row.append(_pow(1, latex) + _var(a + 1, a + 1, r, latex) + "+1")
                else:
                    row.append(_pow(e, latex) + _var(a + 1, a + 1, r, latex) + "+" + anchor)
            elif e >= nb:
                row.append("0")
            else:
                row.append(_pow(e, latex) + _var(a + 1, b + 1, r, latex))
        out.append(row)
    return out


def render_hypercenter(desc: HypercenterDescription, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(_ucs_json(desc))
    latex = fmt == "latex"
    rows = hypercenter_entries(desc, latex)
    if latex:
        body = "\\\\\n".join("&".join(r) for r in rows)
        cols = "c" * len(rows)
        return f"\\mathcal Z_{{{desc.t}}}=\\left\\{{\\left[\\begin{{array}}{{{cols}}}\n{body}\n\\end{{array}}\\right]\\right\\}}"
    width = max(len(x) for r in rows for x in r)
    return "\n".join("  ".join(x.rjust(width) for x in r) for r in rows)


def _ucs_json(desc: HypercenterDescription) -> dict:
    return {
        "t": desc.t,
        "alpha": [list(row) for row in desc.alpha_slice],
        "exponents": desc.entry_exponents(),
    }


def _header(g: GroupType) -> dict:
    return {
        "p": g.p,
        "type": list(g.exponents),
        "ranks": list(g.ranks),
        "sigma": sigma(g),
    }


def report_json(rep: Union[SeriesReport, OracleReport]) -> dict:
    if isinstance(rep, SeriesReport):
        out = _header(rep.g)
        out.update({
            "case": rep.applicability.tag.value,
            "l": rep.l,
            "y": rep.y,
            "class": rep.nilpotency_class,
            "uas": [exponent_matrix_json(m) for m in rep.uas],
            "ucs": [_ucs_json(d) for d in rep.ucs],
        })
        return out
    out = _header(rep.g)
    out.update({
        "case": rep.applicability.tag.value,
        "order": rep.order,
        "oracle_class": rep.oracle_class,
        "class": rep.predicted_class,
        "l": rep.uas_length,
        "agreement": rep.agreement,
        "bound_holds": rep.bound_holds,
        "steps": [
            {"t": s.t, "oracle_size": s.oracle_size, "predicted_size": s.predicted_size, "equal": s.equal}
            for s in rep.steps
        ],
    })
    return out


def _applicability(g: GroupType, tag: str) -> Applicability:
    app = classify_applicability(g)
    if app.tag is not Case(tag):
        raise ValueError(f"case {tag!r} does not match {g} ({app.tag.value})")
    return app


def report_from_json(text: str) -> Union[SeriesReport, OracleReport]:
    """Inverse of the JSON rendering of :func:`render_report`."""
    d = json.loads(text)
    g = group_type(d["p"], d["type"], d["ranks"])
    app = _applicability(g, d["case"])
    if "steps" in d:
        return OracleReport(
            g=g,
            applicability=app,
            order=d["order"],
            oracle_class=d["oracle_class"],
            predicted_class=d["class"],
            uas_length=d["l"],
            steps=tuple(StepComparison(s["t"], s["oracle_size"], s["predicted_size"], s["equal"]) for s in d["steps"]),
        )
    return SeriesReport(
        g=g,
        applicability=app,
        uas=tuple(ExponentMatrix(g, m["beta"]) for m in d["uas"]),
        l=d["l"],
        y=d["y"],
        nilpotency_class=d["class"],
        ucs=tuple(HypercenterDescription(g, u["t"], tuple(tuple(r) for r in u["alpha"])) for u in d["ucs"]),
    )


def _yesno(b: bool) -> str:
    return "true" if b else "false"


def render_report(rep: Union[SeriesReport, OracleReport], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_json(rep), indent=2)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    g = rep.g
    lines = [f"group: {g}", f"case: {rep.applicability.tag.value} ({rep.applicability.notes})"]
    if isinstance(rep, OracleReport):
        lines += [
            f"|Delta| = {rep.order}",
            f"oracle class = {rep.oracle_class}",
            f"predicted class = {rep.predicted_class}",
            f"uas length = {rep.uas_length}",
            f"agreement: {_yesno(rep.agreement)}",
            f"bound class <= l: {_yesno(rep.bound_holds)}",
        ]
        for s in rep.steps:
            mark = "ok" if s.equal else "DIFF"
            lines.append(f"  Z_{s.t}: oracle {s.oracle_size}, predicted {s.predicted_size}  {mark}")
        return "\n".join(lines)
    lines += [f"l = {rep.l}", f"y = {rep.y}", f"class = {rep.nilpotency_class}", ""]
    for t, m in enumerate(rep.uas, start=1):
        lines.append(f"J_{t}:" if fmt == "text" else f"\\mathcal J_{{{t}}}=")
        lines.append(render_exponent_matrix(m, fmt))
        lines.append("")
    for d in rep.ucs:
        if fmt == "text":
            lines.append(f"Z_{d.t}:")
        lines.append(render_hypercenter(d, fmt))
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"
