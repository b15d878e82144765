"""``cayleycoh`` command line.

Exit codes: 0 verified, 1 verification failure, 2 blocked by an
indeterminate spectral sequence, 64 usage error.
"""
from __future__ import annotations

import argparse
import difflib
import json
import sys
from fractions import Fraction
from pathlib import Path

from .. import __version__
from ..bbw import GR37, bulk_cohomology
from ..cg import CohomologyResult, E1Page, cg_cohomology
from ..derived import (
    EXCEPTIONAL,
    NOT_EXCEPTIONAL,
    ExtEngine,
    check_exceptional_collection,
    cg15_blocks,
    complex_ext,
    euler,
    lefschetz_validate,
    residual_check,
)
from ..schur.expr import ComplexExpressionError, ExpressionError, to_text
from .parser import parse, to_bundle, to_complex
from .table import compute_table, render_markdown, render_text, rep_json, rep_text

EXIT_OK, EXIT_FAIL, EXIT_BLOCKED, EXIT_USAGE = 0, 1, 2, 64
SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- serialization ------------------------------------------------------------
def _reps(slot, n) -> list[dict]:
    from ..weights import gl_dimension

    return [{"weight": list(w), "mult": m, "dim": gl_dimension(w, n)} for w, m in slot]


def page_json(page: E1Page) -> dict:
    return {
        "source": page.source,
        "entries": [{"p": p, "q": q, "reps": _reps(slot, page.n)} for (p, q), slot in page.entries],
        "links": [[list(a), list(b)] for a, b in page.links()],
    }


def result_json(r: CohomologyResult) -> dict:
    out = {"determined": r.determined, "route": r.route, "euler": r.euler}
    if r.determined:
        out["degrees"] = rep_json(r.graded)
    else:
        out["pages"] = [page_json(p) for p in r.pages]
    return out


def result_text(r: CohomologyResult) -> str:
    if r.determined:
        return f"{rep_text(r.graded)}   ({r.graded}) [{r.route}]"
    lines = [f"indeterminate: chi = {r.euler} [{r.route}]"]
    for p in r.pages:
        lines.append(f"  page {p.source or '-'}:")
        for (a, b), slot in p.entries:
            lines.append(f"    E1[{a},{b}] = " + " + ".join(f"{m}*S{list(w)}" for w, m in slot))
        for a, b in p.links():
            lines.append(f"    link {a} -> {b}")
    return "\n".join(lines)


def _cell_symbol(r: CohomologyResult) -> str:
    if r.route == "skipped":
        return "."
    if not r.determined:
        return "?"
    if r.graded.is_zero():
        return "0"
    return rep_text(r.graded).replace(" ", "")


# --- commands -----------------------------------------------------------------
# Each command returns (document, text, exit code); markdown defaults to a
# fenced copy of the text unless the document carries its own.
def _parse_or_usage(text: str):
    try:
        return parse(text)
    except ExpressionError as exc:
        raise UsageError(str(exc)) from exc


def cmd_coh(args):
    node = _parse_or_usage(args.expr)
    inputs = {"expr": to_text(node), "space": args.space}
    if args.space == "gr":
        try:
            g = bulk_cohomology(GR37, to_bundle(node))
        except ComplexExpressionError as exc:
            raise UsageError(f"{exc}; --space gr takes bundles only") from exc
        doc = {"inputs": inputs, "result": {"determined": True, "route": "bbw", "degrees": rep_json(g)}}
        return doc, f"H*(Gr(3,7), {inputs['expr']}) = {rep_text(g)}   ({g})", EXIT_OK
    try:
        r = cg_cohomology(to_bundle(node))
    except ComplexExpressionError:
        from ..derived.presets import O, obj

        r = complex_ext(obj(O, "O"), to_complex(node), ExtEngine())
    doc = {"inputs": inputs, "result": result_json(r)}
    return doc, f"H*(CG, {inputs['expr']}) = {result_text(r)}", EXIT_OK if r.determined else EXIT_BLOCKED


def cmd_ext(args):
    a, b = _parse_or_usage(args.expr1), _parse_or_usage(args.expr2)
    r = complex_ext(to_complex(a), to_complex(b), ExtEngine())
    doc = {"inputs": {"expr1": to_text(a), "expr2": to_text(b)}, "result": result_json(r)}
    return doc, f"Ext*({to_text(a)}, {to_text(b)}) = {result_text(r)}", EXIT_OK if r.determined else EXIT_BLOCKED


def cmd_euler(args):
    a, b = _parse_or_usage(args.expr1), _parse_or_usage(args.expr2)
    chi = euler(to_complex(a), to_complex(b))
    doc = {"inputs": {"expr1": to_text(a), "expr2": to_text(b)}, "result": {"euler": chi}}
    return doc, str(chi), EXIT_OK


def cmd_table(args):
    entries = compute_table()
    doc = {"result": {"entries": [e.as_dict() for e in entries]}}
    ok = all(e.matches for e in entries)
    doc["verdict"] = "REPRODUCED" if ok else "MISMATCH"
    doc["markdown"] = render_markdown(entries)
    return doc, render_text(entries), EXIT_OK if ok else EXIT_FAIL


def read_collection(path: str) -> list[list]:
    """One expression per line; ``--- block`` starts a new Lefschetz block."""
    blocks: list[list] = [[]]
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("---"):
            if blocks[-1]:
                blocks.append([])
            continue
        try:
            node = parse(line)
        except ExpressionError as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from exc
        blocks[-1].append(to_complex(node).renamed(to_text(node)))
    return [b for b in blocks if b]


def cmd_check_collection(args):
    if args.builtin:
        blocks = cg15_blocks()
        source = f"builtin:{args.builtin}"
    elif args.file:
        blocks = read_collection(args.file)
        source = args.file
    else:
        raise UsageError("check-collection needs --builtin cg15 or FILE")
    objects = [x for b in blocks for x in b]
    labels = [o.label() for o in objects]
    if args.print:
        text = "\n--- block\n".join("\n".join(o.label() for o in b) for b in blocks)
        return {"inputs": {"source": source}, "result": {"blocks": [[o.label() for o in b] for b in blocks]}}, text, EXIT_OK
    table = check_exceptional_collection(objects, ExtEngine(), jobs=args.jobs, free_cells=args.full)
    lefschetz = lefschetz_validate(blocks) if len(blocks) > 1 else None
    grid = [[_cell_symbol(table.cell(i, j).result) for j in range(len(objects))] for i in range(len(objects))]
    doc = {
        "inputs": {"source": source, "objects": labels, "blocks": [len(b) for b in blocks]},
        "result": {
            "grid": grid,
            "cells": [
                {"i": c.i, "j": c.j, "kind": c.kind, **result_json(c.result)}
                for c in table.cells
                if c.kind != "free" or args.full
            ],
            "routes": table.route_counts(),
            "unresolved": [[c.i, c.j] for c in table.unresolved],
            "violations": [[c.i, c.j] for c in table.violations],
            "lefschetz": lefschetz,
        },
        "verdict": table.verdict,
    }
    width = max(len(s) for row in grid for s in row)
    lines = [f"{i:>2} {labels[i]:<12} " + " ".join(s.rjust(width) for s in row) for i, row in enumerate(grid)]
    lines.append(f"verdict: {table.verdict}  unresolved: {len(table.unresolved)}  routes: {table.route_counts()}")
    if lefschetz is not None:
        lines.append(f"lefschetz blocks: {'ok' if lefschetz else 'INVALID'}")
    code = {EXCEPTIONAL: EXIT_OK, NOT_EXCEPTIONAL: EXIT_FAIL}.get(table.verdict, EXIT_BLOCKED)
    if lefschetz is False and code == EXIT_OK:
        code = EXIT_FAIL
    return doc, "\n".join(lines), code


def cmd_residual(args):
    rep = residual_check()
    name = lambda ij: f"{rep.labels[ij[0]]} -> {rep.labels[ij[1]]}"  # noqa: E731
    cells = {name(k): result_json(r) for k, r in sorted(rep.cells.items())}
    pages = {name(k): result_json(r) for k, r in sorted(rep.kclass_pages.items())}
    minimum = rep.euler_orthogonal and not rep.violations and rep.determined_cross >= 4
    verdict = "ORTHOGONAL" if minimum and not rep.undecided else ("PARTIAL" if minimum else "FAILED")
    doc = {
        "result": {
            "labels": list(rep.labels),
            "exact": rep.exact,
            "euler": {name(k): v for k, v in sorted(rep.euler.items())},
            "cells": cells,
            "undecided": [name(k) for k in rep.undecided],
            "kclass_pages": pages,
            "tau": {k: list(v) for k, v in rep.tau.items()},
            "minimum_certificate": minimum,
        },
        "verdict": verdict,
    }
    lines = [f"{name(k):<22} {result_text(r).splitlines()[0]}" for k, r in sorted(rep.cells.items())]
    lines.append("euler pairings: " + ", ".join(f"{v}" for _, v in sorted(rep.euler.items())))
    lines.append("tau (K-class): " + ", ".join(f"{k} -> {t} ({s:+d})" for k, (t, s) in rep.tau.items()))
    for k, r in sorted(rep.kclass_pages.items()):
        lines.append(f"K-class page for {name(k)}:\n" + result_text(r))
    lines.append(f"verdict: {verdict}")
    code = EXIT_FAIL if verdict == "FAILED" else (EXIT_OK if verdict == "ORTHOGONAL" else EXIT_BLOCKED)
    return doc, "\n".join(lines), code


# --- g2 ---------------------------------------------------------------------
def _vector(text: str):
    from ..g2 import NAMES, MultiVector, e

    text = text.strip()
    if text in NAMES:
        return e(text)
    if text.startswith("e") and text[1:] in NAMES:
        return e(text[1:])
    try:
        coords = [Fraction(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot read vector {text!r}") from exc
    if len(coords) != 7:
        raise UsageError(f"vector {text!r} needs 7 coordinates")
    return MultiVector.vector(coords)


def _sweep_doc(res) -> tuple[dict, str]:
    d = res.as_dict()
    return d, f"{res.name}: {res.samples} samples, {'ok' if res.ok else 'FAILED'}; " + ", ".join(
        f"{k}: {v}" for k, v in d["tally"].items()
    )


def g2_forms(args):
    from ..g2 import LAMBDA_PUBLISHED, forms, jacobiator_constant, nu_matches_published, published_lambda_compatible

    f = forms()
    jac = jacobiator_constant()
    res = {
        "lambda": str(f.lam),
        "lambda_printed": str(LAMBDA_PUBLISHED),
        "nu": str(f.nu),
        "calibration": str(f.calibration),
        "nu_matches": nu_matches_published(),
        "printed_lambda_compatible": published_lambda_compatible(),
        "jacobiator_constant": None if jac is None else str(jac),
    }
    text = "\n".join(f"{k}: {v}" for k, v in res.items())
    ok = res["nu_matches"] and jac is not None
    return {"result": res}, text, EXIT_OK if ok else EXIT_FAIL


def g2_bracket(args):
    from ..g2 import bracket, e
    from ..g2 import reference as ref

    if args.vectors:
        if len(args.vectors) != 2:
            raise UsageError("g2 bracket takes two vectors")
        u, v = (_vector(x) for x in args.vectors)
        b = bracket(u, v)
        return {"inputs": {"u": str(u), "v": str(v)}, "result": {"bracket": str(b), "coords": [str(c) for c in b.coords()]}}, str(b), EXIT_OK
    rows, lines = [], []
    for p, items in ref.BRACKETS.items():
        for (x, y), t in items:
            got, want = bracket(e(x), e(y)), ref.element(t, 1)
            rows.append({"point": p, "pair": [x, y], "value": str(got), "matches": got == want})
            lines.append(f"{p} [e{x}, e{y}] = {got}" + ("" if got == want else f"   expected {want}"))
    ok = all(r["matches"] for r in rows)
    return {"result": {"brackets": rows}, "verdict": "MATCH" if ok else "MISMATCH"}, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def g2_orbits(args):
    from ..g2 import ORBIT_POINTS, lie_type, orbit_type, sweep

    pts = {o: {"orbit": orbit_type(U), "lie_type": lie_type(U)} for o, U in ORBIT_POINTS.items()}
    lines = [f"{o}: orbit {d['orbit']}, {d['lie_type']}" for o, d in pts.items()]
    doc = {"result": {"points": pts}}
    ok = True
    if args.samples:
        sw = sweep("cg", args.samples, args.seed, args.jobs)
        doc["result"]["sweep"], line = _sweep_doc(sw)
        lines.append(line)
        ok = sw.ok
    return doc, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def g2_ilambda(args):
    from ..g2 import LAMBDA_PUBLISHED, ORBIT_POINTS, P0, P1, e, i_lambda, i_lambda_matrix, i_lambda_quotient
    from ..g2 import reference as ref

    rows, lines = [], []
    points = {"P0": P0, "P1": P1}
    for p, items in ref.I_LAMBDA_QUOTIENT.items():
        for (x, y), t in items:
            got, want = i_lambda_quotient(points[p], e(x), e(y), LAMBDA_PUBLISHED), ref.element(t, 2)
            rows.append({"point": p, "pair": [x, y], "value": str(got), "expected": str(want), "matches": got == want})
    for (x, y), t in ref.I_LAMBDA_P2:
        got, want = i_lambda(e(x), e(y), LAMBDA_PUBLISHED), ref.element(t, 2, True)
        rows.append({"point": "P2", "pair": [x, y], "value": str(got), "expected": str(want), "matches": got == want})
    for r in rows:
        lines.append(
            f"{r['point']} i(e{r['pair'][0]}^e{r['pair'][1]}) = {r['value']}"
            + ("" if r["matches"] else f"   MISMATCH, reference {r['expected']}")
        )
    ranks = {o: i_lambda_matrix(U)[1] for o, U in ORBIT_POINTS.items()}
    lines.append("rank of i_lambda: " + ", ".join(f"{o} {r}" for o, r in ranks.items()))
    ok = all(r["matches"] for r in rows)
    doc = {"result": {"entries": rows, "ranks": ranks}, "verdict": "MATCH" if ok else "MISMATCH"}
    return doc, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def g2_phirank(args):
    from ..g2 import SubspaceBasis, phi_lambda_rank, sweep

    fixed = {
        "<ea,e-a>": phi_lambda_rank(SubspaceBasis.of("a", "-a")),
        "<e0,ea>": phi_lambda_rank(SubspaceBasis.of("0", "a")),
    }
    sw = sweep("phi", args.samples, args.seed, args.jobs)
    d, line = _sweep_doc(sw)
    ok = sw.ok and fixed == {"<ea,e-a>": 4, "<e0,ea>": 2}
    lines = [f"rank at {k}: {v}" for k, v in fixed.items()] + [line]
    return {"result": {"fixed": fixed, "sweep": d}}, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def g2_conic(args):
    from ..g2 import ORBIT_POINTS, subalgebra_conic

    ranks = {o: subalgebra_conic(U)[1] for o, U in ORBIT_POINTS.items()}
    ok = ranks == {"O0": 3, "O1": 2, "O2": 1}
    return {"result": {"ranks": ranks}}, "\n".join(f"{o}: conic rank {r}" for o, r in ranks.items()), EXIT_OK if ok else EXIT_FAIL


def g2_veronese(args):
    from ..g2 import sweep, veronese_quadric

    if args.matrix:
        f = [[Fraction(x) for x in row.split(",")] for row in args.matrix.split(";")]
        rep = veronese_quadric(f)
        res = {"rank": rep.rank, "kernel": [[str(x) for x in k] for k in rep.kernel]}
        return {"inputs": {"f": args.matrix}, "result": res}, f"quadric rank {rep.rank}", EXIT_OK
    sw = sweep("veronese", args.samples, args.seed, args.jobs)
    d, line = _sweep_doc(sw)
    return {"result": {"sweep": d}}, line, EXIT_OK if sw.ok else EXIT_FAIL


def g2_segre(args):
    from ..g2 import GenericityError, segre_check, sweep
    from ..verify import SEGRE_EXAMPLE

    if args.example:
        try:
            conic, quad = segre_check(SEGRE_EXAMPLE)
        except GenericityError as exc:
            return {"result": {"error": str(exc)}}, str(exc), EXIT_FAIL
        res = {"conic_rank": conic.rank, "rank": quad.rank, "kernel": [[str(x) for x in k] for k in quad.kernel]}
        return {"result": res}, f"conic rank {conic.rank}, quadric rank {quad.rank}", EXIT_OK
    sw = sweep("segre", args.samples, args.seed, args.jobs)
    d, line = _sweep_doc(sw)
    return {"result": {"sweep": d}}, line, EXIT_OK if sw.ok else EXIT_FAIL


G2_COMMANDS = {
    "forms": g2_forms,
    "bracket": g2_bracket,
    "orbits": g2_orbits,
    "ilambda": g2_ilambda,
    "phirank": g2_phirank,
    "conic": g2_conic,
    "veronese": g2_veronese,
    "segre": g2_segre,
}


def cmd_g2(args):
    return G2_COMMANDS[args.what](args)


def cmd_verify_all(args):
    from ..verify import run_all

    results = run_all(args.seed, args.jobs)
    ok = all(r.ok for r in results)
    doc = {"result": {"criteria": [r.as_dict() for r in results]}, "verdict": "PASS" if ok else "FAIL"}
    return doc, "\n".join(r.line() for r in results), EXIT_OK if ok else EXIT_FAIL


# --- driver -------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "markdown"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")

    p = _Parser(prog="cayleycoh", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("coh", parents=[common], help="cohomology of a bundle")
    s.add_argument("--space", choices=("gr", "cg"), default="cg")
    s.add_argument("expr")
    s.set_defaults(func=cmd_coh)

    for name, func, helptext in (("ext", cmd_ext, "Ext between two objects on CG"), ("euler", cmd_euler, "Euler pairing")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("expr1")
        s.add_argument("expr2")
        s.set_defaults(func=func)

    s = sub.add_parser("table", parents=[common], help="cohomology table on CG and Gr(3,7)")
    s.add_argument("--check", metavar="GOLDEN", help="compare the rendered report with a golden file")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("check-collection", parents=[common], help="exceptionality of an ordered collection")
    s.add_argument("--builtin", choices=("cg15",))
    s.add_argument("file", nargs="?")
    s.add_argument("--print", action="store_true", help="print the collection and stop")
    s.add_argument("--full", action="store_true", help="also compute the cells above the diagonal")
    s.set_defaults(func=cmd_check_collection)

    s = sub.add_parser("residual", parents=[common], help="the three residual objects")
    s.set_defaults(func=cmd_residual)

    s = sub.add_parser("g2", parents=[common], help="G2 linear-algebra checks")
    s.add_argument("what", choices=tuple(G2_COMMANDS))
    s.add_argument("vectors", nargs="*", help="for bracket: two vectors (names like a, -c or 7 coordinates)")
    s.add_argument("--samples", type=int, help="number of random samples")
    s.add_argument("--matrix", help="veronese: symmetric 3x3 f as 'a,b,c;d,e,f;g,h,i'")
    s.add_argument("--example", action="store_true", help="segre: the reducible-conic example")
    s.set_defaults(func=cmd_g2)

    s = sub.add_parser("verify-all", parents=[common], help="run every end-to-end check")
    s.set_defaults(func=cmd_verify_all)
    return p


_SAMPLE_DEFAULTS = {"orbits": 0, "phirank": 1000, "veronese": 400, "segre": 100}


def render(doc: dict, text: str, fmt: str) -> str:
    if fmt == "json":
        body = {k: v for k, v in doc.items() if k != "markdown"}
        return json.dumps(body, indent=2, sort_keys=True) + "\n"
    if fmt == "markdown":
        if "markdown" in doc:
            return doc["markdown"]
        return f"## cayleycoh {doc['command']}\n\n```\n{text}\n```\n"
    return text if text.endswith("\n") else text + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    args.seed = getattr(args, "seed", 0)
    args.jobs = max(1, getattr(args, "jobs", 1))
    out = getattr(args, "out", None)
    if args.command == "g2" and args.samples is None:
        args.samples = _SAMPLE_DEFAULTS.get(args.what, 0)
    try:
        doc, text, code = args.func(args)
    except UsageError as exc:
        print(f"cayleycoh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {"schema": SCHEMA, "command": args.command if args.command != "g2" else f"g2 {args.what}", **doc}
    rendered = render(doc, text, fmt)
    if args.command == "table" and args.check:
        golden = Path(args.check).read_text()
        if golden != rendered:
            diff = difflib.unified_diff(golden.splitlines(True), rendered.splitlines(True), args.check, "computed")
            sys.stderr.writelines(diff)
            code = EXIT_FAIL
    if out:
        Path(out).write_text(rendered)
    else:
        sys.stdout.write(rendered)
    return code


def run() -> None:
    sys.exit(main())
