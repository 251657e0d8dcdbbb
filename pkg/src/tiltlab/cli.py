"""Command line front end.

Exit status: 0 on success, 1 when a verification fails, 2 for bad input
(unreadable or malformed quiver file, non-Dynkin quiver, invalid vertex or
tilting module).
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .bb import BBReport, PropertyCheck, TiltedReport, run_bb, run_tilted
from .errors import (
    AdmissibilityViolation,
    NotRepresentationFinite,
    NotTilting,
    QuiverParseError,
    SimpleIsInjective,
    TiltlabError,
)
from .quiver import injective_rep, parse_quiver, projective_rep, simple_rep
from .serialize import dumps, node_name, tilting_quiver_to_json, to_dot
from .tilting import IndTable, TiltingQuiver, build_ind_table, enumerate_tilting, exchange_quiver, hasse

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str) -> IndTable:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    q = parse_quiver(text)
    return build_ind_table(q)


def _markers(tbl: IndTable, k: int) -> str:
    q = tbl.quiver
    dims = tbl.dims(k)
    marks = []
    for i in q.vertices:
        if projective_rep(q, i).dims == dims:
            marks.append(f"P({i})")
        if injective_rep(q, i).dims == dims:
            marks.append(f"I({i})")
        if simple_rep(q, i).dims == dims:
            marks.append(f"S({i})")
    return " ".join(marks)


def _emit_quiver(tbl: IndTable, tq: TiltingQuiver, fmt: str, out: TextIO, extra: dict | None = None) -> None:
    if fmt == "json":
        data = tilting_quiver_to_json(tbl, tq)
        if extra:
            data.update(extra)
        out.write(dumps(data) + "\n")
    elif fmt == "dot":
        out.write(to_dot(tbl, tq))
    else:
        out.write(f"vertices {len(tq.vertices)}\narrows {len(tq.arrows)}\n")
        for k, v in enumerate(tq.vertices):
            tag = f"  [{tq.tags[k]}]" if tq.tags is not None else ""
            out.write(f"{k}: {node_name(tbl, v)}{tag}\n")
        for u, v in tq.arrows:
            out.write(f"{u} -> {v}\n")


def _report_lines(checks: Sequence[PropertyCheck]) -> list[str]:
    lines = []
    for c in checks:
        line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        if not c.passed and c.witness is not None:
            line += f"  witness: {c.witness}"
        lines.append(line)
    return lines


def cmd_ind(args: argparse.Namespace, out: TextIO) -> int:
    tbl = _load(args.file)
    for k in range(len(tbl)):
        dims = " ".join(str(d) for d in tbl.dims(k))
        marks = _markers(tbl, k)
        out.write(f"{k}\t{dims}" + (f"\t{marks}" if marks else "") + "\n")
    return EXIT_OK


def cmd_tilt(args: argparse.Namespace, out: TextIO) -> int:
    tbl = _load(args.file)
    tilts = enumerate_tilting(tbl)
    K = hasse(tbl, tilts)
    E = exchange_quiver(tbl, tilts)
    _emit_quiver(tbl, K, args.format, out)
    if not K.same_graph(E):
        print("error: exchange quiver differs from the Hasse diagram", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_bb(args: argparse.Namespace, out: TextIO) -> int:
    tbl = _load(args.file)
    report: BBReport = run_bb(tbl, args.vertex, transport=args.transport or args.verify)
    shown = report.transported if args.transport and report.transported is not None else report.oracle
    lines = _report_lines(report.checks)
    extra = {"report": [{"name": c.name, "passed": c.passed} for c in report.checks]} if args.verify else None
    _emit_quiver(tbl, shown, args.format, out, extra)
    if args.verify:
        stream = out if args.format == "text" else sys.stderr
        for line in lines:
            stream.write(line + "\n")
        if not report.ok:
            return EXIT_FAIL
    elif args.transport and report.transported is None:
        print("error: transported construction failed", file=sys.stderr)
        for line in lines:
            print(line, file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _parse_ids(tbl: IndTable, spec: str) -> list[int]:
    """Comma-separated canonical ids, or P<i>, I<i>, S<i> shorthands."""
    q = tbl.quiver
    ids = []
    for tok in (t.strip() for t in spec.split(",")):
        if not tok:
            continue
        try:
            if tok[0] in "PIS" and tok[1:].isdigit():
                i = int(tok[1:])
                if not 1 <= i <= q.n:
                    raise InputError(f"vertex {i} out of range in {tok!r}")
                make = {"P": projective_rep, "I": injective_rep, "S": simple_rep}[tok[0]]
                ids.append(tbl.id_of(make(q, i)))
            else:
                k = int(tok)
                if not 0 <= k < len(tbl):
                    raise InputError(f"id {k} out of range 0..{len(tbl) - 1}")
                ids.append(k)
        except ValueError:
            raise InputError(f"bad summand {tok!r}") from None
    return ids


def cmd_tilted(args: argparse.Namespace, out: TextIO) -> int:
    tbl = _load(args.file)
    report: TiltedReport = run_tilted(tbl, _parse_ids(tbl, args.t0))
    if not report.admissible:
        T, k = report.witness
        raise AdmissibilityViolation(
            f"T0 is not admissible: summand {node_name(tbl, T)} has {tbl.dims(k)} generated by its F-part",
            witness=report.witness,
        )
    _emit_quiver(tbl, report.oracle, args.format, out)
    if args.format == "text":
        for T, B in report.images.items():
            out.write(f"phi {node_name(tbl, T)} = {node_name(tbl, B)}\n")
    lines = _report_lines(report.checks)
    stream = out if args.format == "text" else sys.stderr
    for line in lines:
        stream.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    tbl = _load(args.file)
    tilts = enumerate_tilting(tbl)
    ok = hasse(tbl, tilts).same_graph(exchange_quiver(tbl, tilts))
    out.write(f"{'PASS' if ok else 'FAIL'}  exchange quiver equals Hasse diagram\n")
    eligible = 0
    for i in tbl.quiver.vertices:
        try:
            report = run_bb(tbl, i)
        except SimpleIsInjective:
            out.write(f"vertex {i}: skipped (simple is injective)\n")
            continue
        eligible += 1
        out.write(f"vertex {i}:\n")
        for line in _report_lines(report.checks):
            out.write(f"  {line}\n")
        ok = ok and report.ok
    out.write(f"{eligible} BB vertices checked: {'all pass' if ok else 'FAILURES'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tiltlab", description="Tilting quivers of Dynkin path algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt_options(sp: argparse.ArgumentParser) -> None:
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="format", action="store_const", const="json", help="emit JSON")
        g.add_argument("--dot", dest="format", action="store_const", const="dot", help="emit Graphviz DOT")
        sp.set_defaults(format="text")

    sp = sub.add_parser("ind", help="list the indecomposables")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_ind)

    sp = sub.add_parser("tilt", help="tilting quiver of the path algebra")
    sp.add_argument("file")
    fmt_options(sp)
    sp.set_defaults(func=cmd_tilt)

    sp = sub.add_parser("bb", help="tilting quiver of the BB-tilted algebra at a vertex")
    sp.add_argument("file")
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--transport", action="store_true", help="output the transported construction")
    sp.add_argument("--verify", action="store_true", help="run all checks; exit 1 on any failure")
    fmt_options(sp)
    sp.set_defaults(func=cmd_bb)

    sp = sub.add_parser("tilted", help="phi images and B0 tilting quiver for a given tilting module T0")
    sp.add_argument("file")
    sp.add_argument("--t0", required=True, help="summands: canonical ids or P<i>/I<i>/S<i>, comma separated")
    fmt_options(sp)
    sp.set_defaults(func=cmd_tilted)

    sp = sub.add_parser("verify", help="run every check at every BB vertex")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except (InputError, QuiverParseError, NotRepresentationFinite, SimpleIsInjective, NotTilting, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AdmissibilityViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except TiltlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
