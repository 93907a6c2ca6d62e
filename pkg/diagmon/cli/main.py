"""Command line surface of diagmon.

Every verb builds a :class:`Report` and the report is rendered in the
requested format (``text``, ``json`` or ``csv``). Domain errors exit with 1
and a one-line message on stderr; usage errors exit with 2.
"""

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from functools import reduce
from typing import NamedTuple, TextIO

from pydantic import ValidationError

from ..core import counting
from ..core.bipartition import DiagmonError, block_types, hsum, product, star
from ..core.enumeration import cayley, close, filter_bipartitions
from ..core.families import Family, UnsupportedFamily, generating_set, member, parse_family
from ..core.greens import (
    PatternIndex,
    Relation,
    classes_by_ideals,
    classes_by_pattern,
    count_d_classes,
    count_r_classes,
    d_class_report,
)
from ..core.presentations import check_soundness, presented_size, relation_set_names, relations
from ..core.settings import Settings
from ..core.text_format import from_text, to_json_obj, to_text
from ..core.words import GenOrder, conjecture_report, format_word, geodesic_lex_words
from ..utils.tool_utils import ToolUtils, logger
from . import tables

FORMATS = ("text", "json", "csv")

COUNTS = (
    "pm",
    "mod",
    "apsis",
    "xapsis",
    "pt",
    "xt",
    "pn",
    "pnb",
    "xn",
    "xnb",
    "dclasses",
    "rclasses",
    "parts",
    "oparts",
    "bell",
    "catalan",
    "runs",
)


class Report(NamedTuple):
    """Output of one verb.

    Attributes:
        lines: Human readable lines for ``text``.
        data: JSON value for ``json``; verbs that stream records pass a list.
        header: CSV header for ``csv``.
        rows: CSV rows for ``csv``.
    """

    lines: list[str]
    data: object
    header: Sequence[str]
    rows: list[Sequence]
    exit_code: int = 0


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _render(report: Report, fmt: str, stream: TextIO, json_lines: bool = False):
    match fmt:
        case "text":
            for line in report.lines:
                stream.write(f"{line}\n")
        case "json":
            if json_lines:
                for record in report.data:
                    stream.write(json.dumps(record, separators=(",", ":")) + "\n")
            else:
                stream.write(json.dumps(report.data, indent=2) + "\n")
        case "csv":
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(report.header)
            writer.writerows(report.rows)


def _element_record(a) -> dict:
    return {"text": to_text(a), **to_json_obj(a)}


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------


def _single(a) -> Report:
    text = to_text(a)
    return Report([text], _element_record(a), ("element",), [(text,)])


def cmd_product(args) -> Report:
    elements = [from_text(text, args.k) for text in args.elements]
    return _single(reduce(product, elements))


def cmd_star(args) -> Report:
    return _single(star(from_text(args.element, args.k)))


def cmd_hsum(args) -> Report:
    return _single(hsum(from_text(args.left), from_text(args.right)))


def cmd_member(args) -> Report:
    fam = parse_family(args.family, args.k)
    a = from_text(args.element, args.k)
    inside = member(fam, a)
    histogram = {f"{t.upper},{t.lower}": n for t, n in sorted(block_types(a).items())}
    data = {"family": str(fam), "degree": fam.degree, "element": to_text(a), "member": inside, "block_types": histogram}
    return Report([str(inside).lower()], data, ("family", "element", "member"), [(str(fam), to_text(a), inside)])


def _enumerate_family(fam: Family, method: str):
    if method == "filter":
        return filter_bipartitions(fam.degree, lambda a: member(fam, a))
    return close(generating_set(fam), k=fam.degree)


def cmd_enumerate(args) -> Report:
    fam = parse_family(args.family, args.k)
    elements = _enumerate_family(fam, args.method)
    records = [to_json_obj(a) for a in elements]
    summary = {"family": str(fam), "degree": fam.degree, "count": len(elements)}
    lines = [to_text(a) for a in elements] + [f"count: {len(elements)}"]
    return Report(lines, records + [summary], ("index", "element"), [(i, to_text(a)) for i, a in enumerate(elements)])


def cmd_greens(args) -> Report:
    fam = parse_family(args.family, args.k)
    relation = Relation(args.relation)
    if args.method == "ideal":
        graph = cayley(generating_set(fam), k=fam.degree)
        elements = graph.element_set
        partition = classes_by_ideals(graph, relation)
    else:
        elements = close(generating_set(fam), k=fam.degree)
        partition = classes_by_pattern(PatternIndex(elements), relation)

    if args.report:
        summaries = d_class_report(elements)
        header = ("rank", "size", "r_classes", "l_classes", "h_size", "representative")
        rows = [(s.rank, s.size, s.r_classes, s.l_classes, s.h_size, s.representative) for s in summaries]
        lines = [f"D-classes of {fam.label()}: {len(summaries)}"]
        lines += [
            f"  rank {s.rank}: {s.size} elements, {s.r_classes} R x {s.l_classes} L, H size {s.h_size}  {s.representative}"
            for s in summaries
        ]
        return Report(lines, [s._asdict() for s in summaries], header, rows)

    classes = [{"size": len(c), "representative": to_text(elements[c[0]])} for c in partition.classes]
    data = {
        "family": str(fam),
        "degree": fam.degree,
        "relation": relation.name,
        "method": args.method,
        "count": len(partition),
        "classes": classes,
    }
    lines = [f"{relation.name}-classes of {fam.label()}: {len(partition)}"]
    lines += [f"  {c['size']:>6}  {c['representative']}" for c in classes]
    rows = [(i, c["size"], c["representative"]) for i, c in enumerate(classes)]
    return Report(lines, data, ("class", "size", "representative"), rows)


def _vector_or_total(text: str | None):
    if text is None:
        raise UnsupportedFamily("This count needs --t (a side total, or a comma separated vector)")
    if "," in text:
        return tuple(int(x) for x in text.split(",") if x)
    return int(text)


def _count_value(args) -> int:
    m, k = args.m, args.k
    match args.what:
        case "pm":
            return counting.pm_card(m, k)
        case "mod":
            return counting.mod_card(m, k)
        case "apsis":
            return counting.apsis_card(m, k)
        case "xapsis":
            return counting.xapsis_card(m, k)
        case "pt" | "xt":
            k2 = k if args.k2 is None else args.k2
            return (counting.pt if args.what == "pt" else counting.xt)(m, k, k2)
        case "pn" | "pnb" | "xn" | "xnb":
            t = _vector_or_total(args.t)
            if isinstance(t, tuple):
                return getattr(counting, f"{args.what}_vec")(m, k, t)
            return getattr(counting, args.what)(m, k, t)
        case "dclasses" | "rclasses":
            fam = parse_family(args.family or f"pmod:{m}", k)
            return count_d_classes(fam) if args.what == "dclasses" else count_r_classes(fam)
        case "parts":
            return counting.p_parts_bounded(m, k)
        case "oparts":
            return counting.o_parts_bounded(m, k)
        case "bell":
            return counting.bell(k)
        case "catalan":
            return counting.catalan(k)
        case "runs":
            i = k if args.k2 is None else args.k2
            return counting.catalan_triangle_R(k, i)


def cmd_count(args) -> Report:
    value = _count_value(args)
    data = {"what": args.what, "m": args.m, "k": args.k, "value": str(value)}
    return Report([str(value)], data, ("what", "m", "k", "value"), [(args.what, args.m, args.k, value)])


def cmd_tables(args) -> Report:
    if args.list:
        names = tables.table_names()
        lines = [f"{name}\t{tables.get_table(name).description}" for name in names]
        data = [{"name": name, "description": tables.get_table(name).description} for name in names]
        return Report(lines, data, ("name", "description"), [(d["name"], d["description"]) for d in data])

    names = tables.table_names() if args.reproduce == "all" else [args.reproduce]
    results = [tables.reproduce(name, args.fixtures) for name in names]
    failed = [r for r in results if not r.ok]

    lines = []
    for result in results:
        if len(results) > 1:
            lines.append(f"# {result.name}")
        lines += tables.render_csv(result.rows).splitlines()
    data = [
        {"name": r.name, "cells": len(r.rows), "diffs": [d._asdict() for d in r.diffs]} for r in results
    ]
    rows = [(r.name, row, column, value) for r in results for row, column, value in r.rows]
    for result in failed:
        for diff in result.diffs:
            sys.stderr.write(
                f"{result.name}: cell ({diff.row}, {diff.column}) is {diff.actual}, fixture has {diff.expected}\n"
            )
    return Report(lines, data, ("table", "row", "column", "value"), rows, exit_code=1 if failed else 0)


def cmd_normal_forms(args) -> Report:
    if args.m != 2:
        raise UnsupportedFamily(f"Normal forms are only computed for the planar mod-2 monoid, got m={args.m}")
    order = GenOrder(args.order)
    if args.report:
        report = conjecture_report(args.k, order)
        lines = [
            f"R({r.j},{r.i}) observed {r.observed}, conjectured {r.conjectured}: {'agrees' if r.agrees else 'DIFFERS'}"
            for r in report
        ]
        return Report(lines, [r._asdict() for r in report], ("j", "i", "observed", "conjectured", "agrees"), report)

    words = geodesic_lex_words(args.k, order)
    rows = [(to_text(a), format_word(words[a], args.alias)) for a in sorted(words)]
    lines = [f"{element}\t{w}" for element, w in rows]
    data = [{"element": element, "word": w} for element, w in rows]
    return Report(lines, data, ("element", "word"), rows)


def cmd_presentation_check(args) -> Report:
    rs = relations(args.name, args.k, args.m)
    soundness = check_soundness(rs)
    cap = args.cap or Settings().limits.word_cap
    result = presented_size(rs, cap)
    data = {
        "name": rs.name,
        "degree": rs.degree,
        "relations": len(rs),
        "sound": soundness.ok,
        "failures": [f._asdict() for f in soundness.failures],
        "class_count": result.class_count,
        "stabilized": result.stabilized,
        "complete": result.complete,
        "injective": result.injective,
        "cap": cap,
    }
    lines = [
        f"{rs.name}, k={rs.degree}: {len(rs)} relations over {len(rs.generators)} generators",
        f"soundness: {soundness.checked - len(soundness.failures)}/{soundness.checked} relations hold",
    ]
    lines += [f"  fails: {f.lhs} = {f.rhs}" for f in soundness.failures]
    lines += [
        f"class_count: {result.class_count}",
        f"stabilized: {str(result.stabilized).lower()}",
    ]
    row = (rs.name, rs.degree, len(rs), soundness.ok, result.class_count, result.stabilized)
    header = ("name", "degree", "relations", "sound", "class_count", "stabilized")
    return Report(lines, data, header, [row], exit_code=0 if soundness.ok else 1)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagmon", description="Exact computations in diagram monoids.", allow_abbrev=False
    )
    parser.add_argument("--format", choices=FORMATS, default=None, help="output format (default from config)")
    parser.add_argument("--log-dir", default=None, help="write a session log file into this directory")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--max-elements", type=int, default=None)
    parser.add_argument("--max-bell-degree", type=int, default=None)
    parser.add_argument("--word-cap", type=int, default=None)
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("product", allow_abbrev=False, help="product of bipartitions, read left to right")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("elements", nargs="+")
    p.set_defaults(handler=cmd_product)

    p = verbs.add_parser("star", allow_abbrev=False, help="vertical flip")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("element")
    p.set_defaults(handler=cmd_star)

    p = verbs.add_parser("hsum", allow_abbrev=False, help="horizontal sum")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=cmd_hsum)

    p = verbs.add_parser("member", allow_abbrev=False, help="test membership in a family")
    p.add_argument("--family", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("element")
    p.set_defaults(handler=cmd_member)

    p = verbs.add_parser("enumerate", allow_abbrev=False, help="list every element of a family")
    p.add_argument("--family", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=("closure", "filter"), default="closure")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_enumerate, json_lines=True)

    p = verbs.add_parser("greens", allow_abbrev=False, help="Green's classes of a family")
    p.add_argument("--family", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--relation", choices=[r.value for r in Relation], default="d")
    p.add_argument("--method", choices=("pattern", "ideal"), default="pattern")
    p.add_argument("--report", action="store_true", help="summarize every D-class")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_greens)

    p = verbs.add_parser("count", allow_abbrev=False, help="closed-form counts")
    p.add_argument("--what", choices=COUNTS, required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--k2", type=int, default=None)
    p.add_argument("--t", default=None, help="side total, or a comma separated composition vector")
    p.add_argument("--family", default=None, help="family for dclasses and rclasses (default pmod:<m>)")
    p.set_defaults(handler=cmd_count)

    p = verbs.add_parser("tables", allow_abbrev=False, help="recompute the published tables")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true")
    group.add_argument("--reproduce", metavar="NAME|all")
    p.add_argument("--fixtures", default=None, help="directory of fixture CSV files")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_tables)

    p = verbs.add_parser("normal-forms", allow_abbrev=False, help="shortlex geodesic words of the planar mod-2 monoid")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--order", choices=[o.value for o in GenOrder], default=GenOrder.DIAPSIS_FIRST.value)
    p.add_argument("--alias", action="store_true", help="print one-character letters")
    p.add_argument("--report", action="store_true", help="compare run counts with the conjectured forms")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_normal_forms)

    p = verbs.add_parser("presentation-check", allow_abbrev=False, help="soundness and size of a relation set")
    p.add_argument("--name", choices=relation_set_names(), required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--cap", type=int, default=None, help="word length cap (default word_cap)")
    p.set_defaults(handler=cmd_presentation_check)

    return parser


def _output_format(args) -> str:
    if args.format:
        return args.format
    out = getattr(args, "out", None)
    if out and out.endswith((".json", ".jsonl")):
        return "json"
    if out and out.endswith(".csv"):
        return "csv"
    return Settings().output_format


def run_cli(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    ToolUtils.init_console(args.verbose)
    if args.log_dir:
        ToolUtils.init_logger(args.log_dir)
    try:
        Settings.override(
            max_elements=args.max_elements,
            max_bell_degree=args.max_bell_degree,
            word_cap=args.word_cap,
        )
        logger.debug(f"diagmon {args.verb}: {vars(args)}")
        report = args.handler(args)
        fmt = _output_format(args)
        buffer = io.StringIO()
        _render(report, fmt, buffer, json_lines=getattr(args, "json_lines", False))
        out = getattr(args, "out", None)
        if out:
            with open(out, "w", encoding="utf-8") as f:
                f.write(buffer.getvalue())
            logger.info(f"Wrote {out}")
        else:
            stdout.write(buffer.getvalue())
        return report.exit_code
    except DiagmonError as e:
        sys.stderr.write(f"error: {e}\n")
        logger.debug("Command failed", exc_info=True)
        return 1
    except ValidationError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    finally:
        ToolUtils.shutdown_logger()
