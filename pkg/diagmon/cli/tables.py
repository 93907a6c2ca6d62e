"""Published tables: recompute every cell of a shipped fixture and diff against it.

A fixture is a CSV file ``fixtures/<name>.csv`` with the header
``row,column,value``. The row and column keys are whatever the table is indexed
by (degree, modulus, composition vector spelled as a digit string, ...); each
registered table knows how to compute the value of one cell from its keys.
"""

import csv
import io
import os
from collections.abc import Callable, Iterable
from functools import cache
from typing import NamedTuple

from ..core import counting
from ..core.bipartition import DiagmonError
from ..core.words import GenOrder, candidate_run_counts
from ..utils.tool_utils import ToolUtils, logger

CSV_HEADER = ("row", "column", "value")

Cell = tuple[str, str]


class UnknownTable(DiagmonError):
    """No table of that name is registered."""


class Table(NamedTuple):
    name: str
    description: str
    cell: Callable[[str, str], int]


class CellDiff(NamedTuple):
    row: str
    column: str
    expected: str
    actual: str


class TableResult(NamedTuple):
    name: str
    rows: list[tuple[str, str, int]]
    diffs: list[CellDiff]

    @property
    def ok(self) -> bool:
        return not self.diffs


def _digits(column: str) -> tuple[int, ...]:
    return tuple(int(c) for c in column)


def _moncards(total_count, card) -> Callable[[int], Callable[[str, str], int]]:
    def for_modulus(m: int):
        def cell(row: str, column: str) -> int:
            k = int(row)
            if column == "card":
                return card(m, k)
            return total_count(m, k, int(column))

        return cell

    return for_modulus


def _vector(vec_count) -> Callable[[int], Callable[[str, str], int]]:
    def for_modulus(m: int):
        return lambda row, column: vec_count(m, int(row), _digits(column))

    return for_modulus


def _transversals(count) -> Callable[[int], Callable[[str, str], int]]:
    def for_modulus(m: int):
        return lambda row, column: count(m, int(row), int(column))

    return for_modulus


def _by_modulus(count) -> Callable[[str, str], int]:
    return lambda row, column: count(int(row), int(column))


@cache
def _geodesic_run_counts(k: int):
    return candidate_run_counts(k, GenOrder.DIAPSIS_FIRST)


def _candidate_cell(row: str, column: str) -> int:
    j, i = int(row), int(column)
    return _geodesic_run_counts(j + 1)[(j, i)]


def _build_registry() -> dict[str, Table]:
    tables: dict[str, Table] = {}

    def add(name: str, description: str, cell):
        tables[name] = Table(name, description, cell)

    families = (
        ("pmod", "planar mod-{m} monoid", counting.pn, counting.pm_card, (2, 3, 4)),
        ("mod", "mod-{m} monoid", counting.xn, counting.mod_card, (2, 3, 4)),
        ("apsismod", "{m}-apsis monoid", counting.pnb, counting.apsis_card, (3, 4)),
        ("capsismon", "crossed {m}-apsis monoid", counting.xnb, counting.xapsis_card, (3, 4)),
    )
    for prefix, label, total_count, card, moduli in families:
        for m in moduli:
            add(
                f"{prefix}{m}moncards",
                f"Elements of the {label.format(m=m)} by non-transversal side total, and cardinality",
                _moncards(total_count, card)(m),
            )

    vectors = (
        ("PN", "planar non-transversal", counting.pn_vec, (2, 3, 4)),
        ("PNB", "planar non-transversal with an apsis", counting.pnb_vec, (3, 4)),
        ("XN", "non-transversal", counting.xn_vec, (2, 3, 4)),
        ("XNB", "non-transversal with an apsis", counting.xnb_vec, (3, 4)),
    )
    for prefix, label, vec_count, moduli in vectors:
        for m in moduli:
            add(f"{prefix}{m}", f"{label.capitalize()} side counts by composition vector, m={m}", _vector(vec_count)(m))

    for m in (2, 3, 4):
        add(f"PT{m}", f"Planar mod-{m} transversal patterns by side sizes", _transversals(counting.pt)(m))
        add(f"XT{m}", f"Mod-{m} transversal patterns by side sizes", _transversals(counting.xt)(m))

    add("nointparts", "Integer partitions of k with parts at most m", _by_modulus(counting.p_parts_bounded))
    add("noorderedintparts", "Compositions of k with parts at most m", _by_modulus(counting.o_parts_bounded))
    add("nopmodmonDclasses", "D-classes of the planar mod-m monoid", _by_modulus(counting.d_classes_pmod))
    add("nomodmonDclasses", "D-classes of the mod-m monoid", _by_modulus(counting.d_classes_mod))
    add("nopmodmonRclasses", "R-classes of the planar mod-m monoid", _by_modulus(counting.r_classes_pmod))
    add("nomodmonRclasses", "R-classes of the mod-m monoid", _by_modulus(counting.r_classes_mod))
    add("Rjivalues", "Jones normal forms ending in the run from j down to i", _by_modulus(counting.catalan_triangle_R))
    add(
        "candidateRjivalues",
        "Geodesic planar mod-2 words ending in the run from j down to i",
        _candidate_cell,
    )
    return tables


TABLES: dict[str, Table] = _build_registry()


def table_names() -> list[str]:
    return list(TABLES)


def get_table(name: str) -> Table:
    try:
        return TABLES[name]
    except KeyError:
        raise UnknownTable(f"Unknown table '{name}' (see 'tables --list')") from None


def fixture_path(name: str, fixtures_dir: str | None = None) -> str:
    return os.path.join(fixtures_dir or ToolUtils.fixtures_path(), f"{name}.csv")


def read_fixture(name: str, fixtures_dir: str | None = None) -> list[tuple[str, str, str]]:
    path = fixture_path(name, fixtures_dir)
    if not os.path.exists(path):
        raise UnknownTable(f"No fixture for table '{name}' at {path}")
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        return [(rec["row"], rec["column"], rec["value"]) for rec in reader]


def reproduce(name: str, fixtures_dir: str | None = None) -> TableResult:
    """Recompute every cell the fixture lists and collect the cells that differ."""
    table = get_table(name)
    rows, diffs = [], []
    for row, column, expected in read_fixture(name, fixtures_dir):
        value = table.cell(row, column)
        rows.append((row, column, value))
        if str(value) != expected:
            diffs.append(CellDiff(row, column, expected, str(value)))
    if diffs:
        logger.warning(f"Table {name}: {len(diffs)} of {len(rows)} cells differ from the fixture")
    else:
        logger.info(f"Table {name}: {len(rows)} cells reproduced")
    return TableResult(name, rows, diffs)


def render_csv(rows: Iterable[tuple[str, str, int]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return out.getvalue()
