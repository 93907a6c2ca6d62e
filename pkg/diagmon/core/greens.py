"""Green's relations of enumerated diagram monoids.

Two independent computations are offered. ``classes_by_pattern`` reads the
classes off upper and lower patterns and is only valid for star-closed sets.
``classes_by_ideals`` works on any finite monoid from its Cayley graph: the
right (left) classes are the strongly connected components of the right
(left) multiplication digraph.
"""

from collections.abc import Hashable, Sequence
from enum import Enum
from typing import NamedTuple

import networkx as nx

from ..utils.tool_utils import logger
from ..utils.union_find import DisjointSet
from . import counting
from .bipartition import DiagmonError, Pattern, lower_pattern, rank, upper_pattern
from .enumeration import CayleyGraph, ElementSet
from .families import Family, FamilyKind, UnsupportedFamily
from .text_format import to_text


class NotStarClosed(DiagmonError):
    """The element set is not closed under the vertical flip."""


class Relation(Enum):
    R = "r"
    L = "l"
    H = "h"
    D = "d"
    J = "j"


class GreensPartition:
    """Classes of one Green's relation over the positions of an element set.

    Classes are ordered by their least member and members are ascending, so two
    partitions of the same set compare equal exactly when they group alike.
    """

    def __init__(self, relation: Relation, labels: Sequence[Hashable]):
        self.relation = relation
        ids: dict[Hashable, int] = {}
        self.class_of: list[int] = [ids.setdefault(label, len(ids)) for label in labels]
        self.classes: list[list[int]] = [[] for _ in ids]
        for pos, cls in enumerate(self.class_of):
            self.classes[cls].append(pos)

    def __len__(self):
        return len(self.classes)

    def __eq__(self, other):
        if not isinstance(other, GreensPartition):
            return NotImplemented
        return self.classes == other.classes

    def __repr__(self):
        return f"GreensPartition({self.relation.name}, {len(self)} classes)"

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def refines(self, other: "GreensPartition") -> bool:
        """True when every class of this partition lies inside one class of *other*."""
        return all(len({other.class_of[x] for x in c}) == 1 for c in self.classes)


# ---------------------------------------------------------------------------
# Pattern characterization
# ---------------------------------------------------------------------------


class PatternIndex:
    """Upper and lower patterns of every element, and the pairs that occur together."""

    def __init__(self, element_set: ElementSet):
        if not element_set.is_star_closed():
            raise NotStarClosed(f"{element_set!r} is not closed under the vertical flip")
        self.element_set = element_set
        self.upper: list[Pattern] = [upper_pattern(a) for a in element_set]
        self.lower: list[Pattern] = [lower_pattern(a) for a in element_set]
        self.pairs: set[tuple[Pattern, Pattern]] = set(zip(self.upper, self.lower))

    def compatible(self, p: Pattern, q: Pattern) -> bool:
        return (p, q) in self.pairs

    def admissible(self) -> list[Pattern]:
        """Distinct upper patterns, in order of first occurrence."""
        return list(dict.fromkeys(self.upper))


def pattern_compatible(S: ElementSet | PatternIndex, p: Pattern, q: Pattern) -> bool:
    """True when some element of *S* has upper pattern *p* and lower pattern *q*."""
    index = S if isinstance(S, PatternIndex) else PatternIndex(S)
    return index.compatible(p, q)


def classes_by_pattern(S: ElementSet | PatternIndex, relation: Relation) -> GreensPartition:
    index = S if isinstance(S, PatternIndex) else PatternIndex(S)
    match relation:
        case Relation.R:
            labels = index.upper
        case Relation.L:
            labels = index.lower
        case Relation.H:
            labels = list(zip(index.upper, index.lower))
        case Relation.D | Relation.J:
            # An element links its upper pattern to its lower pattern
            linked: DisjointSet = DisjointSet()
            for p, q in index.pairs:
                linked.make_set(("upper", p))
                linked.make_set(("lower", q))
                linked.union(("upper", p), ("lower", q))
            labels = [linked.find(("upper", p)) for p in index.upper]
    partition = GreensPartition(relation, labels)
    logger.debug(f"{relation.name}-classes by pattern: {len(partition)} over {len(index.upper)} elements")
    return partition


# ---------------------------------------------------------------------------
# Principal ideals
# ---------------------------------------------------------------------------


def _component_labels(graph: nx.MultiDiGraph, size: int) -> list[int]:
    labels = [0] * size
    for component_id, component in enumerate(nx.strongly_connected_components(graph)):
        for node in component:
            labels[node] = component_id
    return labels


def classes_by_ideals(C: CayleyGraph, relation: Relation) -> GreensPartition:
    """Classes from mutual reachability in the Cayley graph.

    R and L are strongly connected components of the right and left digraphs,
    J those of their union. H intersects R and L, and D joins them.
    """
    size = len(C)
    match relation:
        case Relation.R:
            labels = _component_labels(C.to_networkx("right"), size)
        case Relation.L:
            labels = _component_labels(C.to_networkx("left"), size)
        case Relation.J:
            labels = _component_labels(C.to_networkx("both"), size)
        case Relation.H:
            right = _component_labels(C.to_networkx("right"), size)
            left = _component_labels(C.to_networkx("left"), size)
            labels = list(zip(right, left))
        case Relation.D:
            right = _component_labels(C.to_networkx("right"), size)
            left = _component_labels(C.to_networkx("left"), size)
            joined: DisjointSet = DisjointSet()
            for x in range(size):
                joined.make_set(("r", right[x]))
                joined.make_set(("l", left[x]))
                joined.union(("r", right[x]), ("l", left[x]))
            labels = [joined.find(("r", right[x])) for x in range(size)]
    partition = GreensPartition(relation, labels)
    logger.debug(f"{relation.name}-classes by ideals: {len(partition)} over {size} elements")
    return partition


# ---------------------------------------------------------------------------
# Reports and formula counts
# ---------------------------------------------------------------------------


class DClassSummary(NamedTuple):
    representative: str
    rank: int
    size: int
    r_classes: int
    l_classes: int
    h_size: int


def d_class_report(S: ElementSet | PatternIndex) -> list[DClassSummary]:
    """One summary per D-class: rank, how many R- and L-classes it holds and its H-class size."""
    index = S if isinstance(S, PatternIndex) else PatternIndex(S)
    d = classes_by_pattern(index, Relation.D)
    r = classes_by_pattern(index, Relation.R)
    l_ = classes_by_pattern(index, Relation.L)
    h = classes_by_pattern(index, Relation.H)
    report = []
    for members in d.classes:
        first = index.element_set[members[0]]
        report.append(
            DClassSummary(
                representative=to_text(first),
                rank=rank(first),
                size=len(members),
                r_classes=len({r.class_of[x] for x in members}),
                l_classes=len({l_.class_of[x] for x in members}),
                h_size=len(h.classes[h.class_of[members[0]]]),
            )
        )
    return report


def _formula(fam: Family, planar, general) -> int:
    match fam.kind:
        case FamilyKind.PMOD:
            return planar(fam.modulus, fam.degree)
        case FamilyKind.MOD:
            return general(fam.modulus, fam.degree)
        case FamilyKind.PARTITION:
            return general(1, fam.degree)
        case FamilyKind.PLANAR:
            return planar(1, fam.degree)
    raise UnsupportedFamily(f"No class-count formula for {fam}")


def count_d_classes(fam: Family) -> int:
    return _formula(fam, counting.d_classes_pmod, counting.d_classes_mod)


def count_r_classes(fam: Family) -> int:
    return _formula(fam, counting.r_classes_pmod, counting.r_classes_mod)

