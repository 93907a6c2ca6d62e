"""Bipartitions of {1..k} and {1'..k'} and the operations of the partition monoid.

Vertices are signed integers throughout: upper vertex ``i`` is ``i`` and lower
vertex ``j'`` is ``-j``. A :class:`Bipartition` stores one block id per vertex,
positions ``0..k-1`` for the upper row and ``k..2k-1`` for the lower row, with
ids handed out in first-occurrence order. Two bipartitions are equal exactly
when their degree and id tuples are equal.
"""

import random
from collections import Counter
from collections.abc import Iterable, Sequence
from enum import Enum
from typing import NamedTuple, Union

from ..utils.union_find import DisjointSet


class DiagmonError(Exception):
    """Base class for every error raised by diagmon."""


class MissingVertex(DiagmonError):
    """A vertex of the degree is not covered by any block."""


class DuplicateVertex(DiagmonError):
    """A vertex is named in more than one place."""


class IndexOutOfRange(DiagmonError):
    """A vertex or generator index lies outside the legal range for the degree."""


class DegreeMismatch(DiagmonError):
    """Two operands, or an operand and a family, disagree on the degree."""


class EmptyBlock(DiagmonError):
    """A block without any vertex was supplied."""


class RangeError(DiagmonError):
    """A numeric parameter (modulus, size, sum) is outside its domain."""


class Side(Enum):
    UPPER = "upper"
    LOWER = "lower"


class Vertex(NamedTuple):
    side: Side
    index: int

    @property
    def signed(self) -> int:
        return self.index if self.side is Side.UPPER else -self.index

    @staticmethod
    def from_signed(v: int) -> "Vertex":
        return Vertex(Side.UPPER, v) if v > 0 else Vertex(Side.LOWER, -v)

    def __str__(self):
        return f"{self.index}" if self.side is Side.UPPER else f"{self.index}'"


class BlockType(NamedTuple):
    upper: int
    lower: int


class Pattern(NamedTuple):
    """Upper (or lower) half of a bipartition.

    Attributes:
        degree: Number of points on the side.
        non_transversals: Sides of the blocks that do not reach across.
        transversals: Shadows of the transversal blocks on this side.
    """

    degree: int
    non_transversals: frozenset[frozenset[int]]
    transversals: frozenset[frozenset[int]]

    def transversal_sizes(self) -> tuple[int, ...]:
        """Sizes of the transversal shadows ordered by their least point."""
        return tuple(len(t) for t in sorted(self.transversals, key=min))


VertexLike = Union[int, Vertex, str]


def _canonical_ids(labels: Iterable) -> tuple[int, ...]:
    seen = {}
    return tuple(seen.setdefault(label, len(seen)) for label in labels)


class Bipartition:
    """A set partition of the 2k points of degree k, held in canonical form."""

    __slots__ = ("_degree", "_ids", "_hash")

    def __init__(self, degree: int, labels: Sequence):
        if len(labels) != 2 * degree:
            raise DegreeMismatch(f"Expected {2 * degree} labels for degree {degree}, got {len(labels)}")
        self._degree = degree
        self._ids = _canonical_ids(labels)
        self._hash = hash((degree, self._ids))

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def ids(self) -> tuple[int, ...]:
        return self._ids

    def block_count(self) -> int:
        return max(self._ids, default=-1) + 1

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as tuples of signed vertices, in canonical order."""
        k = self._degree
        uppers = [[] for _ in range(self.block_count())]
        lowers = [[] for _ in range(self.block_count())]
        for pos, label in enumerate(self._ids):
            if pos < k:
                uppers[label].append(pos + 1)
            else:
                lowers[label].append(-(pos - k + 1))
        return tuple(tuple(u + l) for u, l in zip(uppers, lowers))

    def __eq__(self, other):
        if not isinstance(other, Bipartition):
            return NotImplemented
        return self._degree == other._degree and self._ids == other._ids

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Bipartition") -> bool:
        return (self._degree, self._ids) < (other._degree, other._ids)

    def __mul__(self, other: "Bipartition") -> "Bipartition":
        return product(self, other)

    def __repr__(self):
        from .text_format import to_text

        return f"Bipartition({self._degree}, {to_text(self)})"


def _coerce_vertex(v: VertexLike) -> int:
    if isinstance(v, Vertex):
        return v.signed
    if isinstance(v, str):
        text = v.strip()
        lower = text.endswith("'")
        digits = text[:-1] if lower else text
        if not digits.isdecimal() or int(digits) == 0:
            raise IndexOutOfRange(f"Invalid vertex {v!r}")
        return -int(digits) if lower else int(digits)
    if isinstance(v, bool) or not isinstance(v, int) or v == 0:
        raise IndexOutOfRange(f"Invalid vertex {v!r}")
    return v


def make_bipartition(k: int, blocks: Iterable[Iterable[VertexLike]]) -> Bipartition:
    """Build the bipartition of degree *k* whose blocks are *blocks*.

    Vertices are given as signed ints, :class:`Vertex` values or strings such
    as ``"4'"``.
    """
    if k < 0:
        raise RangeError(f"Degree must be non-negative, got {k}")
    labels: list = [None] * (2 * k)
    for block_id, block in enumerate(blocks):
        block = list(block)
        if not block:
            raise EmptyBlock(f"Block {block_id} is empty")
        for raw in block:
            v = _coerce_vertex(raw)
            if abs(v) > k:
                raise IndexOutOfRange(f"Vertex {Vertex.from_signed(v)} is outside degree {k}")
            pos = v - 1 if v > 0 else k - v - 1
            if labels[pos] is not None:
                raise DuplicateVertex(f"Vertex {Vertex.from_signed(v)} appears more than once")
            labels[pos] = block_id
    missing = [
        str(Vertex(Side.UPPER, p + 1) if p < k else Vertex(Side.LOWER, p - k + 1))
        for p, label in enumerate(labels)
        if label is None
    ]
    if missing:
        raise MissingVertex(f"Vertices not covered: {', '.join(missing)}")
    return Bipartition(k, labels)


def identity(k: int) -> Bipartition:
    return Bipartition(k, tuple(range(k)) * 2)


def product(a: Bipartition, b: Bipartition) -> Bipartition:
    """Compose *a* above *b*.

    The 3k nodes are the upper row of *a* (0..k-1), the shared middle row
    (k..2k-1) and the lower row of *b* (2k..3k-1). Components that only touch
    the middle row are dropped.
    """
    if a.degree != b.degree:
        raise DegreeMismatch(f"Cannot multiply degree {a.degree} by degree {b.degree}")
    k = a.degree
    components: DisjointSet[int] = DisjointSet(range(3 * k))
    for shift, element in ((0, a), (k, b)):
        first_node = {}
        for pos, label in enumerate(element.ids):
            node = pos + shift
            anchor = first_node.setdefault(label, node)
            if anchor != node:
                components.union(anchor, node)
    outer = [*range(k), *range(2 * k, 3 * k)]
    return Bipartition(k, [components.find(node) for node in outer])


def star(a: Bipartition) -> Bipartition:
    """Vertical flip: swaps j and j' for every j."""
    k = a.degree
    return Bipartition(k, a.ids[k:] + a.ids[:k])


def hsum(a: Bipartition, b: Bipartition) -> Bipartition:
    """Horizontal sum; *b* is placed to the right of *a*."""
    k1, k2 = a.degree, b.degree
    offset = 2 * k1 + 1
    shifted = [label + offset for label in b.ids]
    labels = [*a.ids[:k1], *shifted[:k2], *a.ids[k1:], *shifted[k2:]]
    return Bipartition(k1 + k2, labels)


def rank(a: Bipartition) -> int:
    k = a.degree
    return len(set(a.ids[:k]) & set(a.ids[k:]))


def block_type(block: Iterable[int]) -> BlockType:
    upper = lower = 0
    for v in block:
        if v > 0:
            upper += 1
        else:
            lower += 1
    return BlockType(upper, lower)


def block_types(a: Bipartition) -> Counter:
    return Counter(block_type(b) for b in a.blocks())


def is_transversal(block: Iterable[int]) -> bool:
    kind = block_type(block)
    return kind.upper > 0 and kind.lower > 0


def is_transversal_line(block: Iterable[int]) -> bool:
    return block_type(block) == BlockType(1, 1)


def is_uniform(block: Iterable[int]) -> bool:
    kind = block_type(block)
    return kind.upper == kind.lower


def is_m_apsis(block: Iterable[int], m: int) -> bool:
    """True for a block of m consecutive points, all upper or all lower."""
    vertices = list(block)
    if len(vertices) != m or m < 1:
        return False
    if not (all(v > 0 for v in vertices) or all(v < 0 for v in vertices)):
        return False
    indices = sorted(abs(v) for v in vertices)
    return indices[-1] - indices[0] == m - 1


def transversal_blocks(a: Bipartition) -> list[tuple[int, ...]]:
    return [b for b in a.blocks() if is_transversal(b)]


def non_transversal_blocks(a: Bipartition) -> list[tuple[int, ...]]:
    return [b for b in a.blocks() if not is_transversal(b)]


def is_planar(a: Bipartition) -> bool:
    """Non-crossing test on the boundary cycle 1..k, k'..1'."""
    k = a.degree
    cycle = [*a.ids[:k], *reversed(a.ids[k:])]
    last = {label: pos for pos, label in enumerate(cycle)}
    opened = set()
    stack = []
    for pos, label in enumerate(cycle):
        if label in opened:
            if stack[-1] != label:
                return False
        else:
            opened.add(label)
            stack.append(label)
        if last[label] == pos:
            stack.pop()
    return True


def is_modular(a: Bipartition, m: int) -> bool:
    if m < 1:
        raise RangeError(f"Modulus must be positive, got {m}")
    k = a.degree
    balance = Counter(a.ids[:k])
    balance.subtract(a.ids[k:])
    return all(diff % m == 0 for diff in balance.values())


def is_idempotent(a: Bipartition) -> bool:
    return product(a, a) == a


def _pattern(k: int, side: Sequence[int], other: Sequence[int]) -> Pattern:
    reaching = set(other)
    parts: dict[int, list[int]] = {}
    for pos, label in enumerate(side):
        parts.setdefault(label, []).append(pos + 1)
    non_transversals = frozenset(frozenset(p) for label, p in parts.items() if label not in reaching)
    transversals = frozenset(frozenset(p) for label, p in parts.items() if label in reaching)
    return Pattern(k, non_transversals, transversals)


def upper_pattern(a: Bipartition) -> Pattern:
    k = a.degree
    return _pattern(k, a.ids[:k], a.ids[k:])


def lower_pattern(a: Bipartition) -> Pattern:
    k = a.degree
    return _pattern(k, a.ids[k:], a.ids[:k])


def random_bipartition(k: int, rng: random.Random) -> Bipartition:
    """Draw a bipartition from a random restricted growth string."""
    labels = []
    top = -1
    for _ in range(2 * k):
        label = rng.randint(0, top + 1)
        top = max(top, label)
        labels.append(label)
    rng.shuffle(labels)
    return Bipartition(k, labels)
