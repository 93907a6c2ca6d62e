"""Closure of generator sets, exhaustive listing of small degrees and Cayley graphs."""

import random
from collections.abc import Callable, Iterable, Iterator, Sequence

import networkx as nx

from ..utils.tool_utils import logger
from .bipartition import Bipartition, DegreeMismatch, DiagmonError, identity, product, star
from .settings import Settings


class ExplosionGuard(DiagmonError):
    """An enumeration grew past the configured element cap."""


class LimitExceeded(DiagmonError):
    """A request exceeds a configured degree limit."""


class ElementSet:
    """Bipartitions of one degree, sorted by canonical ids, with a position index."""

    def __init__(self, degree: int, elements: Iterable[Bipartition]):
        self.degree = degree
        self.elements: tuple[Bipartition, ...] = tuple(sorted(set(elements)))
        for element in self.elements:
            if element.degree != degree:
                raise DegreeMismatch(f"Element of degree {element.degree} in a set of degree {degree}")
        self.index: dict[Bipartition, int] = {a: pos for pos, a in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Bipartition]:
        return iter(self.elements)

    def __getitem__(self, pos: int) -> Bipartition:
        return self.elements[pos]

    def __contains__(self, a: Bipartition) -> bool:
        return a in self.index

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __repr__(self):
        return f"ElementSet(degree={self.degree}, size={len(self)})"

    def position(self, a: Bipartition) -> int:
        return self.index[a]

    def is_star_closed(self) -> bool:
        return all(star(a) in self.index for a in self.elements)

    def closed_under_product(self, sample: int | None = None, rng: random.Random | None = None) -> bool:
        """Check xy stays in the set, for all pairs or for *sample* random pairs."""
        if sample is None:
            pairs = ((x, y) for x in self.elements for y in self.elements)
        else:
            rng = rng or random.Random(0)
            pairs = ((rng.choice(self.elements), rng.choice(self.elements)) for _ in range(sample))
        return all(product(x, y) in self.index for x, y in pairs)


def _degree_of(gens: Sequence[Bipartition], k: int | None) -> int:
    degrees = {g.degree for g in gens}
    if k is not None:
        degrees.add(k)
    if len(degrees) > 1:
        raise DegreeMismatch(f"Generators of different degrees: {sorted(degrees)}")
    if not degrees:
        raise DegreeMismatch("Cannot infer the degree of an empty generator list")
    return degrees.pop()


def close(gens: Sequence[Bipartition], k: int | None = None, max_elements: int | None = None) -> ElementSet:
    """Monoid generated by *gens*: breadth-first right multiplication from the identity."""
    degree = _degree_of(gens, k)
    cap = max_elements or Settings().limits.max_elements
    gens = list(dict.fromkeys(gens))

    seen = {identity(degree)}
    frontier = [identity(degree)]
    level = 0
    while frontier:
        discovered = set()
        for x in frontier:
            for g in gens:
                y = product(x, g)
                if y not in seen and y not in discovered:
                    discovered.add(y)
        seen |= discovered
        if len(seen) > cap:
            raise ExplosionGuard(f"Closure exceeded {cap} elements at word length {level + 1}")
        frontier = sorted(discovered)
        level += 1
        logger.debug(f"closure degree {degree}: length {level}, {len(frontier)} new, {len(seen)} total")

    logger.info(f"Closed {len(gens)} generators of degree {degree}: {len(seen)} elements")
    return ElementSet(degree, seen)


class CayleyGraph:
    """Right and left multiplication edges of an element set by its generators.

    ``right_edges[x][g]`` is the position of ``elements[x] * gens[g]`` and
    ``left_edges[x][g]`` the position of ``gens[g] * elements[x]``.
    """

    def __init__(self, element_set: ElementSet, generators: Sequence[Bipartition], with_left: bool = True):
        self.element_set = element_set
        self.generators = list(generators)
        index = element_set.index
        self.right_edges = [[index[product(x, g)] for g in self.generators] for x in element_set]
        self.left_edges = (
            [[index[product(g, x)] for g in self.generators] for x in element_set] if with_left else None
        )

    def __len__(self):
        return len(self.element_set)

    def identity_node(self) -> int:
        return self.element_set.position(identity(self.element_set.degree))

    def to_networkx(self, side: str = "right") -> nx.MultiDiGraph:
        """Directed multigraph; each edge carries the generator position as ``gen``."""
        if side not in ("right", "left", "both"):
            raise ValueError(f"Unknown side '{side}'")
        if side != "right" and self.left_edges is None:
            raise ValueError("Left edges were not computed")
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(len(self.element_set)))
        if side in ("right", "both"):
            for x, targets in enumerate(self.right_edges):
                graph.add_edges_from((x, y, {"gen": g, "side": "right"}) for g, y in enumerate(targets))
        if side in ("left", "both"):
            for x, targets in enumerate(self.left_edges):
                graph.add_edges_from((x, y, {"gen": g, "side": "left"}) for g, y in enumerate(targets))
        return graph


def cayley(
    gens: Sequence[Bipartition],
    k: int | None = None,
    max_elements: int | None = None,
    with_left: bool = True,
) -> CayleyGraph:
    element_set = close(gens, k=k, max_elements=max_elements)
    degree = element_set.degree
    generators = list(dict.fromkeys(gens)) or [identity(degree)]
    return CayleyGraph(element_set, generators, with_left=with_left)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Every set partition of n points as a restricted growth string, in lexicographic order."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n
    top = [0] * n  # top[i] = max(rgs[:i + 1])
    while True:
        yield tuple(rgs)
        i = n - 1
        while i > 0 and rgs[i] > top[i - 1]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        top[i] = max(top[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            top[j] = top[i]


def all_bipartitions(k: int, max_bell_degree: int | None = None) -> Iterator[Bipartition]:
    limit = Settings().limits.max_bell_degree if max_bell_degree is None else max_bell_degree
    if k > limit:
        raise LimitExceeded(f"Listing all bipartitions of degree {k} exceeds the limit of degree {limit}")
    for rgs in restricted_growth_strings(2 * k):
        yield Bipartition(k, rgs)


def filter_bipartitions(k: int, predicate: Callable[[Bipartition], bool], max_bell_degree: int | None = None) -> ElementSet:
    return ElementSet(k, (a for a in all_bipartitions(k, max_bell_degree) if predicate(a)))
