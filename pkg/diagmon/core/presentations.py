"""Relation sets for the diagram monoids, soundness checks and bounded congruence enumeration.

Every relation set is instantiated for a concrete degree: each pair is a pair
of :class:`GenWord` values whose products must agree. ``congruence_size``
counts the classes of the congruence the pairs generate by enumerating a word
graph in the manner of coset enumeration: nodes are classes of words, edges
append a letter, and tracing both sides of every relation from every node
merges the nodes they reach.
"""

from collections.abc import Callable, Iterable, Iterator, Sequence
from typing import NamedTuple

from ..utils.tool_utils import logger
from .bipartition import Bipartition, RangeError, identity, product
from .enumeration import ExplosionGuard
from .families import UnsupportedFamily
from .generators import GeneratorName
from .settings import Settings
from .words import GenWord, IllegalLetter, a, b, e, evaluate, f, format_word, h, letter_value, s, t

Pair = tuple[GenWord, GenWord]


class RelationSet(NamedTuple):
    name: str
    degree: int
    generators: list[GeneratorName]
    pairs: list[Pair]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def as_text(self, alias: bool = False) -> list[tuple[str, str]]:
        return [(format_word(u, alias), format_word(v, alias)) for u, v in self.pairs]


class _Builder:
    """Collects pairs for one degree; letters are given as generator names."""

    def __init__(self, k: int):
        self.k = k
        self.pairs: list[Pair] = []

    def rel(self, lhs: Sequence[GeneratorName], rhs: Sequence[GeneratorName]):
        self.pairs.append((GenWord(self.k, lhs), GenWord(self.k, rhs)))

    def commute(self, x: GeneratorName, y: GeneratorName):
        self.rel([x, y], [y, x])


_BUILDERS: dict[str, Callable[..., tuple[list[GeneratorName], list[Pair]]]] = {}


def _relation_set(name: str):
    def register(fn):
        _BUILDERS[name] = fn
        return fn

    return register


def relation_set_names() -> list[str]:
    return list(_BUILDERS)


def _far(n: int, gap: int = 2) -> Iterator[tuple[int, int]]:
    """Index pairs (i, j) in 1..n with j - i >= gap."""
    return ((i, j) for i in range(1, n + 1) for j in range(i + gap, n + 1))


def _far_ordered(n: int) -> Iterator[tuple[int, int]]:
    """Ordered index pairs (i, j) in 1..n with |j - i| >= 2."""
    return ((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if abs(j - i) >= 2)


def _coxeter(rb: _Builder):
    n = rb.k - 1
    for i in range(1, n + 1):
        rb.rel([s(i), s(i)], [])
    for i in range(1, n):
        rb.rel([s(i + 1), s(i), s(i + 1)], [s(i), s(i + 1), s(i)])
    for i, j in _far(n):
        rb.commute(s(j), s(i))


def _idempotent_commuting(rb: _Builder, letter: Callable[[int], GeneratorName], n: int, gap: int):
    for i in range(1, n + 1):
        rb.rel([letter(i), letter(i)], [letter(i)])
    for i, j in _far(n, gap):
        rb.commute(letter(j), letter(i))


def _temperley_lieb(rb: _Builder):
    n = rb.k - 1
    for i in range(1, n + 1):
        rb.rel([h(i), h(i)], [h(i)])
    for i in range(1, n):
        rb.rel([h(i), h(i + 1), h(i)], [h(i)])
    for i in range(1, n):
        rb.rel([h(i + 1), h(i), h(i + 1)], [h(i + 1)])
    for i, j in _far(n):
        rb.commute(h(j), h(i))


# ---------------------------------------------------------------------------
# Relation sets
# ---------------------------------------------------------------------------


@_relation_set("symmetric")
def _symmetric(k: int, m: int | None = None):
    rb = _Builder(k)
    _coxeter(rb)
    return [s(i) for i in range(1, k)], rb.pairs


@_relation_set("jones")
def _jones(k: int, m: int | None = None):
    rb = _Builder(k)
    _temperley_lieb(rb)
    return [h(i) for i in range(1, k)], rb.pairs


def _brauer_common(rb: _Builder):
    _coxeter(rb)
    n = rb.k - 1
    for i in range(1, n + 1):
        rb.rel([h(i), h(i)], [h(i)])


@_relation_set("brauer1")
def _brauer1(k: int, m: int | None = None):
    rb = _Builder(k)
    _brauer_common(rb)
    n = k - 1
    for i in range(1, n + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= n:
                rb.rel([h(i), h(j), h(i)], [h(i)])
    for i, j in _far(n):
        rb.commute(h(j), h(i))
    for i in range(1, n + 1):
        rb.rel([s(i), h(i)], [h(i)])
        rb.rel([h(i), s(i)], [h(i)])
    for i in range(1, n + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= n:
                rb.rel([h(i), h(j), s(i)], [h(i), s(j)])
                rb.rel([s(i), h(j), h(i)], [s(j), h(i)])
    for i, j in _far_ordered(n):
        rb.commute(h(j), s(i))
    return [s(i) for i in range(1, k)] + [h(i) for i in range(1, k)], rb.pairs


@_relation_set("brauer2")
def _brauer2(k: int, m: int | None = None):
    rb = _Builder(k)
    _brauer_common(rb)
    n = k - 1
    for i in range(1, n):
        rb.rel([h(i), h(i + 1), h(i)], [h(i)])
        rb.rel([h(i + 1), h(i), h(i + 1)], [h(i + 1)])
    for i, j in _far(n):
        rb.commute(h(j), h(i))
    if n >= 1:
        rb.rel([s(1), h(1)], [h(1)])
        rb.rel([h(1), s(1)], [h(1)])
    for i in range(1, n):
        rb.rel([h(i), h(i + 1), s(i)], [h(i), s(i + 1)])
        rb.rel([s(i), h(i + 1), h(i)], [s(i + 1), h(i)])
    for i, j in _far(n):
        rb.commute(h(j), s(i))
    return [s(i) for i in range(1, k)] + [h(i) for i in range(1, k)], rb.pairs


@_relation_set("brauer3")
def _brauer3(k: int, m: int | None = None):
    rb = _Builder(k)
    _brauer_common(rb)
    n = k - 1
    for i, j in _far(n):
        rb.commute(h(j), h(i))
    if n >= 1:
        rb.rel([s(1), h(1)], [h(1)])
        rb.rel([h(1), s(1)], [h(1)])
    for i in range(1, n):
        rb.rel([s(i), s(i + 1), h(i), s(i + 1), s(i)], [h(i + 1)])
    if n >= 2:
        rb.rel([h(1), s(2), h(1)], [h(1)])
    for i, j in _far(n):
        rb.commute(h(j), s(i))
    return [s(i) for i in range(1, k)] + [h(i) for i in range(1, k)], rb.pairs


def _mod_transapsis_part(rb: _Builder):
    """Transposition and transapsis relations shared by both mod-m presentations."""
    n = rb.k - 1
    _coxeter(rb)
    _idempotent_commuting(rb, t, n, 1)
    for i in range(1, n + 1):
        rb.rel([t(i), s(i)], [t(i)])
        rb.rel([s(i), t(i)], [t(i)])
    for i in range(1, n):
        rb.rel([s(i), s(i + 1), t(i), s(i + 1), s(i)], [t(i + 1)])
    for i, j in _far_ordered(n):
        rb.commute(t(j), s(i))


@_relation_set("mod_m")
def _mod_m(k: int, m: int | None = None):
    m = 2 if m is None else m
    if m < 2:
        raise RangeError(f"The mod-m relations hold for m >= 2, got m={m}")
    if k < m:
        raise RangeError(f"The mod-{m} relations need k >= {m}, got k={k}")
    rb = _Builder(k)
    n = k - 1
    top = k - m + 1
    _mod_transapsis_part(rb)

    def ap(i):
        return a(m, i)

    _idempotent_commuting(rb, ap, top, m)
    for i in range(1, top + 1):
        for j in range(i, i + m - 1):
            rb.rel([ap(i), s(j)], [ap(i)])
            rb.rel([s(j), ap(i)], [ap(i)])
        if i + m - 1 <= n:
            rb.rel([ap(i), s(i + m - 1), ap(i)], [ap(i)])
        if i >= 2:
            rb.rel([ap(i), s(i - 1), ap(i)], [ap(i)])
    for i in range(1, top):
        shift = [s(j) for j in range(i, i + m)]
        rb.rel(shift + [ap(i)] + shift[::-1], [ap(i + 1)])
    def outside(i):
        return [j for j in range(1, n + 1) if j <= i - 2 or j >= i + m]

    for i in range(1, top + 1):
        for j in outside(i):
            rb.commute(ap(i), s(j))
    for i in range(1, top + 1):
        rb.rel([ap(i), t(i)], [ap(i)])
        rb.rel([t(i), ap(i)], [ap(i)])
    for i in range(1, top):
        joined = [t(j) for j in range(i, i + m)]
        rb.rel([t(i), ap(i + 1), t(i)], joined)
        rb.rel([t(i + m - 1), ap(i), t(i + m - 1)], joined)
    for i in range(1, top + 1):
        for j in outside(i):
            rb.commute(ap(i), t(j))
    gens = [s(i) for i in range(1, k)] + [t(i) for i in range(1, k)] + [ap(i) for i in range(1, top + 1)]
    return gens, rb.pairs


@_relation_set("mod_m2")
def _mod_m2(k: int, m: int | None = None):
    if m not in (None, 2):
        raise RangeError(f"The second mod-m presentation is stated with diapses, m=2, got m={m}")
    rb = _Builder(k)
    n = k - 1
    _mod_transapsis_part(rb)
    _temperley_lieb(rb)
    for i in range(1, n + 1):
        rb.rel([h(i), s(i)], [h(i)])
        rb.rel([s(i), h(i)], [h(i)])
    for i in range(1, n):
        rb.rel([h(i), h(i + 1), s(i)], [h(i), s(i + 1)])
        rb.rel([s(i), h(i + 1), h(i)], [s(i + 1), h(i)])
    for i, j in _far_ordered(n):
        rb.commute(h(i), s(j))
    for i in range(1, n + 1):
        rb.rel([h(i), t(i)], [h(i)])
        rb.rel([t(i), h(i)], [h(i)])
    for i in range(1, n):
        rb.rel([t(i), h(i + 1), t(i)], [t(i), t(i + 1)])
        rb.rel([t(i + 1), h(i), t(i + 1)], [t(i), t(i + 1)])
    for i, j in _far_ordered(n):
        rb.commute(h(i), t(j))
    gens = [s(i) for i in range(1, k)] + [t(i) for i in range(1, k)] + [h(i) for i in range(1, k)]
    return gens, rb.pairs


@_relation_set("pubb")
def _pubb(k: int, m: int | None = None):
    rb = _Builder(k)
    _idempotent_commuting(rb, t, k - 1, 1)
    return [t(i) for i in range(1, k)], rb.pairs


@_relation_set("ppttn")
def _ppttn(k: int, m: int | None = None):
    rb = _Builder(k)
    n = k - 1
    _idempotent_commuting(rb, e, k, 1)
    _idempotent_commuting(rb, t, n, 1)
    for i in range(1, k + 1):
        for j in (i - 1, i):
            if 1 <= j <= n:
                rb.rel([e(i), t(j), e(i)], [e(i)])
                rb.rel([t(j), e(i), t(j)], [t(j)])
    for i in range(1, k + 1):
        for j in range(1, n + 1):
            if j not in (i - 1, i):
                rb.commute(e(i), t(j))
    return [e(i) for i in range(1, k + 1)] + [t(i) for i in range(1, k)], rb.pairs


@_relation_set("ubb1")
def _ubb1(k: int, m: int | None = None):
    rb = _Builder(k)
    _coxeter(rb)
    if k >= 2:
        rb.rel([t(1), t(1)], [t(1)])
        rb.rel([s(1), t(1)], [t(1)])
        rb.rel([t(1), s(1)], [t(1)])
    if k >= 3:
        rb.rel([s(2), t(1), s(2), t(1)], [t(1), s(2), t(1), s(2)])
    if k >= 4:
        swap = [s(2), s(1), s(3), s(2)]
        rb.rel(swap + [t(1)] + swap + [t(1)], [t(1)] + swap + [t(1)] + swap)
    for i in range(3, k):
        rb.commute(s(i), t(1))
    return [s(i) for i in range(1, k)] + ([t(1)] if k >= 2 else []), rb.pairs


@_relation_set("ubb2")
def _ubb2(k: int, m: int | None = None):
    rb = _Builder(k)
    n = k - 1
    _coxeter(rb)
    _idempotent_commuting(rb, t, n, 1)
    for i in range(1, n + 1):
        rb.rel([s(i), t(i)], [t(i)])
        rb.rel([t(i), s(i)], [t(i)])
    for i in range(1, n):
        rb.rel([s(i + 1), t(i), s(i + 1)], [s(i), t(i + 1), s(i)])
    for i, j in _far_ordered(n):
        rb.commute(s(j), t(i))
    return [s(i) for i in range(1, k)] + [t(i) for i in range(1, k)], rb.pairs


@_relation_set("syminv")
def _syminv(k: int, m: int | None = None):
    rb = _Builder(k)
    n = k - 1
    _coxeter(rb)
    _idempotent_commuting(rb, e, k, 1)
    for i in range(1, n + 1):
        rb.rel([s(i), e(i)], [e(i + 1), s(i)])
        rb.rel([e(i), s(i)], [s(i), e(i + 1)])
    for i in range(1, k + 1):
        for j in range(1, n + 1):
            if j not in (i - 1, i):
                rb.commute(s(j), e(i))
    for i in range(1, n + 1):
        rb.rel([e(i), s(i), e(i)], [e(i), e(i + 1)])
    return [s(i) for i in range(1, k)] + [e(i) for i in range(1, k + 1)], rb.pairs


@_relation_set("planarsyminv")
def _planarsyminv(k: int, m: int | None = None):
    rb = _Builder(k)
    for i in range(1, k):
        for j in range(i, k):
            rb.rel([f(j), f(i)], [f(i), f(j + 1)])
            rb.rel([b(i), b(j)], [b(j + 1), b(i)])
    for i in range(1, k + 1):
        rb.rel([f(k), f(i)], [f(i)])
        rb.rel([b(i), b(k)], [b(i)])
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i < j:
                rb.rel([f(j), b(i)], [b(i), f(j - 1), f(k)])
            elif i == j:
                rb.rel([f(i), b(i)], [f(k)])
            else:
                rb.rel([f(j), b(i)], [b(i - 1), f(j), f(k)])
    if k >= 1:
        rb.rel([b(k)], [f(k)])
    return [f(i) for i in range(1, k + 1)] + [b(i) for i in range(1, k + 1)], rb.pairs


@_relation_set("pmod2")
def _pmod2(k: int, m: int | None = None):
    rb = _Builder(k)
    n = k - 1
    _temperley_lieb(rb)
    _idempotent_commuting(rb, t, n, 1)
    for i in range(1, n + 1):
        rb.rel([h(i), t(i)], [h(i)])
    for i in range(1, n + 1):
        rb.rel([t(i), h(i)], [h(i)])
    for i in range(1, n):
        rb.rel([t(i), h(i + 1), t(i)], [t(i), t(i + 1)])
    for i, j in _far(n):
        rb.commute(h(j), t(i))
    for i, j in _far(n):
        rb.commute(t(j), h(i))
    gens = [g for i in range(1, k) for g in (h(i), t(i))]
    return gens, rb.pairs


@_relation_set("pmod2_implied")
def _pmod2_implied(k: int, m: int | None = None):
    rb = _Builder(k)
    for i in range(1, k - 1):
        j = i + 1
        rb.rel([h(i), t(j), h(i)], [h(i)])
        rb.rel([h(j), h(i), t(j)], [h(j), t(i)])
        rb.rel([t(j), h(i), h(j)], [t(i), h(j)])
        rb.rel([t(j), h(i), t(j)], [t(i), t(j)])
        rb.rel([t(i), h(j), h(i)], [t(j), h(i)])
        rb.rel([h(i), h(j), t(i)], [h(i), t(j)])
        rb.rel([h(j), t(i), h(j)], [h(j)])
    gens = [g for i in range(1, k) for g in (h(i), t(i))]
    return gens, rb.pairs


def relations(name: str, k: int, m: int | None = None) -> RelationSet:
    """Instantiate the relation set *name* at degree *k*; *m* is only read by ``mod_m``."""
    if name not in _BUILDERS:
        raise UnsupportedFamily(f"Unknown relation set '{name}' (known: {', '.join(_BUILDERS)})")
    if k < 1:
        raise RangeError(f"Relation sets need k >= 1, got {k}")
    generators, pairs = _BUILDERS[name](k, m)
    logger.debug(f"Relation set {name} at degree {k}: {len(pairs)} pairs over {len(generators)} letters")
    return RelationSet(name, k, generators, pairs)


# ---------------------------------------------------------------------------
# Soundness
# ---------------------------------------------------------------------------


class SoundnessFailure(NamedTuple):
    position: int
    lhs: str
    rhs: str


class SoundnessReport(NamedTuple):
    name: str
    degree: int
    checked: int
    failures: list[SoundnessFailure]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_soundness(rs: RelationSet) -> SoundnessReport:
    """Evaluate both sides of every pair and report those that differ."""
    failures = [
        SoundnessFailure(pos, format_word(u), format_word(v))
        for pos, (u, v) in enumerate(rs.pairs)
        if evaluate(u) != evaluate(v)
    ]
    for failure in failures:
        logger.warning(f"Relation {failure.position} of {rs.name}: {failure.lhs} = {failure.rhs} does not hold")
    return SoundnessReport(rs.name, rs.degree, len(rs.pairs), failures)


# ---------------------------------------------------------------------------
# Congruence enumeration
# ---------------------------------------------------------------------------

UNDEFINED = -1


class WordGraph:
    """Word graph of a monoid presentation, enumerated breadth first.

    Node 0 is the empty word. A node of depth d stands for a word of length d;
    nodes are only defined up to depth ``max_depth``. Merged nodes are tracked
    with ``labels`` (labels[c] <= c), the smaller node surviving.
    """

    def __init__(
        self,
        k: int,
        alphabet: Sequence[GeneratorName],
        pairs: Iterable[Pair],
        max_depth: int,
        max_nodes: int,
    ):
        self.k = k
        self.alphabet = list(alphabet)
        letter_pos = {g: pos for pos, g in enumerate(self.alphabet)}
        self.relations: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        for u, v in pairs:
            try:
                self.relations.append((tuple(letter_pos[g] for g in u), tuple(letter_pos[g] for g in v)))
            except KeyError as err:
                raise IllegalLetter(f"Relation letter {err.args[0]} is not among the generators") from None
        self.letter_values = [letter_value(g, k) for g in self.alphabet]
        self.max_depth = max_depth
        self.max_nodes = max_nodes
        self.labels: list[int] = []
        self.edges: list[list[int]] = []
        self.depth: list[int] = []
        self.values: list[Bipartition] = []
        self._add_node(0, identity(k))

    def _add_node(self, depth: int, value: Bipartition) -> int:
        node = len(self.labels)
        if node >= self.max_nodes:
            raise ExplosionGuard(f"Word graph exceeded {self.max_nodes} nodes")
        self.labels.append(node)
        self.edges.append([UNDEFINED] * len(self.alphabet))
        self.depth.append(depth)
        self.values.append(value)
        return node

    def find(self, node: int) -> int:
        root = node
        while self.labels[root] != root:
            root = self.labels[root]
        while self.labels[node] != root:
            self.labels[node], node = root, self.labels[node]
        return root

    def step(self, node: int, letter: int, define: bool = True) -> int | None:
        node = self.find(node)
        target = self.edges[node][letter]
        if target == UNDEFINED:
            if not define or self.depth[node] >= self.max_depth:
                return None
            target = self._add_node(self.depth[node] + 1, product(self.values[node], self.letter_values[letter]))
            self.edges[node][letter] = target
        return self.find(target)

    def follow(self, node: int, letters: Sequence[int], define: bool = True) -> int | None:
        for letter in letters:
            node = self.step(node, letter, define)
            if node is None:
                return None
        return node

    def unify(self, first: int, second: int):
        pending = [(first, second)]
        while pending:
            c1, c2 = pending.pop()
            c1, c2 = self.find(c1), self.find(c2)
            if c1 == c2:
                continue
            c1, c2 = min(c1, c2), max(c1, c2)
            self.labels[c2] = c1
            self.depth[c1] = min(self.depth[c1], self.depth[c2])
            for letter in range(len(self.alphabet)):
                n1, n2 = self.edges[c1][letter], self.edges[c2][letter]
                if n1 == UNDEFINED:
                    self.edges[c1][letter] = n2
                elif n2 != UNDEFINED:
                    pending.append((n1, n2))

    def enumerate(self) -> "WordGraph":
        to_visit = 0
        while to_visit < len(self.labels):
            node = to_visit
            if self.find(node) == node:
                for letter in range(len(self.alphabet)):
                    self.step(node, letter)
                for u, v in self.relations:
                    if self.find(node) != node:
                        break
                    end_u = self.follow(node, u)
                    end_v = self.follow(node, v)
                    if end_u is not None and end_v is not None:
                        self.unify(end_u, end_v)
            to_visit += 1
        return self

    def live_nodes(self) -> list[int]:
        return [node for node in range(len(self.labels)) if self.find(node) == node]

    def is_complete(self) -> bool:
        """Every live node has every edge and satisfies every relation."""
        for node in self.live_nodes():
            if UNDEFINED in self.edges[node]:
                return False
            for u, v in self.relations:
                if self.follow(node, u, define=False) != self.follow(node, v, define=False):
                    return False
        return True

    def is_injective(self) -> bool:
        live = self.live_nodes()
        return len({self.values[node] for node in live}) == len(live)


class CongruenceResult(NamedTuple):
    class_count: int
    stabilized: bool
    complete: bool
    injective: bool


def _enumerate(gens, pairs, k, cap, max_nodes) -> WordGraph:
    graph = WordGraph(k, gens, pairs, max_depth=cap, max_nodes=max_nodes).enumerate()
    logger.debug(f"Word graph at depth cap {cap}: {len(graph.live_nodes())} classes, {len(graph.labels)} nodes defined")
    return graph


def congruence_size(
    gens: Sequence[GeneratorName],
    rs: RelationSet | Iterable[Pair],
    k: int,
    length_cap: int,
    max_words: int | None = None,
) -> CongruenceResult:
    """Count the classes of the congruence generated by *rs* on words over *gens*.

    The count is stabilized when the enumeration closes, a depth cap two larger
    gives the same count, and distinct classes evaluate to distinct bipartitions.
    """
    if length_cap < 1:
        raise RangeError(f"Length cap must be at least 1, got {length_cap}")
    max_nodes = max_words or Settings().limits.congruence_max_words
    pairs = list(rs.pairs if isinstance(rs, RelationSet) else rs)

    graph = _enumerate(gens, pairs, k, length_cap, max_nodes)
    count = len(graph.live_nodes())
    complete = graph.is_complete()
    injective = graph.is_injective()
    wider = _enumerate(gens, pairs, k, length_cap + 2, max_nodes)
    stabilized = complete and injective and len(wider.live_nodes()) == count

    name = rs.name if isinstance(rs, RelationSet) else "relations"
    if stabilized:
        logger.info(f"Congruence of {name} at degree {k}: {count} classes")
    else:
        logger.warning(
            f"Congruence of {name} at degree {k} did not stabilize within length {length_cap}: "
            f"{count} classes, complete={complete}, injective={injective}"
        )
    return CongruenceResult(count, stabilized, complete, injective)


def presented_size(rs: RelationSet, length_cap: int, max_words: int | None = None) -> CongruenceResult:
    return congruence_size(rs.generators, rs, rs.degree, length_cap, max_words)
