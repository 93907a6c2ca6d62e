"""Generator words: parsing, evaluation, descending runs and normal-form inventories.

Words are read left to right, so ``evaluate(w)`` multiplies the generator
diagrams in the order written. Letters print as ``h2`` (diapsis), ``t1``
(transapsis), ``s3`` (transposition), ``e1`` (monapsis), ``a3_2`` (any other
apsis) and ``f1`` / ``b1`` (planar symmetric inverse generators). For degree
at most 7 the planar mod-2 letters also have one-character aliases:
``a A b B c C d D f F g G`` stand for ``h1 t1 h2 t2 .. h6 t6``.
"""

import re
from collections import Counter, deque
from collections.abc import Iterable, Iterator, Sequence
from enum import Enum
from functools import lru_cache, reduce
from itertools import pairwise, product as cartesian
from typing import NamedTuple

from ..utils.tool_utils import logger
from . import counting
from .bipartition import Bipartition, DegreeMismatch, DiagmonError, RangeError, identity, product
from .enumeration import ExplosionGuard, LimitExceeded
from .generators import GeneratorFamily, GeneratorName
from .settings import Settings

ALIASES = "abcdfg"
EMPTY_WORD = "ε"


class IllegalLetter(DiagmonError):
    """A letter that is unknown or not available at the word's degree."""


class GenOrder(Enum):
    """Which of h_i and t_i sorts first within index i."""

    DIAPSIS_FIRST = "diapsis-first"
    TRANSAPSIS_FIRST = "transapsis-first"


def h(i: int) -> GeneratorName:
    return GeneratorName(GeneratorFamily.APSIS, i, 2)


def t(i: int) -> GeneratorName:
    return GeneratorName(GeneratorFamily.TRANSAPSIS, i)


def s(i: int) -> GeneratorName:
    return GeneratorName(GeneratorFamily.TRANSPOSITION, i)


def e(i: int) -> GeneratorName:
    return GeneratorName(GeneratorFamily.APSIS, i, 1)


def a(m: int, i: int) -> GeneratorName:
    return GeneratorName(GeneratorFamily.APSIS, i, m)


def f(i: int) -> GeneratorName:
    return GeneratorName(GeneratorFamily.PF_FORWARD, i)


def b(i: int) -> GeneratorName:
    return GeneratorName(GeneratorFamily.PF_BACKWARD, i)


def is_diapsis(g: GeneratorName) -> bool:
    return g.family is GeneratorFamily.APSIS and g.width == 2


def is_transapsis(g: GeneratorName) -> bool:
    return g.family is GeneratorFamily.TRANSAPSIS


def _check_letter(g: GeneratorName, k: int):
    if g.family is GeneratorFamily.APSIS and not 1 <= g.width <= k:
        raise IllegalLetter(f"Letter {letter_text(g)} needs degree at least {g.width}, got {k}")
    if g.index not in g.index_range(k):
        raise IllegalLetter(f"Letter {letter_text(g)} is not available at degree {k}")


class GenWord:
    """A word over named generators at a fixed degree; the empty word is the identity."""

    __slots__ = ("degree", "letters")

    def __init__(self, degree: int, letters: Iterable[GeneratorName] = ()):
        self.degree = degree
        self.letters: tuple[GeneratorName, ...] = tuple(letters)
        for g in self.letters:
            _check_letter(g, degree)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[GeneratorName]:
        return iter(self.letters)

    def __getitem__(self, pos):
        return self.letters[pos]

    def __add__(self, other: "GenWord") -> "GenWord":
        if self.degree != other.degree:
            raise DegreeMismatch(f"Cannot concatenate words of degree {self.degree} and {other.degree}")
        return GenWord(self.degree, self.letters + other.letters)

    def __eq__(self, other):
        if not isinstance(other, GenWord):
            return NotImplemented
        return self.degree == other.degree and self.letters == other.letters

    def __hash__(self):
        return hash((self.degree, self.letters))

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"GenWord({self.degree}, '{format_word(self)}')"

    def evaluate(self) -> Bipartition:
        return evaluate(self)


def word(k: int, *letters: GeneratorName) -> GenWord:
    return GenWord(k, letters)


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------


_TOKEN = re.compile(r"([a-z])(\d+)(?:_(\d+))?")


def letter_text(g: GeneratorName, alias: bool = False) -> str:
    if alias:
        if g.index > len(ALIASES) or not (is_diapsis(g) or is_transapsis(g)):
            raise IllegalLetter(f"No alias letter for {g}")
        char = ALIASES[g.index - 1]
        return char.upper() if is_transapsis(g) else char
    if g.family is GeneratorFamily.APSIS:
        if g.width == 1:
            return f"e{g.index}"
        if g.width == 2:
            return f"h{g.index}"
    return str(g)


def _parse_letter(token: str) -> GeneratorName:
    if len(token) == 1 and token.lower() in ALIASES:
        index = ALIASES.index(token.lower()) + 1
        return t(index) if token.isupper() else h(index)
    match = _TOKEN.fullmatch(token)
    if match is None:
        raise IllegalLetter(f"Unknown letter '{token}'")
    name, first, second = match.group(1), int(match.group(2)), match.group(3)
    if name == "a":
        if second is None:
            raise IllegalLetter(f"Apsis letters are written a<width>_<index>, got '{token}'")
        return a(first, int(second))
    if second is not None:
        raise IllegalLetter(f"Unknown letter '{token}'")
    constructors = {"h": h, "t": t, "s": s, "e": e, "f": f, "b": b}
    if name not in constructors:
        raise IllegalLetter(f"Unknown letter '{token}'")
    return constructors[name](first)


def parse_word(text: str, k: int) -> GenWord:
    """Parse whitespace separated letters; an empty string or ``ε`` is the empty word."""
    tokens = text.split()
    if tokens == [EMPTY_WORD]:
        tokens = []
    return GenWord(k, (_parse_letter(token) for token in tokens))


def format_word(w: GenWord, alias: bool = False) -> str:
    if not w.letters:
        return EMPTY_WORD
    return " ".join(letter_text(g, alias) for g in w.letters)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def letter_value(g: GeneratorName, k: int) -> Bipartition:
    _check_letter(g, k)
    return g.evaluate(k)


def evaluate(w: GenWord) -> Bipartition:
    """Left-to-right product of the letters of *w*."""
    k = w.degree
    return reduce(product, (letter_value(g, k) for g in w.letters), identity(k))


# ---------------------------------------------------------------------------
# Runs
# ---------------------------------------------------------------------------


class RunWord(NamedTuple):
    """Letters from G_j, G_{j-1}, .., G_i where G_l = {h_l, t_l}."""

    j: int
    i: int
    letters: tuple[GeneratorName, ...]

    def is_valid(self) -> bool:
        """Membership in Run(j, i): no two consecutive transapses."""
        return not any(is_transapsis(x) and is_transapsis(y) for x, y in pairwise(self.letters))

    def to_word(self, k: int) -> GenWord:
        return GenWord(k, self.letters)


def run_decomposition(w: GenWord | Sequence[GeneratorName]) -> list[RunWord]:
    """Split into maximal stretches whose indices descend by exactly one."""
    letters = tuple(w)
    for g in letters:
        if not (is_diapsis(g) or is_transapsis(g)):
            raise IllegalLetter(f"Runs are formed from h and t letters, got {letter_text(g)}")
    runs: list[RunWord] = []
    start = 0
    for pos in range(1, len(letters) + 1):
        if pos == len(letters) or letters[pos].index != letters[pos - 1].index - 1:
            stretch = letters[start:pos]
            runs.append(RunWord(stretch[0].index, stretch[-1].index, stretch))
            start = pos
    return runs


def _strictly_increasing(runs: Sequence[RunWord]) -> bool:
    return all(x.i < y.i and x.j < y.j for x, y in pairwise(runs))


def end_run(w: GenWord | Sequence[GeneratorName]) -> tuple[int, int] | None:
    """(j, i) of the final run when the runs have strictly increasing ends, otherwise None."""
    runs = run_decomposition(w)
    if not runs or not _strictly_increasing(runs):
        return None
    return runs[-1].j, runs[-1].i


def in_run_form(w: GenWord | Sequence[GeneratorName]) -> bool:
    runs = run_decomposition(w)
    return _strictly_increasing(runs) and all(r.is_valid() for r in runs)


def run_set(j: int, i: int) -> list[RunWord]:
    if not 1 <= i <= j:
        raise RangeError(f"Runs need 1 <= i <= j, got ({j}, {i})")
    choices = [(h(l), t(l)) for l in range(j, i - 1, -1)]
    runs = (RunWord(j, i, letters) for letters in cartesian(*choices))
    return [r for r in runs if r.is_valid()]


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------


def jones_normal_forms(k: int) -> list[GenWord]:
    """Products of runs h_j .. h_i with strictly increasing i's and j's, and the empty word."""
    if k < 1:
        raise RangeError(f"Jones normal forms need k >= 1, got {k}")
    found: list[tuple[GeneratorName, ...]] = [()]

    def extend(prefix: tuple[GeneratorName, ...], last_j: int, last_i: int):
        for j in range(last_j + 1, k):
            for i in range(last_i + 1, j + 1):
                extended = prefix + tuple(h(l) for l in range(j, i - 1, -1))
                found.append(extended)
                extend(extended, j, i)

    extend((), 0, 0)
    return [GenWord(k, letters) for letters in found]


def letter_order(k: int, order: GenOrder) -> list[GeneratorName]:
    letters = []
    for i in range(1, k):
        pair = [h(i), t(i)] if order is GenOrder.DIAPSIS_FIRST else [t(i), h(i)]
        letters += pair
    return letters


def geodesic_lex_words(
    k: int,
    order: GenOrder = GenOrder.DIAPSIS_FIRST,
    max_degree: int | None = None,
    max_elements: int | None = None,
) -> dict[Bipartition, GenWord]:
    """Shortlex-least word for every element of the planar mod-2 monoid of degree k.

    Breadth-first search from the identity, extending words in shortlex order
    by letters in ascending order; the first word reaching an element is its
    least geodesic.
    """
    limits = Settings().limits
    cap = limits.geodesic_cap if max_degree is None else max_degree
    if k > cap:
        raise LimitExceeded(f"Geodesic words of degree {k} exceed the limit of degree {cap}")
    element_cap = max_elements or limits.max_elements

    letters = letter_order(k, order)
    values = [letter_value(g, k) for g in letters]
    start = identity(k)
    words: dict[Bipartition, tuple[GeneratorName, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        prefix = words[x]
        for g, value in zip(letters, values):
            y = product(x, value)
            if y not in words:
                words[y] = prefix + (g,)
                queue.append(y)
        if len(words) > element_cap:
            raise ExplosionGuard(f"Geodesic search exceeded {element_cap} elements")

    logger.info(f"Geodesic words for degree {k} ({order.value}): {len(words)} elements")
    return {element: GenWord(k, letters) for element, letters in words.items()}


def candidate_run_counts(k: int, order: GenOrder = GenOrder.DIAPSIS_FIRST) -> Counter:
    """Geodesic words counted by their final run (j, i); the identity is left out."""
    counts: Counter = Counter()
    for w in geodesic_lex_words(k, order).values():
        if not w.letters:
            continue
        if not in_run_form(w):
            logger.warning(f"Geodesic word '{format_word(w)}' is not a product of runs")
        counts[end_run(w)] += 1
    return counts


class ConjectureRow(NamedTuple):
    j: int
    i: int
    observed: int
    conjectured: int
    agrees: bool


def conjecture_report(k: int, order: GenOrder = GenOrder.DIAPSIS_FIRST) -> list[ConjectureRow]:
    """Compare observed run counts with the conjectured first column, second column and diagonal."""
    counts = candidate_run_counts(k, order)
    rows = []
    for j in range(1, k):
        for i in sorted({1, min(2, j), j}):
            expected = counting.conjectured_run_counts(j, i)
            if expected is None:
                continue
            observed = counts[(j, i)]
            rows.append(ConjectureRow(j, i, observed, expected, observed == expected))
    return rows
