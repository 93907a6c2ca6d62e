"""Generators of the diagram monoids and the building blocks used to factor their elements.

Every constructor builds its blocks directly; the factorization identities
relating them (runs, apmorphisms, omega chains) are checked by the test suite.
"""

from collections.abc import Sequence
from enum import Enum
from typing import NamedTuple

from .bipartition import (
    Bipartition,
    DiagmonError,
    IndexOutOfRange,
    RangeError,
    hsum,
    identity,
    make_bipartition,
)


class OverlapError(DiagmonError):
    """Two apses of an apmorphism overlap or are out of order."""


class CongruenceViolation(DiagmonError):
    """Block sizes do not satisfy the required congruences modulo m."""


class GeneratorFamily(Enum):
    TRANSPOSITION = "s"
    TRANSAPSIS = "t"
    APSIS = "a"
    PF_FORWARD = "f"
    PF_BACKWARD = "b"


class GeneratorName(NamedTuple):
    """A named generator; ``width`` is only used by the apsis family."""

    family: GeneratorFamily
    index: int
    width: int = 0

    def __str__(self):
        if self.family is GeneratorFamily.APSIS:
            return f"a{self.width}_{self.index}"
        return f"{self.family.value}{self.index}"

    def index_range(self, k: int) -> range:
        if self.family is GeneratorFamily.APSIS:
            return range(1, k - self.width + 2)
        if self.family in (GeneratorFamily.PF_FORWARD, GeneratorFamily.PF_BACKWARD):
            return range(1, k + 1)
        return range(1, k)

    def evaluate(self, k: int) -> Bipartition:
        match self.family:
            case GeneratorFamily.TRANSPOSITION:
                return transposition(k, self.index)
            case GeneratorFamily.TRANSAPSIS:
                return transapsis(k, self.index)
            case GeneratorFamily.APSIS:
                return apsis(k, self.width, self.index)
            case GeneratorFamily.PF_FORWARD:
                return pf_forward(k, self.index)
            case GeneratorFamily.PF_BACKWARD:
                return pf_backward(k, self.index)


def _check_index(name: str, i: int, low: int, high: int):
    if not low <= i <= high:
        raise IndexOutOfRange(f"{name} index {i} outside {low}..{high}")


def _verticals(indices) -> list[list[int]]:
    return [[j, -j] for j in indices]


def transposition(k: int, i: int) -> Bipartition:
    _check_index("transposition", i, 1, k - 1)
    others = (j for j in range(1, k + 1) if j not in (i, i + 1))
    return make_bipartition(k, [[i, -(i + 1)], [i + 1, -i], *_verticals(others)])


def transapsis(k: int, i: int) -> Bipartition:
    _check_index("transapsis", i, 1, k - 1)
    others = (j for j in range(1, k + 1) if j not in (i, i + 1))
    return make_bipartition(k, [[i, i + 1, -i, -(i + 1)], *_verticals(others)])


def apsis(k: int, m: int, i: int) -> Bipartition:
    """Upper and lower m-apsis on i..i+m-1, vertical lines elsewhere."""
    if m < 1:
        raise RangeError(f"Apsis width must be positive, got {m}")
    _check_index(f"{m}-apsis", i, 1, k - m + 1)
    span = range(i, i + m)
    others = (j for j in range(1, k + 1) if j not in span)
    return make_bipartition(k, [list(span), [-j for j in span], *_verticals(others)])


def monapsis(k: int, i: int) -> Bipartition:
    return apsis(k, 1, i)


def diapsis(k: int, i: int) -> Bipartition:
    return apsis(k, 2, i)


def pf_forward(k: int, i: int) -> Bipartition:
    """Lines j -> j for j < i and j -> j+1 for j >= i, monapses {k} and {i'}.

    Index k is accepted and gives the monapsis pair at k.
    """
    _check_index("forward", i, 1, k)
    blocks = _verticals(range(1, i))
    blocks += [[j, -(j + 1)] for j in range(i, k)]
    blocks += [[k], [-i]] if i < k else [[k], [-k]]
    return make_bipartition(k, blocks)


def pf_backward(k: int, i: int) -> Bipartition:
    """Vertical flip of :func:`pf_forward`."""
    _check_index("backward", i, 1, k)
    blocks = _verticals(range(1, i))
    blocks += [[j + 1, -j] for j in range(i, k)]
    blocks += [[i], [-k]] if i < k else [[k], [-k]]
    return make_bipartition(k, blocks)


def _check_apses(k: int, m: int, starts: Sequence[int], side: str):
    for pos, start in enumerate(starts):
        _check_index(f"{side} {m}-apsis", start, 1, k - m + 1)
        if pos and start - starts[pos - 1] < m:
            raise OverlapError(f"{side} apses at {starts[pos - 1]} and {start} overlap for m={m}")


def apmorph(k: int, m: int, uppers: Sequence[int], lowers: Sequence[int]) -> Bipartition:
    """The planar element whose non-transversals are exactly the listed m-apses.

    Remaining upper points are matched in order with remaining lower points.
    """
    if m < 1:
        raise RangeError(f"Apsis width must be positive, got {m}")
    if len(uppers) != len(lowers):
        raise RangeError(f"Apmorphism needs as many upper as lower apses ({len(uppers)} != {len(lowers)})")
    _check_apses(k, m, uppers, "upper")
    _check_apses(k, m, lowers, "lower")

    blocks = [list(range(u, u + m)) for u in uppers]
    blocks += [[-j for j in range(l, l + m)] for l in lowers]
    covered_up = {j for u in uppers for j in range(u, u + m)}
    covered_low = {j for l in lowers for j in range(l, l + m)}
    free_up = [j for j in range(1, k + 1) if j not in covered_up]
    free_low = [j for j in range(1, k + 1) if j not in covered_low]
    blocks += [[u, -l] for u, l in zip(free_up, free_low)]
    return make_bipartition(k, blocks)


def run(k: int, m: int, i: int, j: int) -> Bipartition:
    """The product of m-apsis generators with index stepping from i to j."""
    return apmorph(k, m, [i], [j])


def run_factors(k: int, m: int, i: int, j: int) -> list[Bipartition]:
    step = 1 if j >= i else -1
    return [apsis(k, m, x) for x in range(i, j + step, step)]


def apmorph_factors(k: int, m: int, uppers: Sequence[int], lowers: Sequence[int]) -> list[Bipartition]:
    """Runs whose product is ``apmorph(k, m, uppers, lowers)``.

    r(u1,1) r(u2,m+1) .. r(ut,m(t-1)+1) r(m(t-1)+1,lt) .. r(1,l1)
    """
    t = len(uppers)
    anchors = [m * s + 1 for s in range(t)]
    left = [run(k, m, u, a) for u, a in zip(uppers, anchors)]
    right = [run(k, m, a, l) for a, l in reversed(list(zip(anchors, lowers)))]
    return left + right


def _check_pair(m: int, mu: int, gamma: int):
    if mu < 0 or gamma < 0 or mu + gamma == 0:
        raise RangeError(f"Invalid block type ({mu}, {gamma})")
    if (mu - gamma) % m:
        raise CongruenceViolation(f"{mu} and {gamma} are not congruent modulo {m}")


def _upper_apses(start: int, count: int, m: int) -> list[list[int]]:
    return [list(range(start + m * j + 1, start + m * (j + 1) + 1)) for j in range(count)]


def _lower_apses(start: int, count: int, m: int) -> list[list[int]]:
    return [[-v for v in block] for block in _upper_apses(start, count, m)]


def omega_bar(k: int, m: int, mu: int, gamma: int) -> Bipartition:
    """Block {1..mu, 1'..gamma'}, apses up to max(mu, gamma), vertical lines after."""
    _check_pair(m, mu, gamma)
    top = max(mu, gamma)
    if top > k:
        raise RangeError(f"Block type ({mu}, {gamma}) does not fit in degree {k}")
    blocks = [[*range(1, mu + 1), *range(-1, -gamma - 1, -1)]]
    blocks += _upper_apses(mu, (top - mu) // m, m)
    blocks += _lower_apses(gamma, (top - gamma) // m, m)
    blocks += _verticals(range(top + 1, k + 1))
    return make_bipartition(k, blocks)


def omega(k: int, m: int, mu: int, gamma: int, *, apsis_bound: bool = False) -> Bipartition:
    """Block {1..mu, 1'..gamma'} with m-apses filling both rows up to k.

    With *apsis_bound* the block type is bounded by k - m, the largest a product of
    m-apsis generators can hold.
    """
    _check_pair(m, mu, gamma)
    bound = k - m if apsis_bound else k
    if max(mu, gamma) > bound:
        raise RangeError(f"Block type ({mu}, {gamma}) exceeds {bound} in degree {k}")
    if (k - mu) % m:
        raise CongruenceViolation(f"{mu} is not congruent to the degree {k} modulo {m}")
    blocks = [[*range(1, mu + 1), *range(-1, -gamma - 1, -1)]]
    blocks += _upper_apses(mu, (k - mu) // m, m)
    blocks += _lower_apses(gamma, (k - gamma) // m, m)
    return make_bipartition(k, blocks)


def omega_closing_apmorph(k: int, m: int, mu: int, gamma: int) -> Bipartition:
    """The apmorphism with ``omega = omega_bar * omega_closing_apmorph``."""
    starts = list(range(gamma + 1, k - m + 2, m))
    return apmorph(k, m, starts, starts)


def _check_chain(k: int, m: int, pairs: Sequence[tuple[int, int]]):
    for mu, gamma in pairs:
        if mu < 1 or gamma < 1:
            raise RangeError(f"Chain block types must be positive, got ({mu}, {gamma})")
        _check_pair(m, mu, gamma)
    total_up = sum(mu for mu, _ in pairs)
    total_low = sum(gamma for _, gamma in pairs)
    if total_up > k or total_low > k:
        raise RangeError(f"Block types {list(pairs)} do not fit in degree {k}")
    if (k - total_up) % m:
        raise CongruenceViolation(f"Upper sizes sum to {total_up}, not congruent to {k} modulo {m}")


def _trailing_transversals(k: int, pairs: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Transversals for *pairs* packed against the right edge, left to right."""
    blocks = []
    up_end, low_end = k, k
    for mu, gamma in reversed(pairs):
        uppers = range(up_end - mu + 1, up_end + 1)
        lowers = range(low_end - gamma + 1, low_end + 1)
        blocks.append([*uppers, *(-j for j in lowers)])
        up_end -= mu
        low_end -= gamma
    return blocks[::-1]


def omega_chain(k: int, m: int, pairs: Sequence[tuple[int, int]]) -> Bipartition:
    """First transversal at the left edge, then apses, then the rest packed right."""
    if not pairs:
        raise RangeError("omega_chain needs at least one block type")
    _check_chain(k, m, pairs)
    mu1, gamma1 = pairs[0]
    total_up = sum(mu for mu, _ in pairs)
    total_low = sum(gamma for _, gamma in pairs)
    blocks = [[*range(1, mu1 + 1), *range(-1, -gamma1 - 1, -1)]]
    blocks += _upper_apses(mu1, (k - total_up) // m, m)
    blocks += _lower_apses(gamma1, (k - total_low) // m, m)
    blocks += _trailing_transversals(k, pairs[1:])
    return make_bipartition(k, blocks)


def upsilon_chain(k: int, m: int, pairs: Sequence[tuple[int, int]]) -> Bipartition:
    """All apses at the left edge, every transversal packed right."""
    _check_chain(k, m, pairs)
    total_up = sum(mu for mu, _ in pairs)
    total_low = sum(gamma for _, gamma in pairs)
    blocks = _upper_apses(0, (k - total_up) // m, m)
    blocks += _lower_apses(0, (k - total_low) // m, m)
    blocks += _trailing_transversals(k, pairs)
    return make_bipartition(k, blocks)


def omega_chain_factors(k: int, m: int, pairs: Sequence[tuple[int, int]]) -> tuple[Bipartition, Bipartition]:
    """Two factors whose product is ``omega_chain(k, m, pairs)``."""
    _check_chain(k, m, pairs)
    mu1, gamma1 = pairs[0]
    rest = list(pairs[1:])
    rest_up = sum(mu for mu, _ in rest)
    rest_low = sum(gamma for _, gamma in rest)
    if mu1 >= gamma1:
        head = hsum(omega(k - rest_up, m, mu1, gamma1), identity(rest_up))
        tail = hsum(identity(gamma1), upsilon_chain(k - gamma1, m, rest))
        return head, tail
    head = hsum(identity(mu1), upsilon_chain(k - mu1, m, rest))
    tail = hsum(omega(k - rest_low, m, mu1, gamma1), identity(rest_low))
    return head, tail
