"""Exact counting: feasible transversal and non-transversal patterns, monoid
cardinalities, Green's class counts and the integer sequences they rest on.

All values are Python ints. Recurrences are memoized per argument tuple with
:func:`functools.cache`; composition vectors are passed as tuples and
normalized by dropping trailing zeros so equal vectors share one memo entry.

OEIS references for orientation: pm_card(2, k) is A001764, Catalan's
triangle is A009766, ordered partitions with bounded parts include A000045
(m = 2), R-classes of the partition monoid are A000110 convolutions.
"""

from collections.abc import Iterator
from functools import cache
from math import comb, factorial

from ..utils.tool_utils import logger
from .bipartition import DiagmonError

CompositionVec = tuple[int, ...]


class UnsupportedRange(DiagmonError):
    """Arguments outside the domain a recurrence is stated for."""


def _check(m: int, *sizes: int):
    if m < 1:
        raise UnsupportedRange(f"Modulus must be positive, got {m}")
    for size in sizes:
        if size < 0:
            raise UnsupportedRange(f"Sizes must be non-negative, got {size}")


def _norm(t) -> CompositionVec:
    t = tuple(t)
    end = len(t)
    while end and t[end - 1] == 0:
        end -= 1
    return t[:end]


def _weight(m: int, t: CompositionVec) -> int:
    return sum((i + 1) * m * ti for i, ti in enumerate(t))


def _dec(t: CompositionVec, i: int) -> CompositionVec:
    return _norm(t[:i] + (t[i] - 1,) + t[i + 1 :])


def composition_vectors(parts: int) -> Iterator[CompositionVec]:
    """Vectors (t_1, .., t_parts) with sum(i * t_i) == parts, lexicographically ascending."""

    def extend(prefix: list[int], i: int, remaining: int):
        if i > parts:
            if remaining == 0:
                yield tuple(prefix)
            return
        for ti in range(remaining // i + 1):
            prefix.append(ti)
            yield from extend(prefix, i + 1, remaining - i * ti)
            prefix.pop()

    if parts == 0:
        yield ()
        return
    yield from extend([], 1, parts)


# ---------------------------------------------------------------------------
# Elementary sequences
# ---------------------------------------------------------------------------


def binomial(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0


def double_factorial(n: int) -> int:
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


@cache
def bell(n: int) -> int:
    if n < 0:
        raise UnsupportedRange(f"Bell numbers need n >= 0, got {n}")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def catalan(n: int) -> int:
    if n < 0:
        raise UnsupportedRange(f"Catalan numbers need n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = F_2 = 1."""
    if n < 0:
        raise UnsupportedRange(f"Fibonacci numbers need n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@cache
def p_parts_bounded(m: int, k: int) -> int:
    """Integer partitions of k with every part at most m."""
    if k < 0:
        return 0
    if m <= 0:
        return 1 if k == 0 else 0
    return p_parts_bounded(m - 1, k) + p_parts_bounded(m, k - m)


def p_parts(k: int) -> int:
    return p_parts_bounded(k, k)


@cache
def o_parts_bounded(m: int, k: int) -> int:
    """Ordered integer partitions (compositions) of k with every part at most m."""
    _check(m, k)
    if m >= k:
        return 2 ** max(0, k - 1)
    return sum(o_parts_bounded(m, k - i) for i in range(1, m + 1))


def o_parts(k: int) -> int:
    return 2 ** max(0, k - 1)


# ---------------------------------------------------------------------------
# Transversal counts
# ---------------------------------------------------------------------------


@cache
def _pt(m: int, k1: int, k2: int) -> int:
    if k1 == 0 and k2 == 0:
        return 1
    if k1 == 0 or k2 == 0 or (k1 - k2) % m:
        return 0
    return sum(
        _pt(m, k1 - a, k2 - b)
        for a in range(1, k1 + 1)
        for b in range(1, k2 + 1)
        if (a - b) % m == 0
    )


def pt(m: int, k1: int, k2: int) -> int:
    """Planar ways to join k1 upper to k2 lower points with transversals of type (u, l), u = l mod m."""
    _check(m, k1, k2)
    return _pt(m, k1, k2)


@cache
def _xt(m: int, k1: int, k2: int) -> int:
    if k1 == 0 and k2 == 0:
        return 1
    if k1 == 0 or k2 == 0 or (k1 - k2) % m:
        return 0
    return sum(
        comb(k1 - 1, a - 1) * comb(k2, b) * _xt(m, k1 - a, k2 - b)
        for a in range(1, k1 + 1)
        for b in range(1, k2 + 1)
        if (a - b) % m == 0
    )


def xt(m: int, k1: int, k2: int) -> int:
    """Non-planar analogue of :func:`pt`."""
    _check(m, k1, k2)
    return _xt(m, k1, k2)


# ---------------------------------------------------------------------------
# Non-transversal counts
# ---------------------------------------------------------------------------


@cache
def _pn(m: int, k: int, t: CompositionVec) -> int:
    if not t:
        return 1
    if k < 0 or _weight(m, t) > k:
        return 0
    return _pn(m, k - 1, t) + sum(_pn(m, k - 1, _dec(t, i)) for i, ti in enumerate(t) if ti)


def pn_vec(m: int, k: int, t) -> int:
    """Feasible planar upper patterns with t_i non-transversals of size i*m."""
    _check(m, k, *t)
    return _pn(m, k, _norm(t))


def _aggregate(vec_count, m: int, k: int, total: int) -> int:
    if total % m or total > k:
        return 0
    return sum(vec_count(m, k, t) for t in composition_vectors(total // m))


def pn(m: int, k: int, total: int) -> int:
    _check(m, k, total)
    return _aggregate(_pn, m, k, total)


@cache
def _pnb(m: int, k: int, t: CompositionVec) -> int:
    if not t:
        return 1
    if t[0] == 0 or k < 0 or _weight(m, t) > k:
        return 0
    count = _pnb(m, k - 1, t)
    count += sum(_pnb_nonempty(m, k - 1, _dec(t, i)) for i, ti in enumerate(t) if ti)
    count += _pn_without_apsis(m, k - m, _dec(t, 0))
    return count


def _pnb_nonempty(m: int, k: int, t: CompositionVec) -> int:
    return _pnb(m, k, t) if t else 0


def _pn_without_apsis(m: int, k: int, t: CompositionVec) -> int:
    """Patterns in which none of the size-m non-transversals is an m-apsis."""
    if k < 0:
        return 0
    if not t:
        return 1
    return _pn(m, k, t) - _pnb(m, k, t)


def pnb_vec(m: int, k: int, t) -> int:
    """Like :func:`pn_vec` but the pattern must contain an m-apsis."""
    _check(m, k, *t)
    return _pnb(m, k, _norm(t))


def pnb(m: int, k: int, total: int) -> int:
    _check(m, k, total)
    return _aggregate(_pnb, m, k, total)


@cache
def _xn(m: int, k: int, t: CompositionVec) -> int:
    if not t:
        return 1
    if k < 0 or _weight(m, t) > k:
        return 0
    count = _xn(m, k - 1, t)
    for i, ti in enumerate(t):
        if ti:
            size = (i + 1) * m
            count += comb(k - 1, size - 1) * _xn(m, k - size, _dec(t, i))
    return count


def xn_vec(m: int, k: int, t) -> int:
    """Non-planar analogue of :func:`pn_vec`."""
    _check(m, k, *t)
    return _xn(m, k, _norm(t))


def xn(m: int, k: int, total: int) -> int:
    _check(m, k, total)
    return _aggregate(_xn, m, k, total)


@cache
def _xnb(m: int, k: int, t: CompositionVec) -> int:
    if not t:
        return 1
    if t[0] == 0 or k < 0 or _weight(m, t) > k:
        return 0
    count = _xnb(m, k - 1, t)
    count += comb(k - 1, m - 1) * _xn(m, k - m, _dec(t, 0))
    for i, ti in enumerate(t[1:], start=1):
        if ti:
            size = (i + 1) * m
            count += comb(k - 1, size - 1) * _xnb(m, k - size, _dec(t, i))
    return count


def xnb_vec(m: int, k: int, t) -> int:
    """Non-planar patterns containing at least one non-transversal of exactly m points."""
    _check(m, k, *t)
    return _xnb(m, k, _norm(t))


def xnb(m: int, k: int, total: int) -> int:
    _check(m, k, total)
    return _aggregate(_xnb, m, k, total)


# ---------------------------------------------------------------------------
# Cardinalities
# ---------------------------------------------------------------------------


def _side_totals(m: int, k: int, start: int = 0) -> range:
    return range(start, k + 1, m)


def pm_card(m: int, k: int) -> int:
    """Size of the planar mod-m monoid of degree k."""
    _check(m, k)
    return sum(
        pn(m, k, u) * pn(m, k, l) * _pt(m, k - u, k - l)
        for u in _side_totals(m, k)
        for l in _side_totals(m, k)
    )


def apsis_card(m: int, k: int) -> int:
    """Size of the monoid generated by the m-apsis generators and the identity."""
    _check(m, k)
    return 1 + sum(
        pnb(m, k, u) * pnb(m, k, l) * _pt(m, k - u, k - l)
        for u in _side_totals(m, k, m)
        for l in _side_totals(m, k, m)
    )


def mod_card(m: int, k: int) -> int:
    """Size of the mod-m monoid of degree k."""
    _check(m, k)
    return sum(
        xn(m, k, u) * xn(m, k, l) * _xt(m, k - u, k - l)
        for u in _side_totals(m, k)
        for l in _side_totals(m, k)
    )


def xapsis_card(m: int, k: int) -> int:
    """Size of the crossed m-apsis monoid: k! permutations plus the elements with apses."""
    _check(m, k)
    return factorial(k) + sum(
        xnb(m, k, u) * xnb(m, k, l) * _xt(m, k - u, k - l)
        for u in _side_totals(m, k, m)
        for l in _side_totals(m, k, m)
    )


# ---------------------------------------------------------------------------
# Green's class counts
# ---------------------------------------------------------------------------


@cache
def d_classes_pmod(m: int, k: int) -> int:
    _check(m, k)
    if m > k:
        return 2 ** max(0, k - 1)
    return d_classes_pmod(m, k - m) + o_parts_bounded(m, k)


@cache
def d_classes_mod(m: int, k: int) -> int:
    _check(m, k)
    if m > k:
        return p_parts_bounded(m, k)
    return d_classes_mod(m, k - m) + p_parts_bounded(m, k)


def r_classes_pmod(m: int, k: int) -> int:
    _check(m, k)
    if m > k:
        return 2 ** max(0, k - 1)
    return sum(pn(m, k, u) * 2 ** max(0, k - u - 1) for u in _side_totals(m, k))


def r_classes_mod(m: int, k: int) -> int:
    _check(m, k)
    if m > k:
        return bell(k)
    return sum(xn(m, k, u) * bell(k - u) for u in _side_totals(m, k))


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------


@cache
def catalan_triangle_R(j: int, i: int) -> int:
    """Jones normal forms ending with the run h_j .. h_i."""
    if not 1 <= i <= j:
        raise UnsupportedRange(f"Catalan's triangle needs 1 <= i <= j, got ({j}, {i})")
    if i == 1:
        return 1
    return 1 + sum(
        catalan_triangle_R(jj, ii) for jj in range(1, j) for ii in range(1, min(i - 1, jj) + 1)
    )


def conjectured_run_counts(j: int, i: int) -> int | None:
    """Closed forms observed for planar mod-2 words ending in a run from j down to i.

    Known for the first column, the second column and the diagonal; None elsewhere.
    """
    if i == 1:
        return fibonacci(j + 2)
    if i == j:
        return 2 * pm_card(2, j)
    if i == 2:
        return (2 * j - 1) * fibonacci(j + 1) - 2 ** (j - 2) + 1
    return None


def cache_report():
    for fn in (_pt, _xt, _pn, _pnb, _xn, _xnb):
        logger.debug(f"{fn.__name__}: {fn.cache_info()}")
