"""Named diagram monoids: membership by characterization, generating sets and known sizes."""

from enum import Enum
from math import comb, factorial
from typing import NamedTuple

from . import counting
from .bipartition import (
    Bipartition,
    BlockType,
    DegreeMismatch,
    DiagmonError,
    block_type,
    identity,
    is_m_apsis,
    is_modular,
    is_planar,
)
from .generators import apsis, pf_backward, pf_forward, transapsis, transposition


class UnsupportedFamily(DiagmonError):
    """Unknown family name, or an operation the family has no formula for."""


class FamilyKind(Enum):
    PARTITION = "partition"
    PLANAR = "planar"
    SYMMETRIC = "sym"
    JONES = "jones"
    BRAUER = "brauer"
    SYMINV = "syminv"
    PLANAR_SYMINV = "planarsyminv"
    UBB = "ubb"
    PLANAR_UBB = "pubb"
    MOD = "mod"
    PMOD = "pmod"
    APSIS = "apsis"
    CROSSED_APSIS = "xapsis"

    @property
    def has_modulus(self) -> bool:
        return self in (FamilyKind.MOD, FamilyKind.PMOD, FamilyKind.APSIS, FamilyKind.CROSSED_APSIS)


class Family(NamedTuple):
    kind: FamilyKind
    degree: int
    modulus: int | None = None

    def __str__(self):
        if self.kind.has_modulus:
            return f"{self.kind.value}:{self.modulus}"
        return self.kind.value

    def label(self) -> str:
        return f"{self}, k={self.degree}"


def make_family(kind: FamilyKind, k: int, m: int | None = None) -> Family:
    if k < 0:
        raise UnsupportedFamily(f"Degree must be non-negative, got {k}")
    if kind.has_modulus:
        if m is None or m < 1:
            raise UnsupportedFamily(f"Family '{kind.value}' needs a positive modulus")
        if kind in (FamilyKind.APSIS, FamilyKind.CROSSED_APSIS) and k < m:
            raise UnsupportedFamily(f"Family '{kind.value}:{m}' needs k >= m, got k={k}")
        return Family(kind, k, m)
    if m is not None:
        raise UnsupportedFamily(f"Family '{kind.value}' takes no modulus")
    return Family(kind, k)


def parse_family(text: str, k: int) -> Family:
    """Parse spellings like ``jones`` or ``pmod:2``."""
    name, _, modulus = text.strip().lower().partition(":")
    try:
        kind = FamilyKind(name)
    except ValueError:
        known = ", ".join(kind.value for kind in FamilyKind)
        raise UnsupportedFamily(f"Unknown family '{text}' (known: {known})") from None
    if kind.has_modulus and not modulus:
        raise UnsupportedFamily(f"Family '{name}' needs a modulus, e.g. '{name}:2'")
    try:
        m = int(modulus) if modulus else None
    except ValueError:
        raise UnsupportedFamily(f"Invalid modulus in '{text}'") from None
    return make_family(kind, k, m)


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


def _types(a: Bipartition) -> list[BlockType]:
    return [block_type(b) for b in a.blocks()]


def _is_permutation(a: Bipartition) -> bool:
    return all(t == BlockType(1, 1) for t in _types(a))


def _is_brauer(a: Bipartition) -> bool:
    return all(t.upper + t.lower == 2 for t in _types(a))


def _is_syminv(a: Bipartition) -> bool:
    return all(t in (BlockType(1, 1), BlockType(1, 0), BlockType(0, 1)) for t in _types(a))


def _is_ubb(a: Bipartition) -> bool:
    return all(t.upper == t.lower for t in _types(a))


def _has_apses(a: Bipartition, m: int) -> bool:
    blocks = a.blocks()
    upper = any(b[0] > 0 and is_m_apsis(b, m) for b in blocks)
    lower = any(b[0] < 0 and is_m_apsis(b, m) for b in blocks)
    return upper and lower


def _is_apsis(a: Bipartition, m: int) -> bool:
    if m == 1:
        # Products of monapsis generators: each index keeps its line or loses it on both rows
        upper, lower = set(), set()
        for b in a.blocks():
            if len(b) == 1:
                (upper if b[0] > 0 else lower).add(abs(b[0]))
            elif len(b) != 2 or b[0] != -b[1]:
                return False
        return upper == lower
    if m == 2:
        return _is_brauer(a) and is_planar(a)
    if not (is_planar(a) and is_modular(a, m)):
        return False
    return a == identity(a.degree) or _has_apses(a, m)


def _is_crossed_apsis(a: Bipartition, m: int) -> bool:
    if m == 1:
        return _is_syminv(a)
    if m == 2:
        return _is_brauer(a)
    if not is_modular(a, m):
        return False
    types = set(_types(a))
    return _is_permutation(a) or (BlockType(m, 0) in types and BlockType(0, m) in types)


def member(fam: Family, a: Bipartition) -> bool:
    if fam.degree != a.degree:
        raise DegreeMismatch(f"{fam.label()} cannot contain an element of degree {a.degree}")
    m = fam.modulus
    match fam.kind:
        case FamilyKind.PARTITION:
            return True
        case FamilyKind.PLANAR:
            return is_planar(a)
        case FamilyKind.SYMMETRIC:
            return _is_permutation(a)
        case FamilyKind.JONES:
            return _is_brauer(a) and is_planar(a)
        case FamilyKind.BRAUER:
            return _is_brauer(a)
        case FamilyKind.SYMINV:
            return _is_syminv(a)
        case FamilyKind.PLANAR_SYMINV:
            return _is_syminv(a) and is_planar(a)
        case FamilyKind.UBB:
            return _is_ubb(a)
        case FamilyKind.PLANAR_UBB:
            return _is_ubb(a) and is_planar(a)
        case FamilyKind.MOD:
            return is_modular(a, m)
        case FamilyKind.PMOD:
            return is_planar(a) and is_modular(a, m)
        case FamilyKind.APSIS:
            return _is_apsis(a, m)
        case FamilyKind.CROSSED_APSIS:
            return _is_crossed_apsis(a, m)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _s(k):
    return [transposition(k, i) for i in range(1, k)]


def _t(k):
    return [transapsis(k, i) for i in range(1, k)]


def _a(k, m):
    return [apsis(k, m, i) for i in range(1, k - m + 2)]


def generating_set(fam: Family) -> list[Bipartition]:
    """Generators in index order, one family of letters after another."""
    k, m = fam.degree, fam.modulus
    match fam.kind:
        case FamilyKind.PARTITION:
            return _s(k) + _t(k)[:1] + _a(k, 1)[:1]
        case FamilyKind.PLANAR:
            return _a(k, 1) + _t(k)
        case FamilyKind.SYMMETRIC:
            return _s(k)
        case FamilyKind.JONES:
            return _a(k, 2)
        case FamilyKind.BRAUER:
            return _s(k) + _a(k, 2)
        case FamilyKind.SYMINV:
            return _s(k) + _a(k, 1)[:1]
        case FamilyKind.PLANAR_SYMINV:
            if k == 1:
                return [pf_forward(1, 1)]
            return [pf_forward(k, i) for i in range(1, k)] + [pf_backward(k, i) for i in range(1, k)]
        case FamilyKind.UBB:
            return _s(k) + _t(k)[:1]
        case FamilyKind.PLANAR_UBB:
            return _t(k)
        case FamilyKind.MOD:
            return _s(k) + _t(k) + _a(k, m)
        case FamilyKind.PMOD:
            return _t(k) + _a(k, m) + [identity(k)]
        case FamilyKind.APSIS:
            return _a(k, m) + [identity(k)]
        case FamilyKind.CROSSED_APSIS:
            return _a(k, m) + _s(k)


def known_cardinality(fam: Family) -> int:
    k, m = fam.degree, fam.modulus
    match fam.kind:
        case FamilyKind.PARTITION:
            return counting.bell(2 * k)
        case FamilyKind.PLANAR:
            return counting.catalan(2 * k)
        case FamilyKind.SYMMETRIC:
            return factorial(k)
        case FamilyKind.JONES:
            return counting.catalan(k)
        case FamilyKind.BRAUER:
            return counting.double_factorial(2 * k - 1)
        case FamilyKind.SYMINV:
            return sum(comb(k, i) ** 2 * factorial(i) for i in range(k + 1))
        case FamilyKind.PLANAR_SYMINV:
            return comb(2 * k, k)
        case FamilyKind.UBB:
            return counting.xt(k + 1, k, k)
        case FamilyKind.PLANAR_UBB:
            return 2 ** max(0, k - 1)
        case FamilyKind.MOD:
            return counting.mod_card(m, k)
        case FamilyKind.PMOD:
            return counting.pm_card(m, k)
        case FamilyKind.APSIS:
            if m == 1:
                return 2**k
            if m == 2:
                return counting.catalan(k)
            return counting.apsis_card(m, k)
        case FamilyKind.CROSSED_APSIS:
            if m == 1:
                return known_cardinality(Family(FamilyKind.SYMINV, k))
            if m == 2:
                return counting.double_factorial(2 * k - 1)
            return counting.xapsis_card(m, k)

