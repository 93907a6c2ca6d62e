"""Tests for diagmon.core.families."""

from functools import cache

import pytest

from diagmon.core.bipartition import DegreeMismatch, identity
from diagmon.core.enumeration import ElementSet, all_bipartitions, close, filter_bipartitions
from diagmon.core.families import (
    Family,
    FamilyKind,
    UnsupportedFamily,
    generating_set,
    known_cardinality,
    make_family,
    member,
    parse_family,
)
from diagmon.core.generators import diapsis, transapsis, transposition
from diagmon.core.text_format import from_text

from .conftest import enumerate_family

# (kind, k, m, size) for families small enough to enumerate in a test
SIZES = [
    (FamilyKind.PARTITION, 0, None, 1),
    (FamilyKind.PARTITION, 1, None, 2),
    (FamilyKind.PARTITION, 2, None, 15),
    (FamilyKind.PARTITION, 3, None, 203),
    (FamilyKind.PLANAR, 2, None, 14),
    (FamilyKind.PLANAR, 3, None, 132),
    (FamilyKind.SYMMETRIC, 3, None, 6),
    (FamilyKind.JONES, 4, None, 14),
    (FamilyKind.BRAUER, 3, None, 15),
    (FamilyKind.SYMINV, 3, None, 34),
    (FamilyKind.PLANAR_SYMINV, 1, None, 2),
    (FamilyKind.PLANAR_SYMINV, 3, None, 20),
    (FamilyKind.UBB, 3, None, 16),
    (FamilyKind.PLANAR_UBB, 4, None, 8),
    (FamilyKind.MOD, 2, 2, 4),
    (FamilyKind.MOD, 3, 2, 31),
    (FamilyKind.MOD, 3, 3, 17),
    (FamilyKind.PMOD, 3, 2, 12),
    (FamilyKind.PMOD, 4, 2, 55),
    (FamilyKind.PMOD, 4, 3, 16),
    (FamilyKind.APSIS, 3, 1, 8),
    (FamilyKind.APSIS, 4, 2, 14),
    (FamilyKind.APSIS, 4, 3, 5),
    (FamilyKind.APSIS, 6, 3, 74),
    (FamilyKind.CROSSED_APSIS, 3, 1, 34),
    (FamilyKind.CROSSED_APSIS, 3, 2, 15),
    (FamilyKind.CROSSED_APSIS, 3, 3, 7),
    (FamilyKind.CROSSED_APSIS, 4, 3, 40),
]


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class TestParseFamily:
    def test_plain_and_modular(self):
        assert parse_family("jones", 4) == Family(FamilyKind.JONES, 4)
        assert parse_family("PMod:2", 5) == Family(FamilyKind.PMOD, 5, 2)

    def test_text(self):
        fam = parse_family("pmod:2", 4)
        assert str(fam) == "pmod:2"
        assert fam.label() == "pmod:2, k=4"
        assert str(parse_family("sym", 3)) == "sym"

    @pytest.mark.parametrize("text", ["foo", "pmod", "pmod:x", "jones:2", "mod:0"])
    def test_rejects(self, text):
        with pytest.raises(UnsupportedFamily):
            parse_family(text, 4)

    def test_apsis_needs_room(self):
        with pytest.raises(UnsupportedFamily):
            make_family(FamilyKind.APSIS, 2, 3)
        with pytest.raises(UnsupportedFamily):
            make_family(FamilyKind.PLANAR, -1)


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


class TestMember:
    def test_simple_cases(self):
        assert member(Family(FamilyKind.SYMMETRIC, 3), transposition(3, 1))
        assert not member(Family(FamilyKind.JONES, 3), transposition(3, 1))
        assert member(Family(FamilyKind.JONES, 3), diapsis(3, 2))
        assert member(Family(FamilyKind.PLANAR_UBB, 3), transapsis(3, 1))
        assert not member(Family(FamilyKind.BRAUER, 3), transapsis(3, 1))
        assert member(Family(FamilyKind.PMOD, 3, 2), transapsis(3, 1))

    def test_crossed_but_not_planar_apsis(self):
        a = from_text("[[1,8,9],[2,3,4,5,6,7],[1',2',3'],[4',5',6'],[7',8',9']]")
        assert member(Family(FamilyKind.CROSSED_APSIS, 9, 3), a)
        assert not member(Family(FamilyKind.APSIS, 9, 3), a)
        assert member(Family(FamilyKind.PMOD, 9, 3), a)

    def test_identity_everywhere(self):
        for kind, k, m, _ in SIZES:
            assert member(make_family(kind, k, m), identity(k))

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            member(Family(FamilyKind.PARTITION, 3), identity(2))


# ---------------------------------------------------------------------------
# Generators and sizes
# ---------------------------------------------------------------------------


class TestSizes:
    @pytest.mark.parametrize("kind, k, m, size", SIZES)
    def test_known_cardinality(self, kind, k, m, size):
        assert known_cardinality(make_family(kind, k, m)) == size

    @pytest.mark.parametrize("kind, k, m, size", SIZES)
    def test_closure_size(self, kind, k, m, size):
        fam = make_family(kind, k, m)
        assert len(close(generating_set(fam), k=k)) == size

    @pytest.mark.parametrize("kind, k, m, size", [case for case in SIZES if case[1] <= 4])
    def test_characterization_matches_closure(self, kind, k, m, size):
        fam = make_family(kind, k, m)
        generated = close(generating_set(fam), k=k)
        characterized = filter_bipartitions(k, lambda a: member(fam, a))
        assert generated == characterized

    def test_generators_are_members(self):
        for kind, k, m, _ in SIZES:
            fam = make_family(kind, k, m)
            assert all(member(fam, g) for g in generating_set(fam))

    def test_larger_closed_forms(self):
        assert known_cardinality(make_family(FamilyKind.PMOD, 8, 2)) == 43263
        assert known_cardinality(make_family(FamilyKind.MOD, 5, 2)) == 6556
        assert known_cardinality(make_family(FamilyKind.CROSSED_APSIS, 6, 3)) == 7220
        assert known_cardinality(make_family(FamilyKind.JONES, 8)) == 1430


# ---------------------------------------------------------------------------
# Characterizations at the largest enumerable degrees
# ---------------------------------------------------------------------------

# every bipartition of degree 5 is listed once and filtered per family
DEGREE_FIVE = [
    (FamilyKind.PLANAR, None),
    (FamilyKind.PLANAR_SYMINV, None),
    (FamilyKind.PLANAR_UBB, None),
    (FamilyKind.JONES, None),
    (FamilyKind.PMOD, 2),
    (FamilyKind.PMOD, 3),
    (FamilyKind.APSIS, 2),
    (FamilyKind.APSIS, 3),
    (FamilyKind.CROSSED_APSIS, 2),
    (FamilyKind.CROSSED_APSIS, 3),
]

# (kind, k, m, parent kind, parent m): too large to list every bipartition,
# so the family is filtered out of the closure of a family containing it
WITHIN_PARENT = [
    *[(FamilyKind.APSIS, k, 3, FamilyKind.PMOD, 3) for k in (6, 7, 8)],
    *[(FamilyKind.JONES, k, None, FamilyKind.PMOD, 2) for k in (6, 7, 8)],
    (FamilyKind.PMOD, 6, 2, FamilyKind.PLANAR, None),
    (FamilyKind.PMOD, 6, 3, FamilyKind.PLANAR, None),
]


@cache
def closed_family(kind, k, m):
    return enumerate_family(kind, k, m)


@cache
def degree_five():
    return tuple(all_bipartitions(5))


def assert_characterized(fam, candidates):
    generated = close(generating_set(fam), k=fam.degree)
    assert all(member(fam, a) for a in generated)
    assert generated == ElementSet(fam.degree, (a for a in candidates if member(fam, a)))
    assert len(generated) == known_cardinality(fam)


@pytest.mark.slow
class TestCharacterizationAtScale:
    @pytest.mark.parametrize("kind, m", DEGREE_FIVE)
    def test_degree_five(self, kind, m):
        assert_characterized(make_family(kind, 5, m), degree_five())

    @pytest.mark.parametrize("kind, k, m, parent, parent_m", WITHIN_PARENT)
    def test_within_parent_closure(self, kind, k, m, parent, parent_m):
        assert_characterized(make_family(kind, k, m), closed_family(parent, k, parent_m))

    def test_apsis_sizes(self):
        sizes = [len(closed_family(FamilyKind.APSIS, k, 3)) for k in range(3, 7)]
        assert sizes == [2, 5, 19, 74]
