"""Tests for diagmon.core.bipartition."""

import random

import pytest

from diagmon.core.bipartition import (
    BlockType,
    DegreeMismatch,
    DuplicateVertex,
    EmptyBlock,
    IndexOutOfRange,
    MissingVertex,
    RangeError,
    Side,
    Vertex,
    block_types,
    hsum,
    identity,
    is_idempotent,
    is_m_apsis,
    is_modular,
    is_planar,
    is_transversal,
    is_uniform,
    lower_pattern,
    make_bipartition,
    non_transversal_blocks,
    product,
    random_bipartition,
    rank,
    star,
    transversal_blocks,
    upper_pattern,
)
from diagmon.core.enumeration import all_bipartitions
from diagmon.core.families import FamilyKind
from diagmon.core.generators import diapsis, transapsis, transposition
from diagmon.core.text_format import from_text

from .conftest import enumerate_family

ALPHA = [[1, 2], [3, 6, -5, -6], [4, 5], [-1, -4], [-2, -3]]
BETA = [[1, 2, 3, -3, -4], [4, 8, -5], [5, 6, 7], [-1, -2], [-6, -7, -8]]


def fs(*blocks):
    return frozenset(frozenset(b) for b in blocks)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


class TestMakeBipartition:
    def test_canonical_form_ignores_block_order(self):
        a = make_bipartition(3, [[1, -1], [2, 3], [-2], [-3]])
        b = make_bipartition(3, [[-3], [3, 2], [-2], [-1, 1]])
        assert a == b
        assert hash(a) == hash(b)

    def test_accepts_vertex_spellings(self):
        a = make_bipartition(2, [["1", "2'"], [Vertex(Side.UPPER, 2), -1]])
        assert a == make_bipartition(2, [[1, -2], [2, -1]])

    def test_missing_vertex(self):
        with pytest.raises(MissingVertex):
            make_bipartition(2, [[1, -1], [2]])

    def test_duplicate_vertex(self):
        with pytest.raises(DuplicateVertex):
            make_bipartition(2, [[1, -1], [2, -2, 1]])

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            make_bipartition(2, [[1, -1], [2, -3]])

    @pytest.mark.parametrize("text", ["x", "2''", "-1", "0", "1.5", ""])
    def test_malformed_vertex_text(self, text):
        with pytest.raises(IndexOutOfRange):
            make_bipartition(2, [[1, -1], [2, -2, text]])

    def test_empty_block(self):
        with pytest.raises(EmptyBlock):
            make_bipartition(1, [[1, -1], []])

    def test_negative_degree(self):
        with pytest.raises(RangeError):
            make_bipartition(-1, [])

    def test_degree_zero(self):
        assert make_bipartition(0, []) == identity(0)
        assert identity(0).blocks() == ()

    def test_blocks_are_signed(self):
        a = make_bipartition(2, [[2, -1], [1], [-2]])
        assert a.blocks() == ((1,), (2, -1), (-2,))

    def test_vertex_text(self):
        assert str(Vertex.from_signed(-3)) == "3'"
        assert str(Vertex.from_signed(4)) == "4"
        assert Vertex.from_signed(-3).signed == -3


# ---------------------------------------------------------------------------
# Product, flip, horizontal sum
# ---------------------------------------------------------------------------


class TestProduct:
    def test_worked_example(self):
        a = from_text("[[1,5,4',5'],[2,3,4],[1'],[2',3']]")
        b = from_text("[[1,4,5,1',2',3'],[2,3],[4',5']]")
        assert product(a, b) == from_text("[[1,5,1',2',3'],[2,3,4],[4',5']]")
        assert a * b == product(a, b)

    def test_identity_is_neutral(self, rng):
        for k in range(0, 6):
            for _ in range(10):
                a = random_bipartition(k, rng)
                assert product(identity(k), a) == a
                assert product(a, identity(k)) == a

    def test_associative(self, rng):
        for _ in range(50):
            a, b, c = (random_bipartition(4, rng) for _ in range(3))
            assert product(product(a, b), c) == product(a, product(b, c))

    def test_floating_components_dropped(self):
        # h1 h1 = h1 after the loop in the middle is removed
        assert product(diapsis(3, 1), diapsis(3, 1)) == diapsis(3, 1)

    def test_transposition_squares_to_identity(self):
        s = transposition(4, 2)
        assert product(s, s) == identity(4)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            product(identity(2), identity(3))


class TestStar:
    def test_flip_example(self):
        a = make_bipartition(6, ALPHA)
        expected = make_bipartition(6, [[-1, -2], [-3, -6, 5, 6], [-4, -5], [1, 4], [2, 3]])
        assert star(a) == expected

    def test_involution_and_anti_homomorphism(self, rng):
        for _ in range(30):
            a, b = random_bipartition(4, rng), random_bipartition(4, rng)
            assert star(star(a)) == a
            assert star(product(a, b)) == product(star(b), star(a))

    def test_regular(self, rng):
        for _ in range(30):
            a = random_bipartition(5, rng)
            assert product(product(a, star(a)), a) == a


class TestHsum:
    def test_sum_example(self):
        a = make_bipartition(6, ALPHA)
        b = make_bipartition(8, BETA)
        shifted = [[v + 6 if v > 0 else v - 6 for v in block] for block in BETA]
        assert hsum(a, b) == make_bipartition(14, ALPHA + shifted)

    def test_identities(self):
        assert hsum(identity(2), identity(3)) == identity(5)
        assert hsum(identity(0), diapsis(2, 1)) == diapsis(2, 1)

    def test_distributes_over_product(self, rng):
        for _ in range(20):
            a, b = random_bipartition(2, rng), random_bipartition(2, rng)
            c, d = random_bipartition(3, rng), random_bipartition(3, rng)
            assert product(hsum(a, c), hsum(b, d)) == hsum(product(a, b), product(c, d))


# ---------------------------------------------------------------------------
# Block predicates
# ---------------------------------------------------------------------------


class TestBlocks:
    def test_rank(self):
        assert rank(make_bipartition(6, ALPHA)) == 1
        assert rank(make_bipartition(8, BETA)) == 2
        assert rank(identity(5)) == 5
        assert rank(diapsis(4, 2)) == 2

    def test_block_types(self):
        types = block_types(make_bipartition(6, ALPHA))
        assert types == {BlockType(2, 0): 2, BlockType(2, 2): 1, BlockType(0, 2): 2}

    def test_transversal_split(self):
        a = make_bipartition(6, ALPHA)
        assert transversal_blocks(a) == [(3, 6, -5, -6)]
        assert len(non_transversal_blocks(a)) == 4
        assert is_transversal((1, -1))
        assert not is_transversal((1, 2))

    def test_uniform(self):
        assert is_uniform((1, 2, -1, -2))
        assert not is_uniform((1, -1, -2))

    def test_m_apsis(self):
        assert is_m_apsis((2, 3, 4), 3)
        assert is_m_apsis((-4, -5), 2)
        assert not is_m_apsis((2, 4), 2)
        assert not is_m_apsis((2, -3), 2)
        assert not is_m_apsis((1, 2, 3), 2)


class TestPlanarModular:
    def test_planar(self):
        assert is_planar(make_bipartition(6, ALPHA))
        assert is_planar(transapsis(4, 2))
        assert not is_planar(transposition(3, 1))
        assert not is_planar(make_bipartition(4, [[1, 3], [2, 4], [-1], [-2], [-3], [-4]]))

    def test_nested_blocks_are_planar(self):
        a = from_text("[[1,8,9],[2,3,4,5,6,7],[1',2',3'],[4',5',6'],[7',8',9']]")
        assert is_planar(a)

    def test_modular(self):
        a = make_bipartition(6, ALPHA)
        assert is_modular(a, 2)
        assert is_modular(a, 1)
        assert not is_modular(a, 3)
        assert is_modular(identity(4), 5)

    def test_modulus_must_be_positive(self):
        with pytest.raises(RangeError):
            is_modular(identity(2), 0)

    def test_idempotent(self):
        assert is_idempotent(diapsis(4, 1))
        assert is_idempotent(transapsis(4, 1))
        assert not is_idempotent(transposition(4, 1))


# ---------------------------------------------------------------------------
# Patterns
# ---------------------------------------------------------------------------


class TestPatterns:
    ELEMENT = [[1, 5, -2, -3, -6, -7], [2, 3, 4], [6, 7, 8, -8], [-1], [-4, -5]]

    def test_upper_pattern(self):
        p = upper_pattern(make_bipartition(8, self.ELEMENT))
        assert p.degree == 8
        assert p.non_transversals == fs({2, 3, 4})
        assert p.transversals == fs({1, 5}, {6, 7, 8})
        assert p.transversal_sizes() == (2, 3)

    def test_lower_pattern(self):
        p = lower_pattern(make_bipartition(8, self.ELEMENT))
        assert p.non_transversals == fs({1}, {4, 5})
        assert p.transversals == fs({2, 3, 6, 7}, {8})

    def test_flip_swaps_patterns(self, rng):
        for _ in range(20):
            a = random_bipartition(4, rng)
            assert upper_pattern(star(a)) == lower_pattern(a)


class TestRandom:
    def test_degree_and_determinism(self, rng):
        a = random_bipartition(6, random.Random(7))
        b = random_bipartition(6, random.Random(7))
        assert a == b
        assert random_bipartition(3, rng).degree == 3


# ---------------------------------------------------------------------------
# Properties over enumerated monoids
# ---------------------------------------------------------------------------

SMALL_MONOIDS = ["sym_k3", "pmod2_k3", "jones_k4", "pmod2_k4", "mod2_k4"]


def multiplication_table(element_set):
    index = element_set.index
    return [[index[product(a, b)] for b in element_set] for a in element_set]


def assert_associative(table):
    # (ab)c for every c is the row of ab; a(bc) reads row a at the entries of row b
    for row in table:
        for b, ab in enumerate(row):
            assert table[ab] == [row[bc] for bc in table[b]]


class TestEnumeratedMonoids:
    @pytest.mark.parametrize("name", ["sym_k3", "pmod2_k3", "jones_k4", "pmod2_k4"])
    def test_associative_on_all_triples(self, request, name):
        assert_associative(multiplication_table(request.getfixturevalue(name)))

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "kind, k, m",
        [
            (FamilyKind.MOD, 4, 2),
            (FamilyKind.PARTITION, 3, None),
            (FamilyKind.PLANAR, 3, None),
            (FamilyKind.PMOD, 5, 2),
            (FamilyKind.CROSSED_APSIS, 5, 3),
        ],
    )
    def test_associative_on_all_triples_larger(self, kind, k, m):
        element_set = enumerate_family(kind, k, m)
        assert len(element_set) <= 500
        assert_associative(multiplication_table(element_set))

    @pytest.mark.slow
    def test_associative_random_degree_seven(self, rng):
        for _ in range(10_000):
            a, b, c = (random_bipartition(7, rng) for _ in range(3))
            assert product(product(a, b), c) == product(a, product(b, c))

    @pytest.mark.parametrize("name", SMALL_MONOIDS)
    def test_flip_is_an_inverse(self, request, name):
        for a in request.getfixturevalue(name):
            e = product(a, star(a))
            assert product(e, a) == a
            assert product(e, e) == e
            assert star(e) == e

    def test_every_bipartition_of_degree_three(self):
        for a in all_bipartitions(3):
            e = product(a, star(a))
            assert product(e, a) == a
            assert is_idempotent(e)
            assert rank(star(a)) == rank(a)

    def test_identity_on_enumerated_elements(self, mod2_k4):
        one = identity(4)
        for a in mod2_k4:
            assert product(one, a) == a == product(a, one)


class TestRankAndPatterns:
    @staticmethod
    def check_pairs(element_set):
        for a in element_set:
            assert rank(star(a)) == rank(a)
            for b in element_set:
                ab = product(a, b)
                assert rank(ab) <= min(rank(a), rank(b))
                assert (rank(ab) == rank(a)) == (upper_pattern(ab) == upper_pattern(a))
                assert (rank(ab) == rank(b)) == (lower_pattern(ab) == lower_pattern(b))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_planar_mod2(self, k):
        self.check_pairs(enumerate_family(FamilyKind.PMOD, k, 2))

    @pytest.mark.slow
    def test_planar_mod2_degree_five(self):
        element_set = enumerate_family(FamilyKind.PMOD, 5, 2)
        assert len(element_set) == 273
        self.check_pairs(element_set)
