"""Tests for diagmon.core.counting."""

import csv

import pytest

from diagmon.core import counting
from diagmon.core.counting import UnsupportedRange


def load_fixture(fixtures_dir, name):
    with open(fixtures_dir / f"{name}.csv", encoding="utf-8", newline="") as f:
        return [(rec["row"], rec["column"], int(rec["value"])) for rec in csv.DictReader(f)]


def digits(column):
    return tuple(int(c) for c in column)


# ---------------------------------------------------------------------------
# Elementary sequences
# ---------------------------------------------------------------------------


class TestSequences:
    def test_bell(self):
        assert [counting.bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]

    def test_catalan(self):
        assert [counting.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]

    def test_fibonacci(self):
        assert [counting.fibonacci(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]

    def test_double_factorial(self):
        assert counting.double_factorial(5) == 15
        assert counting.double_factorial(-1) == 1
        assert counting.double_factorial(0) == 1

    def test_binomial(self):
        assert counting.binomial(5, 2) == 10
        assert counting.binomial(2, 5) == 0

    def test_integer_partitions(self):
        assert counting.p_parts_bounded(2, 4) == 3
        assert counting.p_parts(5) == 7
        assert counting.o_parts_bounded(2, 4) == 5
        assert counting.o_parts(4) == 8
        assert counting.o_parts_bounded(3, 6) == 24

    def test_composition_vectors(self):
        assert list(counting.composition_vectors(3)) == [(0, 0, 1), (1, 1, 0), (3, 0, 0)]
        assert list(counting.composition_vectors(0)) == [()]


class TestRanges:
    def test_modulus(self):
        with pytest.raises(UnsupportedRange):
            counting.pm_card(0, 3)

    def test_negative_sizes(self):
        with pytest.raises(UnsupportedRange):
            counting.pt(2, -1, 1)
        with pytest.raises(UnsupportedRange):
            counting.bell(-1)

    def test_catalan_triangle_domain(self):
        with pytest.raises(UnsupportedRange):
            counting.catalan_triangle_R(1, 2)


# ---------------------------------------------------------------------------
# Pattern counts and cardinalities
# ---------------------------------------------------------------------------


class TestCardinalities:
    def test_planar_mod2(self):
        assert [counting.pm_card(2, k) for k in range(1, 9)] == [1, 3, 12, 55, 273, 1428, 7752, 43263]

    def test_side_totals(self):
        assert counting.pn(2, 4, 0) == 1
        assert counting.pn(2, 4, 2) == 3
        assert counting.pn(2, 4, 4) == 3
        assert counting.pn(2, 4, 3) == 0

    def test_vectors_trim_trailing_zeros(self):
        assert counting.pn_vec(2, 4, (2, 0, 0, 0)) == counting.pn_vec(2, 4, (2,)) == 2

    def test_transversals(self):
        assert counting.pt(2, 1, 3) == 1
        assert counting.pt(2, 2, 4) == 3
        assert counting.xt(2, 1, 2) == 0

    def test_small_monoids(self):
        assert counting.mod_card(2, 2) == 4
        assert counting.mod_card(3, 3) == 17
        assert counting.apsis_card(3, 6) == 74
        assert counting.xapsis_card(3, 3) == 7

    @pytest.mark.parametrize(
        "name, fn",
        [
            ("PN2", counting.pn_vec),
            ("PN3", counting.pn_vec),
            ("PNB3", counting.pnb_vec),
            ("XN2", counting.xn_vec),
            ("XNB4", counting.xnb_vec),
        ],
    )
    def test_vector_tables(self, fixtures_dir, name, fn):
        m = int(name[-1])
        for row, column, value in load_fixture(fixtures_dir, name):
            assert fn(m, int(row), digits(column)) == value, (row, column)

    @pytest.mark.parametrize("name, fn", [("PT3", counting.pt), ("XT2", counting.xt)])
    def test_transversal_tables(self, fixtures_dir, name, fn):
        m = int(name[-1])
        for row, column, value in load_fixture(fixtures_dir, name):
            assert fn(m, int(row), int(column)) == value, (row, column)

    @pytest.mark.parametrize(
        "name, total, card",
        [
            ("pmod2moncards", counting.pn, counting.pm_card),
            ("mod3moncards", counting.xn, counting.mod_card),
            ("apsismod4moncards", counting.pnb, counting.apsis_card),
            ("capsismon3moncards", counting.xnb, counting.xapsis_card),
        ],
    )
    def test_card_tables(self, fixtures_dir, name, total, card):
        m = int(name.removesuffix("moncards")[-1])
        for row, column, value in load_fixture(fixtures_dir, name):
            got = card(m, int(row)) if column == "card" else total(m, int(row), int(column))
            assert got == value, (row, column)


# ---------------------------------------------------------------------------
# Green's class counts
# ---------------------------------------------------------------------------


class TestClassCounts:
    def test_values(self):
        assert counting.d_classes_pmod(2, 2) == 3
        assert counting.d_classes_pmod(2, 3) == 4
        assert counting.r_classes_pmod(2, 3) == 6
        assert counting.d_classes_mod(2, 4) == 6
        assert counting.r_classes_mod(2, 4) == 31
        assert counting.d_classes_pmod(2, 10) == 144
        assert counting.r_classes_pmod(2, 6) == 108
        assert counting.r_classes_mod(1, 5) == 454

    def test_planar_partition_monoid(self):
        # every rank is one D-class
        assert [counting.d_classes_pmod(1, k) for k in range(6)] == [1, 2, 3, 4, 5, 6]

    @pytest.mark.parametrize(
        "name, fn",
        [
            ("nopmodmonDclasses", counting.d_classes_pmod),
            ("nomodmonDclasses", counting.d_classes_mod),
            ("nopmodmonRclasses", counting.r_classes_pmod),
            ("nomodmonRclasses", counting.r_classes_mod),
            ("nointparts", counting.p_parts_bounded),
            ("noorderedintparts", counting.o_parts_bounded),
        ],
    )
    def test_tables(self, fixtures_dir, name, fn):
        for row, column, value in load_fixture(fixtures_dir, name):
            assert fn(int(row), int(column)) == value, (row, column)


# ---------------------------------------------------------------------------
# Word counts
# ---------------------------------------------------------------------------


class TestRunCounts:
    def test_catalan_triangle(self, fixtures_dir):
        for row, column, value in load_fixture(fixtures_dir, "Rjivalues"):
            assert counting.catalan_triangle_R(int(row), int(column)) == value

    def test_catalan_triangle_rows_sum_to_catalan(self):
        for j in range(1, 8):
            total = sum(counting.catalan_triangle_R(jj, i) for jj in range(1, j + 1) for i in range(1, jj + 1))
            assert total + 1 == counting.catalan(j + 1)

    def test_conjectured_forms(self):
        assert counting.conjectured_run_counts(1, 1) == 2
        assert counting.conjectured_run_counts(4, 1) == 8
        assert counting.conjectured_run_counts(3, 2) == 14
        assert counting.conjectured_run_counts(4, 2) == 32
        assert counting.conjectured_run_counts(3, 3) == 24
        assert counting.conjectured_run_counts(4, 3) is None
