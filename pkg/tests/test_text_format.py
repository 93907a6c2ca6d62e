"""Tests for diagmon.core.text_format."""

import json

import pytest

from diagmon.core.bipartition import identity, make_bipartition, random_bipartition
from diagmon.core.generators import transapsis
from diagmon.core.text_format import ParseError, from_json, from_text, parse_blocks, to_json, to_json_obj, to_text


class TestText:
    def test_to_text_canonical(self):
        a = make_bipartition(3, [[-3], [2, 3, -1, -2], [1]])
        assert to_text(a) == "[[1],[2,3,1',2'],[3']]"

    def test_identity(self):
        assert to_text(identity(2)) == "[[1,1'],[2,2']]"
        assert to_text(identity(0)) == "[]"

    def test_whitespace_ignored(self):
        assert from_text(" [ [1 , 2'] ,[2,1'] ] ") == make_bipartition(2, [[1, -2], [2, -1]])

    def test_degree_inferred_from_largest_index(self):
        assert from_text("[[1,2,1',2']]").degree == 2

    def test_explicit_degree(self):
        with pytest.raises(ParseError):
            from_text("[[1,1']]", 2)

    def test_round_trip(self, rng):
        for k in range(0, 6):
            a = random_bipartition(k, rng)
            assert from_text(to_text(a), k) == a

    def test_parse_blocks(self):
        assert parse_blocks("[[1,2'],[3]]") == [[1, -2], [3]]
        assert parse_blocks("[]") == []


class TestParseErrors:
    @pytest.mark.parametrize(
        "text, position",
        [
            ("[[1,2]", 6),
            ("[[1,,2]]", 4),
            ("[[0]]", 2),
            ("[[1]]x", 5),
            ("1", 0),
        ],
    )
    def test_position(self, text, position):
        with pytest.raises(ParseError) as info:
            from_text(text)
        assert info.value.position == position

    def test_duplicate_vertex_is_a_parse_error(self):
        with pytest.raises(ParseError):
            from_text("[[1,1'],[1]]")


class TestJson:
    def test_object(self):
        assert to_json_obj(transapsis(2, 1)) == {"k": 2, "blocks": [[1, 2, -1, -2]]}

    def test_compact_string(self):
        assert to_json(identity(1)) == '{"k":1,"blocks":[[1,-1]]}'

    def test_from_json(self):
        a = make_bipartition(3, [[1, -3], [2, 3], [-1, -2]])
        assert from_json(to_json(a)) == a
        assert from_json(json.loads(to_json(a))) == a

    def test_invalid_records(self):
        with pytest.raises(ParseError):
            from_json("{not json")
        with pytest.raises(ParseError):
            from_json({"blocks": []})
