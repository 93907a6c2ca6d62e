"""Text and JSON serialization of bipartitions.

Text grammar::

    bipartition := '[' block (',' block)* ']'
    block       := '[' vertex (',' vertex)* ']'
    vertex      := INT | INT "'"

Whitespace is ignored when parsing. ``[]`` is the empty bipartition of degree 0.
JSON uses ``{"k": k, "blocks": [[...], ...]}`` with lower vertex ``j'`` as ``-j``.
"""

import json

from .bipartition import Bipartition, DiagmonError, make_bipartition


class ParseError(DiagmonError):
    """Malformed bipartition text; ``position`` is the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _vertex_text(v: int) -> str:
    return str(v) if v > 0 else f"{-v}'"


def to_text(a: Bipartition) -> str:
    return "[" + ",".join("[" + ",".join(_vertex_text(v) for v in b) + "]" for b in a.blocks()) + "]"


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise ParseError(f"Expected '{char}', found '{found}'", self.pos)
        self.pos += 1

    def vertex(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("Expected a vertex index", start)
        index = int(self.text[start : self.pos])
        if index == 0:
            raise ParseError("Vertex indices start at 1", start)
        if self.peek() == "'":
            self.pos += 1
            return -index
        return index


def parse_blocks(text: str) -> list[list[int]]:
    """Parse the bracket grammar into signed vertex lists without validating coverage."""
    reader = _Reader(text)
    reader.expect("[")
    blocks: list[list[int]] = []
    if reader.peek() == "]":
        reader.pos += 1
    else:
        while True:
            reader.expect("[")
            block = [reader.vertex()]
            while reader.peek() == ",":
                reader.pos += 1
                block.append(reader.vertex())
            reader.expect("]")
            blocks.append(block)
            if reader.peek() == ",":
                reader.pos += 1
                continue
            reader.expect("]")
            break
    if reader.peek():
        raise ParseError("Trailing characters after bipartition", reader.pos)
    return blocks


def from_text(text: str, k: int | None = None) -> Bipartition:
    """Parse *text*; the degree defaults to the largest index named."""
    blocks = parse_blocks(text)
    if k is None:
        k = max((abs(v) for b in blocks for v in b), default=0)
    try:
        return make_bipartition(k, blocks)
    except DiagmonError as e:
        raise ParseError(str(e), len(text)) from e


def to_json_obj(a: Bipartition) -> dict:
    return {"k": a.degree, "blocks": [list(b) for b in a.blocks()]}


def to_json(a: Bipartition) -> str:
    return json.dumps(to_json_obj(a), separators=(",", ":"))


def from_json(data: str | dict) -> Bipartition:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.pos) from e
    try:
        return make_bipartition(int(data["k"]), data["blocks"])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Invalid bipartition record: {e}", 0) from e
