"""graph6 reading and writing.

Decoding and encoding go through networkx. A validation pass runs first so
that malformed input is reported with the offending byte offset. Vertex
order is preserved in both directions."""

from typing import Iterator, TextIO, Tuple

import networkx

from . import graphs

HEADER = ">>graph6<<"
MAX_N = 258047


class Error(Exception):
    """Module-specific exception."""

    pass


class ParseError(Error):
    """Raised on malformed graph6 input.

    Args:
        message (str).
        offset (int): 0-based byte offset of the offending character.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


def _check_range(text: str, start: int, stop: int) -> None:
    for offset in range(start, stop):
        if not 63 <= ord(text[offset]) <= 126:
            raise ParseError(
                f"Character {text[offset]!r} out of range", offset
            )


def _decode_size(text: str) -> Tuple[int, int]:
    """Returns the vertex count and the number of bytes it occupied."""
    if not text:
        raise ParseError("Empty graph6 string", 0)
    _check_range(text, 0, min(len(text), 4))
    first = ord(text[0]) - 63
    if first < 63:
        return first, 1
    if len(text) < 4:
        raise ParseError("Truncated long-form size header", len(text))
    if ord(text[1]) == 126:
        raise ParseError("Vertex counts above 258047 are not supported", 1)
    n = 0
    for char in text[1:4]:
        n = (n << 6) | (ord(char) - 63)
    return n, 4


def _validate(text: str) -> None:
    """Checks the size header, body length and character range."""
    n, size_bytes = _decode_size(text)
    expected = size_bytes + (n * (n - 1) // 2 + 5) // 6
    if len(text) < expected:
        raise ParseError(
            f"Truncated bit vector: expected {expected} bytes, "
            f"got {len(text)}",
            len(text),
        )
    if len(text) > expected:
        raise ParseError(f"Trailing data after {expected} bytes", expected)
    _check_range(text, size_bytes, expected)


def parse_graph6(text: str) -> graphs.Graph:
    """Decodes one graph6 line.

    Args:
        text (str): the encoded graph, optionally with the ">>graph6<<"
            header; surrounding whitespace is ignored.

    Raises:
        ParseError: on a malformed header, truncated bit vector or
            out-of-range character.

    Returns:
        graphs.Graph.
    """
    text = text.strip()
    start = 0
    if text.startswith(HEADER):
        start = len(HEADER)
        text = text[start:]
    try:
        _validate(text)
    except ParseError as error:
        raise ParseError(error.message, start + error.offset)
    try:
        decoded = networkx.from_graph6_bytes(text.encode("ascii"))
    except (networkx.NetworkXError, ValueError) as error:
        raise ParseError(str(error), start)
    return graphs.Graph.from_networkx(decoded)


def emit_graph6(graph: graphs.Graph) -> str:
    """Encodes a graph as graph6, without header or newline.

    Args:
        graph (graphs.Graph).

    Raises:
        Error: if the vertex count exceeds the format bound.

    Returns:
        str.
    """
    if graph.n > MAX_N:
        raise Error(f"graph6 supports at most {MAX_N} vertices")
    encoded = networkx.to_graph6_bytes(graph.to_networkx(), header=False)
    return encoded.decode("ascii").rstrip("\n")


def read_graph6(source: TextIO) -> Iterator[graphs.Graph]:
    """Yields graphs from a graph6 stream, skipping blank lines.

    Raises:
        ParseError: with the offending line number prepended.
    """
    for line_number, line in enumerate(source, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except ParseError as error:
            raise ParseError(
                f"line {line_number}: {error.message}", error.offset
            )


def write_graph6(sink: TextIO, graph: graphs.Graph) -> None:
    print(emit_graph6(graph), file=sink)
