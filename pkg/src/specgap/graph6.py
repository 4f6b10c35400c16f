"""Codec for the graph6 text format.

graph6 is the line-oriented ASCII format used by the standard small-graph
collections: a length field N(m) followed by the strict upper triangle of
the adjacency matrix, column-major, packed 6 bits per printable byte
(offset 63).  Orders up to 258047 are supported here (1- and 4-byte length
fields); the 8-byte form is rejected.
"""

from __future__ import annotations

from .graphs import Graph, pair_count

HEADER = ">>graph6<<"

_MAX_ORDER = 258047

# set-bit positions (0 = first payload bit) for every 6-bit chunk value
_BITS_IN_CHUNK = tuple(
    tuple(s for s in range(6) if v & (1 << (5 - s))) for v in range(64)
)


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class InvalidCharError(Graph6Error):
    """A byte outside the printable graph6 range 63..126."""


class TruncatedPayloadError(Graph6Error):
    """Fewer payload bytes than the order requires."""


class NonzeroPaddingError(Graph6Error):
    """Padding bits beyond the last vertex pair were set."""


def decode(line: str | bytes) -> Graph:
    """Parse one graph6 line (optional ``>>graph6<<`` header allowed)."""
    if isinstance(line, str):
        data = line.encode("ascii", errors="replace")
    else:
        data = bytes(line)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise InvalidCharError(f"byte {b} outside graph6 range 63..126")

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("orders above 258047 are not supported")
        if len(data) < 4:
            raise TruncatedPayloadError("long order field needs 4 bytes")
        order = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        payload = data[4:]
    else:
        order = data[0] - 63
        payload = data[1:]
    if order < 1:
        raise Graph6Error("graph order must be at least 1")
    if order > _MAX_ORDER:
        raise Graph6Error(f"order {order} above supported maximum {_MAX_ORDER}")

    n_bits = pair_count(order)
    n_bytes = (n_bits + 5) // 6
    if len(payload) < n_bytes:
        raise TruncatedPayloadError(
            f"order {order} needs {n_bytes} payload bytes, got {len(payload)}"
        )
    if len(payload) > n_bytes:
        raise Graph6Error("trailing bytes after graph6 payload")

    bits = 0
    base = 0
    for byte in payload:
        for s in _BITS_IN_CHUNK[byte - 63]:
            p = base + s
            if p >= n_bits:
                raise NonzeroPaddingError("set bit in graph6 padding")
            bits |= 1 << p
        base += 6
    return Graph(order, bits)


def encode(g: Graph) -> str:
    """Serialize a graph to its canonical graph6 line (no trailing newline)."""
    m = g.order
    if m > _MAX_ORDER:
        raise Graph6Error(f"order {m} above supported maximum {_MAX_ORDER}")
    if m <= 62:
        head = bytes([m + 63])
    else:
        head = bytes([126, ((m >> 12) & 63) + 63, ((m >> 6) & 63) + 63, (m & 63) + 63])

    n_bits = pair_count(m)
    out = bytearray(head)
    out.extend(63 for _ in range((n_bits + 5) // 6))
    rest = g.bits
    while rest:
        low = rest & -rest
        p = low.bit_length() - 1
        out[len(head) + p // 6] += 1 << (5 - p % 6)
        rest &= rest - 1
    return out.decode("ascii")
