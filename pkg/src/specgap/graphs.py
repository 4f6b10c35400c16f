"""Simple undirected graphs stored as upper-triangle edge bitsets.

A graph on ``order`` vertices keeps its edges in a single Python integer:
bit ``pair_index(i, j)`` is set iff the edge {i, j} is present.  Pairs are
numbered column-major over the strict upper triangle, i.e. (0,1), (0,2),
(1,2), (0,3), ..., which makes the bitset order-compatible with the graph6
serialization and lets a vertex-relabeling act as a pure bit permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class InvalidParamsError(ValueError):
    """A graph family was asked for parameters it does not admit."""


def pair_count(order: int) -> int:
    """Number of vertex pairs (= payload bits) for a graph of this order."""
    return order * (order - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair {i, j}, column-major upper triangle."""
    if i == j:
        raise ValueError("self-loops have no pair index")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _bits_of(mask: int) -> Iterator[int]:
    # yield set-bit positions, lowest first
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph: vertex count plus edge bitset."""

    order: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("graph order must be at least 1")
        if self.bits < 0 or self.bits.bit_length() > pair_count(self.order):
            raise ValueError("edge bitset has bits outside the upper triangle")

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.bits >> pair_index(i, j)) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (i, j) with i < j, in bitset order."""
        out = []
        for j in range(1, self.order):
            row = (self.bits >> pair_count(j)) & ((1 << j) - 1)
            for i in _bits_of(row):
                out.append((i, j))
        return out

    def neighbor_masks(self) -> list[int]:
        """Per-vertex neighbor sets as bitmasks over vertex indices."""
        nb = [0] * self.order
        for i, j in self.edges():
            nb[i] |= 1 << j
            nb[j] |= 1 << i
        return nb

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.neighbor_masks()]

    def adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix (float64)."""
        a = np.zeros((self.order, self.order))
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1.0
        return a

    def complement(self) -> "Graph":
        return Graph(self.order, ~self.bits & ((1 << pair_count(self.order)) - 1))


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    bits = 0
    for i, j in edges:
        if not (0 <= i < order and 0 <= j < order):
            raise ValueError(f"edge ({i}, {j}) out of range for order {order}")
        bits |= 1 << pair_index(i, j)
    return Graph(order, bits)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex relabeling i -> perm[i]."""
    if sorted(perm) != list(range(g.order)):
        raise ValueError("perm must be a permutation of range(order)")
    bits = 0
    for i, j in g.edges():
        bits |= 1 << pair_index(perm[i], perm[j])
    return Graph(g.order, bits)


# ---------------------------------------------------------------------------
# named families

def complete(m: int) -> Graph:
    if m < 1:
        raise InvalidParamsError("complete graph needs at least one vertex")
    return Graph(m, (1 << pair_count(m)) - 1)


def path(m: int) -> Graph:
    if m < 1:
        raise InvalidParamsError("path needs at least one vertex")
    return from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle(m: int) -> Graph:
    if m < 3:
        raise InvalidParamsError("cycle needs at least three vertices")
    return from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def star(m: int) -> Graph:
    """Star on m vertices: center 0 joined to every other vertex."""
    if m < 1:
        raise InvalidParamsError("star needs at least one vertex")
    return from_edges(m, [(0, i) for i in range(1, m)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertex blocks follow the given part order."""
    parts = list(parts)
    if not parts or any(int(p) != p or p < 1 for p in parts):
        raise InvalidParamsError("parts must be positive integers")
    if len(parts) < 2:
        raise InvalidParamsError("need at least two parts")
    m = sum(parts)
    g = complete(m)
    bits = g.bits
    off = 0
    for p in parts:
        for j in range(off + 1, off + p):
            for i in range(off, j):
                bits &= ~(1 << pair_index(i, j))
        off += p
    return Graph(m, bits)


def kmm_minus_e(m: int) -> Graph:
    """Balanced complete bipartite graph on 2m vertices with one edge removed.

    Parts are {0..m-1} and {m..2m-1}; the deleted edge is (0, m).
    """
    if m < 2:
        raise InvalidParamsError("needs part size at least 2 to stay connected")
    g = complete_multipartite([m, m])
    return Graph(g.order, g.bits & ~(1 << pair_index(0, m)))


def kmm_plus_e(m: int) -> Graph:
    """Balanced complete bipartite graph on 2m vertices plus one edge.

    Parts are {0..m-1} and {m..2m-1}; the added edge is (0, 1) inside the
    first part.
    """
    if m < 2:
        raise InvalidParamsError("needs part size at least 2 to host an extra edge")
    g = complete_multipartite([m, m])
    return Graph(g.order, g.bits | (1 << pair_index(0, 1)))


_SCALAR_FAMILIES = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "kmm_minus_e": kmm_minus_e,
    "kmm_plus_e": kmm_plus_e,
}


def construct(family: str, params: Sequence[int]) -> Graph:
    """Build a named graph family from integer parameters.

    Scalar families take one parameter; ``complete_multipartite`` takes the
    full list of part sizes.
    """
    if family == "complete_multipartite":
        return complete_multipartite(params)
    fn = _SCALAR_FAMILIES.get(family)
    if fn is None:
        known = ", ".join(sorted(_SCALAR_FAMILIES) + ["complete_multipartite"])
        raise InvalidParamsError(f"unknown family {family!r} (known: {known})")
    if len(params) != 1:
        raise InvalidParamsError(f"family {family!r} takes exactly one parameter")
    return fn(int(params[0]))


# ---------------------------------------------------------------------------
# structure tests

def is_connected(g: Graph) -> bool:
    if g.order == 1:
        return True
    nb = g.neighbor_masks()
    full = (1 << g.order) - 1
    visited = 1
    frontier = 1
    while frontier:
        step = 0
        for i in _bits_of(frontier):
            step |= nb[i]
        frontier = step & ~visited
        visited |= frontier
    return visited == full


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two color classes of a connected bipartite graph, or None.

    The class containing vertex 0 comes first; classes are sorted tuples.
    """
    nb = g.neighbor_masks()
    color = [-1] * g.order
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in _bits_of(nb[v]):
            if color[w] == -1:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    if -1 in color:
        return None  # disconnected input: refuse to guess a coloring
    side0 = tuple(i for i in range(g.order) if color[i] == 0)
    side1 = tuple(i for i in range(g.order) if color[i] == 1)
    return side0, side1


def detect_complete_multipartite(g: Graph) -> tuple[int, ...] | None:
    """Part sizes (ascending) if g is complete multipartite with >= 2 parts.

    A graph is complete multipartite exactly when its complement is a
    disjoint union of cliques (the parts).  Returns None otherwise, and for
    the edgeless single-part case.
    """
    m = g.order
    full = (1 << m) - 1
    nb = g.neighbor_masks()
    co_nb = [~nb[i] & full & ~(1 << i) for i in range(m)]
    unseen = full
    parts = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            step = 0
            for i in _bits_of(frontier):
                step |= co_nb[i]
            frontier = step & ~comp
            comp |= frontier
        for i in _bits_of(comp):
            if co_nb[i] & comp != comp & ~(1 << i):
                return None  # complement component is not a clique
        parts.append(comp.bit_count())
        unseen &= ~comp
    if len(parts) < 2:
        return None
    return tuple(sorted(parts))
