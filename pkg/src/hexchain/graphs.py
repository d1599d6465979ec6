"""Explicit graphs for the two hexagonal chain families.

A spiro chain glues consecutive hexagons at a shared cut vertex, so a
chain of n hexagons has 5n + 1 vertices and 6n edges.  A polyphenyl
chain keeps the hexagons disjoint and joins consecutive ones by a cut
edge, giving 6n vertices and 7n - 1 edges.

Labelling convention (every alternative gives an isomorphic graph): the
ring of each hexagon is numbered consecutively in cyclic order; the
entry vertex of hexagon k (the vertex shared with, or attached towards,
hexagon k - 1) sits at ring position 0, and the exit vertex towards
hexagon k + 1 at ring position 1, 2 or 3 for the letters O, M, P.  Of
the two symmetric choices for the exit the lower-numbered position is
taken, and the first hexagon's exit sits at ring position 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .codes import RING_DISTANCE, CodeWord


class ChainKind(str, Enum):
    SPIRO = "spiro"
    POLYPHENYL = "polyphenyl"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ChainGraph:
    """An undirected chain graph with its construction bookkeeping.

    ``adjacency[v]`` lists the neighbours of vertex ``v`` (0-based ids).
    ``hexagons`` holds the six-vertex ring of each hexagon in chain
    order.  For spiro chains ``cut_vertices`` is the sequence of shared
    vertices c_1 .. c_{n-1}; for polyphenyl chains ``attach_pairs`` is
    the sequence of cut edges (tail in hexagon k - 1, attach vertex in
    hexagon k).
    """

    kind: ChainKind
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    hexagons: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...] = ()
    attach_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(nbrs) for nbrs in self.adjacency))


def _new_ring(adj, ring):
    """Add the six ring edges of a hexagon given its vertex ids."""
    for i in range(6):
        u, v = ring[i], ring[(i + 1) % 6]
        adj[u].append(v)
        adj[v].append(u)


def build_spiro(code: CodeWord) -> ChainGraph:
    """Materialise the spiro chain named by ``code``.

    Hexagon 0 contributes six vertices; every further hexagon reuses the
    cut vertex it shares with its predecessor and adds five fresh ones.
    """
    n = code.n
    adj: list[list[int]] = [[] for _ in range(6)]
    _new_ring(adj, list(range(6)))
    hexagons = [tuple(range(6))]
    cuts: list[int] = []
    exit_vertex = 0
    for k in range(1, n):
        cuts.append(exit_vertex)
        base = len(adj)
        adj.extend([] for _ in range(5))
        ring = [exit_vertex] + list(range(base, base + 5))
        _new_ring(adj, ring)
        hexagons.append(tuple(ring))
        if k < n - 1:
            exit_vertex = ring[RING_DISTANCE[code.letters[k - 1]]]
    return ChainGraph(
        kind=ChainKind.SPIRO,
        n=n,
        adjacency=tuple(tuple(nbrs) for nbrs in adj),
        hexagons=tuple(hexagons),
        cut_vertices=tuple(cuts),
    )


def build_polyphenyl(code: CodeWord) -> ChainGraph:
    """Materialise the polyphenyl chain named by ``code``.

    Hexagons stay disjoint; cut edge k runs from the tail vertex in
    hexagon k - 1 to the attach vertex (ring position 0) of hexagon k.
    """
    n = code.n
    adj: list[list[int]] = [[] for _ in range(6)]
    _new_ring(adj, list(range(6)))
    hexagons = [tuple(range(6))]
    pairs: list[tuple[int, int]] = []
    tail = 0
    for k in range(1, n):
        base = len(adj)
        adj.extend([] for _ in range(6))
        ring = list(range(base, base + 6))
        _new_ring(adj, ring)
        hexagons.append(tuple(ring))
        attach = ring[0]
        adj[tail].append(attach)
        adj[attach].append(tail)
        pairs.append((tail, attach))
        if k < n - 1:
            tail = ring[RING_DISTANCE[code.letters[k - 1]]]
    return ChainGraph(
        kind=ChainKind.POLYPHENYL,
        n=n,
        adjacency=tuple(tuple(nbrs) for nbrs in adj),
        hexagons=tuple(hexagons),
        attach_pairs=tuple(pairs),
    )


def build_chain(kind: ChainKind, code: CodeWord) -> ChainGraph:
    if ChainKind(kind) is ChainKind.SPIRO:
        return build_spiro(code)
    return build_polyphenyl(code)


def squeeze_graph(chain: ChainGraph) -> ChainGraph:
    """Contract every cut edge of a polyphenyl chain.

    Each (tail, attach) pair merges into one vertex, which becomes a cut
    vertex of the resulting spiro chain.  The result is isomorphic to
    ``build_spiro`` of the same code, though generally labelled
    differently.
    """
    if chain.kind is not ChainKind.POLYPHENYL:
        raise ValueError("squeeze_graph expects a polyphenyl chain")
    # Each attach vertex folds into its tail; tails are never themselves merged away.
    merged = {attach: tail for tail, attach in chain.attach_pairs}
    survivors = [v for v in range(chain.num_vertices) if v not in merged]
    relabel = {old: new for new, old in enumerate(survivors)}

    def target(v):
        return relabel[merged.get(v, v)]

    adj: list[list[int]] = [[] for _ in survivors]
    dropped = set(chain.attach_pairs)
    for u in range(chain.num_vertices):
        for v in chain.adjacency[u]:
            if u < v and (u, v) not in dropped and (v, u) not in dropped:
                adj[target(u)].append(target(v))
                adj[target(v)].append(target(u))
    return ChainGraph(
        kind=ChainKind.SPIRO,
        n=chain.n,
        adjacency=tuple(tuple(nbrs) for nbrs in adj),
        hexagons=tuple(tuple(target(v) for v in ring) for ring in chain.hexagons),
        cut_vertices=tuple(relabel[tail] for tail, _ in chain.attach_pairs),
    )
