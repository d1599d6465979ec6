"""Wiener index of hexagonal chains, by four independent routes.

* :func:`wiener_bfs` sums shortest-path distances found by breadth-first
  search from every vertex.  It works on any connected graph, knows
  nothing about chain structure, and is the oracle the algebraic routes
  are checked against.
* :func:`wiener_spiro_recurrence` / :func:`wiener_poly_recurrence` grow
  the chain one hexagon at a time, tracking the Wiener index together
  with the distance sum of the active cut vertex (spiro) or tail
  (polyphenyl).
* :func:`wiener_spiro_closed` / :func:`wiener_poly_closed` evaluate the
  equivalent closed forms in O(n).
* :func:`wiener_homogeneous` evaluates the cubic polynomials for the
  single-letter families O_n, M_n, P_n of either kind.

All arithmetic is exact: Python integers never overflow, and the
fractional coefficients of the closed forms always cancel, which the
code asserts by multiplying before dividing.  :func:`squeeze_relation`
converts between the Wiener indices of a polyphenyl chain and of the
spiro chain obtained by contracting its cut edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .codes import CodeWord, canonicalize
from .graphs import ChainGraph, ChainKind, build_chain

try:
    from . import _accel
except ImportError:  # optional numpy/numba not installed
    _accel = None

# Below this size the pure-Python BFS wins (no JIT warm-up, no CSR build).
FAST_BFS_MIN_VERTICES = 256

METHODS = ("bfs", "recurrence", "closed", "polynomial")

# Per-link growth rates of the cut-vertex / tail distance sums.
SPIRO_SLOPE = {"O": 5, "M": 10, "P": 15}
POLY_SLOPE = {"O": 12, "M": 18, "P": 24}

# Homogeneous-family cubics as (a, b, c, d): W = (a n^3 + b n^2 + c n) / d.
_HOMOGENEOUS = {
    ChainKind.SPIRO: {
        "O": (25, 195, -58, 6),
        "M": (25, 60, -4, 3),
        "P": (25, 15, 14, 2),
    },
    ChainKind.POLYPHENYL: {
        "O": (12, 36, -21, 1),
        "M": (18, 18, -9, 1),
        "P": (24, 0, 3, 1),
    },
}


class SqueezeError(ArithmeticError):
    """The 25-divisibility of the squeeze relation failed, so the input
    was not the Wiener index of a spiro chain of the stated length."""


def _adjacency(graph):
    if isinstance(graph, ChainGraph):
        return graph.adjacency
    return graph


def _distance_sum(adj, source: int) -> int:
    """Sum of BFS distances from ``source``; raises if anything is unreachable."""
    order = len(adj)
    dist = [-1] * order
    dist[source] = 0
    queue = deque((source,))
    acc = 0
    reached = 1
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du1
                acc += du1
                reached += 1
                queue.append(v)
    if reached != order:
        raise ValueError("graph is not connected")
    return acc


def wiener_bfs(graph) -> int:
    """Sum of distances over all unordered vertex pairs of a connected graph.

    ``graph`` may be a :class:`ChainGraph` or a plain adjacency list
    (sequence of neighbour sequences, 0-based).  Large graphs use the
    numba kernel from :mod:`._accel` when available; it runs the same
    breadth-first search and is equality-tested against this fallback.
    """
    adj = _adjacency(graph)
    order = len(adj)
    if order == 0:
        raise ValueError("empty graph has no Wiener index")
    if _accel is not None and order >= FAST_BFS_MIN_VERTICES:
        total = _accel.all_sources_distance_sum(adj)
        if total < 0:
            raise ValueError("graph is not connected")
    else:
        total = sum(_distance_sum(adj, source) for source in range(order))
    return total // 2


def vertex_distance_sum(graph, v: int) -> int:
    """Sum of distances from vertex ``v`` to every other vertex."""
    adj = _adjacency(graph)
    if not 0 <= v < len(adj):
        raise ValueError(f"vertex {v} out of range for graph with {len(adj)} vertices")
    return _distance_sum(adj, v)


def spiro_weight(letter: str, k: int) -> int:
    """Distance-sum increment of the k-th cut vertex of a spiro chain.

    The distance sum of cut vertex c_k within the first k hexagons is
    the sum of these weights over links 1..k.  Link 1 contributes 9
    regardless of letter; link k >= 2 contributes 5/10/15 * (k-1) + 9
    for O/M/P.
    """
    if k < 1:
        raise ValueError(f"link index must be >= 1, got {k}")
    if letter not in SPIRO_SLOPE:
        raise ValueError(f"invalid letter {letter!r}")
    if k == 1:
        return 9
    return SPIRO_SLOPE[letter] * (k - 1) + 9


def poly_weight(letter: str, k: int) -> int:
    """Distance-sum increment of the k-th tail of a polyphenyl chain.

    Same role as :func:`spiro_weight` with slopes 12/18/24 for O/M/P.
    """
    if k < 1:
        raise ValueError(f"link index must be >= 1, got {k}")
    if letter not in POLY_SLOPE:
        raise ValueError(f"invalid letter {letter!r}")
    if k == 1:
        return 9
    return POLY_SLOPE[letter] * (k - 1) + 9


def wiener_spiro_recurrence(code: CodeWord) -> int:
    """Wiener index of a spiro chain by the growth recurrence.

    Appending hexagon k to a chain of k - 1 hexagons adds
    5 * W(chain, cut vertex) + 45k - 18 to the Wiener index, while the
    cut-vertex distance sum advances by :func:`spiro_weight`.  Base case:
    a single hexagon has W = 27 and cut-vertex distance sum 9.
    """
    w = 27
    wv = 9
    for k in range(2, code.n + 1):
        w += 5 * wv + 45 * k - 18
        if k < code.n:
            wv += spiro_weight(code.letters[k - 2], k)
    return w


def wiener_poly_recurrence(code: CodeWord) -> int:
    """Wiener index of a polyphenyl chain by the growth recurrence.

    Appending hexagon k adds 6 * W(chain, tail) + 90k - 63, with the tail
    distance sum advancing by :func:`poly_weight`; base W = 27, tail sum 9.
    """
    w = 27
    wv = 9
    for k in range(2, code.n + 1):
        w += 6 * wv + 90 * k - 63
        if k < code.n:
            wv += poly_weight(code.letters[k - 2], k)
    return w


def wiener_spiro_closed(code: CodeWord) -> int:
    """Closed-form Wiener index of a spiro chain.

    W = 5 * sum_{k=1}^{n-1} (n - k) * weight_k + (45 n^2 + 9 n) / 2,
    where weight_k is :func:`spiro_weight` of link k.  45 n^2 + 9 n is
    always even, so the result is an exact integer.
    """
    n = code.n
    acc = 9 * (n - 1)  # link 1 always weighs 9
    for i, letter in enumerate(code.letters):
        k = i + 2
        acc += (n - k) * (SPIRO_SLOPE[letter] * (k - 1) + 9)
    tail = 45 * n * n + 9 * n
    assert tail % 2 == 0
    return 5 * acc + tail // 2


def wiener_poly_closed(code: CodeWord) -> int:
    """Closed-form Wiener index of a polyphenyl chain.

    W = 6 * sum_{k=1}^{n-1} (n - k) * weight_k + 45 n^2 - 18 n, with
    weight_k from :func:`poly_weight`.
    """
    n = code.n
    acc = 9 * (n - 1)
    for i, letter in enumerate(code.letters):
        k = i + 2
        acc += (n - k) * (POLY_SLOPE[letter] * (k - 1) + 9)
    return 6 * acc + 45 * n * n - 18 * n


def wiener_closed(kind: ChainKind, code: CodeWord) -> int:
    """Closed form of either kind."""
    if ChainKind(kind) is ChainKind.SPIRO:
        return wiener_spiro_closed(code)
    return wiener_poly_closed(code)


def wiener_recurrence(kind: ChainKind, code: CodeWord) -> int:
    """Recurrence of either kind."""
    if ChainKind(kind) is ChainKind.SPIRO:
        return wiener_spiro_recurrence(code)
    return wiener_poly_recurrence(code)


def wiener_homogeneous(kind: ChainKind, family: str, n: int) -> int:
    """Wiener index of the all-O, all-M or all-P chain of length n.

    Evaluates the family's cubic with integer arithmetic; the numerators
    are divisible by their denominators for every n, which is asserted.
    """
    if n < 1:
        raise ValueError(f"chain length must be >= 1, got {n}")
    try:
        a, b, c, d = _HOMOGENEOUS[ChainKind(kind)][family]
    except KeyError:
        raise ValueError(f"invalid family letter {family!r}") from None
    numerator = ((a * n + b) * n + c) * n
    assert numerator % d == 0
    return numerator // d


def squeeze_relation(n: int, w_spiro: int) -> int:
    """Wiener index of the polyphenyl chain whose cut-edge contraction is
    a spiro chain of length ``n`` with Wiener index ``w_spiro``.

    Evaluates (36 w + 150 n^3 - 270 n^2 - 177 n) / 25 and raises
    :class:`SqueezeError` when the numerator is not divisible by 25,
    which signals that ``w_spiro`` is not a valid spiro-chain Wiener
    index for this length.
    """
    if n < 1:
        raise ValueError(f"chain length must be >= 1, got {n}")
    numerator = 36 * w_spiro + 150 * n**3 - 270 * n**2 - 177 * n
    if numerator % 25:
        raise SqueezeError(
            f"{w_spiro} is not a spiro-chain Wiener index for n={n}: "
            f"36*{w_spiro} + 150n^3 - 270n^2 - 177n = {numerator} is not divisible by 25"
        )
    return numerator // 25


def chain_size(kind: ChainKind, n: int) -> tuple[int, int]:
    """(vertex count, edge count) of a chain of length n."""
    if ChainKind(kind) is ChainKind.SPIRO:
        return 5 * n + 1, 6 * n
    return 6 * n, 7 * n - 1


@dataclass(frozen=True)
class WienerReport:
    """Wiener index of one chain as computed by each requested method."""

    code: CodeWord  # canonical representative
    kind: ChainKind
    n: int
    num_vertices: int
    num_edges: int
    w_bfs: int | None = None
    w_recurrence: int | None = None
    w_closed: int | None = None
    w_polynomial: int | None = None

    @property
    def values(self) -> dict[str, int]:
        """Populated method -> value mapping."""
        fields = {
            "bfs": self.w_bfs,
            "recurrence": self.w_recurrence,
            "closed": self.w_closed,
            "polynomial": self.w_polynomial,
        }
        return {name: value for name, value in fields.items() if value is not None}

    @property
    def agree(self) -> bool:
        return len(set(self.values.values())) <= 1

    def as_record(self) -> dict:
        """Flat record for serialisation; numbers stay exact integers."""
        record = {
            "code": str(self.code),
            "kind": self.kind.value,
            "n": self.n,
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
        }
        for name, value in self.values.items():
            record[f"w_{name}"] = value
        record["agree"] = self.agree
        return record


def compute_report(
    kind: ChainKind, code: CodeWord, methods: tuple[str, ...] | None = None
) -> WienerReport:
    """Evaluate the requested methods on one chain.

    ``methods`` defaults to bfs, recurrence and closed, plus polynomial
    when the code is a single-letter family.  Requesting polynomial on a
    mixed code raises ValueError.
    """
    kind = ChainKind(kind)
    code = canonicalize(code)
    if methods is None:
        methods = ("bfs", "recurrence", "closed") + (
            ("polynomial",) if code.is_constant() else ()
        )
    for name in methods:
        if name not in METHODS:
            raise ValueError(f"unknown method {name!r} (choose from {', '.join(METHODS)})")
    if "polynomial" in methods and not code.is_constant():
        raise ValueError("polynomial method applies only to single-letter codes")
    num_vertices, num_edges = chain_size(kind, code.n)
    results: dict[str, int] = {}
    if "bfs" in methods:
        results["w_bfs"] = wiener_bfs(build_chain(kind, code))
    if "recurrence" in methods:
        results["w_recurrence"] = wiener_recurrence(kind, code)
    if "closed" in methods:
        results["w_closed"] = wiener_closed(kind, code)
    if "polynomial" in methods:
        results["w_polynomial"] = wiener_homogeneous(kind, code.family_letter(), code.n)
    return WienerReport(
        code=code,
        kind=kind,
        n=code.n,
        num_vertices=num_vertices,
        num_edges=num_edges,
        **results,
    )
