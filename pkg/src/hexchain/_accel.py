"""Numba-compiled all-sources BFS for large graphs.

Importing this module fails cleanly when numpy or numba is missing;
``wiener.py`` then falls back to the pure-Python BFS.  The kernel runs
the same level-by-level search as the fallback, just over CSR arrays.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _all_sources_sum(indptr, indices):
    order = indptr.shape[0] - 1
    dist = np.empty(order, dtype=np.int32)
    queue = np.empty(order, dtype=np.int32)
    total = 0
    for source in range(order):
        dist[:] = -1
        dist[source] = 0
        queue[0] = source
        head, tail = 0, 1
        acc = 0
        while head < tail:
            u = queue[head]
            head += 1
            du1 = dist[u] + 1
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[v] < 0:
                    dist[v] = du1
                    acc += du1
                    queue[tail] = v
                    tail += 1
        if tail < order:
            return -1  # unreachable vertex: disconnected
        total += acc
    return total


def all_sources_distance_sum(adjacency) -> int:
    """Sum of BFS distances over all ordered vertex pairs, -1 if disconnected."""
    order = len(adjacency)
    indptr = np.zeros(order + 1, dtype=np.int64)
    for v, nbrs in enumerate(adjacency):
        indptr[v + 1] = indptr[v] + len(nbrs)
    indices = np.fromiter(
        (v for nbrs in adjacency for v in nbrs), dtype=np.int32, count=indptr[-1]
    )
    return int(_all_sources_sum(indptr, indices))
