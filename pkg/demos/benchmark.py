"""Time the three general-purpose methods against each other.

Breadth-first search is quadratic in the number of vertices; the
recurrence and closed form are linear in the number of hexagons and
run on chains far beyond anything a graph needs to be built for.
Values are cross-checked whenever two methods both ran.
"""

import random
import time

from hexchain import (
    ChainKind,
    build_chain,
    random_code,
    wiener_bfs,
    wiener_closed,
    wiener_recurrence,
)

SEED = 7
BFS_MAX_N = 2000


def timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def main() -> None:
    rng = random.Random(SEED)
    kind = ChainKind.SPIRO
    print(f"seed {SEED}, {kind.value} chains, times in seconds")
    print(f"  {'n':>8} {'closed':>10} {'recurrence':>12} {'bfs':>10}   W")
    for n in (10, 100, 1000, 2000, 10**4, 10**5):
        code = random_code(n, rng)
        w_closed, t_closed = timed(wiener_closed, kind, code)
        w_rec, t_rec = timed(wiener_recurrence, kind, code)
        if w_closed != w_rec:
            raise SystemExit(f"disagreement at n={n}: {w_closed} != {w_rec}")
        if n <= BFS_MAX_N:
            graph = build_chain(kind, code)
            w_bfs, t_bfs = timed(wiener_bfs, graph)
            if w_bfs != w_closed:
                raise SystemExit(f"bfs disagreement at n={n}")
            bfs_cell = f"{t_bfs:>10.4f}"
        else:
            bfs_cell = f"{'skipped':>10}"
        print(f"  {n:>8} {t_closed:>10.6f} {t_rec:>12.6f} {bfs_cell}   {w_closed}")
    print("\n(BFS first call includes one-time compilation of the fast kernel;")
    print(" rerun to see its warm timings)")


if __name__ == "__main__":
    main()
