"""Exhaustive enumeration, census, averages and extremal ranking.

A chain of n hexagons is identified by a canonical code word, so
enumerating chains means walking all 3^(n-2) raw words and keeping the
ones already in canonical form.  That brute-force route is deliberately
naive: the closed-form census (half of total plus palindromic words)
then acts as an independent cross-check of the canonicalization.

Exhaustive work refuses lengths above a configurable limit (default
n = 14, about 266k chains) via :class:`LimitError`; the environment
variable ``HEXCHAIN_MAX_N`` raises or lowers it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .codes import LETTERS, CodeWord, canonicalize
from .graphs import ChainKind
from .wiener import wiener_closed

DEFAULT_MAX_N = 14
ENV_MAX_N = "HEXCHAIN_MAX_N"

# 3^(n-2) overflows unsigned 64-bit arithmetic from n = 43 on.  Python
# integers would carry on regardless, but the census contract promises
# values that fit fixed-width consumers, so refuse beyond that point.
CENSUS_MAX_N = 42


class LimitError(RuntimeError):
    """Exhaustive enumeration was refused because n exceeds the limit."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            f"n={n} exceeds the exhaustive enumeration limit of {limit}; "
            f"set {ENV_MAX_N} to raise it"
        )
        self.n = n
        self.limit = limit


def exhaustive_limit() -> int:
    """Current enumeration limit: ``HEXCHAIN_MAX_N`` if set, else 14."""
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None


def enumerate_chains(n: int, limit: int | None = None) -> Iterator[CodeWord]:
    """Yield every distinct chain of n hexagons as a canonical code word.

    Walks all 3^(n-2) raw words in lexicographic order (O < M < P) and
    keeps those not larger than their reversal, so each chain appears
    exactly once and the stream itself is lexicographically sorted.
    """
    if n < 1:
        raise ValueError(f"chain length must be >= 1, got {n}")
    if limit is None:
        limit = exhaustive_limit()
    if n > limit:
        raise LimitError(n, limit)
    if n <= 2:
        yield CodeWord((), n)
        return
    for ranks in product(range(3), repeat=n - 2):
        if ranks <= ranks[::-1]:
            yield CodeWord(tuple(LETTERS[r] for r in ranks), n)


@dataclass(frozen=True)
class ChainCensus:
    """Closed-form count of distinct chains of a given length."""

    n: int
    total_codes: int  # raw words: 3^(n-2)
    palindromic: int  # words equal to their reversal: 3^floor((n-1)/2)
    distinct: int  # chains: (total_codes + palindromic) / 2


def count_chains(n: int) -> ChainCensus:
    """Census of chains of length n without enumerating them.

    Each non-palindromic word shares its chain with exactly one other
    word (its reversal), hence distinct = (total + palindromic) / 2.
    Lengths 1 and 2 have the empty code only; the closed form is stated
    for n >= 2 (at n = 1 it would need 3^(-1)).
    """
    if n < 1:
        raise ValueError(f"chain length must be >= 1, got {n}")
    if n > CENSUS_MAX_N:
        raise OverflowError(
            f"census for n={n} needs 3^{n - 2}, which exceeds 64 bits "
            f"(limit n = {CENSUS_MAX_N})"
        )
    if n == 1:
        return ChainCensus(n=1, total_codes=1, palindromic=1, distinct=1)
    total = 3 ** (n - 2)
    palindromic = 3 ** ((n - 1) // 2)
    assert (total + palindromic) % 2 == 0
    return ChainCensus(
        n=n,
        total_codes=total,
        palindromic=palindromic,
        distinct=(total + palindromic) // 2,
    )


# Average Wiener index over all distinct chains of length n, as cubics
# (a, b, c, d) meaning (a n^3 + b n^2 + c n) / d.
_AVERAGE = {
    ChainKind.SPIRO: (25, 60, -4, 3),
    ChainKind.POLYPHENYL: (18, 18, -9, 1),
}


def average_wiener(kind: ChainKind, n: int) -> int:
    """Mean Wiener index over all distinct chains of length n, exactly.

    The mean of the closed form over all codes collapses to a cubic in
    n alone, which coincides with the Wiener index of the all-M chain.
    The spiro numerator 25n^3 + 60n^2 - 4n is divisible by 3 for every
    n (it is congruent to n^3 - n), so the result is always an integer.
    """
    if n < 1:
        raise ValueError(f"chain length must be >= 1, got {n}")
    a, b, c, d = _AVERAGE[ChainKind(kind)]
    numerator = ((a * n + b) * n + c) * n
    assert numerator % d == 0
    return numerator // d


@dataclass(frozen=True)
class ExtremalEntry:
    """One chain in an extremal ranking; ties share a rank number."""

    code: CodeWord
    wiener: int
    rank: int


@dataclass(frozen=True)
class ExtremalRanking:
    """The ``top`` smallest or largest chains of one kind and length."""

    kind: ChainKind
    n: int
    direction: str  # "min" or "max"
    entries: tuple[ExtremalEntry, ...]

    def rank_group(self, rank: int) -> tuple[ExtremalEntry, ...]:
        return tuple(e for e in self.entries if e.rank == rank)

    @property
    def num_ranks(self) -> int:
        return max((e.rank for e in self.entries), default=0)


def rank_extremal(
    kind: ChainKind, n: int, direction: str, top: int = 3
) -> ExtremalRanking:
    """Exhaustively rank chains of length n by Wiener index.

    Computes the closed form for every canonical code, sorts, and
    returns the first ``top`` rank groups.  Ranks are dense (1, 2, 3,
    ...) and a group holds every code sharing its Wiener index, so a
    uniqueness claim is simply "the group has size 1".
    """
    kind = ChainKind(kind)
    if n < 4:
        raise ValueError(f"extremal ranking needs n >= 4, got {n}")
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    if top < 1:
        raise ValueError(f"top must be >= 1, got {top}")
    scored = [(wiener_closed(kind, code), code) for code in enumerate_chains(n)]
    scored.sort(key=lambda pair: (pair[0] if direction == "min" else -pair[0], pair[1].sort_key))
    entries = []
    rank = 0
    last_w: int | None = None
    for w, code in scored:
        if w != last_w:
            rank += 1
            if rank > top:
                break
            last_w = w
        entries.append(ExtremalEntry(code=code, wiener=w, rank=rank))
    return ExtremalRanking(kind=kind, n=n, direction=direction, entries=tuple(entries))


def predicted_extremal_codes(direction: str, n: int) -> dict[int, CodeWord]:
    """The codes predicted to hold ranks 1-3, keyed by rank.

    Minimum: the all-O chain, then all-O with a final M, then all-O
    with M in the next-to-last slot (its canonical form).  Maximum is
    the mirror image with P in place of O.  The rank-3 prediction is
    only offered for n >= 5: at n = 4 it degenerates to the rank-2
    code.
    """
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    if n < 4:
        raise ValueError(f"extremal predictions need n >= 4, got {n}")
    base = "O" if direction == "min" else "P"
    predictions = {
        1: CodeWord(tuple(base * (n - 2)), n),
        2: canonicalize(CodeWord(tuple(base * (n - 3) + "M"), n)),
    }
    if n >= 5:
        predictions[3] = canonicalize(CodeWord(tuple(base * (n - 4) + "M" + base), n))
    return predictions


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of comparing one rank group against its prediction."""

    rank: int
    matches: bool | None  # None when no prediction covers this rank
    note: str = ""


def matches_theorem(ranking: ExtremalRanking) -> dict[int, TheoremCheck]:
    """Compare each rank group of ``ranking`` against the predicted codes.

    A rank matches when the prediction exists, the group is a single
    chain, and it is the predicted one.  Mismatches carry a note; the
    known case is rank 3 at n = 4, where the predicted code coincides
    with the rank-2 code and the actual third place is a two-way tie.
    """
    predictions = predicted_extremal_codes(ranking.direction, ranking.n)
    checks: dict[int, TheoremCheck] = {}
    for rank in range(1, ranking.num_ranks + 1):
        group = ranking.rank_group(rank)
        predicted = predictions.get(rank)
        if predicted is None:
            if rank == 3 and ranking.n == 4:
                tied = ", ".join(str(e.code) for e in group)
                checks[rank] = TheoremCheck(
                    rank=rank,
                    matches=False,
                    note=(
                        "no unique third chain is predicted at n=4 (the "
                        f"prescribed code collapses onto rank 2); observed tie: {tied}"
                    ),
                )
            else:
                checks[rank] = TheoremCheck(rank=rank, matches=None)
            continue
        if len(group) == 1 and group[0].code == predicted:
            checks[rank] = TheoremCheck(rank=rank, matches=True)
        elif len(group) > 1:
            tied = ", ".join(str(e.code) for e in group)
            checks[rank] = TheoremCheck(
                rank=rank,
                matches=False,
                note=f"expected {predicted} alone, found a tie: {tied}",
            )
        else:
            checks[rank] = TheoremCheck(
                rank=rank,
                matches=False,
                note=f"expected {predicted}, found {group[0].code}",
            )
    return checks
