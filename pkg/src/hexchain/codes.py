"""Code words naming hexagonal chains.

A chain of n hexagons is written as a word of length n - 2 over the
alphabet {O, M, P}.  The letter at 1-based position i records how link
i + 1 sits relative to link i inside their shared hexagon: at ring
distance 1 (ortho), 2 (meta) or 3 (para).  Reading the chain from the
other end reverses the word without changing the graph, so a word and
its reversal name the same chain; the canonical representative is the
smaller of the two under the order O < M < P.

Chains of length 1 and 2 carry no letters, so their length ``n`` is kept
explicitly on the (empty) word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

LETTERS = ("O", "M", "P")

# Order O < M < P, matching the ring distances 1 < 2 < 3.
LETTER_RANK = {"O": 0, "M": 1, "P": 2}

# Ring distance of the exit vertex from the entry vertex of a hexagon.
RING_DISTANCE = {"O": 1, "M": 2, "P": 3}


class CodeError(ValueError):
    """Malformed code text or a chain length inconsistent with it."""


@dataclass(frozen=True)
class CodeWord:
    """A validated {O,M,P} word together with its chain length ``n``.

    ``letters`` has exactly ``max(n - 2, 0)`` entries.  Instances are
    immutable and hashable; equality includes ``n`` so that the two
    letterless chains (n = 1 and n = 2) stay distinct.
    """

    letters: tuple[str, ...]
    n: int | None = None

    def __post_init__(self):
        if self.n is None:
            if not self.letters:
                raise CodeError("empty code word needs an explicit chain length n (1 or 2)")
            object.__setattr__(self, "n", len(self.letters) + 2)
        if self.n < 1:
            raise CodeError(f"chain length must be >= 1, got {self.n}")
        expected = max(self.n - 2, 0)
        if len(self.letters) != expected:
            raise CodeError(
                f"code of length {len(self.letters)} does not fit a chain of "
                f"{self.n} hexagons (expected {expected} letters)"
            )
        for pos, letter in enumerate(self.letters, start=1):
            if letter not in LETTER_RANK:
                raise CodeError(f"invalid letter {letter!r} at position {pos}")

    def __str__(self):
        return "".join(self.letters)

    @property
    def sort_key(self) -> tuple[int, ...]:
        """Letter ranks under O < M < P, for ordering code words."""
        return tuple(LETTER_RANK[x] for x in self.letters)

    def reverse(self) -> "CodeWord":
        """The same chain read from the other end."""
        return CodeWord(self.letters[::-1], self.n)

    def canonical(self) -> "CodeWord":
        """The smaller of this word and its reversal under O < M < P."""
        rev = self.reverse()
        return self if self.sort_key <= rev.sort_key else rev

    def is_canonical(self) -> bool:
        return self.sort_key <= self.reverse().sort_key

    def is_palindrome(self) -> bool:
        return self.letters == self.letters[::-1]

    def is_constant(self) -> bool:
        """True when all letters agree (vacuously true for n <= 2)."""
        return len(set(self.letters)) <= 1

    def family_letter(self) -> str:
        """The single letter of a constant code ("O" for letterless chains)."""
        if not self.is_constant():
            raise CodeError(f"code {self} is not a single-letter family")
        return self.letters[0] if self.letters else "O"


def parse_code(text: str, n: int | None = None) -> CodeWord:
    """Parse code text into a :class:`CodeWord`.

    Lowercase input is accepted and normalised to upper case.  When ``n``
    is omitted it is inferred as ``len(text) + 2``; empty text then needs
    an explicit ``n`` of 1 or 2.  Invalid characters are reported with
    their 1-based position; an ``n`` that does not match the text length
    raises as well.
    """
    letters = []
    for pos, ch in enumerate(text, start=1):
        upper = ch.upper()
        if upper not in LETTER_RANK:
            raise CodeError(f"invalid letter {ch!r} at position {pos}")
        letters.append(upper)
    if n is None and not letters:
        raise CodeError("empty code word needs an explicit chain length n (1 or 2)")
    return CodeWord(tuple(letters), n)


def canonicalize(code: CodeWord) -> CodeWord:
    """Canonical representative of the chain named by ``code``.

    Idempotent, and identical for a word and its reversal.
    """
    return code.canonical()


def squeeze_code(code: CodeWord) -> CodeWord:
    """Code of the spiro chain obtained by contracting a polyphenyl chain's cut edges.

    The correspondence between the two families is a bijection that
    preserves the code, so this is the identity on words; it exists to
    give the correspondence a name.  See ``graphs.squeeze_graph`` for the
    graph-level contraction.
    """
    return code


def random_code(n: int, rng: random.Random) -> CodeWord:
    """Uniformly random (not necessarily canonical) code for a chain of length n."""
    if n < 1:
        raise CodeError(f"chain length must be >= 1, got {n}")
    return CodeWord(tuple(rng.choice(LETTERS) for _ in range(max(n - 2, 0))), n)
