"""Which chains have the smallest and largest Wiener index?

Exhaustive ranking confirms the predicted pattern: the all-O (ortho)
chain is the unique minimum and the all-P (para) chain the unique
maximum, with single-M variants in second and third place.  Length 4
is the one exception worth seeing: third place is a tie.
"""

from hexchain import ChainKind, matches_theorem, rank_extremal


def show(kind: ChainKind, n: int, direction: str, top: int) -> None:
    ranking = rank_extremal(kind, n, direction, top)
    checks = matches_theorem(ranking)
    print(f"{kind.value}, n = {n}, {direction}imum side:")
    for entry in ranking.entries:
        check = checks[entry.rank]
        flag = {True: "as predicted", False: "NOT as predicted", None: "no prediction"}[check.matches]
        note = f"  [{check.note}]" if check.note else ""
        print(f"  rank {entry.rank}: {str(entry.code):<8} W = {entry.wiener:<6} ({flag}){note}")
    print()


def main() -> None:
    show(ChainKind.SPIRO, 5, "min", 3)
    show(ChainKind.SPIRO, 5, "max", 3)
    show(ChainKind.POLYPHENYL, 8, "min", 3)

    print("the length-4 exception: the prescribed third-place code collapses")
    print("onto second place, and two different chains share the actual third W:\n")
    show(ChainKind.SPIRO, 4, "min", 3)

    # Every non-extremal chain sits strictly between the all-O and
    # all-P values; peek at the full spread for one small length.
    ranking = rank_extremal(ChainKind.SPIRO, 6, "min", top=45)
    spread = [entry.wiener for entry in ranking.entries]
    print(f"n = 6 spiro spread: {len(spread)} chains, "
          f"W from {min(spread)} to {max(spread)}, "
          f"{len(set(spread))} distinct values")


if __name__ == "__main__":
    main()
