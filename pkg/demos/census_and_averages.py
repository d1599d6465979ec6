"""Count all chains of each length and average their Wiener indices.

Two words describe the same chain exactly when one is the reversal of
the other, so the number of distinct chains is (3^(n-2) + p)/2 where p
counts palindromic words.  Averaging the Wiener index over all chains
of a length collapses to a cubic — the value of the all-M chain —
which this script confirms by brute force for small n.
"""

from hexchain import (
    ChainKind,
    average_wiener,
    count_chains,
    enumerate_chains,
    wiener_closed,
    wiener_homogeneous,
)


def main() -> None:
    print("census of distinct chains per length:")
    print(f"  {'n':>3} {'words':>8} {'palindromic':>12} {'distinct':>9}")
    for n in range(1, 15):
        census = count_chains(n)
        print(f"  {n:>3} {census.total_codes:>8} {census.palindromic:>12} "
              f"{census.distinct:>9}")

    print("\nexhaustive mean vs the closed-form average (spiro chains):")
    print(f"  {'n':>3} {'chains':>7} {'mean W':>10} {'cubic':>10} {'all-M chain':>12}")
    for n in range(3, 9):
        codes = list(enumerate_chains(n))
        total = sum(wiener_closed(ChainKind.SPIRO, code) for code in codes)
        mean = total // len(codes)
        print(f"  {n:>3} {len(codes):>7} {mean:>10} "
              f"{average_wiener(ChainKind.SPIRO, n):>10} "
              f"{wiener_homogeneous(ChainKind.SPIRO, 'M', n):>12}")

    # The closed form keeps going long after brute force stops being fun.
    n = 10**4
    print(f"\naverage at n = {n}: spiro {average_wiener(ChainKind.SPIRO, n)}, "
          f"polyphenyl {average_wiener(ChainKind.POLYPHENYL, n)}")
    print("(exact integers; the cubics are always divisible by their denominators)")


if __name__ == "__main__":
    main()
