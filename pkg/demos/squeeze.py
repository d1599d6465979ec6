"""Contract a polyphenyl chain into its spiro counterpart.

Contracting every cut edge of a polyphenyl chain (merging the two
endpoints of each hexagon-to-hexagon bridge) yields the spiro chain
with the same code word.  The Wiener indices of the pair are tied by
an exact linear relation, so either one determines the other.
"""

from hexchain import (
    ChainKind,
    SqueezeError,
    build_polyphenyl,
    build_spiro,
    parse_code,
    squeeze_graph,
    squeeze_relation,
    wiener_bfs,
    wiener_closed,
)

WORD = "OMPM"


def main() -> None:
    code = parse_code(WORD)
    n = code.n
    poly = build_polyphenyl(code)
    spiro = build_spiro(code)

    print(f"code {WORD}: polyphenyl chain has {poly.num_vertices} vertices, "
          f"spiro chain {spiro.num_vertices}\n")

    contracted = squeeze_graph(poly)
    print("contracting the cut edges of the polyphenyl chain:")
    print(f"  {poly.num_vertices} vertices, {poly.num_edges} edges  ->  "
          f"{contracted.num_vertices} vertices, {contracted.num_edges} edges")
    print(f"  Wiener index of the contraction: {wiener_bfs(contracted)}")
    print(f"  Wiener index of the spiro chain: {wiener_bfs(spiro)}\n")

    w_spiro = wiener_closed(ChainKind.SPIRO, code)
    w_poly = wiener_closed(ChainKind.POLYPHENYL, code)
    print("the two values satisfy  25 W_poly = 36 W_spiro + 150n^3 - 270n^2 - 177n:")
    print(f"  25 * {w_poly} = {25 * w_poly}")
    print(f"  36 * {w_spiro} + {150 * n**3 - 270 * n**2 - 177 * n} = "
          f"{36 * w_spiro + 150 * n**3 - 270 * n**2 - 177 * n}")
    print(f"  squeeze_relation({n}, {w_spiro}) = {squeeze_relation(n, w_spiro)}\n")

    # The right-hand side is divisible by 25 exactly when w_spiro is a
    # genuine spiro-chain Wiener index for this length; anything else
    # is rejected.
    try:
        squeeze_relation(n, w_spiro + 1)
    except SqueezeError as exc:
        print(f"off-by-one input is caught: {exc}")


if __name__ == "__main__":
    main()
