from collections import Counter

import networkx as nx
import pytest

from hexchain.codes import parse_code
from hexchain.enumeration import enumerate_chains
from hexchain.graphs import (
    ChainKind,
    build_chain,
    build_polyphenyl,
    build_spiro,
    squeeze_graph,
)


def as_nx(chain):
    graph = nx.Graph()
    graph.add_nodes_from(range(chain.num_vertices))
    for u, neighbours in enumerate(chain.adjacency):
        for v in neighbours:
            graph.add_edge(u, v)
    return graph


@pytest.mark.parametrize("text,n", [("", 1), ("", 2), ("O", 3), ("PMMMO", 7)])
def test_spiro_sizes_and_degrees(text, n):
    chain = build_spiro(parse_code(text, n if not text else None))
    assert chain.num_vertices == 5 * n + 1
    assert chain.num_edges == 6 * n
    degrees = Counter(chain.degree_sequence())
    assert degrees[4] == n - 1  # one shared vertex per junction
    assert degrees[2] == chain.num_vertices - (n - 1)
    assert len(chain.cut_vertices) == n - 1
    assert len(chain.hexagons) == n


@pytest.mark.parametrize("text,n", [("", 1), ("", 2), ("M", 3), ("PMMMO", 7)])
def test_polyphenyl_sizes_and_degrees(text, n):
    chain = build_polyphenyl(parse_code(text, n if not text else None))
    assert chain.num_vertices == 6 * n
    assert chain.num_edges == 7 * n - 1
    degrees = Counter(chain.degree_sequence())
    assert degrees[3] == 2 * (n - 1)  # both endpoints of every cut edge
    assert degrees[2] == chain.num_vertices - 2 * (n - 1)
    assert len(chain.attach_pairs) == n - 1


def test_hexagons_are_six_cycles():
    chain = build_spiro(parse_code("OMP"))
    for ring in chain.hexagons:
        assert len(ring) == 6
        for a, b in zip(ring, ring[1:] + ring[:1]):
            assert b in chain.adjacency[a]


def test_build_chain_dispatches():
    code = parse_code("OM")
    assert build_chain(ChainKind.SPIRO, code).num_vertices == 21
    assert build_chain(ChainKind.POLYPHENYL, code).num_vertices == 24
    assert build_chain("spiro", code).num_vertices == 21


def test_chain_graphs_are_connected():
    for code in enumerate_chains(5):
        for kind in ChainKind:
            assert nx.is_connected(as_nx(build_chain(kind, code)))


@pytest.mark.parametrize("kind", list(ChainKind))
def test_reversed_code_gives_isomorphic_graph(kind):
    for text in ["OM", "OMP", "PMO", "OPM", "MPOM"]:
        forward = as_nx(build_chain(kind, parse_code(text)))
        backward = as_nx(build_chain(kind, parse_code(text).reverse()))
        assert nx.is_isomorphic(forward, backward)


def test_squeeze_graph_contracts_to_the_spiro_chain():
    for n in range(1, 6):
        for code in enumerate_chains(n):
            contracted = squeeze_graph(build_polyphenyl(code))
            spiro = build_spiro(code)
            assert contracted.kind is ChainKind.SPIRO
            assert contracted.num_vertices == spiro.num_vertices
            assert contracted.num_edges == spiro.num_edges
            assert nx.is_isomorphic(as_nx(contracted), as_nx(spiro))


def test_squeeze_graph_rejects_spiro_input():
    with pytest.raises(ValueError):
        squeeze_graph(build_spiro(parse_code("O")))


def test_degree_lookup():
    chain = build_spiro(parse_code("", 2))
    assert chain.degree(chain.cut_vertices[0]) == 4
    assert sorted(Counter(chain.degree_sequence()).items()) == [(2, 10), (4, 1)]
