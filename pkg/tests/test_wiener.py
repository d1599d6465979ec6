"""Unit tests for the four Wiener-index routes and their glue.

The numeric fixtures here were produced by the breadth-first-search
oracle and are frozen: any change to the formulas that shifts a value
is a regression, not a re-derivation.
"""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexchain.codes import CodeWord, parse_code
from hexchain.graphs import ChainKind, build_chain, build_polyphenyl, build_spiro
from hexchain.wiener import (
    FAST_BFS_MIN_VERTICES,
    SqueezeError,
    compute_report,
    poly_weight,
    spiro_weight,
    squeeze_relation,
    vertex_distance_sum,
    wiener_bfs,
    wiener_closed,
    wiener_homogeneous,
    wiener_poly_closed,
    wiener_poly_recurrence,
    wiener_recurrence,
    wiener_spiro_closed,
    wiener_spiro_recurrence,
)

KINDS = (ChainKind.SPIRO, ChainKind.POLYPHENYL)

# (code text, n, spiro W, polyphenyl W) — all BFS-confirmed.
FIXTURES = [
    ("", 1, 27, 27),
    ("", 2, 144, 198),
    ("O", 3, 376, 585),
    ("M", 3, 401, 621),
    ("P", 3, 426, 657),
    ("OO", 4, 748, 1260),
    ("OM", 4, 798, 1332),
    ("MM", 4, 848, 1404),
    ("OP", 4, 848, 1404),
    ("MP", 4, 898, 1476),
    ("PP", 4, 948, 1548),
    ("OOO", 5, 1285, 2295),
    ("OOM", 5, 1360, 2403),
    ("OMO", 5, 1385, 2439),
    ("PPP", 5, 1785, 3015),
    ("PMMMO", 7, 3829, 6993),
]

codes = st.builds(
    lambda text: parse_code(text, n=2 if not text else None),
    st.text(alphabet="OMP", min_size=0, max_size=20),
)


@pytest.mark.parametrize("text,n,w_spiro,w_poly", FIXTURES)
def test_frozen_values(text, n, w_spiro, w_poly):
    code = parse_code(text, n)
    assert wiener_spiro_closed(code) == w_spiro
    assert wiener_poly_closed(code) == w_poly
    assert wiener_spiro_recurrence(code) == w_spiro
    assert wiener_poly_recurrence(code) == w_poly
    if n <= 5:
        assert wiener_bfs(build_spiro(code)) == w_spiro
        assert wiener_bfs(build_polyphenyl(code)) == w_poly


def test_single_hexagon_base_case():
    for kind in KINDS:
        graph = build_chain(kind, parse_code("", 1))
        assert wiener_bfs(graph) == 27
        assert all(vertex_distance_sum(graph, v) == 9 for v in range(6))


@given(codes)
def test_closed_form_equals_recurrence(code):
    assert wiener_spiro_closed(code) == wiener_spiro_recurrence(code)
    assert wiener_poly_closed(code) == wiener_poly_recurrence(code)


@given(codes)
def test_wiener_is_reversal_invariant(code):
    assert wiener_spiro_closed(code) == wiener_spiro_closed(code.reverse())
    assert wiener_poly_closed(code) == wiener_poly_closed(code.reverse())


@given(st.builds(lambda t: parse_code(t), st.text(alphabet="OMP", min_size=1, max_size=5)))
def test_bfs_agrees_with_closed_form(code):
    for kind in KINDS:
        assert wiener_bfs(build_chain(kind, code)) == wiener_closed(kind, code)


@pytest.mark.parametrize("kind", KINDS)
def test_bfs_agrees_with_networkx(kind):
    for text in ["O", "PP", "OMP", "MPOM"]:
        chain = build_chain(kind, parse_code(text))
        graph = nx.Graph(
            (u, v) for u, nbrs in enumerate(chain.adjacency) for v in nbrs
        )
        assert wiener_bfs(chain) == int(nx.wiener_index(graph))


def test_accelerated_path_agrees_with_closed_form():
    # 301 vertices puts this spiro chain on the compiled all-sources path.
    code = CodeWord(tuple("OMP" * 19 + "O"), 60)
    chain = build_spiro(code)
    assert chain.num_vertices >= FAST_BFS_MIN_VERTICES
    assert wiener_bfs(chain) == wiener_spiro_closed(code)


def test_bfs_accepts_plain_adjacency():
    hexagon = [((v - 1) % 6, (v + 1) % 6) for v in range(6)]
    assert wiener_bfs(hexagon) == 27


def test_bfs_rejects_empty_and_disconnected_graphs():
    with pytest.raises(ValueError):
        wiener_bfs([])
    two_triangles = [(1, 2), (0, 2), (0, 1), (4, 5), (3, 5), (3, 4)]
    with pytest.raises(ValueError, match="not connected"):
        wiener_bfs(two_triangles)


def test_vertex_distance_sum_checks_range():
    chain = build_spiro(parse_code("", 1))
    with pytest.raises(ValueError):
        vertex_distance_sum(chain, 6)
    with pytest.raises(ValueError):
        vertex_distance_sum(chain, -1)


def test_link_weights():
    assert spiro_weight("O", 1) == poly_weight("P", 1) == 9
    assert spiro_weight("O", 2) == 14
    assert spiro_weight("M", 2) == 19
    assert spiro_weight("P", 2) == 24
    assert poly_weight("O", 2) == 21
    assert poly_weight("P", 3) == 57


def test_link_weight_bridge_identity():
    for k in range(1, 30):
        for letter in "OMP":
            assert 5 * poly_weight(letter, k) == 6 * spiro_weight(letter, k) + 30 * k - 39


def test_link_weight_errors():
    with pytest.raises(ValueError):
        spiro_weight("O", 0)
    with pytest.raises(ValueError):
        poly_weight("Q", 2)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("family", "OMP")
def test_homogeneous_matches_closed_form(kind, family):
    for n in (1, 2, 3, 7, 25, 50):
        code = CodeWord(tuple(family * max(n - 2, 0)), n)
        assert wiener_homogeneous(kind, family, n) == wiener_closed(kind, code)


def test_homogeneous_errors():
    with pytest.raises(ValueError):
        wiener_homogeneous(ChainKind.SPIRO, "O", 0)
    with pytest.raises(ValueError):
        wiener_homogeneous(ChainKind.SPIRO, "Q", 3)


def test_squeeze_relation_links_the_two_kinds():
    for text, n, w_spiro, w_poly in FIXTURES:
        assert squeeze_relation(n, w_spiro) == w_poly


def test_squeeze_relation_rejects_impossible_values():
    with pytest.raises(SqueezeError):
        squeeze_relation(3, 402)  # 401 is valid; a unit off breaks mod 25
    with pytest.raises(ValueError):
        squeeze_relation(0, 27)


def test_compute_report_defaults():
    report = compute_report(ChainKind.SPIRO, parse_code("PMMMO"))
    assert str(report.code) == "OMMMP"  # canonicalized
    assert report.values == {"bfs": 3829, "recurrence": 3829, "closed": 3829}
    assert report.agree
    assert report.num_vertices == 36
    assert report.num_edges == 42
    record = report.as_record()
    assert record["code"] == "OMMMP"
    assert record["kind"] == "spiro"
    assert record["agree"] is True


def test_compute_report_adds_polynomial_for_families():
    report = compute_report(ChainKind.POLYPHENYL, parse_code("MM"))
    assert set(report.values) == {"bfs", "recurrence", "closed", "polynomial"}
    assert report.agree


def test_compute_report_rejects_polynomial_on_mixed_codes():
    with pytest.raises(ValueError):
        compute_report(ChainKind.SPIRO, parse_code("OM"), ("closed", "polynomial"))
    with pytest.raises(ValueError):
        compute_report(ChainKind.SPIRO, parse_code("O"), ("nonsense",))


def test_dispatch_helpers():
    code = parse_code("OM")
    assert wiener_closed(ChainKind.SPIRO, code) == 798
    assert wiener_recurrence(ChainKind.POLYPHENYL, code) == 1332
