import pytest

from hexchain.codes import parse_code
from hexchain.enumeration import (
    DEFAULT_MAX_N,
    LimitError,
    average_wiener,
    count_chains,
    enumerate_chains,
    exhaustive_limit,
    matches_theorem,
    predicted_extremal_codes,
    rank_extremal,
)
from hexchain.graphs import ChainKind
from hexchain.wiener import wiener_homogeneous


def test_enumerate_smallest_lengths():
    assert [str(c) for c in enumerate_chains(1)] == [""]
    assert [str(c) for c in enumerate_chains(2)] == [""]
    assert [str(c) for c in enumerate_chains(3)] == ["O", "M", "P"]
    assert [str(c) for c in enumerate_chains(4)] == ["OO", "OM", "OP", "MM", "MP", "PP"]


def test_enumerate_yields_canonical_sorted_unique_codes():
    for n in range(1, 9):
        codes = list(enumerate_chains(n))
        assert len(set(codes)) == len(codes)
        assert all(code.is_canonical() for code in codes)
        assert codes == sorted(codes, key=lambda c: c.sort_key)
        assert len(codes) == count_chains(n).distinct


def test_enumerate_rejects_lengths_over_the_limit():
    with pytest.raises(LimitError) as excinfo:
        list(enumerate_chains(100))
    assert excinfo.value.n == 100
    assert excinfo.value.limit == DEFAULT_MAX_N
    assert "100" in str(excinfo.value)
    assert str(DEFAULT_MAX_N) in str(excinfo.value)


def test_enumerate_accepts_explicit_limit():
    with pytest.raises(LimitError):
        list(enumerate_chains(5, limit=4))
    assert len(list(enumerate_chains(5, limit=5))) == 18


def test_limit_env_override(monkeypatch):
    monkeypatch.setenv("HEXCHAIN_MAX_N", "4")
    assert exhaustive_limit() == 4
    with pytest.raises(LimitError):
        list(enumerate_chains(5))
    monkeypatch.setenv("HEXCHAIN_MAX_N", "not-a-number")
    with pytest.raises(ValueError):
        exhaustive_limit()


def test_enumerate_rejects_nonpositive_length():
    with pytest.raises(ValueError):
        list(enumerate_chains(0))


@pytest.mark.parametrize(
    "n,distinct", [(1, 1), (2, 1), (3, 3), (4, 6), (5, 18), (6, 45), (7, 135), (8, 378), (9, 1134), (14, 266085)]
)
def test_census_values(n, distinct):
    census = count_chains(n)
    assert census.distinct == distinct
    assert census.distinct == (census.total_codes + census.palindromic) // 2


def test_census_bounds():
    assert count_chains(42).total_codes == 3**40
    with pytest.raises(OverflowError):
        count_chains(43)
    with pytest.raises(ValueError):
        count_chains(0)


def test_average_values():
    assert average_wiener(ChainKind.SPIRO, 3) == 401
    assert average_wiener(ChainKind.SPIRO, 4) == 848
    assert average_wiener(ChainKind.POLYPHENYL, 4) == 1404
    with pytest.raises(ValueError):
        average_wiener(ChainKind.SPIRO, 0)


@pytest.mark.parametrize("kind", list(ChainKind))
def test_average_equals_all_m_chain_value(kind):
    for n in (1, 2, 17, 1000, 10**4):
        assert average_wiener(kind, n) == wiener_homogeneous(kind, "M", n)


def test_rank_extremal_min_entries():
    ranking = rank_extremal(ChainKind.SPIRO, 5, "min", top=3)
    assert [(str(e.code), e.wiener, e.rank) for e in ranking.entries] == [
        ("OOO", 1285, 1),
        ("OOM", 1360, 2),
        ("OMO", 1385, 3),
    ]


def test_rank_extremal_reports_the_length_four_tie():
    ranking = rank_extremal(ChainKind.SPIRO, 4, "min", top=3)
    assert [e.rank for e in ranking.entries] == [1, 2, 3, 3]
    third = ranking.rank_group(3)
    assert sorted(str(e.code) for e in third) == ["MM", "OP"]
    assert {e.wiener for e in third} == {848}


def test_rank_extremal_max_direction():
    ranking = rank_extremal(ChainKind.POLYPHENYL, 6, "max", top=1)
    assert len(ranking.entries) == 1
    assert str(ranking.entries[0].code) == "PPPP"
    assert ranking.entries[0].wiener == 5202
    wieners = [e.wiener for e in rank_extremal(ChainKind.SPIRO, 6, "max", top=4).entries]
    assert wieners == sorted(wieners, reverse=True)


def test_rank_extremal_argument_errors():
    with pytest.raises(ValueError):
        rank_extremal(ChainKind.SPIRO, 3, "min", 1)
    with pytest.raises(ValueError):
        rank_extremal(ChainKind.SPIRO, 5, "sideways", 1)
    with pytest.raises(ValueError):
        rank_extremal(ChainKind.SPIRO, 5, "min", 0)
    with pytest.raises(LimitError):
        rank_extremal(ChainKind.SPIRO, 50, "min", 1)


def test_predicted_codes():
    assert {r: str(c) for r, c in predicted_extremal_codes("min", 5).items()} == {
        1: "OOO",
        2: "OOM",
        3: "OMO",
    }
    assert {r: str(c) for r, c in predicted_extremal_codes("max", 6).items()} == {
        1: "PPPP",
        2: "MPPP",
        3: "PMPP",
    }
    assert set(predicted_extremal_codes("min", 4)) == {1, 2}


def test_matches_theorem_flags():
    ranking = rank_extremal(ChainKind.SPIRO, 5, "min", top=3)
    checks = matches_theorem(ranking)
    assert all(checks[rank].matches for rank in (1, 2, 3))

    ranking = rank_extremal(ChainKind.SPIRO, 4, "min", top=3)
    checks = matches_theorem(ranking)
    assert checks[1].matches and checks[2].matches
    assert checks[3].matches is False
    assert "tie" in checks[3].note

    # Ranks past the third have no prediction at all.
    ranking = rank_extremal(ChainKind.SPIRO, 6, "min", top=4)
    assert matches_theorem(ranking)[4].matches is None
