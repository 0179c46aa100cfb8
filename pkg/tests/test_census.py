import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tempered_kit import census
from tempered_kit.poset import TemperedPoset, all_isomorphisms, is_connected
from tempered_kit.signature import raw_signature

SPACES = [1, 2, 5, 16, 63, 318]
CONNECTED = [1, 1, 3, 10, 44, 238]
CONNECTED_TEMPERED = [2, 4, 20, 125, 1058, 11549]


def test_space_counts():
    rows = census.census(5)
    assert [r.spaces for r in rows] == SPACES[:5]
    assert [r.connected_spaces for r in rows] == CONNECTED[:5]
    assert [r.connected_tempered for r in rows] == CONNECTED_TEMPERED[:5]


@pytest.mark.slow
def test_six_points():
    row = census.census_row(6)
    assert (row.spaces, row.connected_spaces, row.connected_tempered) == (318, 238, 11549)


def test_euler_transform_relates_rows():
    assert census.euler_transform(CONNECTED) == SPACES
    assert census.inverse_euler_transform(SPACES) == CONNECTED
    rows = census.census(5)
    tempered = [r.tempered for r in rows]
    assert census.inverse_euler_transform(tempered) == CONNECTED_TEMPERED[:5]
    assert census.euler_transform(CONNECTED_TEMPERED[:5]) == tempered


def test_inverse_euler_of_listed_tempered_row():
    # value computed independently by power-series expansion
    assert census.inverse_euler_transform([2, 10, 62, 510, 5292, 69364]) == [2, 7, 44, 368, 4026, 55640]


def test_euler_transform_against_series_expansion():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    c = [2, 4, 20, 125, 1058]
    prod = 1
    for k, ck in enumerate(c, start=1):
        prod *= (1 - x**k) ** (-ck)
    series = sympy.series(prod, x, 0, len(c) + 1).removeO()
    assert census.euler_transform(c) == [int(series.coeff(x, n)) for n in range(1, len(c) + 1)]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-50, 500), min_size=1, max_size=8))
def test_transforms_are_mutually_inverse(c):
    assert census.inverse_euler_transform(census.euler_transform(c)) == c


def test_enumerated_spaces_pairwise_non_isomorphic():
    for n in range(1, 5):
        ps = census.enumerate_posets(n)
        tps = [TemperedPoset.cold(p) for p in ps]
        for i, a in enumerate(tps):
            for b in tps[i + 1 :]:
                assert next(all_isomorphisms(a, b), None) is None


def test_brute_force_tempered_count():
    # all labelled orders on 3 points, with all temperatures, up to isomorphism
    import itertools

    from tempered_kit.poset import Poset

    n = 3
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    classes = set()
    connected = set()
    for k in range(len(pairs) + 1):
        for sub in itertools.combinations(pairs, k):
            try:
                p = Poset.from_relation(n, sub)
            except Exception:
                continue
            for temp in itertools.product((0, 1), repeat=n):
                sig = raw_signature(TemperedPoset(p, temp))
                classes.add(sig)
                if is_connected(p):
                    connected.add(sig)
    assert len(connected) == CONNECTED_TEMPERED[n - 1]
    assert len(classes) == census.census_row(n).tempered
    assert set(census.enumerate_tempered(n)) == classes


def test_enumerate_rejects_bad_n():
    with pytest.raises(ValueError):
        census.enumerate_posets(7)
    with pytest.raises(ValueError):
        census.enumerate_posets(0)


def test_threads_env_does_not_change_results(monkeypatch):
    serial = census.enumerate_tempered(5, True)
    monkeypatch.setenv("TEMPERED_KIT_THREADS", "2")
    assert census.enumerate_tempered(5, True) == serial
