import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pointplane import (IncidenceStructure, dualize, incident, mutually_incident,
                        perp_planes, perp_points)
from pointplane.incidence import bits, mask_of

from conftest import enc, encs, oracle_perp_planes, oracle_perp_points


@st.composite
def structures(draw, max_size=7):
    n = draw(st.integers(0, max_size))
    m = draw(st.integers(0, max_size))
    cells = draw(st.lists(st.booleans(), min_size=n * m, max_size=n * m))
    return IncidenceStructure(np.array(cells, dtype=bool).reshape(n, m))


@st.composite
def structure_and_sets(draw):
    s = draw(structures())
    sub = lambda k: st.frozensets(st.integers(0, k - 1)) if k else st.just(frozenset())  # noqa: E731
    return s, draw(sub(s.n_points)), draw(sub(s.n_points)), draw(sub(s.n_planes))


def test_bits_roundtrip():
    assert bits(0) == []
    assert bits(0b101001) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001


@pytest.mark.parametrize("p, pi, expected", [(1, 2, True), (3, 1, False)])
def test_incident_examples(pg2, p, pi, expected):
    assert incident(pg2, enc(p), enc(pi)) is expected


def test_incident_is_parity_of_and(pg2):
    for i in range(1, 16):
        for j in range(1, 16):
            assert pg2.incident(enc(i), enc(j)) == (bin(i & j).count("1") % 2 == 0)


def test_incident_out_of_range(pg2):
    with pytest.raises(IndexError):
        pg2.incident(15, 0)
    with pytest.raises(IndexError):
        pg2.incident(0, -1)
    with pytest.raises(IndexError):
        pg2.perp_points([0, 99])


def test_perp_examples(pg2):
    assert perp_points(pg2, encs(1, 2)) == encs(4, 8, 12)
    assert perp_points(pg2, encs(1, 2, 4)) == encs(8)
    assert perp_points(pg2, []) == frozenset(range(15))
    assert perp_planes(pg2, encs(4, 8, 12)) == encs(1, 2, 3)
    assert perp_planes(pg2, encs(8)) == encs(1, 2, 3, 4, 5, 6, 7)
    assert perp_planes(pg2, []) == frozenset(range(15))


def test_perp_examples_match_oracle(pg2):
    for pts in [encs(1, 2), encs(1, 2, 4), frozenset()]:
        assert perp_points(pg2, pts) == oracle_perp_points(pg2.matrix, pts)


def test_mutually_incident_examples(pg2):
    assert mutually_incident(pg2, encs(1, 2), encs(4, 8))
    assert mutually_incident(pg2, [], encs(1, 2, 3))
    assert not mutually_incident(pg2, encs(1, 3), encs(1))


def test_dualize_examples(pg2):
    s = IncidenceStructure(np.ones((2, 5), dtype=bool))
    assert dualize(s).shape == (5, 2)
    assert dualize(dualize(pg2)) == pg2
    fresh = IncidenceStructure(dualize(pg2).matrix.T)
    assert fresh == pg2
    for p in range(15):
        for pi in range(15):
            assert incident(dualize(dualize(pg2)), p, pi) == incident(pg2, p, pi)


def test_structure_is_immutable(pg2):
    with pytest.raises(ValueError):
        pg2.matrix[0, 0] = True


def test_row_and_column_views_agree(pg3):
    for p in range(pg3.n_points):
        for pi in range(pg3.n_planes):
            assert (pi in pg3.planes_through(p)) == (p in pg3.points_on(pi))


def test_empty_structure():
    s = IncidenceStructure.empty()
    assert s.shape == (0, 0)
    assert perp_points(s, []) == frozenset()
    assert dualize(s) == s


@settings(max_examples=200)
@given(structure_and_sets())
def test_perp_matches_oracle(data):
    s, a, _, sigma = data
    assert perp_points(s, a) == oracle_perp_points(s.matrix, a)
    assert perp_planes(s, sigma) == oracle_perp_planes(s.matrix, sigma)


@settings(max_examples=200)
@given(structure_and_sets())
def test_galois_laws(data):
    s, a, b, sigma = data
    small, big = a & b, a | b
    # antitone
    assert perp_points(s, big) <= perp_points(s, small)
    assert perp_planes(s, sigma | {0} if s.n_planes else sigma) <= perp_planes(s, sigma)
    # extensive
    assert a <= perp_planes(s, perp_points(s, a))
    assert sigma <= perp_points(s, perp_planes(s, sigma))
    # triple perp collapses
    assert perp_points(s, perp_planes(s, perp_points(s, a))) == perp_points(s, a)
    assert perp_planes(s, perp_points(s, perp_planes(s, sigma))) == perp_planes(s, sigma)
    # adjunction
    left = a <= perp_planes(s, sigma)
    assert left == mutually_incident(s, a, sigma) == (sigma <= perp_points(s, a))


@settings(max_examples=100)
@given(structure_and_sets())
def test_dualize_swaps_perps(data):
    s, a, _, sigma = data
    d = dualize(s)
    assert d.perp_planes(a) == s.perp_points(a)
    assert d.perp_points(sigma) == s.perp_planes(sigma)
    assert dualize(d) == s
