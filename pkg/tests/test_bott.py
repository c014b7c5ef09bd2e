import pytest
from hypothesis import given, strategies as st

from pfaffext.bott import BottResult, bott_evaluate, ext_via_bott


def test_structure_sheaf():
    assert bott_evaluate((0, 0), (0, 0, 0, 0)) == BottResult(0, (0,) * 6)


def test_top_cohomology_hand_sort():
    # gamma + rho = (4,3,8,7,6,5): eight inversions
    assert bott_evaluate((-1, -1), (5, 5, 5, 5)) == BottResult(8, (3,) * 6)


def test_repeated_entry_vanishes():
    assert bott_evaluate((0, 0), (1, 0)) is None


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        bott_evaluate((0, 1), (0,))


weights = st.lists(st.integers(-4, 4), min_size=1, max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


@given(weights, weights)
def test_bott_preserves_size(alpha, beta):
    res = bott_evaluate(alpha, beta)
    if res is not None:
        assert sum(res.weight) == sum(alpha) + sum(beta)
        assert list(res.weight) == sorted(res.weight, reverse=True)
        assert 0 <= res.q <= len(alpha) * len(beta)
        assert (res.q == 0) == (alpha[-1] >= beta[0])


def test_ext_of_pfaffian_quotient_window():
    ext = ext_via_bott((), 1, 6, (-9, 0))
    assert ext.indices() == [6]
    # degree -6 - a lies in [-9, 0] exactly for -6 <= a <= 3
    assert set(ext.weights(6)) == {(3, 3, 3, 3, a, a) for a in range(-6, 4)}


def test_top_ext_terms():
    assert (6,) * 6 in ext_via_bott((1, 1, 1), 0, 6, (-18, -18)).weights(15)
    assert (6, 6, 6, 6, 5, 5) in ext_via_bott((1, 1), 0, 6, (-17, -17)).weights(15)


def test_invalid_label():
    with pytest.raises(ValueError):
        ext_via_bott((2, 1), 1, 6, (0, 0))
    with pytest.raises(ValueError):
        ext_via_bott((), 3, 6, (0, 0))
