import pytest
from hypothesis import given, settings, strategies as st

from pfaffext.bott import ext_via_bott
from pfaffext.extmaps import (disjointness_check, ext_map_analysis,
                              ext_of_quotient, rectangles, tall_rectangles,
                              verify_injectivity_powers)
from pfaffext.ideals import enumerate_ideals, normalize, pfaffian_power, z_set
from pfaffext.selftest import all_labels

WINDOW = (-18, -6)
X = normalize([(2, 1)], 6)
Y = pfaffian_power(2, 2, 6)


def test_ext_of_power_square():
    ext = ext_of_quotient(Y, WINDOW)
    assert ext.indices() == [6, 15]
    assert ext.at(6) == {(3, 3, 3, 3, a, a): 1 for a in range(4)} | \
        {(4, 4, 3, 3, a, a): 1 for a in range(-1, 4)}
    assert ext.at(15) == {(6,) * 6: 1}


def test_ext_of_basic_ideal():
    ext = ext_of_quotient(X, WINDOW)
    assert ext.indices() == [6, 15]
    assert ext.at(6) == {(3, 3, 3, 3, a, a): 1 for a in range(4)}
    assert ext.at(15) == {(6, 6, 6, 6, 5, 5): 1, (6,) * 6: 1}


def test_pfaffian_quotient_is_cohen_macaulay():
    assert ext_of_quotient(pfaffian_power(2, 1, 6), (-60, 30)).indices() == [6]


def test_ext_matches_bott_sum():
    for ideal in [X, Y, normalize([(2, 2, 1)], 7)]:
        via_bott = None
        for z, l in z_set(ideal):
            part = ext_via_bott(z, l, ideal.n, (-25, 5))
            via_bott = part if via_bott is None else via_bott + part
        assert ext_of_quotient(ideal, (-25, 5)) == via_bott


def test_ext_parallel_matches_serial():
    assert ext_of_quotient(Y, (-30, 0), workers=2) == ext_of_quotient(Y, (-30, 0))


def test_map_analysis_example():
    maps = ext_map_analysis(X, Y, WINDOW)
    assert not maps.kernel.at(6)
    assert maps.cokernel.at(6) == {(4, 4, 3, 3, a, a): 1 for a in range(-1, 4)}
    assert maps.kernel.at(15) == {(6, 6, 6, 6, 5, 5): 1}
    assert maps.image.at(15) == {(6,) * 6: 1}
    assert not maps.cokernel.at(15)
    assert {r["role"] for r in maps.records()} == {"kernel", "image", "cokernel"}


def test_identity_map():
    maps = ext_map_analysis(Y, Y, WINDOW)
    assert not maps.kernel and not maps.cokernel
    assert maps.image == ext_of_quotient(Y, WINDOW)


def test_non_nested_pair_rejected():
    with pytest.raises(ValueError):
        ext_map_analysis(Y, X, WINDOW)
    with pytest.raises(ValueError):
        ext_map_analysis(Y, pfaffian_power(2, 2, 7), WINDOW)


ideals6 = list(enumerate_ideals(6, 2))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ideals6), st.sampled_from(ideals6))
def test_map_analysis_accounts_for_everything(a, b):
    big, small = (a, b) if a.includes(b) else (b, a)
    if not big.includes(small):
        return
    maps = ext_map_analysis(big, small, (-20, 0))
    assert maps.kernel + maps.image == ext_of_quotient(big, (-20, 0))
    assert maps.image + maps.cokernel == ext_of_quotient(small, (-20, 0))


@pytest.mark.parametrize("k,d,n", [(2, 2, 6), (3, 4, 8), (3, 5, 6), (4, 2, 8), (1, 3, 5)])
def test_injectivity_examples(k, d, n):
    report = verify_injectivity_powers(k, d, n)
    assert report.ok
    assert report.symbolic_in_power and report.symbolic_in_next_symbolic


def test_rectangles():
    assert rectangles((), 1, 6) == [(1, 1)]
    assert rectangles((2, 1, 0), 0, 6) == [(3,), (2, 2), (1, 1, 1)]
    assert tall_rectangles((2, 1, 0), 0, 6) == [(2, 2), (1, 1, 1)]
    assert tall_rectangles((), 2, 6) == []


@pytest.mark.parametrize("z,l,n", [((), 1, 6), ((1, 1), 1, 6), ((1, 1, 1), 2, 7)])
def test_disjointness_examples(z, l, n):
    report = disjointness_check(z, l, n, (-20, 20))
    assert report.ok and report.terms_checked > 0


@pytest.mark.parametrize("n", range(2, 8))
def test_disjointness_all_small_labels(n):
    for z, l in all_labels(n, 2):
        assert disjointness_check(z, l, n, (-20, 20)).ok
