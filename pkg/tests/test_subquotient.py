from math import comb

import pytest

from pfaffext.bott import ext_via_bott
from pfaffext.partitions import Partition
from pfaffext.selftest import all_labels
from pfaffext.subquotient import (ext_closed_form, ext_index, make_label,
                                  reg_subquotient, t_vectors, weight_family)

P = Partition


def test_t_vectors_examples():
    assert t_vectors(P(()), 1, 6) == ((1, 1, 1, 1),)
    assert t_vectors(P((1, 1)), 1, 6) == ((1, 1, 1, 1),)
    assert t_vectors(P(()), 0, 6) == ((0,) * 6,)


def test_t_vectors_pair_up():
    for n in range(2, 9):
        for z, l in all_labels(n, 3):
            for t in t_vectors(z, l, n):
                assert t[0] == l and len(t) == n - 2 * l
                assert all(t[2 * i] == t[2 * i + 1] for i in range((n - 2 * l) // 2))


def test_ext_index_examples():
    assert ext_index((1, 1, 1, 1), 1, 6) == 6
    assert ext_index((0,) * 6, 0, 6) == 15
    assert ext_index((1,) * 5, 1, 7) == 10


def test_weight_family_examples():
    fam = weight_family(P(()), 1, (1, 1, 1, 1), 6)
    assert fam.fixed == {1: 3, 2: 3, 3: 3, 4: 3}
    assert (5, 6) in fam.pair_constraints
    assert fam.upper_bounds == {5: 3}
    assert not fam.is_finite
    assert (3, 3, 3, 3, -7, -7) in fam
    assert (3, 3, 3, 3, 2, 1) not in fam

    fam = weight_family(P((1, 1)), 1, (1, 1, 1, 1), 6)
    assert fam.largest() == (4, 4, 3, 3, 3, 3)

    fam = weight_family(P((1, 1, 1)), 0, (0,) * 6, 6)
    assert fam.is_finite and fam.smallest() == fam.largest() == (6,) * 6


def test_weight_family_rejects_bad_t():
    with pytest.raises(ValueError):
        weight_family(P(()), 1, (1, 1, 0, 0), 6)


def test_ext_closed_form_examples():
    ext = ext_closed_form((), 1, 6, (-9, -6))
    assert sorted(ext.weights(6)) == [(3, 3, 3, 3, a, a) for a in range(4)]
    assert ext.indices() == [6]
    assert ext_closed_form((1, 1), 0, 6, (-17, -17)).weights() == {(6, 6, 6, 6, 5, 5)}
    assert not ext_closed_form((1, 1), 0, 6, (5, 4))


def test_reg_examples():
    assert reg_subquotient(P(()), 1, 6) == 3
    assert reg_subquotient(P((1, 1)), 1, 6) == 4
    assert reg_subquotient(P((1, 1, 1)), 0, 6) == 3
    assert reg_subquotient(P((1, 1)), 0, 6) == 2


def test_invalid_labels():
    with pytest.raises(ValueError):
        make_label((2, 1), 1, 6)
    with pytest.raises(ValueError):
        make_label((1, 1, 1, 1), 0, 6)
    with pytest.raises(ValueError):
        make_label((), 3, 6)


@pytest.mark.parametrize("n", range(2, 8))
def test_matches_bott_oracle(n):
    for z, l in all_labels(n, 2):
        for window in [(-20, 20), (-40, -10)]:
            assert ext_closed_form(z, l, n, window) == ext_via_bott(z, l, n, window), (z, l, window)


@pytest.mark.parametrize("n", range(2, 8))
def test_reg_is_max_over_terms(n):
    # the top weight of each family sits in the window [-(D + 10), 10]
    for z, l in all_labels(n, 2):
        ext = ext_closed_form(z, l, n, (-(comb(n, 2) + 10) - 3 * n, 10))
        assert max(-deg - j for j, _w, deg, _m in ext) == reg_subquotient(z, l, n)


@pytest.mark.parametrize("n", range(2, 8))
def test_weights_even_and_parity(n):
    for z, l in all_labels(n, 2):
        ext = ext_closed_form(z, l, n, (-30, 10))
        base = comb(n, 2) - comb(2 * l, 2)
        for j, w, deg, _m in ext:
            assert sum(w) % 2 == 0 and list(w) == sorted(w, reverse=True)
            assert (j - base) % 2 == 0
