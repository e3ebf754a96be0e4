import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from circwords.abelian import (
    abelian_complexity,
    balanced_complexity_bound,
    batch_complexity_and_balance,
    circular_spectrum,
    complexity_profile,
    is_abelian_bounded,
    is_balanced,
    is_balanced_linear,
    linear_spectrum,
    max_complexity,
    minimal_nonbalanced_scale,
    parikh,
    word_report,
)
from circwords.christoffel import Slope
from circwords.oracle import enumerate_necklaces
from circwords.ternary import TwistSpec, phi, twisted
from circwords.words import CircularWord, Word, canonicalize, primitive_decomposition

from conftest import naive_balanced, naive_complexity, naive_max_complexity, naive_spectrum

cws = st.lists(st.integers(0, 2), min_size=1, max_size=14).map(lambda x: canonicalize(Word(x, 3)))


def C(s, N=None):
    return CircularWord.of(s, N)


@pytest.mark.parametrize("w, expected", [("0102010", (4, 2, 1)), ("01011", (2, 3))])
def test_parikh(w, expected):
    assert parikh(w) == expected


def test_parikh_of_empty_word():
    assert parikh(Word("", 3)) == (0, 0, 0)


def test_circular_spectrum_examples():
    assert set(circular_spectrum(C("01011"), 2)) == {(1, 1), (0, 2)}
    assert set(circular_spectrum(C("01210"), 2)) == {(1, 1, 0), (0, 1, 1), (2, 0, 0)}
    assert set(circular_spectrum(C("01210"), 5)) == {(2, 2, 1)}
    with pytest.raises(ValueError):
        circular_spectrum(C("012"), 4)
    with pytest.raises(ValueError):
        circular_spectrum(C("012"), 0)


def test_linear_spectrum_only_uses_the_representative():
    assert set(linear_spectrum("0011", 2)) == {(2, 0), (1, 1), (0, 2)}
    assert set(linear_spectrum("0101", 3)) == {(2, 1), (1, 2)}


@given(cws, st.data())
def test_spectrum_matches_naive(cw, data):
    n = data.draw(st.integers(1, cw.length))
    assert set(circular_spectrum(cw, n)) == naive_spectrum(str(cw), n)
    assert (1 <= n) and all(sum(v) == n for v in circular_spectrum(cw, n))


@pytest.mark.parametrize("w, n, expected", [("01210", 3, 3), ("0212", 2, 2)])
def test_abelian_complexity_examples(w, n, expected):
    assert abelian_complexity(C(w), n) == expected


@given(cws)
def test_full_length_window_is_trivial(cw):
    assert abelian_complexity(cw, cw.length) == 1


def test_bounded_and_max_complexity():
    assert is_abelian_bounded(C("01210"), 3)
    assert not is_abelian_bounded(C("001122"), 3)
    # windows 00,01,11,12,22,20 are six distinct vectors
    assert abelian_complexity(C("001122"), 2) == 6
    assert max_complexity(C("01")) == 2


def test_balanced_examples():
    assert is_balanced(C("0102010"))
    assert not is_balanced(C("01210"))
    assert is_balanced(C("012"))


def test_linear_balance_is_weaker_than_circular():
    # 0110 never shows 00 and 11 side by side, but its class [0011] does
    assert is_balanced_linear("0110")
    assert not is_balanced(C("0110"))
    assert not is_balanced_linear("0011")


def test_minimal_nonbalanced_scale():
    assert minimal_nonbalanced_scale(C("01210")) == 2
    assert minimal_nonbalanced_scale(C("0102010")) is None
    # frozen from a naive per-letter scan of [0212022122]
    w = canonicalize(phi(twisted(TwistSpec(Slope(2, 3), 2, {1}))))
    assert str(w) == "0212022122"
    assert minimal_nonbalanced_scale(w) == 5


@given(cws)
def test_balanced_matches_pairwise_definition(cw):
    assert is_balanced(cw) == naive_balanced(str(cw))


@pytest.mark.parametrize("N, expected", [(1, 1), (2, 2), (3, 3), (4, 6)])
def test_balanced_complexity_bound(N, expected):
    assert balanced_complexity_bound(N) == expected


def test_word_report_schema():
    rep = word_report(C("01210"))
    assert rep == {
        "word": "00121",
        "balanced": False,
        "maxComplexity": 3,
        "complexityByN": [3, 3, 3, 3, 1],
        "minNonbalancedScale": 2,
    }


def test_batch_agrees_with_scalar():
    for N in (2, 3):
        for L in range(N, 10):
            necks = sorted(enumerate_necklaces(N, L))
            rows = np.array([list(c.canonical) for c in necks])
            maxc, bal = batch_complexity_and_balance(rows, N)
            for cw, m, b in zip(necks, maxc, bal):
                assert m == max_complexity(cw)
                assert b == is_balanced(cw)


# -- general properties, exhaustively ---------------------------------------------


def _necklaces(max_len):
    for N in (2, 3):
        for L in range(N, max_len + 1):
            yield from enumerate_necklaces(N, L)


def test_spectrum_symmetry_exhaustive():
    for cw in _necklaces(12):
        prof = complexity_profile(cw)
        ell = cw.length
        for n in range(1, ell):
            assert prof[n - 1] == prof[ell - n - 1], cw


def test_reducibility_exhaustive():
    for cw in _necklaces(12):
        prof = complexity_profile(cw)
        trivial_inside = any(c == 1 for c in prof[:-1])
        assert trivial_inside == (primitive_decomposition(cw.canonical).exponent > 1), cw


def test_power_stability():
    for N in (2, 3):
        for L in range(N, 9):
            for cw in enumerate_necklaces(N, L):
                b = is_balanced(cw)
                for p in (2, 3):
                    assert is_balanced(canonicalize(cw.canonical * p)) == b, (cw, p)


def test_balanced_complexity_bound_exhaustive():
    for cw in _necklaces(12):
        if is_balanced(cw):
            assert max_complexity(cw) <= balanced_complexity_bound(cw.alphabet.size)


def test_all_letters_means_complexity_n_at_scale_one(ternary_necklaces):
    for L, necks in ternary_necklaces.items():
        for s in necks:
            assert abelian_complexity(C(s, 3), 1) == 3


@settings(max_examples=50)
@given(cws)
def test_max_complexity_matches_naive(cw):
    assert max_complexity(cw) == naive_max_complexity(str(cw))
    assert complexity_profile(cw)[0] == naive_complexity(str(cw), 1)
