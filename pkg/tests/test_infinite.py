import pytest

from circwords.abelian import circular_spectrum, linear_spectrum
from circwords.christoffel import Slope, christoffel
from circwords.infinite import (
    BitSource,
    expand,
    fibonacci_bit,
    infinite_report,
    morphism_images,
    window_complexity,
    window_profile,
)
from circwords.ternary import phi
from circwords.words import Word, canonicalize


def fibonacci_substitution(length):
    w = "0"
    while len(w) < length:
        w = "".join("01" if c == "0" else "0" for c in w)
    return w[:length]


def test_fibonacci_source_matches_substitution():
    assert "".join(str(fibonacci_bit(i)) for i in range(2000)) == fibonacci_substitution(2000)


def test_fibonacci_source_extends_to_negative_indices():
    # mechanical word: every window of length n has 0 or 1 ones beyond the minimum
    bits = BitSource("fibonacci").take(-300, 300)
    for n in range(1, 30):
        counts = {sum(bits[i : i + n]) for i in range(len(bits) - n + 1)}
        assert len(counts) == 2


@pytest.mark.parametrize("m, n, q, img0, img1", [(4, 3, "12021", "1202120", "1202102"), (2, 1, "1", "120", "102")])
def test_morphism_images(m, n, q, img0, img1):
    spec = morphism_images(m, n)
    assert (str(spec.q), str(spec.image0), str(spec.image1)) == (q, img0, img1)
    assert len(spec.image0) == len(spec.image1) == m + n


def test_morphism_images_need_even_m():
    with pytest.raises(ValueError):
        morphism_images(3, 1)


def test_expand_explicit_bits():
    assert str(expand(BitSource("bits", bits="01"), morphism_images(4, 3), 0, 14)) == "1202120" + "1202102"
    assert str(expand(BitSource("bits", bits="0"), morphism_images(2, 1), 0, 3)) == "120"
    # periodic extension to the left
    assert str(expand(BitSource("bits", bits="01"), morphism_images(2, 1), -3, 3)) == "102120"


def test_expand_fibonacci_prefix():
    images = {"0": "120", "1": "102"}
    expected = "".join(images[b] for b in fibonacci_substitution(30))[:70]
    assert str(expand(BitSource("fibonacci"), morphism_images(2, 1), 0, 70)) == expected


def test_expand_windows_are_consistent():
    src = BitSource("seed", seed=7)
    spec = morphism_images(4, 3)
    whole = expand(src, spec, -40, 60)
    assert expand(src, spec, -13, 25) == whole[27:65]
    assert expand(src, spec, 5, 5) == ()


def test_seeded_source_is_reproducible():
    a = BitSource("seed", seed=123).take(-100, 300)
    assert a == BitSource("seed", seed=123).take(-100, 300)
    assert a != BitSource("seed", seed=124).take(-100, 300)
    assert BitSource("seed", seed=123).take(10, 20) == a[110:120]


def test_bit_source_parse():
    assert BitSource.parse("fibonacci").kind == "fibonacci"
    assert BitSource.parse("bits:0110").bits == "0110"
    assert BitSource.parse("seed:42").seed == 42
    assert BitSource.parse("random", default_seed=9).seed == 9
    with pytest.raises(ValueError):
        BitSource.parse("nope")
    with pytest.raises(ValueError):
        BitSource.parse("bits:012")


def test_window_complexity():
    assert window_complexity("120120", 3) == 1
    seg = Word("1202120120")
    assert window_complexity(seg, len(seg)) == 1
    assert window_profile("0011", 4) == [2, 3, 2, 1]
    with pytest.raises(ValueError):
        window_complexity("012", 4)


def test_window_complexity_matches_linear_spectrum():
    seg = expand(BitSource("seed", seed=3), morphism_images(4, 3), 0, 300)
    assert window_profile(seg, 40) == [len(linear_spectrum(seg, n)) for n in range(1, 41)]


@pytest.mark.parametrize("source", [BitSource("seed", seed=s) for s in range(5)] + [BitSource("bits", bits="0001101")])
@pytest.mark.parametrize("mn", [(2, 1), (4, 3), (6, 1), (2, 5)])
def test_any_source_stays_three_bounded(source, mn):
    seg = expand(source, morphism_images(*mn), -200, 2000)
    assert max(window_profile(seg, 120)) <= 3


def test_segment_spectra_lie_in_the_circular_power_spectra():
    for m, n in [(2, 1), (4, 3), (2, 3)]:
        spec = morphism_images(m, n)
        seg = expand(BitSource("fibonacci"), spec, 0, 3000)
        block = m + n
        for length in range(1, 3 * block):
            # at multiples of the block length the twist contributes new vectors
            if length % block == 0:
                continue
            p = length // block + 2
            circ = set(circular_spectrum(canonicalize(phi(christoffel(Slope(m, n), p))), length))
            assert set(linear_spectrum(seg, length)) <= circ


def test_infinite_report():
    rep = infinite_report(2, 1, BitSource("fibonacci"), 60, 10)
    assert rep["allAtMost3"] and rep["allExactly3"]
    assert len(rep["segment"]) == 60
    assert rep["aperiodic"] is True
    assert "segment" not in infinite_report(2, 1, BitSource("fibonacci"), 60, 10, include_segment=False)
