import numpy as np
import pytest
from hypothesis import given, strategies as st

from schurmin.coloring import RColoring, complement, make_zs, parse_coloring
from schurmin.counting import (
    InvalidPalette,
    autocorrelation,
    count_fast,
    count_naive,
    eval_F,
    eval_G,
    max_pairs,
)
from schurmin.halfint import HalfInt
from conftest import bit_colorings, colorings


def triples_by_hand(c, include_equal=False):
    per = [0] * c.r
    for i in range(1, c.n + 1):
        for j in range(i if include_equal else i + 1, c.n + 1):
            if i + j <= c.n and c[i] == c[j] == c[i + j]:
                per[c[i]] += 1
    return per


@pytest.mark.parametrize(
    "text, total, per",
    [("000", 1, (1, 0)), ("00000", 4, (4, 0)), ("00001111110", 2, (2, 0)), ("00110", 0, (0, 0))],
)
def test_naive_examples(text, total, per):
    tc = count_naive(parse_coloring(text))
    assert tc.total == total and tc.per_color == per


@given(colorings(max_n=40), st.booleans())
def test_counters_match_hand_enumeration(c, include_equal):
    per = triples_by_hand(c, include_equal)
    assert list(count_naive(c, include_equal).per_color) == per
    assert list(count_fast(c, include_equal).per_color) == per


def test_include_equal_adds_diagonal():
    # {1,1,2} and {2,2,4} on top of the strict triples
    c = parse_coloring("0000")
    assert count_naive(c).total == 2
    assert count_naive(c, include_equal=True).total == 4
    assert count_fast(c, include_equal=True).total == 4


def test_fft_path_matches_direct():
    rng = np.random.default_rng(3)
    ind = rng.integers(0, 2, 9000)
    direct = np.convolve(ind, ind)
    assert np.array_equal(autocorrelation(ind), direct)


@pytest.mark.parametrize("n", [5000, 12345])
def test_fast_matches_naive_above_fft_threshold(n):
    rng = np.random.default_rng(n)
    for r in (2, 3):
        c = RColoring.from_bits(rng.integers(0, r, n), r)
        assert count_fast(c) == count_naive(c)


@pytest.mark.parametrize("text, value", [("000", 1), ("00110", 0), ("11111", 4)])
def test_eval_F_examples(text, value):
    assert eval_F(parse_coloring(text)) == value


def test_eval_G_examples():
    assert eval_G(parse_coloring("000")) == 1
    assert eval_G(parse_coloring("111")) == HalfInt(-1)


def test_F_rejects_three_colors():
    with pytest.raises(InvalidPalette):
        eval_F(parse_coloring("012"))
    with pytest.raises(InvalidPalette):
        eval_G(parse_coloring("012"))


@given(bit_colorings())
def test_F_bounds_and_symmetry(c):
    f = eval_F(c)
    assert 0 <= f <= max_pairs(c.n)
    assert f == eval_F(complement(c))
    g = eval_G(c)
    assert -c.n <= g - f <= 0


@given(st.integers(1, 300), st.integers(0, 1))
def test_constant_colorings_hit_the_pair_count(n, bit):
    c = RColoring.from_bits([bit] * n)
    assert eval_F(c) == max_pairs(n)


def test_total_is_sum_of_colors():
    c = make_zs(2, 1000)
    tc = count_fast(c)
    assert tc.total == sum(tc.per_color)
    assert tc.as_dict()["per_color"] == list(tc.per_color)
