import numpy as np
import pytest
from hypothesis import given, strategies as st

from schurmin.calculus import (
    all_partials_F,
    all_partials_G_doubled,
    certify_local_min,
    closed_partial_F,
    closed_partial_G,
    delta_report,
    flip_delta,
    prefix_sums,
)
from schurmin.coloring import RColoring, complement, make_zs, parse_coloring
from schurmin.counting import eval_F, eval_G
from schurmin.halfint import HalfInt
from conftest import bit_colorings


def test_flip_delta_examples():
    assert flip_delta(parse_coloring("000"), 1, "F") == 1
    assert flip_delta(parse_coloring("100"), 1, "F") == -1
    # 00010 keeps (1,2,3) and (2,3,5) monochromatic
    assert eval_F(parse_coloring("00010")) == 2
    assert flip_delta(parse_coloring("00110"), 3, "F") == -2


def test_closed_F_small_examples():
    assert closed_partial_F(parse_coloring("000"), 1) == 1
    ones = parse_coloring("111111")
    assert closed_partial_F(ones, 3) == flip_delta(ones, 3, "F")


def test_closed_G_small_example():
    c = parse_coloring("000")
    assert closed_partial_G(c, 1) == flip_delta(c, 1, "G")


def test_index_errors():
    c = parse_coloring("0101")
    for fn in (closed_partial_F, closed_partial_G):
        with pytest.raises(IndexError):
            fn(c, 0)
        with pytest.raises(IndexError):
            fn(c, 5)
    with pytest.raises(IndexError):
        flip_delta(c, 5)


def published_partial_F(c, r):
    """The displayed formula read literally, with x_{r/2} = 0 for odd r."""
    n = c.n
    P = prefix_sums(c)
    xr = c[r]
    big = 1 if 2 * r > n else 0
    tail = 0 if big else (c[r // 2] if r % 2 == 0 else 0) + c[2 * r]
    inner = P[n] + P[n - r] - (n - r // 2) - big - (2 * xr - 1) + xr * big + 1 - tail
    return (2 * xr - 1) * inner


def test_published_form_misses_half_index_for_large_r():
    # the literal form drops x_{r/2} once 2r > n; that term is needed
    seen = False
    for n in range(2, 10):
        for code in range(2**n):
            c = RColoring.from_code(code, n)
            for r in range(1, n + 1):
                gap = published_partial_F(c, r) - closed_partial_F(c, r)
                if r % 2 == 0 and 2 * r > n and c[r // 2] == 1:
                    assert gap == 2 * c[r] - 1
                    seen = True
                else:
                    assert gap == 0
    assert seen


@given(bit_colorings(min_n=1, max_n=80), st.data())
def test_closed_forms_match_oracle(c, data):
    r = data.draw(st.integers(1, c.n))
    assert closed_partial_F(c, r) == flip_delta(c, r, "F")
    assert closed_partial_G(c, r) == flip_delta(c, r, "G")


@given(bit_colorings(min_n=1, max_n=80), st.data())
def test_antisymmetry(c, data):
    r = data.draw(st.integers(1, c.n))
    flipped = c.flip(r)
    assert closed_partial_F(c, r) == -closed_partial_F(flipped, r)
    assert closed_partial_G(c, r) == -closed_partial_G(flipped, r)
    assert flip_delta(c, r, "G") == -flip_delta(flipped, r, "G")


@given(bit_colorings(min_n=1, max_n=60))
def test_vector_forms_match_scalar(c):
    vf = all_partials_F(c.array())
    vg = all_partials_G_doubled(c.array())
    for r in range(1, c.n + 1):
        assert vf[r - 1] == closed_partial_F(c, r)
        assert HalfInt(int(vg[r - 1])) == closed_partial_G(c, r)


@given(bit_colorings(min_n=1, max_n=60), st.lists(st.integers(0, 10**6), max_size=50))
def test_telescoping_along_flip_paths(c, path):
    start = c
    total_F, total_G = 0, HalfInt(0)
    for step in path:
        r = step % c.n + 1
        total_F += closed_partial_F(c, r)
        total_G = total_G + closed_partial_G(c, r)
        c = c.flip(r)
    assert eval_F(start) - eval_F(c) == total_F
    assert eval_G(start) - eval_G(c) == total_G


def test_certify_examples():
    assert certify_local_min(parse_coloring("00110"), "F").is_local_min
    zero5 = parse_coloring("00000")
    cert = certify_local_min(zero5, "F")
    by_oracle = all(flip_delta(zero5, r, "F") <= 0 for r in range(1, 6))
    assert cert.is_local_min == by_oracle
    z0 = certify_local_min(make_zs(0, 1100), "G")
    assert z0.is_local_min and z0.k == 600 and z0.w == 100


@given(bit_colorings(min_n=1, max_n=60))
def test_certificate_fields(c):
    cert = certify_local_min(c, "F", spot_checks=3)
    assert cert.is_local_min == all(d <= 0 for d in cert.deltas)
    assert cert.k == sum(c.colors) and cert.w == 2 * cert.k - c.n
    assert cert.is_local_min == certify_local_min(complement(c), "F", spot_checks=0).is_local_min


def test_delta_report_agrees():
    rep = delta_report(make_zs(1, 46), 10)
    assert rep.agree
    assert rep.as_dict()["delta_G"] == str(rep.delta_G)
