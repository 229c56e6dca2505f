"""Picard lattice: intersection form, cones, class grammar."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hirzcoh.hirzebruch import (
    C,
    F,
    ZERO,
    ClassParseError,
    DivisorClass,
    SurfaceContext,
    format_class,
    parse_class,
)

H = DivisorClass(1, 3)


def test_intersection_examples():
    ctx = SurfaceContext(2)
    assert ctx.intersect(C, C) == -2
    assert ctx.intersect(F, F) == 0
    assert ctx.intersect(C, F) == 1
    assert ctx.intersect(H, H) == 4  # -2 + 3 + 3


def test_canonical_class():
    assert SurfaceContext(2).canonical_class == DivisorClass(-2, -4)
    assert SurfaceContext(0).canonical_class == DivisorClass(-2, -2)
    assert SurfaceContext(1).canonical_class == DivisorClass(-2, -3)


@pytest.mark.parametrize("e", range(6))
def test_canonical_class_adjunction(e):
    # K.C + C.C = 2g(C) - 2 = -2 for the rational section C
    ctx = SurfaceContext(e)
    k = ctx.canonical_class
    assert ctx.intersect(k, C) + ctx.intersect(C, C) == -2
    # and the same along a fiber
    assert ctx.intersect(k, F) + ctx.intersect(F, F) == -2


def test_negative_twist_rejected():
    with pytest.raises(ValueError):
        SurfaceContext(-1)


def test_cone_examples():
    ctx = SurfaceContext(2)
    assert ctx.is_ample(H)
    assert ctx.is_psef(C) and not ctx.is_nef(C)
    assert ctx.is_nef(ZERO) and not ctx.is_big(ZERO)


def test_intersection_bilinear_symmetric():
    rng = random.Random(20260810)
    for _ in range(1000):
        e = rng.randrange(0, 4)
        ctx = SurfaceContext(e)
        d1, d2, d3 = (
            DivisorClass(rng.randint(-100, 100), rng.randint(-100, 100))
            for _ in range(3)
        )
        n = rng.randint(-5, 5)
        assert ctx.intersect(d1, d2) == ctx.intersect(d2, d1)
        assert ctx.intersect(d1 + d3, d2) == ctx.intersect(d1, d2) + ctx.intersect(d3, d2)
        assert ctx.intersect(n * d1, d2) == n * ctx.intersect(d1, d2)


def _classes(bound):
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            yield DivisorClass(a, b)


@pytest.mark.parametrize("e", range(4))
def test_cone_inclusions_exhaustive(e):
    ctx = SurfaceContext(e)
    for d in _classes(20):
        if ctx.is_ample(d):
            assert ctx.is_nef(d) and ctx.is_big(d)
        if ctx.is_nef(d):
            assert ctx.is_psef(d)
        if ctx.is_big(d):
            assert ctx.is_psef(d)


@pytest.mark.parametrize("e", range(4))
def test_cone_sum_closure_exhaustive(e):
    # nef + nef stays nef and psef + psef stays psef: the determinant-level
    # shadow of extension positivity for line-bundle classes.
    ctx = SurfaceContext(e)
    nef = [d for d in _classes(20) if ctx.is_nef(d)]
    psef = [d for d in _classes(20) if ctx.is_psef(d)]
    for d1 in nef:
        for d2 in nef:
            assert ctx.is_nef(d1 + d2)
    for d1 in psef:
        for d2 in psef:
            assert ctx.is_psef(d1 + d2)


@pytest.mark.parametrize("e", range(4))
def test_nef_duality_exhaustive(e):
    # the Mori cone of F_e is spanned by C and F
    ctx = SurfaceContext(e)
    for d in _classes(20):
        dual = ctx.intersect(d, C) >= 0 and ctx.intersect(d, F) >= 0
        assert ctx.is_nef(d) == dual


def test_parse_examples():
    assert parse_class("C+3F") == DivisorClass(1, 3)
    assert parse_class("-2C-4F") == DivisorClass(-2, -4)
    assert parse_class("C") == DivisorClass(1, 0)
    assert parse_class("3F") == DivisorClass(0, 3)
    assert parse_class("0C+0F") == DivisorClass(0, 0)
    assert parse_class(" C - F ") == DivisorClass(1, -1)
    assert parse_class("F+2C") == DivisorClass(2, 1)


@pytest.mark.parametrize(
    "bad",
    ["C+F+F", "", "C3F", "2C+", "x", "CC", "1", "+-C", "C 3F"],
)
def test_parse_rejects(bad):
    with pytest.raises(ClassParseError):
        parse_class(bad)


def test_parse_error_names_token():
    with pytest.raises(ClassParseError, match="3G"):
        parse_class("C+3G")


def test_format_examples():
    assert format_class(DivisorClass(1, 3)) == "C+3F"
    assert format_class(DivisorClass(-2, -4)) == "-2C-4F"
    assert format_class(DivisorClass(0, 0)) == "0C+0F"
    assert format_class(DivisorClass(0, -1)) == "-F"


@given(st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_format_parse_roundtrip(a, b):
    d = DivisorClass(a, b)
    assert parse_class(format_class(d)) == d


def test_class_arithmetic():
    assert 5 * H == DivisorClass(5, 15)
    assert H - C == 3 * F
    assert -(C - F) == DivisorClass(-1, 1)
