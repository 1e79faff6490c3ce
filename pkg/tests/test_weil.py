import random
from math import isqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ssgenus4.errors import (
    MalformedWeilPolyError,
    NotReducibleError,
    ZeroPolynomialError,
)
from ssgenus4.weil import (
    FactorMultiset,
    WeilPoly,
    enumerate_products,
    filter_by_serre,
    hw_serre_bound,
    poly_eval,
    poly_mul,
    real_weil_poly,
    reduced_frobver_poly,
    render_poly,
    resultant,
    simple_ss_factors,
    sx_check,
)


def wp(high_first, n):
    g = (len(high_first) - 1) // 2
    return WeilPoly(g=g, coeffs=tuple(reversed(high_first)), n=n)


def find_factor(catalog, label):
    hits = [p for p in catalog if p.label == label]
    assert len(hits) == 1, label
    return hits[0]


@pytest.mark.parametrize("n", [3, 5, 11, 63])
def test_catalog_size_and_sx(n):
    catalog = simple_ss_factors(n)
    assert len(catalog) == 12
    assert len({p.label for p in catalog}) == 12
    for p in catalog:
        assert sx_check(p)
    degrees = sorted(p.degree for p in catalog)
    assert degrees == [2, 2, 2, 4, 4, 4, 4, 4, 8, 8, 8, 8]


def test_catalog_n3_degree2_entries():
    catalog = simple_ss_factors(3)
    quads = sorted(tuple(p.coeffs) for p in catalog if p.g == 1)
    assert quads == sorted([(8, 4, 1), (8, -4, 1), (8, 0, 1)])


def test_sx_examples_n3():
    assert sx_check(wp([1, 4, 8], 3))       # a1 = 4, 2^2 | 4
    assert not sx_check(wp([1, 2, 8], 3))   # 2^2 does not divide 2
    assert sx_check(wp([1, 0, 8], 3))       # a1 = 0


@pytest.mark.parametrize("n", [3, 5, 11])
def test_sx_negative_control(n):
    bad = wp([1, 1 << ((n - 1) // 2), 1 << n], n)
    assert not sx_check(bad)


def test_weilpoly_functional_equation_enforced():
    with pytest.raises(MalformedWeilPolyError):
        WeilPoly(g=1, coeffs=(7, 4, 1), n=3)  # c0 != q
    with pytest.raises(MalformedWeilPolyError):
        WeilPoly(g=1, coeffs=(8, 4, 2), n=3)  # not monic
    with pytest.raises(MalformedWeilPolyError):
        WeilPoly(g=2, coeffs=(8, 4, 1), n=3)  # wrong length


def test_a_accessors():
    p = wp([1, 4, 8], 3)
    assert p.a1 == 4
    assert p.a(1) == 4
    with pytest.raises(ValueError):
        p.a(2)
    assert p.to_json_list() == ["8", "4", "1"]


def test_hw_serre_bound_values():
    assert hw_serre_bound(4, 3) == 20
    assert hw_serre_bound(1, 11) == 90
    assert hw_serre_bound(4, 1) == 8
    for n in range(3, 64, 2):
        assert hw_serre_bound(1, n) == isqrt(1 << (n + 2))


def test_enumerate_degree2_n3():
    ms = enumerate_products(3, 2)
    assert len(ms) == 3
    assert [m.a1 for m in ms] == [-4, 0, 4]


def test_enumerate_degree8_n3():
    ms = enumerate_products(3, 8)
    # parts {2,4,8} with 3/5/4 concrete entries: 4 + C(6,2) + 5*C(4,2) + C(6,4)
    assert len(ms) == 64
    assert [m.a1 for m in ms] == sorted(m.a1 for m in ms)
    for m in ms:
        assert m.total_degree == 8
        assert m.a1 == sum(p.a1 * mult for p, mult in m.factors)
    labels = [m.label() for m in ms]
    assert len(set(labels)) == 64


def test_enumerate_a1_multiples_exact():
    ms = filter_by_serre(enumerate_products(3, 8), 4, 3)
    multiples = sorted({m.a1 // 4 for m in ms})
    assert multiples == list(range(-4, 5))


def test_prop10_multisets_present():
    ms = enumerate_products(3, 8)
    catalog = simple_ss_factors(3)
    plus = find_factor(catalog, "X^2+4X+8")
    minus = find_factor(catalog, "X^2-4X+8")
    zero = find_factor(catalog, "X^2+8")
    def shape(m):
        return {(p.label, mult) for p, mult in m.factors}

    plus_ms = [m for m in ms if shape(m) == {(plus.label, 3), (zero.label, 1)}]
    minus_ms = [m for m in ms
                if shape(m) == {(minus.label, 3), (zero.label, 1)}]
    assert len(plus_ms) == 1 and plus_ms[0].a1 == 12
    assert len(minus_ms) == 1 and minus_ms[0].a1 == -12
    # every |a1| = 3 * sqrt(2q) candidate survives the Serre filter
    twelves = [m for m in ms if abs(m.a1) == 12]
    assert set(twelves) <= set(filter_by_serre(ms, 4, 3))


def test_filter_by_serre():
    assert filter_by_serre([], 4, 3) == []
    catalog = simple_ss_factors(3)
    minus = find_factor(catalog, "X^2-4X+8")
    # six aligned quadratics: |a1| = 24 > 20 = bound for g = 4
    big = FactorMultiset(factors=((minus, 6),), total_degree=12, a1=-24)
    assert filter_by_serre([big], 4, 3) == []
    # the 3*sqrt(2q) candidates survive at every odd n
    for n in range(3, 64, 2):
        assert 3 * (1 << ((n + 1) // 2)) <= hw_serre_bound(4, n)


def test_reduced_frobver_reference():
    catalog = simple_ss_factors(3)
    plus = find_factor(catalog, "X^2+4X+8")
    minus = find_factor(catalog, "X^2-4X+8")
    zero = find_factor(catalog, "X^2+8")

    def ms(*pairs):
        return FactorMultiset(
            factors=tuple(pairs),
            total_degree=sum(2 * p.g * m for p, m in pairs),
            a1=sum(p.a1 * m for p, m in pairs),
        )

    # minus-sign triple: pair sums 4,4,4,0 scale to 2,2,2,0 -> (X-2)^3 X
    assert reduced_frobver_poly(ms((minus, 3), (zero, 1))) == [0, -8, 12, -6, 1]
    # plus-sign triple is the mirror: (X+2)^3 X
    assert reduced_frobver_poly(ms((plus, 3), (zero, 1))) == [0, 8, 12, 6, 1]
    # all-trace-zero: X^4
    assert reduced_frobver_poly(ms((zero, 4))) == [0, 0, 0, 0, 1]


def test_reduced_frobver_higher_degree_factors():
    catalog = simple_ss_factors(3)
    sq = find_factor(catalog, "X^4-16X^2+64")  # (X^2 - 8)^2
    assert reduced_frobver_poly(
        FactorMultiset(factors=((sq, 1),), total_degree=4, a1=0)
    ) == [-8, 0, 1]
    oct_zero = find_factor(catalog, "X^8+4096")
    assert reduced_frobver_poly(
        FactorMultiset(factors=((oct_zero, 1),), total_degree=8, a1=0)
    ) == [8, 0, -8, 0, 1]


def test_reduced_frobver_rejects_bad_divisibility():
    p = wp([1, 2, 32], 5)  # pair sum -2 with scale 4
    with pytest.raises(NotReducibleError):
        reduced_frobver_poly(
            FactorMultiset(factors=((p, 1),), total_degree=2, a1=2))


@pytest.mark.parametrize("n", [3, 5])
def test_real_weil_poly_against_numeric_roots(n):
    q = 1 << n
    for p in simple_ss_factors(n):
        h = real_weil_poly(p)
        assert h[-1] == 1 and len(h) == p.g + 1
        roots = np.roots(list(reversed(p.coeffs)))
        pair_sums = sorted((r + q / r).real for r in roots)
        # each sum appears twice (once per pair member); take every other one
        h_roots = sorted(np.roots(list(reversed(h))).real)
        assert np.allclose(pair_sums[::2], h_roots, atol=1e-6)


def test_resultant_reference():
    x_minus_2 = [-2, 1]
    x = [0, 1]
    assert resultant(x_minus_2, x) == 2
    assert abs(resultant(x, [-5, 1])) == 5
    assert abs(resultant(poly_mul(x_minus_2, poly_mul(x_minus_2, x_minus_2)),
                         x)) == 8
    p = [1, 3, 1, 2]
    assert resultant(p, p) == 0
    assert resultant([7], [0, 0, 1]) == 49  # constant vs degree 2
    with pytest.raises(ZeroPolynomialError):
        resultant([0, 0], [1, 1])


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(-9, 9), min_size=2, max_size=4),
    st.lists(st.integers(-9, 9), min_size=2, max_size=4),
    st.lists(st.integers(-9, 9), min_size=2, max_size=3),
)
def test_resultant_multiplicative(p, q, r):
    """Res(pq, r) = Res(p, r) Res(q, r); leading terms never collapse over
    the integers."""
    from ssgenus4.weil import poly_strip

    if not (poly_strip(p) and poly_strip(q) and poly_strip(r)):
        return
    assert resultant(poly_mul(p, q), r) == resultant(p, r) * resultant(q, r)


def test_resultant_vs_root_product():
    # |Res(p, r)| = |lc(p)^deg r * prod r(alpha_i)| via numpy roots
    rng = random.Random(31)
    for _ in range(30):
        p = [rng.randint(-5, 5) for _ in range(rng.randint(2, 5))]
        r = [rng.randint(-5, 5) for _ in range(rng.randint(2, 5))]
        from ssgenus4.weil import poly_strip
        p, r = poly_strip(p), poly_strip(r)
        if len(p) < 2 or len(r) < 2:
            continue
        roots = np.roots(list(reversed(p)))
        prod = p[-1] ** (len(r) - 1)
        for alpha in roots:
            prod = prod * poly_eval_c(r, alpha)
        assert np.isclose(abs(resultant(p, r)), abs(prod), rtol=1e-4)


def poly_eval_c(p, x):
    acc = 0j
    for c in reversed(p):
        acc = acc * x + c
    return acc


def test_render_poly():
    assert render_poly([8, 4, 1]) == "X^2+4X+8"
    assert render_poly([8, -4, 1]) == "X^2-4X+8"
    assert render_poly([0, -8, 12, -6, 1]) == "X^4-6X^3+12X^2-8X"
    assert render_poly([0, 1]) == "X"
    assert render_poly([0]) == "0"


def test_expand_product_degree():
    ms = enumerate_products(3, 8)
    for m in ms[:8]:
        coeffs = m.expand()
        assert len(coeffs) == 9
        assert coeffs[-1] == 1
        assert coeffs[7] == m.a1  # X^7 coefficient is the trace sum


def test_enumerate_rejects_odd_degree():
    with pytest.raises(ValueError):
        enumerate_products(3, 7)
    with pytest.raises(ValueError):
        simple_ss_factors(4)
