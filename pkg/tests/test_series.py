import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleincoh import oracles
from kleincoh.moduli import rank1_presentation
from kleincoh.series import (
    AlgebraPresentation,
    GeneratorSpec,
    Kind,
    PoincareSeries,
    dim_in_degree,
    exterior,
    product_closed_form,
    render,
    series_eq,
    series_mul,
    series_of,
)


@st.composite
def generators(draw, index=0):
    kind = draw(st.sampled_from(list(Kind)))
    exp = draw(st.sampled_from([2, 4, 8, 16])) if kind is Kind.TRUNCATED else None
    return GeneratorSpec("x", draw(st.integers(1, 5)), kind, exp, sub=index)


@st.composite
def presentations(draw, max_gens=6, tag="x"):
    n = draw(st.integers(0, max_gens))
    gens = []
    for i in range(n):
        g = draw(generators(i))
        gens.append(GeneratorSpec(tag, g.degree, g.kind, g.exponent, sub=i))
    return AlgebraPresentation(tuple(gens))


def test_exterior_degree_one_is_binomial():
    for g in range(8):
        s = series_of(exterior("a", [1] * g), 10)
        assert list(s.coefficients) == [math.comb(g, d) for d in range(11)]


def test_polynomial_degree_one_is_all_ones():
    s = series_of(AlgebraPresentation((GeneratorSpec("x", 1, Kind.POLYNOMIAL),)), 12)
    assert s.coefficients == (1,) * 13


def test_truncated_generator_enumerated():
    # monomials 1, x, x^2, x^3
    p = AlgebraPresentation((GeneratorSpec("x", 1, Kind.TRUNCATED, 4),))
    assert series_of(p, 6).coefficients == (1, 1, 1, 1, 0, 0, 0)
    assert oracles.brute_series(p, 6) == [1, 1, 1, 1, 0, 0, 0]


def test_series_mul_and_eq():
    one_plus_t = PoincareSeries(3, (1, 1, 0, 0))
    assert series_mul(one_plus_t, one_plus_t).coefficients == (1, 2, 1, 0)
    a = exterior("x", [1, 2])
    b = AlgebraPresentation(tuple(reversed(a.generators)))
    assert series_eq(series_of(a, 10), series_of(b, 10))
    assert series_mul(PoincareSeries(5, (1,) * 6), PoincareSeries(2, (1, 0, 0))).truncation == 2


def test_dim_in_degree_rank1_example():
    # (1+t)^2/(1-t), expanded by the oracle
    want = oracles.expand_product([oracles.one_plus(1)] * 2 + [oracles.geometric(1, 6)], 6)
    assert want[:4] == [1, 3, 4, 4]
    assert dim_in_degree(rank1_presentation(1, 1), 2) == want[2] == 4


def test_product_closed_form_examples():
    assert product_closed_form([("plus", 1, 4)], 6).coefficients == (1, 4, 6, 4, 1, 0, 0)
    want = oracles.expand_product([oracles.one_plus(i) for i in (1, 2, 3)], 8)
    assert want == [1, 1, 1, 2, 1, 1, 1, 0, 0]
    got = product_closed_form([("plus", i, 1) for i in (1, 2, 3)], 8)
    assert list(got.coefficients) == want
    assert product_closed_form([("inverse", 2, 1)], 7).coefficients == (1, 0, 1, 0, 1, 0, 1, 0)
    with pytest.raises(ValueError):
        product_closed_form([("minus", 1, 1)], 4)
    with pytest.raises(ValueError):
        product_closed_form([("plus", 0, 1)], 4)


def test_generator_validation():
    with pytest.raises(ValueError):
        GeneratorSpec("x", 0, Kind.EXTERIOR)
    with pytest.raises(ValueError):
        GeneratorSpec("x", 1, Kind.TRUNCATED, 3)
    with pytest.raises(ValueError):
        GeneratorSpec("x", 1, Kind.TRUNCATED)
    with pytest.raises(ValueError):
        GeneratorSpec("x", 1, Kind.EXTERIOR, 2)
    with pytest.raises(ValueError):
        AlgebraPresentation((GeneratorSpec("x", 1, Kind.EXTERIOR, sub=1), GeneratorSpec("x", 2, Kind.EXTERIOR, sub=1)))


def test_series_validation():
    with pytest.raises(ValueError):
        PoincareSeries(2, (1, 0))
    with pytest.raises(ValueError):
        PoincareSeries(1, (1, -1))


def test_exact_big_coefficients():
    # 200 exterior classes of degree 1: C(200, 100) needs far more than 64 bits
    s = series_of(exterior("a", [1] * 200), 100)
    assert s.coefficients[100] == math.comb(200, 100)
    assert s.coefficients[100] > 2**64


@settings(max_examples=300, deadline=None)
@given(presentations())
def test_series_matches_monomial_enumeration(p):
    assert list(series_of(p, 12).coefficients) == oracles.brute_series(p, 12)


@settings(max_examples=200, deadline=None)
@given(presentations(tag="x"), presentations(tag="y"), st.integers(0, 30))
def test_series_multiplicative(p, q, n):
    assert series_of(p.tensor(q), n) == series_mul(series_of(p, n), series_of(q, n))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.sampled_from([2, 4, 8, 16]))
def test_truncated_factor_identity(k, p):
    # (1 + t^k + ... + t^{k(p-1)}) (1 - t^k) = 1 - t^{kp}
    n = k * p + 5
    trunc = series_of(AlgebraPresentation((GeneratorSpec("x", k, Kind.TRUNCATED, p),)), n)
    one_minus = [0] * (k + 1)
    one_minus[0], one_minus[k] = 1, -1
    got = oracles.poly_mul(trunc.coefficients, one_minus, n)
    want = [0] * (n + 1)
    want[0], want[k * p] = 1, -1
    assert got == want


def test_exterior_on_m_generators_is_m_factors():
    p = exterior("a", [1, 1, 3])
    assert len(p.generators) == 3
    assert all(g.kind is Kind.EXTERIOR for g in p.generators)


def test_json_round_trip():
    p = AlgebraPresentation(
        (
            GeneratorSpec("omega", 2, Kind.POLYNOMIAL, sup=2),
            GeneratorSpec("wbar", 1, Kind.TRUNCATED, 4, sub=2),
        ),
        {"source": "test"},
    )
    obj = p.to_json_obj()
    assert obj["generators"][0] == {"label": "omega", "sup": 2, "sub": None, "degree": 2, "kind": "polynomial"}
    assert obj["generators"][1]["exponent"] == 4
    assert AlgebraPresentation.from_json_obj(obj) == p
    s = series_of(p, 5)
    assert s.to_json_obj() == {"truncation": 5, "coefficients": list(s.coefficients)}
    assert PoincareSeries.from_json_obj(s.to_json_obj()) == s


def test_render_groups_factors():
    assert render(rank1_presentation(1, 2)) == "Z/2[w1] (x) /\\[a_1,a_2] (x) /\\[b_1]"
    assert render(AlgebraPresentation(())) == "Z/2"
