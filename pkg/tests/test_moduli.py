from collections import Counter

import pytest

from kleincoh import oracles
from kleincoh.klein import InvariantError
from kleincoh.moduli import (
    ModuliParams,
    ab_inventory,
    cross_check,
    em_column_series,
    moduli_report,
    rank1_presentation,
    rankr_presentation,
    stack_series,
)
from kleincoh.series import Kind, dim_in_degree, series_eq, series_of

TYPE1_GRID = [(gp, n) for gp in range(6) for n in range(1, 7) if 2 * gp + n - 1 >= 2]


def _names(p):
    return [(g.label, g.sup, g.sub, g.degree, g.kind, g.exponent) for g in p.generators]


def test_rank1_examples():
    # M-curve of genus 3: omega_1 and three exterior betas
    p = rank1_presentation(0, 4)
    assert _names(p) == [("omega", 1, None, 1, Kind.POLYNOMIAL, None)] + [
        ("beta", None, i, 1, Kind.EXTERIOR, None) for i in (1, 2, 3)
    ]
    p = rank1_presentation(1, 1)
    assert [(g.label, g.sub) for g in p.generators] == [("omega", None), ("alpha", 1), ("alpha", 2)]
    p = rank1_presentation(1, 2)
    assert [(g.label, g.sub) for g in p.generators] == [("omega", None), ("alpha", 1), ("alpha", 2), ("beta", 1)]


@pytest.mark.parametrize("gp,n", TYPE1_GRID)
def test_rank1_has_g_exterior_classes_of_degree_one(gp, n):
    p = rank1_presentation(gp, n)
    assert sum(g.kind is Kind.EXTERIOR for g in p.generators) == 2 * gp + n - 1
    assert {g.degree for g in p.generators} == {1}
    assert dim_in_degree(p, 1) == 2 * gp + n


def test_invalid_curve_data_rejected():
    with pytest.raises(InvariantError):
        rank1_presentation(0, 2)
    with pytest.raises(InvariantError):
        rankr_presentation(1, 0, 2)
    with pytest.raises(InvariantError):
        rankr_presentation(1, 1, 0)


def test_rankr_example_g0_n3_r2():
    p = rankr_presentation(0, 3, 2)
    got = Counter((g.label, g.degree, g.kind.value, g.exponent) for g in p.generators)
    assert got == Counter(
        {
            ("omega", 1, "polynomial", None): 1,
            ("omega", 2, "polynomial", None): 1,
            ("beta", 1, "exterior", None): 2,
            ("beta", 2, "exterior", None): 2,
            ("d", 1, "truncated", 2): 3,
            ("f", 2, "polynomial", None): 1,
        }
    )


@pytest.mark.parametrize("gp,n", TYPE1_GRID[:12])
@pytest.mark.parametrize("r", range(1, 7))
def test_rankr_generator_counts(gp, n, r):
    p = rankr_presentation(gp, n, r)
    kinds = Counter((g.label, g.kind) for g in p.generators)
    assert kinds[("omega", Kind.POLYNOMIAL)] == r
    assert kinds[("alpha", Kind.EXTERIOR)] + kinds[("beta", Kind.EXTERIOR)] == 2 * gp * r + (n - 1) * r
    assert kinds[("d", Kind.TRUNCATED)] == n * (r // 2)
    assert kinds[("f", Kind.POLYNOMIAL)] == r - 1
    for g in p.generators:
        # rank-1 classes carry no superscript, meaning k = 1
        k = g.sup or 1
        if g.label == "alpha":
            assert g.degree == 2 * k - 1
        elif g.label in ("omega", "beta"):
            assert g.degree == k
        elif g.label == "f":
            assert g.degree == 2 * g.sub - 2
        elif g.label == "d":
            assert g.degree == g.sub - 1
    assert len({g.key for g in p.generators}) == len(p.generators)


@pytest.mark.parametrize("gp,n", TYPE1_GRID)
def test_rank_one_specialization(gp, n):
    a, b = rankr_presentation(gp, n, 1), rank1_presentation(gp, n)
    assert a == b
    assert a.shape_multiset() == b.shape_multiset()


def test_presentation_independent_of_bundle_degree():
    assert rankr_presentation(1, 2, 3, d=0) == rankr_presentation(1, 2, 3, d=7)
    assert rankr_presentation(1, 2, 3, d=-4).meta["d"] == -4


def test_em_column_rank_one_examples():
    for n in range(3, 7):
        want = oracles.expand_product([oracles.one_plus(1)] * (n - 1) + [oracles.geometric(1, 20)], 20)
        assert list(em_column_series(0, n, 1, 20).coefficients) == want
    assert em_column_series(1, 1, 1, 5).coefficients == (1, 3, 4, 4, 4, 4)


def test_em_column_matches_independent_expansion():
    for gp, n, r in [(0, 3, 3), (1, 2, 4), (2, 1, 2)]:
        polys = [oracles.one_plus(i) for i in range(1, r + 1)] * n
        polys += [oracles.one_plus(i) for i in range(1, r)] * n
        polys += [oracles.one_plus(2 * i - 1) for i in range(1, r + 1)] * (2 * gp)
        polys += [oracles.geometric(2 * k, 30) for k in range(1, r + 1)]
        assert list(em_column_series(gp, n, r, 30).coefficients) == oracles.expand_product(polys, 30)


def test_stack_series_examples():
    assert stack_series(2, 3, 1, 30) == em_column_series(2, 3, 1, 30)
    assert series_eq(stack_series(0, 3, 2, 6), series_of(rankr_presentation(0, 3, 2), 6))
    for gp, n in TYPE1_GRID:
        for r in range(1, 5):
            assert stack_series(gp, n, r, 20).coefficients[0] == 1
            assert stack_series(gp, n, r, 20).coefficients[1] == dim_in_degree(rankr_presentation(gp, n, r), 1)


@pytest.mark.parametrize("gp,n,r,cap", [(0, 3, 1, 20), (1, 2, 3, 40), (0, 4, 5, 40), (0, 7, 4, 40)])
def test_cross_check_examples(gp, n, r, cap):
    rep = cross_check(gp, n, r, cap)
    assert rep.em_column and rep.stack and rep.rank1


def test_cross_check_detects_wrong_c_degree():
    # with deg c_k = k instead of 2k the rank-1 identity breaks
    from kleincoh.series import product_closed_form

    wrong = product_closed_form([("plus", 1, 3), ("inverse", 1, 1)], 10)
    right = em_column_series(0, 3, 1, 10)
    assert not series_eq(wrong, right)


def test_ab_inventory():
    inv = ab_inventory(1, 2)
    assert [(c.name, c.degree) for c in inv] == [("c_1", 2)] + [(f"a^(1)_{j}", 1) for j in range(1, 5)] + [("f_1", 0)]
    assert inv[-1].unit_degree
    inv = ab_inventory(2, 2)
    names = {c.name: c.degree for c in inv}
    assert names["c_2"] == 4 and names["f_2"] == 2
    assert all(names[f"a^(2)_{j}"] == 3 for j in range(1, 5))
    counts = Counter(c.label for c in ab_inventory(3, 4))
    assert counts == {"c": 3, "a": 24, "f": 3}


def test_ab_degrees_match_alpha_degrees():
    pres = rankr_presentation(2, 1, 4)
    alpha_deg = {g.sup: g.degree for g in pres.generators if g.label == "alpha"}
    for c in ab_inventory(4, 4):
        if c.label == "a":
            assert c.degree == alpha_deg[c.index]


def test_moduli_report_shape():
    rep = moduli_report(1, 2, 2, d=3, truncation=10)
    assert rep["params"] == {"g": 3, "n": 2, "a": 0, "g_prime": 1, "r": 2, "d": 3}
    assert rep["poincare"]["truncation"] == 10
    assert rep["checks"]["passed"]


def test_moduli_params():
    assert ModuliParams(1, 2, 3).g == 3
    with pytest.raises(InvariantError):
        ModuliParams(0, 1, 1)
