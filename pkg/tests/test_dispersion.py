import math
from fractions import Fraction

import pytest

from eigdisp.dispersion import (
    c_d,
    c_e,
    cd_avgdeg_bound,
    cd_power,
    ce_lambda_bound,
    ce_product,
    cv_squared,
    dispersion_report,
    gamma_indicator,
    ksum_l1,
    ksum_l2sq,
)
from eigdisp.exceptions import GraphError
from eigdisp.families import complete_split, kite, star
from eigdisp.graph import DegreeMultiset, build, cartesian_power, cartesian_product

import oracles


def complete(n):
    return build(n, oracles.complete_edges(range(n)))


def test_cv_squared_examples():
    assert cv_squared([1, 1, 1]) == 0
    assert cv_squared([1, 2, 3]) == pytest.approx(1 / 6, abs=1e-15)
    assert cv_squared([5, 10, 15]) == pytest.approx(cv_squared([1, 2, 3]), abs=1e-15)


def test_cv_squared_matches_definition():
    x = [0.3, 1.7, 2.2, 0.9]
    assert cv_squared(x) == pytest.approx(oracles.cv2(x), rel=1e-12)


@pytest.mark.parametrize("bad", [[], [1, 0], [1, -2]])
def test_cv_squared_rejects(bad):
    with pytest.raises(GraphError):
        cv_squared(bad)


def test_c_e_examples():
    assert c_e(complete(5)) == pytest.approx(0, abs=1e-20)
    assert c_e(star(4)) == pytest.approx(1 / 9, abs=1e-12)


def test_c_d_examples():
    assert c_d(complete(5)) == 0
    assert c_d(star(3)) == Fraction(1, 3)
    assert c_d(complete_split(3, 2)) == Fraction(1, 54)


def test_c_d_rejects_isolated_vertex():
    with pytest.raises(GraphError):
        c_d(build(3, [(0, 1)]))


def test_gamma_indicator_examples():
    assert gamma_indicator(complete(4)) == pytest.approx(0, abs=1e-15)
    expected = (8 / (1 + math.sqrt(3)) ** 2 - 1 - 1 / 3) / 3
    assert gamma_indicator(star(3)) == pytest.approx(expected, abs=1e-12)
    assert expected == pytest.approx(-0.08718, abs=5e-6)


def test_ce_lambda_bound():
    assert ce_lambda_bound(complete(6)) == pytest.approx(0, abs=1e-12)
    assert ce_lambda_bound(star(4)) == pytest.approx(2 / 3, abs=1e-12)
    assert ce_lambda_bound(star(4)) >= c_e(star(4))


def test_cd_avgdeg_bound():
    assert cd_avgdeg_bound(complete(6)) == 0
    assert cd_avgdeg_bound(star(3)) == 1
    for n in (10, 50, 200):
        expected = Fraction(n * (n - 1), n * n - 3 * n + 4) - 1
        assert cd_avgdeg_bound(kite(2, n - 1)) == expected


def test_ksum_examples():
    a = DegreeMultiset.from_values([1, 2])
    b = DegreeMultiset.from_values([1, 1, 3])
    assert ksum_l1(a, 1) == 3
    assert ksum_l1(a, 2) == 12
    assert ksum_l1(b, 3) == 135
    assert ksum_l2sq(a, 1) == 5
    assert ksum_l2sq(a, 2) == 38
    assert ksum_l2sq(b, 2) == 116


def test_ksum_matches_brute():
    for values in ([1], [2, 5], [1, 1, 3], [4, 2, 2, 5]):
        a = DegreeMultiset.from_values(values)
        for k in range(1, 5):
            assert (ksum_l1(a, k), ksum_l2sq(a, k)) == oracles.ksum_brute(values, k)


def test_ce_product_examples():
    assert ce_product(0, 0) == 0
    assert ce_product(0, 0.37) == pytest.approx(0.37)
    p3 = star(2)
    assert c_e(cartesian_product(p3, p3)) == pytest.approx(ce_product(c_e(p3), c_e(p3)), abs=1e-9)


def test_cd_power_examples():
    assert cd_power(Fraction(0), 5) == 0
    assert cd_power(Fraction(1, 3), 2) == Fraction(1, 6)
    assert c_d(cartesian_power(star(3), 2)) == Fraction(1, 6)
    p3 = star(2)
    assert c_d(cartesian_power(p3, 3)) == cd_power(c_d(p3), 3)


def test_report_fields_and_slacks():
    rep = dispersion_report(kite(3, 5))
    lam, gamma, ce, cd, Gamma = oracles.stats(7, kite(3, 5).edges)
    assert rep.lam == pytest.approx(lam, abs=1e-10)
    assert rep.gamma == pytest.approx(gamma, rel=1e-9)
    assert rep.c_e == pytest.approx(ce, rel=1e-9)
    assert rep.c_d == cd
    assert rep.Gamma == pytest.approx(Gamma, rel=1e-9)
    assert rep.gamma_sq_minus_1 == pytest.approx(gamma**2 - 1, rel=1e-9)
    assert all(v >= 0 for v in rep.bound_slacks)
    d = rep.as_dict()
    assert d["slack_ce_gamma"] == pytest.approx(gamma**2 - 1 - ce, rel=1e-9)
    degs = oracles.degrees(7, kite(3, 5).edges)
    assert d["slack_cd_avgdeg"] == Fraction(max(degs) * 7, sum(degs)) - 1 - cd
    assert {"lambda", "gamma", "c_e", "c_d", "Gamma", "slack_ce_gamma", "slack_cd_avgdeg"} <= set(d)


def test_report_regular_graph_equality():
    rep = dispersion_report(complete(5))
    assert rep.c_e == pytest.approx(0, abs=1e-20)
    assert rep.c_d == 0
    assert rep.gamma_sq_minus_1 == pytest.approx(0, abs=1e-12)
