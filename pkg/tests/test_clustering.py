from fractions import Fraction

import pytest

from eigdisp.clustering import (
    average_clustering,
    clustering_report,
    local_clustering,
    split_clustering_closed_form,
    split_divergence_limits,
    split_triangle_count,
    transitivity,
)
from eigdisp.extremal import enumerate_connected
from eigdisp.families import complete_split, star
from eigdisp.graph import build, triangle_count

import oracles


def test_local():
    k4 = build(4, oracles.complete_edges(range(4)))
    assert local_clustering(k4, 2) == 1
    g = complete_split(2, 2)
    assert local_clustering(g, 0) == Fraction(2, 3)
    for n, m in [(2, 2), (4, 3), (5, 1)]:
        g = complete_split(n, m)
        assert all(local_clustering(g, v) == 1 for v in range(n, n + m))


def test_local_undefined_for_leaves():
    assert local_clustering(star(3), 1) is None


def test_average_and_transitivity_examples():
    for n in (3, 6):
        kn = build(n, oracles.complete_edges(range(n)))
        assert average_clustering(kn) == 1
        assert transitivity(kn) == 1
    assert average_clustering(complete_split(2, 2)) == Fraction(5, 6)
    assert transitivity(complete_split(2, 2)) == Fraction(3, 4)
    assert transitivity(star(5)) == 0


def test_local_matches_oracle():
    for g in enumerate_connected(5, dedup=True):
        for v in range(g.n):
            assert local_clustering(g, v) == oracles.local_clustering(g.n, g.edges, v)


def test_transitivity_undefined_without_wedges():
    assert transitivity(build(2, [(0, 1)])) is None


def test_split_closed_form_small():
    assert split_clustering_closed_form(2, 2) == (Fraction(5, 6), Fraction(3, 4))
    for n in range(1, 12):
        for m in range(1, 12):
            g = complete_split(n, m)
            assert split_clustering_closed_form(n, m) == (average_clustering(g), transitivity(g))
            assert split_triangle_count(n, m) == triangle_count(g)


def test_inner_limits():
    assert split_divergence_limits(1) == (Fraction(7, 8), Fraction(4, 5))
    c, t = split_divergence_limits(100)
    assert abs(c - 1) <= Fraction(2, 100)
    assert t <= Fraction(4, 100)
    for k in (1, 3, 7):
        assert split_divergence_limits(k) == (
            Fraction(k**3 + 2 * k**2 + 3 * k + 1, k**3 + 3 * k**2 + 3 * k + 1),
            Fraction(3 * k + 1, k**2 + 3 * k + 1),
        )


def test_inner_limits_approached():
    k = 2
    c_lim, t_lim = split_divergence_limits(k)
    c, t = split_clustering_closed_form(4000, k * 4000)
    assert abs(float(c - c_lim)) < 1e-3
    assert abs(float(t - t_lim)) < 1e-3


def test_divergence_witness():
    c, t = split_clustering_closed_form(60, 3600)
    assert c >= Fraction(95, 100)
    assert t <= Fraction(6, 100)


def test_report():
    rep = clustering_report(complete_split(2, 2))
    assert rep.average == Fraction(5, 6)
    assert rep.transitivity == Fraction(3, 4)
    assert rep.triangle_count == 2
    assert rep.undefined_count == 0
    assert clustering_report(star(4)).undefined_count == 4
