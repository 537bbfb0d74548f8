import io
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from eigdisp.closed_form import star_stats
from eigdisp.dispersion import c_d, c_e, gamma_indicator
from eigdisp.exceptions import GraphError
from eigdisp.extremal import (
    Objective,
    batch_statistics,
    canonical_form,
    connected_labeled_count,
    connected_masks,
    enumerate_connected,
    graph_mask,
    mask_to_graph,
    scan_bounds,
    search,
    search_graphs,
)
from eigdisp.families import kite, star
from eigdisp.graph6 import graph6_encode
from eigdisp.spectral import principal_eigenpair, principal_ratio

import oracles


def test_labeled_counts():
    # recurrence values checked against direct enumeration below
    assert [connected_labeled_count(n) for n in range(1, 7)] == [1, 1, 4, 38, 728, 26704]
    for n in range(2, 6):
        assert len(connected_masks(n)) == connected_labeled_count(n)


def test_isomorphism_class_counts():
    assert len(list(enumerate_connected(3, dedup=True))) == 2
    assert len(list(enumerate_connected(4, dedup=True))) == 6
    assert len(list(enumerate_connected(5, dedup=True))) == 21


def test_class_counts_match_networkx_atlas():
    for n in range(3, 7):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]
        assert len(list(enumerate_connected(n, dedup=True))) == len(atlas)


def test_canonical_form_invariant_under_relabel():
    g = kite(3, 4)
    perm = [5, 2, 0, 4, 1, 3]
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    assert canonical_form(g) != canonical_form(star(5))


def test_mask_round_trip():
    g = kite(3, 4)
    assert mask_to_graph(graph_mask(g), g.n) == g


def test_batch_statistics_match_single_graph_path():
    masks = connected_masks(5)
    bs = batch_statistics(masks, 5)
    for i in range(0, len(masks), 37):
        g = mask_to_graph(int(masks[i]), 5)
        _, gamma, ce, cd, Gamma = oracles.stats(5, g.edges)
        assert bs.gamma[i] == pytest.approx(gamma, rel=1e-9)
        assert bs.c_e[i] == pytest.approx(ce, abs=1e-12)
        assert Fraction(int(bs.cd_num[i]), int(bs.cd_den[i])) - 1 == cd
        assert bs.Gamma[i] == pytest.approx(Gamma, abs=1e-12)


def test_objective_aliases():
    assert Objective.parse("max-ce") is Objective.MAX_C_E
    assert Objective.parse("max-cd") is Objective.MAX_C_D
    assert Objective.parse("min-gamma") is Objective.MIN_GAMMA
    with pytest.raises(GraphError):
        Objective.parse("max-foo")


def test_search_max_cd_n6_is_star():
    r = search(6, "max-cd")
    assert r.witnesses == [graph6_encode(canonical_form(star(5)))]
    assert r.best_value == Fraction(4, 5)
    assert r.census == 26704


def test_search_max_ce_n6_is_kite():
    r = search(6, "max-ce")
    assert r.witnesses == [graph6_encode(canonical_form(kite(3, 4)))]
    assert r.best_value == pytest.approx(c_e(kite(3, 4)), rel=1e-9)


def test_search_min_gamma_n6():
    r = search(6, "min-gamma")
    assert r.best_value >= -0.25
    assert r.best_value == pytest.approx(star_stats(5).Gamma, abs=1e-12)


def test_search_sharded_matches_serial():
    a = search(5, "max-ce", workers=1, block=64)
    b = search(5, "max-ce", workers=1)
    assert a.witnesses == b.witnesses
    assert a.best_value == pytest.approx(b.best_value, abs=1e-15)
    assert a.census == b.census


def test_search_graphs_stream():
    graphs = list(enumerate_connected(5, dedup=True))
    r = search_graphs(graphs, "max-cd")
    assert r.witnesses == [graph6_encode(canonical_form(star(4)))]


def test_search_rejects_large_n():
    with pytest.raises(GraphError):
        search(9, "max-ce")


def test_scan_bounds_small():
    s = scan_bounds(5)
    assert s.census == 728
    assert all(v >= -1e-9 for v in s.min_slack.values())
    assert s.cd_avgdeg_exact_ok
    assert s.regular_max_abs <= 1e-10
    assert s.gamma_min >= -0.25
