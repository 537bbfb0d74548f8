import math
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from eigdisp.dispersion import c_d, c_e, cv_squared, ksum_l1, ksum_l2sq
from eigdisp.graph import DegreeMultiset, build, cartesian_product, is_connected
from eigdisp.graph6 import graph6_decode, graph6_encode
from eigdisp.spectral import principal_eigenpair, principal_ratio

import oracles


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build(n, chosen)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    g = draw(graphs(min_n, max_n))
    # add a spanning path so the draw is always usable
    return build(g.n, list(g.edges) + oracles.path_edges(g.n))


@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    text = graph6_encode(g)
    assert graph6_decode(text) == g
    assert text == oracles.graph6(g.n, g.edges)


@given(st.lists(st.floats(1e-3, 1e3), min_size=1, max_size=30), st.floats(1e-3, 1e3))
def test_cv_squared_scale_invariant(x, c):
    assert cv_squared(x) >= -1e-15
    assert math.isclose(cv_squared(x), cv_squared([c * t for t in x]), rel_tol=1e-9, abs_tol=1e-12)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=4), st.integers(1, 4))
def test_ksum_norms(values, k):
    a = DegreeMultiset.from_values(values)
    assert (ksum_l1(a, k), ksum_l2sq(a, k)) == oracles.ksum_brute(values, k)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_dispersion_bounds(g):
    p = principal_eigenpair(g)
    gamma = principal_ratio(p)
    ce, cd = c_e(g, p), c_d(g)
    assert ce <= gamma**2 - 1 + 1e-9
    assert float(cd) <= gamma**2 - 1 + 1e-9
    assert ce <= g.n / (p.lam + 1) - 1 + 1e-9
    assert cd <= Fraction(max(g.degrees) * g.n, sum(g.degrees)) - 1
    assert math.sqrt(max(g.degrees) / min(g.degrees)) <= gamma + 1e-9


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=5), connected_graphs(max_n=5))
def test_product_laws(a, b):
    pa, pb = principal_eigenpair(a), principal_eigenpair(b)
    prod = cartesian_product(a, b)
    assert is_connected(prod)
    pp = principal_eigenpair(prod)
    assert math.isclose(pp.lam, pa.lam + pb.lam, abs_tol=1e-9)
    assert np.allclose(pp.x, np.outer(pa.x, pb.x).ravel(), atol=1e-9)
    assert math.isclose(c_e(prod, pp), (1 + c_e(a, pa)) * (1 + c_e(b, pb)) - 1, abs_tol=1e-9)
