from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scx import generators as gen
from scx.algebra import betti_numbers
from scx.complex import SimplicialComplex


@pytest.mark.parametrize("k,counts", [(1, (3, 3, 1)), (2, (6, 9, 4)), (3, (12, 21, 10)), (4, (24, 45, 22))])
def test_xk_counts(k, counts):
    X = gen.xk(2, k)
    assert X.counts == counts
    assert len(X.boundary_faces()) == 3 * 2 ** (k - 1)
    assert X.is_non_branching() and betti_numbers(X) == (1, 0, 0)


@pytest.mark.parametrize("m,k", [(2, 1), (2, 4), (3, 1), (3, 2), (3, 3)])
def test_xk_facets_follow_recurrence(m, k):
    # facets: 1, then each level adds one per boundary face; boundary faces multiply by m
    X = gen.xk(m, k)
    expected = 1 + sum((m + 1) * m ** (j - 1) for j in range(1, k))
    assert X.n(m) == expected
    assert len(X.boundary_faces()) == (m + 1) * m ** (k - 1)
    assert X.depth_and_radius().radius == k


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_yk_structure(k):
    Y = gen.yk(2, k)
    centre = 3
    inner = [t for t in Y.facets if centre in t]
    assert len(inner) == 3 * 2 ** (k - 1)
    assert Y.n(2) == 3 * (2 ** k - 1)
    assert len(Y.boundary_faces()) == 3
    assert Y.boundary_faces() == [(0, 1), (0, 2), (1, 2)]
    assert Y.is_non_branching() and betti_numbers(Y) == (1, 0, 0)
    assert Y.depth_and_radius().radius == k


def test_stellar_subdivision():
    X = gen.stellar_subdivide(gen.sigma(2), (0, 1, 2))
    assert X.facets == ((0, 1, 3), (0, 2, 3), (1, 2, 3))
    with pytest.raises(ValueError):
        gen.stellar_subdivide(X, (0, 1))


@pytest.mark.parametrize("k", [1, 3, 4])
def test_gk_is_double_star(k):
    G = gen.gk(k)
    assert G.counts == (2 * k + 2, 2 * k + 1)
    assert betti_numbers(G) == (1, 0)
    assert G.distance_and_diameter().diameter == 3


def test_rp2_counts():
    X = gen.rp2()
    assert X.counts == (6, 15, 10) and X.euler_characteristic == 1
    assert X.is_non_branching() and not X.boundary_faces()


@given(st.integers(1, 30), st.integers(0, 10**6))
def test_random_disk_is_a_disk(t, seed):
    X = gen.random_disk(t, seed)
    assert X.n(2) == t
    assert X.is_non_branching()
    assert betti_numbers(X) == (1, 0, 0) and betti_numbers(X, "rational") == (1, 0, 0)
    # the boundary is one cycle
    bd = SimplicialComplex(X.boundary_faces())
    assert betti_numbers(bd) == (1, 1)
    assert all(len([e for e in X.boundary_faces() if v in e]) == 2 for v in bd.vertices)
    assert gen.random_disk(t, seed) == X


@given(st.integers(2, 40), st.integers(0, 10**6))
def test_random_tree_is_a_tree(n, seed):
    T = gen.random_tree(n, seed)
    assert T.counts == (n, n - 1) and T.is_connected()
    assert betti_numbers(T) == (1, 0)


def test_family_spec_roundtrip():
    spec = gen.FamilySpec("xk", m=2, k=3)
    assert spec.build() == gen.xk(2, 3)
    assert spec.metadata() == {"family": "xk", "m": 2, "k": 3}
    assert gen.FamilySpec("random_disk", k=5, seed=7).build() == gen.random_disk(5, 7)
    with pytest.raises(ValueError):
        gen.FamilySpec("klein").build()


def test_bad_parameters():
    for fn, args in ((gen.xk, (2, 0)), (gen.yk, (0, 1)), (gen.gk, (0,)), (gen.sigma, (-1,)),
                     (gen.random_disk, (0,)), (gen.random_tree, (1,))):
        with pytest.raises(ValueError):
            fn(*args)
