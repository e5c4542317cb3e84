from __future__ import annotations

import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from scx import generators as gen
from scx.algebra import betti_numbers
from scx.complex import SimplicialComplex, faces, simplex
from scx.errors import DuplicateVertexInSimplex, EmptyInput, NoBoundary, SimplexNotFound

from conftest import small_complexes


def test_simplex_canonicalises():
    assert simplex([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(EmptyInput):
        simplex([])
    with pytest.raises(DuplicateVertexInSimplex):
        simplex([1, 1])
    with pytest.raises(ValueError):
        simplex([-1, 2])


def test_faces_drop_one_vertex_in_order():
    assert faces((0, 1, 2)) == [(1, 2), (0, 2), (0, 1)]
    assert faces((5,)) == []


def test_empty_complex_rejected():
    with pytest.raises(EmptyInput):
        SimplicialComplex([])


@pytest.mark.parametrize("m", range(6))
def test_simplex_face_counts(m):
    X = gen.sigma(m)
    assert X.counts == tuple(comb(m + 1, k + 1) for k in range(m + 1))
    assert X.maximal_simplices == (tuple(range(m + 1)),)


@given(small_complexes())
def test_closure_contains_every_face(X):
    for layer in X.simplices:
        for s in layer:
            for f in faces(s):
                assert f in X


@given(small_complexes())
def test_euler_poincare(X):
    for field in ("z2", "rational"):
        b = betti_numbers(X, field)
        assert X.euler_characteristic == sum((-1) ** k * x for k, x in enumerate(b))


@given(small_complexes())
def test_maximal_simplices_rebuild_the_complex(X):
    assert SimplicialComplex(X.maximal_simplices) == X


def test_ordinal_lookup():
    X = gen.rp2()
    assert X.ordinal((2, 1, 0)) == 0
    with pytest.raises(SimplexNotFound):
        X.ordinal((0, 1, 2, 3))
    assert (0, 1) in X and (0, 9) not in X


def test_cofaces_and_boundary_faces_of_triangle():
    X = gen.sigma(2)
    assert X.cofaces(1) == ((0,), (0,), (0,))
    assert X.boundary_faces() == [(0, 1), (0, 2), (1, 2)]
    assert X.is_non_branching()


def test_branching_detected():
    X = SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    assert not X.is_non_branching()


def _orientable_oracle(X: SimplicialComplex) -> bool:
    """Try every sign vector; coherent iff shared faces get opposite induced signs."""
    m = X.dim
    incid = {}
    for j, s in enumerate(X.facets):
        for i, f in enumerate(faces(s)):
            incid.setdefault(f, []).append((j, (-1) ** i))
    pairs = [v for v in incid.values() if len(v) == 2]
    for signs in itertools.product((1, -1), repeat=X.n(m)):
        if all(signs[a] * sa + signs[b] * sb == 0 for (a, sa), (b, sb) in pairs):
            return True
    return False


@given(st.integers(1, 8), st.integers(0, 10_000))
def test_disks_are_orientable(t, seed):
    X = gen.random_disk(t, seed)
    signs = X.coherent_orientation()
    assert signs is not None and _orientable_oracle(X)


def test_orientation_oracle_agreement():
    sphere = SimplicialComplex(itertools.combinations(range(4), 3))
    mobius = SimplicialComplex([(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 0), (4, 0, 1)])
    for X, expected in ((sphere, True), (mobius, False), (gen.rp2(), False)):
        assert X.is_orientable() is expected
        assert _orientable_oracle(X) is expected


def _floyd(X: SimplicialComplex) -> np.ndarray:
    n = X.n(0)
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0)
    for a, b in (X.simplices[1] if X.dim >= 1 else ()):
        d[X.ordinal((a,)), X.ordinal((b,))] = d[X.ordinal((b,)), X.ordinal((a,))] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


@given(small_complexes(max_vertices=7))
def test_distances_match_floyd_warshall(X):
    rep = X.distance_and_diameter()
    d = _floyd(X)
    d[np.isinf(d)] = 0  # cross-component pairs count as 0
    assert np.array_equal(rep.dist, d.astype(int))
    assert rep.diameter == int(d.max())
    for (u, v), path in rep.geodesics.items():
        assert len(path) == rep.dist[u, v]


def test_disconnected_distance_convention():
    X = SimplicialComplex([(0, 1), (2, 3, 4)])
    rep = X.distance_and_diameter()
    assert not rep.connected and rep.diameter == 1


@given(st.integers(1, 10), st.integers(0, 10_000))
def test_depth_bfs_matches_brute(t, seed):
    X = gen.random_disk(t, seed)
    a = X.depth_and_radius("bfs")
    b = X.depth_and_radius("brute")
    assert a.depths == b.depths and a.radius == b.radius


def test_depth_witness_has_facet_as_coboundary():
    from scx.algebra import Z2Chain, z2_boundary

    X = gen.xk(2, 3)
    rep = X.depth_and_radius()
    delta = z2_boundary(X, 2).T
    for j, w in enumerate(rep.witnesses):
        x = Z2Chain.from_support(1, X.n(1), w).bits
        assert delta.apply(x) == 1 << j
        assert len(w) == rep.depths[j]


def test_depth_needs_boundary():
    with pytest.raises(NoBoundary):
        SimplicialComplex(itertools.combinations(range(4), 3)).depth_and_radius("bfs")


@given(small_complexes(), st.randoms(use_true_random=False))
def test_relabel_preserves_counts_and_homology(X, rnd):
    verts = list(X.vertices)
    target = rnd.sample(range(100), len(verts))
    Y = X.relabel(dict(zip(verts, target)))
    assert Y.counts == X.counts
    assert betti_numbers(Y) == betti_numbers(X)
