"""Finite abstract simplicial complexes.

Simplexes are tuples of strictly increasing vertex ids. A complex stores one
lexicographically sorted tuple of simplexes per dimension, so simplex ordinals
are deterministic and depend only on the vertex sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BeyondBruteForceCap,
    DuplicateVertexInSimplex,
    EmptyInput,
    NoBoundary,
    SimplexNotFound,
)

Simplex = tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical simplex from an iterable of vertex ids."""
    vs = [int(v) for v in vertices]
    if not vs:
        raise EmptyInput("a simplex needs at least one vertex")
    s = tuple(sorted(vs))
    if len(set(s)) != len(s):
        raise DuplicateVertexInSimplex(f"repeated vertex in {vs}")
    if s[0] < 0:
        raise ValueError(f"negative vertex id in {vs}")
    return s


def faces(s: Simplex) -> list[Simplex]:
    """Codimension-1 faces; entry i omits vertex i, so its boundary sign is (-1)**i."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


@dataclass(frozen=True)
class DistanceReport:
    dist: np.ndarray  # vertex-ordinal indexed; 0 across components
    diameter: int
    geodesics: dict  # (u, v) vertex-ordinal pair -> tuple of edge ordinals
    connected: bool


@dataclass(frozen=True)
class DepthReport:
    depths: tuple[int, ...]  # per top simplex ordinal
    radius: int
    witnesses: tuple[tuple[int, ...], ...]  # (m-1)-simplex ordinals of a depth-attaining cochain
    method: str


class SimplicialComplex:
    """Inclusion-closed family of simplexes, immutable after construction."""

    def __init__(self, maximal_simplices: Iterable[Iterable[int]]):
        tops = [simplex(s) for s in maximal_simplices]
        if not tops:
            raise EmptyInput("no simplexes given")
        closure: set[Simplex] = set()
        for s in set(tops):
            if s in closure:
                continue
            for r in range(1, len(s) + 1):
                closure.update(combinations(s, r))
        m = max(len(s) for s in closure) - 1
        by_dim: list[list[Simplex]] = [[] for _ in range(m + 1)]
        for s in closure:
            by_dim[len(s) - 1].append(s)
        self.simplices: tuple[tuple[Simplex, ...], ...] = tuple(tuple(sorted(d)) for d in by_dim)
        self.index: tuple[dict[Simplex, int], ...] = tuple(
            {s: i for i, s in enumerate(d)} for d in self.simplices
        )
        self._cache: dict = {}

    # -- basic queries -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(d) for d in self.simplices)

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self.simplices[-1]

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertex ids in ordinal order; ordinal i is the dense index of vertices[i]."""
        return tuple(v[0] for v in self.simplices[0])

    def n(self, k: int) -> int:
        """Number of k-simplexes (0 outside 0..dim)."""
        return len(self.simplices[k]) if 0 <= k <= self.dim else 0

    def __contains__(self, s) -> bool:
        s = tuple(sorted(s))
        k = len(s) - 1
        return 0 <= k <= self.dim and s in self.index[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, counts={self.counts})"

    def ordinal(self, s: Sequence[int]) -> int:
        s = tuple(sorted(s))
        k = len(s) - 1
        if not 0 <= k <= self.dim or s not in self.index[k]:
            raise SimplexNotFound(s)
        return self.index[k][s]

    @cached_property
    def maximal_simplices(self) -> tuple[Simplex, ...]:
        """Simplexes not contained in any other simplex, sorted lexicographically."""
        out = []
        for k, layer in enumerate(self.simplices):
            up = self.cofaces(k) if k < self.dim else None
            for i, s in enumerate(layer):
                if up is None or not up[i]:
                    out.append(s)
        return tuple(sorted(out))

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.counts))

    # -- incidence -----------------------------------------------------------

    def cofaces(self, k: int) -> tuple[tuple[int, ...], ...]:
        """For each k-simplex, the ordinals of the (k+1)-simplexes containing it."""
        key = ("cofaces", k)
        if key not in self._cache:
            up: list[list[int]] = [[] for _ in range(self.n(k))]
            if k < self.dim:
                idx = self.index[k]
                for j, t in enumerate(self.simplices[k + 1]):
                    for f in faces(t):
                        up[idx[f]].append(j)
            self._cache[key] = tuple(tuple(c) for c in up)
        return self._cache[key]

    def face_ordinals(self, k: int) -> tuple[tuple[int, ...], ...]:
        """For each k-simplex, ordinals of its faces in boundary-formula order."""
        key = ("faces", k)
        if key not in self._cache:
            if k == 0:
                out = tuple(() for _ in range(self.n(0)))
            else:
                idx = self.index[k - 1]
                out = tuple(tuple(idx[f] for f in faces(s)) for s in self.simplices[k])
            self._cache[key] = out
        return self._cache[key]

    def star(self, s: Sequence[int]) -> list[Simplex]:
        """All simplexes one dimension up that contain ``s``."""
        s = tuple(sorted(s))
        i = self.ordinal(s)
        k = len(s) - 1
        return [self.simplices[k + 1][j] for j in self.cofaces(k)[i]]

    def boundary_face_ordinals(self) -> tuple[int, ...]:
        if self.dim == 0:
            return ()
        return tuple(i for i, c in enumerate(self.cofaces(self.dim - 1)) if len(c) == 1)

    def boundary_faces(self) -> list[Simplex]:
        """(m-1)-simplexes with exactly one coface."""
        layer = self.simplices[self.dim - 1] if self.dim > 0 else ()
        return [layer[i] for i in self.boundary_face_ordinals()]

    def is_non_branching(self) -> bool:
        if self.dim == 0:
            return True
        return all(len(c) <= 2 for c in self.cofaces(self.dim - 1))

    def facet_adjacency(self) -> list[list[tuple[int, int]]]:
        """Per top simplex: (neighbour ordinal, shared face ordinal), sorted."""
        m = self.dim
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n(m))]
        if m == 0:
            return adj
        for f, cof in enumerate(self.cofaces(m - 1)):
            for a in cof:
                for b in cof:
                    if a != b:
                        adj[a].append((b, f))
        for row in adj:
            row.sort()
        return adj

    def coherent_orientation(self) -> tuple[int, ...] | None:
        """Signs making every pair of lower adjacent top simplexes similarly oriented.

        Returns None when no such assignment exists. Signs are relative to the
        ascending-vertex reference orientation.
        """
        m = self.dim
        n = self.n(m)
        if m == 0:
            return (1,) * n
        # position of each face inside each facet gives its incidence sign
        incid: dict[tuple[int, int], int] = {}
        for j, fs in enumerate(self.face_ordinals(m)):
            for i, f in enumerate(fs):
                incid[(j, f)] = -1 if i % 2 else 1
        signs = [0] * n
        adj = self.facet_adjacency()
        for root in range(n):
            if signs[root]:
                continue
            signs[root] = 1
            queue = deque([root])
            while queue:
                a = queue.popleft()
                for b, f in adj[a]:
                    # similar orientation: the shared face gets opposite induced signs
                    want = -signs[a] * incid[(a, f)] * incid[(b, f)]
                    if signs[b] == 0:
                        signs[b] = want
                        queue.append(b)
                    elif signs[b] != want:
                        return None
        return tuple(signs)

    def is_orientable(self) -> bool:
        return self.coherent_orientation() is not None

    def components(self) -> list[list[int]]:
        """Connected components of the 1-skeleton as sorted vertex-ordinal lists."""
        nbrs = self.vertex_neighbours()
        seen = [False] * self.n(0)
        comps = []
        for r in range(self.n(0)):
            if seen[r]:
                continue
            seen[r] = True
            comp, queue = [], deque([r])
            while queue:
                u = queue.popleft()
                comp.append(u)
                for v, _ in nbrs[u]:
                    if not seen[v]:
                        seen[v] = True
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def vertex_neighbours(self) -> list[list[tuple[int, int]]]:
        """Per vertex ordinal: sorted (neighbour ordinal, edge ordinal)."""
        nbrs: list[list[tuple[int, int]]] = [[] for _ in range(self.n(0))]
        if self.dim >= 1:
            for e, (a, b) in enumerate(self.face_ordinals(1)):
                nbrs[a].append((b, e))
                nbrs[b].append((a, e))
        for row in nbrs:
            row.sort()
        return nbrs

    # -- metric queries ------------------------------------------------------

    def distance_and_diameter(self) -> DistanceReport:
        """All-pairs 1-skeleton distances, diameter and geodesic witnesses.

        Vertices in different components are at distance 0, so the diameter
        only sees within-component pairs.
        """
        n = self.n(0)
        nbrs = self.vertex_neighbours()
        dist = np.zeros((n, n), dtype=np.int64)
        parents = []
        for src in range(n):
            d = [-1] * n
            par = [(-1, -1)] * n
            d[src] = 0
            queue = deque([src])
            while queue:
                u = queue.popleft()
                for v, e in nbrs[u]:
                    if d[v] < 0:
                        d[v] = d[u] + 1
                        par[v] = (u, e)
                        queue.append(v)
            dist[src] = [max(x, 0) for x in d]
            parents.append(par)
        diam = int(dist.max()) if n else 0
        geodesics = {}
        if diam > 0:
            for u, v in zip(*np.nonzero(np.triu(dist) == diam)):
                path, w = [], int(v)
                while w != u:
                    w, e = parents[u][w]
                    path.append(e)
                geodesics[(int(u), int(v))] = tuple(sorted(path))
        return DistanceReport(dist, diam, geodesics, len(self.components()) <= 1)

    def depth_and_radius(self, method: str = "auto", cap_bits: int = 24) -> DepthReport:
        """Depth of every top simplex and the radius (maximum depth).

        ``method`` is "bfs" (non-branching fast path), "brute" (exhaustive search
        over (m-1)-cochains) or "auto" (bfs when non-branching).
        """
        if method == "auto":
            method = "bfs" if self.is_non_branching() else "brute"
        if method == "bfs":
            return self._depth_bfs()
        if method == "brute":
            return self._depth_brute(cap_bits)
        raise ValueError(f"unknown depth method {method!r}")

    def _depth_bfs(self) -> DepthReport:
        m = self.dim
        n = self.n(m)
        if m == 0:
            raise NoBoundary("dimension 0 complexes have no faces")
        cof = self.cofaces(m - 1)
        boundary = [-1] * n  # lowest-ordinal boundary face per facet
        for f, c in enumerate(cof):
            if len(c) == 1 and boundary[c[0]] < 0:
                boundary[c[0]] = f
        depth = [0] * n
        parent = [(-1, -1)] * n
        queue = deque()
        for j in range(n):
            if boundary[j] >= 0:
                depth[j] = 1
                queue.append(j)
        adj = self.facet_adjacency()
        while queue:
            a = queue.popleft()
            for b, f in adj[a]:
                if depth[b] == 0:
                    depth[b] = depth[a] + 1
                    parent[b] = (a, f)
                    queue.append(b)
        if not n or min(depth) == 0:
            raise NoBoundary("some top simplex is not reachable from a boundary face")
        witnesses = []
        for j in range(n):
            chain, a = [], j
            while depth[a] > 1:
                a, f = parent[a]
                chain.append(f)
            chain.append(boundary[a])
            witnesses.append(tuple(sorted(chain)))
        return DepthReport(tuple(depth), max(depth), tuple(witnesses), "bfs")

    def _depth_brute(self, cap_bits: int) -> DepthReport:
        from .sweep import LinearSweep

        m = self.dim
        nf = self.n(m - 1) if m > 0 else 0
        if m == 0:
            raise NoBoundary("dimension 0 complexes have no faces")
        if nf > cap_bits:
            raise BeyondBruteForceCap(
                f"depth search over 2^{nf} cochains exceeds 2^{cap_bits}",
                bits=nf, cap_bits=cap_bits, dimension=m - 1,
            )
        cols = [sum(1 << j for j in c) for c in self.cofaces(m - 1)]
        sweep = LinearSweep(nf, {"delta": (cols, self.n(m))})
        n = self.n(m)
        best = [None] * n
        wit = [0] * n
        for start, weights, images in sweep.blocks():
            img = images["delta"]
            # a single top simplex j as a coboundary: exactly one bit set
            single = np.bitwise_count(img).sum(axis=0) == 1
            for word in range(img.shape[0]):
                idx = np.nonzero(single & (img[word] != 0))[0]
                if not idx.size:
                    continue
                js = 64 * word + np.log2(img[word, idx].astype(np.float64)).astype(np.int64)
                w = weights[idx]
                order = np.lexsort((idx, w, js))
                js, w, idx = js[order], w[order], idx[order]
                first = np.ones(js.size, dtype=bool)
                first[1:] = js[1:] != js[:-1]
                for j, wj, i in zip(js[first], w[first], idx[first]):
                    j, wj = int(j), int(wj)
                    if best[j] is None or wj < best[j]:
                        best[j] = wj
                        wit[j] = start + int(i)
        if any(b is None for b in best):
            raise NoBoundary("some top simplex is not a coboundary")
        witnesses = tuple(tuple(i for i in range(nf) if x >> i & 1) for x in wit)
        return DepthReport(tuple(best), max(best), witnesses, "brute")

    # -- transformations -----------------------------------------------------

    def relabel(self, mapping) -> "SimplicialComplex":
        """Complex with vertex ids replaced through ``mapping`` (dict or callable)."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return SimplicialComplex([[f(v) for v in s] for s in self.maximal_simplices])


def build_complex(maximal_simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Inclusion closure of the given simplexes."""
    return SimplicialComplex(maximal_simplices)
