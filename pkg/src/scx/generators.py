"""Deterministic constructors for the complex families used in the experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complex import SimplicialComplex, simplex

# glue a triangle on a boundary edge vs. fill a boundary wedge
RANDOM_DISK_GLUE_PROBABILITY = 0.85

RP2_FACETS = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    m: int | None = None
    k: int | None = None
    seed: int | None = None
    extra: dict = field(default_factory=dict)

    def build(self) -> SimplicialComplex:
        f = self.family
        if f == "sigma":
            return sigma(self.m)
        if f == "xk":
            return xk(self.m, self.k)
        if f == "yk":
            return yk(self.m, self.k)
        if f == "gk":
            return gk(self.k)
        if f == "rp2":
            return rp2()
        if f == "random_disk":
            return random_disk(self.k, self.seed or 0)
        if f == "random_tree":
            return random_tree(self.k, self.seed or 0)
        raise ValueError(f"unknown family {f!r}")

    def metadata(self) -> dict:
        out = {"family": self.family}
        for key in ("m", "k", "seed"):
            v = getattr(self, key)
            if v is not None:
                out[key] = v
        return out


def sigma(m: int) -> SimplicialComplex:
    """A single m-simplex on vertices 0..m with all its faces."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return SimplicialComplex([range(m + 1)])


def _glue_on_boundary(X: SimplicialComplex) -> SimplicialComplex:
    """One new top simplex per boundary face, new vertices in boundary-face order."""
    nxt = max(X.vertices) + 1
    new = [bf + (nxt + i,) for i, bf in enumerate(X.boundary_faces())]
    return SimplicialComplex(list(X.maximal_simplices) + new)


def xk(m: int, k: int) -> SimplicialComplex:
    """X_1 is the m-simplex; X_{j+1} glues a fresh m-simplex onto each boundary face of X_j."""
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    X = sigma(m)
    for _ in range(k - 1):
        X = _glue_on_boundary(X)
    return X


def stellar_subdivide(X: SimplicialComplex, s, w: int | None = None) -> SimplicialComplex:
    """Replace the top simplex ``s`` by the cone over its boundary from a fresh vertex ``w``."""
    s = simplex(s)
    X.ordinal(s)
    if len(s) != X.dim + 1:
        raise ValueError(f"{s} is not a top simplex")
    if w is None:
        w = max(X.vertices) + 1
    rest = [t for t in X.maximal_simplices if t != s]
    cone = [s[:i] + (w,) + s[i + 1:] for i in range(len(s))]
    return SimplicialComplex(rest + cone)


def yk(m: int, k: int) -> SimplicialComplex:
    """Y_1 subdivides the m-simplex at a central vertex v; Y_{j+1} subdivides every top simplex containing v."""
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    Y = sigma(m)
    centre = m + 1
    Y = stellar_subdivide(Y, tuple(range(m + 1)), centre)
    for _ in range(k - 1):
        inner = [t for t in Y.facets if centre in t]
        for t in inner:
            Y = stellar_subdivide(Y, t)
    return Y


def gk(k: int) -> SimplicialComplex:
    """Central edge {0, 1} with k leaves on each end (2k + 2 vertices, 2k + 1 edges)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(k)]
    edges += [(1, 2 + k + i) for i in range(k)]
    return SimplicialComplex(edges)


def rp2() -> SimplicialComplex:
    """Minimal 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex(RP2_FACETS)


def random_disk(t: int, seed: int = 0, glue_probability: float = RANDOM_DISK_GLUE_PROBABILITY) -> SimplicialComplex:
    """Seeded triangulated disk with ``t`` triangles.

    Starts from one triangle and either glues a triangle with a new apex onto
    a random boundary edge, or fills a wedge of two consecutive boundary edges
    whose outer endpoints are not yet joined. Both moves keep a disk.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    rng = random.Random(seed)
    tris = [(0, 1, 2)]
    edges = {(0, 1), (0, 2), (1, 2)}
    count = {(0, 1): 1, (0, 2): 1, (1, 2): 1}
    nxt = 3
    while len(tris) < t:
        boundary = sorted(e for e, c in count.items() if c == 1)
        move = "glue"
        if rng.random() >= glue_probability:
            wedges = []
            for i, e in enumerate(boundary):
                for f in boundary[i + 1:]:
                    shared = set(e) & set(f)
                    if len(shared) != 1:
                        continue
                    a, c = sorted(set(e) ^ set(f))
                    if (a, c) not in edges:
                        wedges.append((a, shared.pop(), c))
            if wedges:
                move = "fill"
                tri = tuple(sorted(rng.choice(wedges)))
        if move == "glue":
            a, b = rng.choice(boundary)
            tri = (a, b, nxt)
            nxt += 1
        tris.append(tri)
        for e in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])):
            edges.add(e)
            count[e] = count.get(e, 0) + 1
    return SimplicialComplex(tris)


def random_tree(n: int, seed: int = 0) -> SimplicialComplex:
    """Seeded random tree on ``n >= 2`` vertices (each new vertex joins a uniform earlier one)."""
    if n < 2:
        raise ValueError("a tree needs at least 2 vertices")
    rng = random.Random(seed)
    return SimplicialComplex([(rng.randrange(v), v) for v in range(1, n)])
