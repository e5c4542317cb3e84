from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np
from hypothesis import assume, settings
from hypothesis import strategies as st

from scx.complex import SimplicialComplex

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# filled by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])


@st.composite
def small_complexes(draw, max_vertices: int = 6, max_dim: int = 3, max_per_dim: int = 10):
    """Arbitrary complexes with at most ``max_per_dim`` simplexes in any dimension."""
    nv = draw(st.integers(2, max_vertices))
    sizes = st.integers(1, min(max_dim + 1, nv))
    facets = draw(st.lists(
        sizes.flatmap(lambda s: st.lists(st.integers(0, nv - 1), min_size=s, max_size=s, unique=True)),
        min_size=1, max_size=5,
    ))
    X = SimplicialComplex(facets)
    assume(max(X.counts) <= max_per_dim)
    return X


# -- independent oracles ----------------------------------------------------------


def dense_boundary(X: SimplicialComplex, k: int, reduced: bool = False) -> np.ndarray:
    """Signed boundary built straight from the definition, one entry at a time."""
    if k == 0:
        return np.ones((1, X.n(0)), dtype=np.int64) if reduced else np.zeros((0, X.n(0)), dtype=np.int64)
    if k > X.dim:
        return np.zeros((X.n(k - 1), 0), dtype=np.int64)
    rows = X.simplices[k - 1]
    out = np.zeros((len(rows), X.n(k)), dtype=np.int64)
    for j, s in enumerate(X.simplices[k]):
        for i in range(len(s)):
            out[rows.index(s[:i] + s[i + 1:]), j] = (-1) ** i
    return out


def gf2_rank(a) -> int:
    a = (np.array(a, dtype=np.int64) % 2).astype(np.uint8)
    r = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


def all_vectors(n: int):
    for bits in range(1 << n):
        yield np.array([(bits >> i) & 1 for i in range(n)], dtype=np.int64)


def naive_cheeger(X: SimplicialComplex, k: int, direction: str, reduced: bool = False):
    """Cheeger number by explicit enumeration of vectors and of the image subspace."""
    if direction == "coboundary":
        num = dense_boundary(X, k + 1).T % 2  # delta^k
        img = dense_boundary(X, k, reduced).T % 2  # image of delta^(k-1)
    else:
        num = dense_boundary(X, k, reduced) % 2
        img = dense_boundary(X, k + 1) % 2
    n = X.n(k)
    image = {tuple((img @ y) % 2) for y in all_vectors(img.shape[1])}
    best = None
    for x in all_vectors(n):
        if tuple(x) in image:
            continue
        den = min(int(((x + np.array(b)) % 2).sum()) for b in image)
        nm = int(((num @ x) % 2).sum())
        v = Fraction(nm, den)
        if best is None or v < best:
            best = v
    return best


def combos(n: int, r: int):
    return list(combinations(range(n), r))
