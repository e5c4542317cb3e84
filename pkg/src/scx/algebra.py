"""Exact linear algebra over Z2, the integers and the rationals.

Z2 vectors are Python ints used as bit sets (bit i = coordinate i), which
gives word-parallel XOR elimination without any packing code. Integer and
rational computations use Python ints throughout; nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .complex import SimplicialComplex
from .errors import DimensionOutOfRange, ShapeMismatch

FIELDS = ("z2", "rational")


@dataclass(frozen=True)
class Z2Chain:
    """A k-chain over Z2, identified with the set of k-simplex ordinals in ``bits``."""

    dimension: int
    length: int
    bits: int

    @classmethod
    def from_support(cls, dimension: int, length: int, support) -> "Z2Chain":
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise ShapeMismatch(f"ordinal {i} outside 0..{length - 1}")
            bits |= 1 << i
        return cls(dimension, length, bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if self.bits >> i & 1)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __add__(self, other: "Z2Chain") -> "Z2Chain":
        if (self.dimension, self.length) != (other.dimension, other.length):
            raise ShapeMismatch("chains live in different spaces")
        return Z2Chain(self.dimension, self.length, self.bits ^ other.bits)


@dataclass(frozen=True)
class Z2Matrix:
    """Dense Z2 matrix with one int per row; bit j of ``rows[i]`` is entry (i, j)."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    @classmethod
    def from_columns(cls, nrows: int, columns) -> "Z2Matrix":
        columns = list(columns)
        rows = [0] * nrows
        for j, c in enumerate(columns):
            i = 0
            while c:
                if c & 1:
                    rows[i] |= 1 << j
                c >>= 1
                i += 1
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def from_dense(cls, a) -> "Z2Matrix":
        a = np.asarray(a) % 2
        nrows, ncols = a.shape
        rows = tuple(sum(1 << j for j in np.nonzero(r)[0]) for r in a)
        return cls(nrows, ncols, tuple(int(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "Z2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def columns(self) -> list[int]:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    cols[j] |= 1 << i
                r >>= 1
                j += 1
        return cols

    @property
    def T(self) -> "Z2Matrix":
        return Z2Matrix(self.ncols, self.nrows, tuple(self.columns()))

    def __matmul__(self, other: "Z2Matrix") -> "Z2Matrix":
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = []
        for r in self.rows:
            acc, i = 0, 0
            while r:
                if r & 1:
                    acc ^= other.rows[i]
                r >>= 1
                i += 1
            out.append(acc)
        return Z2Matrix(self.nrows, other.ncols, tuple(out))

    def apply(self, x: int) -> int:
        """Matrix times the column vector ``x`` (as a bit set)."""
        return sum(1 << i for i, r in enumerate(self.rows) if (r & x).bit_count() & 1)

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for i, r in enumerate(self.rows):
            for j in range(self.ncols):
                a[i, j] = r >> j & 1
        return a

    def is_zero(self) -> bool:
        return not any(self.rows)

    @property
    def rank(self) -> int:
        return Z2Basis(self.rows, self.ncols).rank


class Z2Basis:
    """Reduced echelon basis of a subspace of F_2^n.

    Each basis vector has a distinct pivot (its highest set bit) and is zero
    at every other pivot, so reduction yields a unique coset representative.
    """

    def __init__(self, vectors, n: int):
        self.n = n
        basis: dict[int, int] = {}
        for v in vectors:
            v = self._reduce_with(basis, v)
            if v:
                p = v.bit_length() - 1
                for q, b in basis.items():
                    if b >> p & 1:
                        basis[q] = b ^ v
                basis[p] = v
        self.pivots = tuple(sorted(basis))
        self.vectors = tuple(basis[p] for p in self.pivots)
        self.free = tuple(i for i in range(n) if i not in basis)

    @staticmethod
    def _reduce_with(basis: dict[int, int], v: int) -> int:
        for p, b in basis.items():
            if v >> p & 1:
                v ^= b
        return v

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: int) -> int:
        """Canonical representative of v + span: zero at every pivot."""
        for p, b in zip(self.pivots, self.vectors):
            if v >> p & 1:
                v ^= b
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def key(self, v: int) -> int:
        """Coset label in F_2^(n - rank): the reduced vector read at free coordinates."""
        r = self.reduce(v)
        return sum(1 << i for i, f in enumerate(self.free) if r >> f & 1)

    def span(self):
        """Every vector of the subspace (2**rank of them)."""
        out = [0]
        for b in self.vectors:
            out += [x ^ b for x in out]
        return out


@dataclass(frozen=True)
class Z2Elimination:
    rank: int
    basis: Z2Basis
    member: bool | None


def z2_rank_and_membership(M: Z2Matrix, probe: Z2Chain | int | None = None) -> Z2Elimination:
    """Rank of M, an echelon basis of its column space, and whether ``probe`` lies in it."""
    basis = Z2Basis(M.columns(), M.nrows)
    member = None
    if probe is not None:
        if isinstance(probe, Z2Chain):
            if probe.length != M.nrows:
                raise ShapeMismatch(f"probe length {probe.length} != {M.nrows} rows")
            probe = probe.bits
        elif probe >> M.nrows:
            raise ShapeMismatch("probe has bits beyond the row count")
        member = basis.contains(probe)
    return Z2Elimination(basis.rank, basis, member)


# -- boundary matrices --------------------------------------------------------


def _check_dim(X: SimplicialComplex, k: int, top: int | None = None):
    top = X.dim if top is None else top
    if not 0 <= k <= top:
        raise DimensionOutOfRange(f"dimension {k} outside 0..{top}")


def signed_boundary(X: SimplicialComplex, k: int, reduced: bool = False) -> np.ndarray:
    """Integer matrix of the k-th boundary map, valid for 0 <= k <= dim + 1.

    Rows are (k-1)-simplexes, columns k-simplexes. At k = 0 the reduced map is
    the augmentation (a single row of ones); otherwise it has no rows. At
    k = dim + 1 there are no columns.
    """
    key = ("signed", k, reduced)
    if key in X._cache:
        return X._cache[key]
    if k == 0:
        a = np.ones((1 if reduced else 0, X.n(0)), dtype=np.int64)
    else:
        a = np.zeros((X.n(k - 1), X.n(k)), dtype=np.int64)
        if k <= X.dim:
            for j, fs in enumerate(X.face_ordinals(k)):
                for i, f in enumerate(fs):
                    a[f, j] = -1 if i % 2 else 1
    a.setflags(write=False)
    X._cache[key] = a
    return a


def z2_boundary(X: SimplicialComplex, k: int, reduced: bool = False) -> Z2Matrix:
    """The k-th boundary map over Z2, valid for 0 <= k <= dim + 1."""
    key = ("z2", k, reduced)
    if key not in X._cache:
        if k == 0:
            cols = [1] * X.n(0) if reduced else [0] * X.n(0)
            X._cache[key] = Z2Matrix.from_columns(1 if reduced else 0, cols)
        elif k > X.dim:
            X._cache[key] = Z2Matrix(X.n(k - 1), 0, (0,) * X.n(k - 1))
        else:
            cols = [sum(1 << f for f in fs) for fs in X.face_ordinals(k)]
            X._cache[key] = Z2Matrix.from_columns(X.n(k - 1), cols)
    return X._cache[key]


def boundary_matrix(X: SimplicialComplex, k: int, field: str = "int", reduced: bool = False):
    """The k-th boundary map in the reference (ascending-vertex) orientation.

    ``field`` is "z2" (returns a Z2Matrix) or "int" (returns a signed integer
    ndarray). ``reduced`` only changes k = 0, where it appends the augmentation
    row. The coboundary map one dimension lower is the transpose.
    """
    _check_dim(X, k)
    if field == "z2":
        return z2_boundary(X, k, reduced)
    if field in ("int", "rational"):
        return signed_boundary(X, k, reduced)
    raise ValueError(f"unknown field {field!r}")


# -- exact ranks --------------------------------------------------------------


def rational_rank(a) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on Python ints."""
    rows = [[int(x) for x in r] for r in np.asarray(a, dtype=object).tolist()] if len(a) else []
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank, prev, col = 0, 1, 0
    while rank < nr and col < nc:
        piv = next((i for i in range(rank, nr) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, nr):
            r = rows[i]
            ri = r[col]
            for j in range(col + 1, nc):
                r[j] = (p[col] * r[j] - ri * p[j]) // prev
            r[col] = 0
        prev = p[col]
        rank += 1
        col += 1
    return rank


def rank(X: SimplicialComplex, k: int, field: str, reduced: bool = False) -> int:
    """Rank of the k-th boundary map for 0 <= k <= dim + 1."""
    key = ("rank", k, field, reduced)
    if key not in X._cache:
        if field == "z2":
            X._cache[key] = z2_boundary(X, k, reduced).rank
        elif field == "rational":
            X._cache[key] = rational_rank(signed_boundary(X, k, reduced))
        else:
            raise ValueError(f"unknown field {field!r}")
    return X._cache[key]


def betti(X: SimplicialComplex, k: int, field: str = "z2", reduced: bool = False) -> int:
    """dim ker(boundary_k) - rank(boundary_{k+1}); also the cohomology dimension."""
    _check_dim(X, k)
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    return X.n(k) - rank(X, k, field, reduced) - rank(X, k + 1, field, reduced)


def betti_numbers(X: SimplicialComplex, field: str = "z2", reduced: bool = False) -> tuple[int, ...]:
    return tuple(betti(X, k, field, reduced) for k in range(X.dim + 1))


# -- Smith normal form --------------------------------------------------------


@dataclass(frozen=True)
class SmithForm:
    factors: tuple[int, ...]  # nonzero invariant factors, each dividing the next
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d > 1)


def smith_normal_form(M) -> SmithForm:
    """Invariant factors of an integer matrix.

    Pivots are chosen by smallest nonzero magnitude in the active block, which
    keeps entries small on boundary matrices.
    """
    a = [[int(x) for x in r] for r in np.asarray(M, dtype=object).tolist()]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    factors = []
    t = 0
    while t < min(nr, nc):
        entries = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    ri, rt = a[i], a[t]
                    for j in range(t, nc):
                        ri[j] -= q * rt[j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    for i in range(t, nr):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # a smaller remainder appeared in row t or column t: make it the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
            _, pi, pj = min(cands)
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
        factors.append(abs(a[t][t]))
        t += 1
    # normalise the divisibility chain (already holds; gcd pass guards sign/ordering)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            g = gcd(factors[i], factors[j])
            factors[i], factors[j] = g, factors[i] * factors[j] // g
    return SmithForm(tuple(factors), (nr, nc))


def torsion_coefficients(X: SimplicialComplex, k: int) -> tuple[int, ...]:
    """Torsion of H_k(Z): invariant factors > 1 of the (k+1)-th boundary map."""
    _check_dim(X, k)
    return smith_normal_form(signed_boundary(X, k + 1)).torsion
