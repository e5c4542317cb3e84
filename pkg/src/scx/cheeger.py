"""Coboundary and boundary Cheeger numbers with exact certificates.

For a linear "numerator" map D and an image subspace B with D(B) = 0, the
Cheeger number is the minimum over cosets phi + B != B of

    |D phi| / min_{psi in B} |phi + psi|

(Hamming weights). The numerator is constant on each coset, so one sweep over
all of F_2^n that labels each vector with its coset key and records the
per-coset minimum weight solves the problem exactly.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .algebra import Z2Basis, Z2Chain, betti, z2_boundary
from .complex import SimplicialComplex
from .errors import BeyondBruteForceCap, DimensionOutOfRange, HypothesisViolated
from .sweep import LinearSweep, popcount

DIRECTIONS = ("coboundary", "boundary")


@dataclass(frozen=True)
class CheegerCertificate:
    """Exact Cheeger value with an attaining chain.

    ``value`` is None when no chain lies outside the image subspace, i.e. the
    minimum runs over an empty set.
    """

    value: Fraction | None
    witness: Z2Chain | None
    numerator: int | None
    denominator: int | None
    method: str
    dimension: int
    direction: str
    reduced: bool = False

    def as_float(self) -> float:
        return float("inf") if self.value is None else float(self.value)


@dataclass(frozen=True)
class RatioProblem:
    """Ratio minimisation data: numerator columns and the image subspace basis."""

    n: int
    numerator: list[int]
    width: int
    image: Z2Basis

    def numerator_of(self, x: int) -> int:
        acc = 0
        for i in range(self.n):
            if x >> i & 1:
                acc ^= self.numerator[i]
        return acc.bit_count()


def ratio_problem(X: SimplicialComplex, k: int, direction: str, reduced: bool = False) -> RatioProblem:
    """Numerator map and image subspace for h^k (coboundary) or h_k (boundary)."""
    if not 0 <= k <= X.dim:
        raise DimensionOutOfRange(f"dimension {k} outside 0..{X.dim}")
    n = X.n(k)
    if direction == "coboundary":
        # delta^k is the transpose of boundary_{k+1}; its columns are the rows
        up = z2_boundary(X, k + 1, reduced)
        numer, width = list(up.rows), up.ncols
        low = z2_boundary(X, k, reduced)
        image = Z2Basis(low.rows, n)  # columns of delta^{k-1}
    elif direction == "boundary":
        down = z2_boundary(X, k, reduced)
        numer, width = down.columns(), down.nrows
        image = Z2Basis(z2_boundary(X, k + 1, reduced).columns(), n)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return RatioProblem(n, numer, width, image)


def minimise_ratio(problem: RatioProblem, sweep_cap_bits: int = 24, coset_cap_bits: int = 20,
                   workers: int = 1):
    """Exhaustive minimisation; returns (value, witness bits, numerator, denominator).

    Ties between optimal cosets, and between minimum-weight vectors inside a
    coset, go to the smallest witness as an integer (bit i = ordinal i).
    """
    n, image = problem.n, problem.image
    if n > sweep_cap_bits:
        raise BeyondBruteForceCap(
            f"sweep over 2^{n} chains exceeds 2^{sweep_cap_bits}", bits=n, cap_bits=sweep_cap_bits
        )
    q = n - image.rank
    if q == 0:
        return None, None, None, None
    maps = {"num": (problem.numerator, problem.width)}
    if image.rank == 0:
        return _minimise_trivial_image(problem, maps, workers)
    if q > coset_cap_bits:
        raise BeyondBruteForceCap(
            f"coset table of 2^{q} entries exceeds 2^{coset_cap_bits}", bits=q, cap_bits=coset_cap_bits
        )
    maps["key"] = ([image.key(1 << i) for i in range(n)], q)
    sweep = LinearSweep(n, maps)

    def scan(blocks):
        minw = np.full(1 << q, n + 1, dtype=np.int64)
        num = np.zeros(1 << q, dtype=np.int64)
        for h in blocks:
            _, weights, images = sweep.block(h)
            keys = images["key"][0].astype(np.int64)
            np.minimum.at(minw, keys, weights)
            num[keys] = popcount(images["num"])
        return minw, num

    parts = _partition(sweep.nblocks, workers)
    if len(parts) == 1:
        tables = [scan(parts[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            tables = list(pool.map(scan, parts))
    minw, num = tables[0]
    for bw, bn in tables[1:]:
        np.minimum(minw, bw, out=minw)
        np.maximum(num, bn, out=num)  # constant per coset; max ignores unseen zeros
    ratio = num[1:] / minw[1:]
    lo = ratio.min()
    cands = np.nonzero(ratio <= lo * (1 + 1e-12) + 1e-300)[0] + 1
    best = min(Fraction(int(num[c]), int(minw[c])) for c in cands)
    tied = np.zeros(1 << q, dtype=bool)
    for c in cands:
        if Fraction(int(num[c]), int(minw[c])) == best:
            tied[c] = True
    for start, weights, images in sweep.blocks():
        keys = images["key"][0].astype(np.int64)
        hit = tied[keys] & (weights == minw[keys])
        if hit.any():
            x = start + int(np.argmax(hit))
            break
    return best, x, problem.numerator_of(x), x.bit_count()


def _partition(nblocks: int, workers: int) -> list[range]:
    workers = max(1, min(workers, nblocks))
    step = -(-nblocks // workers)
    return [range(i, min(i + step, nblocks)) for i in range(0, nblocks, step)]


def _minimise_trivial_image(problem: RatioProblem, maps, workers):
    sweep = LinearSweep(problem.n, maps)

    def scan(start, weights, images):
        num = popcount(images["num"])
        if start == 0:
            weights = weights.copy()
            weights[0] = 1  # the zero chain is excluded below
        ratio = num / weights
        if start == 0:
            ratio[0] = np.inf
        i = int(np.argmin(ratio))
        lo = ratio[i]
        cand = np.nonzero(ratio <= lo * (1 + 1e-12) + 1e-300)[0]
        fr = [(Fraction(int(num[c]), int(weights[c])), c) for c in cand]
        best = min(f for f, _ in fr)
        first = min(c for f, c in fr if f == best)
        return best, start + int(first), int(num[first]), int(weights[first])

    results = sweep.map_blocks(scan, workers)
    best = min(r[0] for r in results)
    return next(r for r in results if r[0] == best)


def cheeger(X: SimplicialComplex, k: int, direction: str = "coboundary", reduced: bool = False,
            sweep_cap_bits: int = 24, coset_cap_bits: int = 20, workers: int = 1) -> CheegerCertificate:
    """h^k (coboundary) or h_k (boundary) by exhaustive coset search.

    ``reduced`` uses the augmented complex at k = 0, which turns h^0 into the
    Cheeger constant of the 1-skeleton.
    """
    problem = ratio_problem(X, k, direction, reduced)
    try:
        value, x, num, den = minimise_ratio(problem, sweep_cap_bits, coset_cap_bits, workers)
    except BeyondBruteForceCap as exc:
        exc.dimension = k
        raise
    witness = None if x is None else Z2Chain(k, problem.n, x)
    return CheegerCertificate(value, witness, num, den, "brute", k, direction, reduced)


def chain_certificate(X: SimplicialComplex, chain: Z2Chain, direction: str = "boundary",
                      reduced: bool = False, cap_bits: int = 24) -> CheegerCertificate:
    """Certificate for the ratio attained by a given chain (an upper bound on h).

    The denominator is the exact minimum weight over the chain's coset, found
    by enumerating the image subspace.
    """
    problem = ratio_problem(X, chain.dimension, direction, reduced)
    if problem.image.contains(chain.bits):
        raise ValueError("chain lies in the image subspace")
    num, den = _recount(problem, chain.bits, cap_bits)
    return CheegerCertificate(Fraction(num, den), chain, num, den, "chain",
                              chain.dimension, direction, reduced)


def _recount(problem: RatioProblem, x: int, cap_bits: int) -> tuple[int, int]:
    if problem.image.rank > cap_bits:
        raise BeyondBruteForceCap(
            f"image subspace of 2^{problem.image.rank} exceeds 2^{cap_bits}",
            bits=problem.image.rank, cap_bits=cap_bits,
        )
    den = min((x ^ v).bit_count() for v in problem.image.span())
    return problem.numerator_of(x), den


def verify_certificate(X: SimplicialComplex, cert: CheegerCertificate, cap_bits: int = 24) -> bool:
    """Recompute numerator and coset-minimal denominator of the witness."""
    problem = ratio_problem(X, cert.dimension, cert.direction, cert.reduced)
    if cert.value is None:
        return problem.n == problem.image.rank
    x = cert.witness.bits
    if problem.image.contains(x):
        return False
    num, den = _recount(problem, x, cap_bits)
    return (num, den) == (cert.numerator, cert.denominator) and Fraction(num, den) == cert.value


# -- structural shortcuts ------------------------------------------------------


def structural_cheeger(X: SimplicialComplex, target: str, depth_cap_bits: int = 24) -> CheegerCertificate:
    """Closed-form Cheeger numbers.

    ``h1_via_diameter``: h_1 = 2 / diam, witnessed by a geodesic, when
    H_1(Z2) = 0 and the complex is connected.

    ``h_top_cochain_via_radius``: h^(m-1) = 1 / rad, witnessed by a
    depth-attaining cochain, when H^(m-1)(Z2) = 0 and H_m(Z2) = 0.
    """
    if target == "h1_via_diameter":
        if X.dim < 1:
            raise HypothesisViolated("dimension >= 1")
        if betti(X, 1, "z2") != 0:
            raise HypothesisViolated("H_1(Z2) = 0")
        if not X.is_connected():
            raise HypothesisViolated("connected 1-skeleton")
        rep = X.distance_and_diameter()
        pair = min(rep.geodesics)
        edges = rep.geodesics[pair]
        witness = Z2Chain.from_support(1, X.n(1), edges)
        return CheegerCertificate(Fraction(2, rep.diameter), witness, 2, rep.diameter,
                                  "structural", 1, "boundary")
    if target == "h_top_cochain_via_radius":
        m = X.dim
        if m < 1:
            raise HypothesisViolated("dimension >= 1")
        if betti(X, m - 1, "z2") != 0:
            raise HypothesisViolated("H^(m-1)(Z2) = 0")
        if betti(X, m, "z2") != 0:
            raise HypothesisViolated("H_m(Z2) = 0")
        rep = X.depth_and_radius("auto", depth_cap_bits)
        j = rep.depths.index(rep.radius)
        witness = Z2Chain.from_support(m - 1, X.n(m - 1), rep.witnesses[j])
        return CheegerCertificate(Fraction(1, rep.radius), witness, 1, rep.radius,
                                  "structural", m - 1, "coboundary")
    raise ValueError(f"unknown structural target {target!r}")


def with_method(cert: CheegerCertificate, method: str) -> CheegerCertificate:
    return replace(cert, method=method)
