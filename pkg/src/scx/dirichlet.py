"""Border-facet extension, dual graph, and Dirichlet eigenvalue / Cheeger constant.

For a non-branching m-complex X, every boundary face gets a border facet, and
the dual graph has one vertex per top simplex of the extension with edges for
shared (m-1)-faces. Border facets form the Dirichlet set S. Dual vertices are
ordered with the top simplexes of X first (in ordinal order), then border
facets in boundary-face order, so the interior block lines up with C_m(X).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
import numpy as np

from .algebra import Z2Basis, Z2Chain
from .cheeger import CheegerCertificate, RatioProblem, cheeger, minimise_ratio
from .complex import Simplex, SimplicialComplex
from .errors import Branching, EmptyInterior, NoConvergence
from .spectra import jacobi_eigenvalues, laplacian


@dataclass(frozen=True)
class BorderExtension:
    complex: SimplicialComplex
    border_facets: tuple[Simplex, ...]


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[Simplex, ...]  # top simplexes of the extension
    edges: tuple[tuple[int, int], ...]  # sorted pairs of vertex indices
    border: tuple[int, ...]  # indices of border facets (the set S)

    @property
    def interior(self) -> tuple[int, ...]:
        s = set(self.border)
        return tuple(i for i in range(len(self.vertices)) if i not in s)

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def laplacian(self) -> np.ndarray:
        n = len(self.vertices)
        L = np.zeros((n, n), dtype=np.int64)
        for a, b in self.edges:
            L[a, a] += 1
            L[b, b] += 1
            L[a, b] -= 1
            L[b, a] -= 1
        return L

    def dirichlet_laplacian(self) -> np.ndarray:
        """Principal submatrix of the graph Laplacian on the non-border vertices."""
        keep = list(self.interior)
        return self.laplacian()[np.ix_(keep, keep)]

    def to_document(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "border_set": list(self.border),
        }


@dataclass(frozen=True)
class AgreementReport:
    matrices_equal: bool
    h_equal: bool
    orientable: bool
    h_top: Fraction
    h_dirichlet: Fraction
    lambda_top: float
    lambda_dirichlet: float
    mismatch: tuple[int, int, int, int] | None  # (row, col, L_m entry, L_0^S entry)


def _require_non_branching(X: SimplicialComplex):
    if not X.is_non_branching():
        raise Branching("some (m-1)-simplex has more than two cofaces")


def border_extension(X: SimplicialComplex) -> BorderExtension:
    """Glue one border facet (with a new vertex) onto every boundary face."""
    _require_non_branching(X)
    nxt = max(X.vertices) + 1
    border = tuple(bf + (nxt + i,) for i, bf in enumerate(X.boundary_faces()))
    if not border:
        return BorderExtension(X, ())
    return BorderExtension(SimplicialComplex(list(X.maximal_simplices) + list(border)), border)


def dual_graph(X: SimplicialComplex) -> DualGraph:
    ext = border_extension(X)
    Xp = ext.complex
    m = X.dim
    order = list(X.facets) + list(ext.border_facets)
    pos = {s: i for i, s in enumerate(order)}
    edges = set()
    for cof in Xp.cofaces(m - 1):
        if len(cof) == 2:
            a, b = sorted(pos[Xp.facets[j]] for j in cof)
            edges.add((a, b))
    border = tuple(range(len(X.facets), len(order)))
    return DualGraph(tuple(order), tuple(sorted(edges)), border)


def dirichlet_pair(G: DualGraph, tol: float = 1e-10, sweep_cap_bits: int = 24,
                   workers: int = 1) -> tuple[float, CheegerCertificate]:
    """(lambda_S, h_S): smallest eigenvalue of the Dirichlet Laplacian and the
    minimum over nonempty interior vertex sets U of |edges leaving U| / |U|."""
    interior = G.interior
    if not interior:
        raise EmptyInterior("every dual vertex is a border facet")
    lam = float(jacobi_eigenvalues(G.dirichlet_laplacian(), tol)[0])
    col = {v: i for i, v in enumerate(interior)}
    n = len(interior)
    # graph coboundary restricted to interior coordinates
    numer = [0] * n
    for e, (a, b) in enumerate(G.edges):
        for v in (a, b):
            if v in col:
                numer[col[v]] |= 1 << e
    problem = RatioProblem(n, numer, len(G.edges), Z2Basis([], n))
    value, x, num, den = minimise_ratio(problem, sweep_cap_bits, sweep_cap_bits, workers)
    h = CheegerCertificate(value, Z2Chain(0, n, x), num, den, "brute", 0, "coboundary")
    return lam, h


def _min_parametric_cut(G: DualGraph, p: int, q: int) -> tuple[int, set[int]]:
    """min over U (interior) of p |interior minus U| + q |cut(U)|, and the minimising U.

    Border vertices are merged into the sink, so they never enter U.
    """
    border = set(G.border)
    D = nx.DiGraph()
    s, t = "s", "t"
    for v in G.interior:
        D.add_edge(s, v, capacity=p)
    for a, b in G.edges:
        ends = [t if a in border else a, t if b in border else b]
        if ends[0] == ends[1]:
            continue
        for u, w in (ends, ends[::-1]):
            if u == t:
                continue
            cap = D[u][w]["capacity"] + q if D.has_edge(u, w) else q
            D.add_edge(u, w, capacity=cap)
    D.add_node(t)
    value, (side, _) = nx.minimum_cut(D, s, t)
    return int(value), set(side) - {s}


def dirichlet_cheeger_mincut(G: DualGraph, max_rounds: int = 1000) -> CheegerCertificate:
    """Exact h_S by Dinkelbach iteration over parametric minimum cuts.

    With lambda = p/q, some U beats lambda iff the minimum of
    p |interior minus U| + q |cut(U)| is below p |interior|. Each improving
    round strictly lowers lambda, so the loop ends at the optimum. Unlike the
    sweep this scales to large dual graphs; the witness is a minimiser but not
    necessarily the smallest one.
    """
    interior = G.interior
    if not interior:
        raise EmptyInterior("every dual vertex is a border facet")
    n = len(interior)
    inside = set(interior)

    def cut_of(U):
        return sum((a in U) != (b in U) for a, b in G.edges)

    U = inside
    lam = Fraction(cut_of(U), len(U))
    for _ in range(max_rounds):
        value, side = _min_parametric_cut(G, lam.numerator, lam.denominator)
        if value >= lam.numerator * n:
            break
        U = side
        lam = Fraction(cut_of(U), len(U))
    else:
        raise NoConvergence(f"no fixed point after {max_rounds} rounds")
    col = {v: i for i, v in enumerate(interior)}
    witness = Z2Chain.from_support(0, n, sorted(col[v] for v in U))
    return CheegerCertificate(lam, witness, cut_of(U), len(U), "mincut", 0, "coboundary")


def top_cheeger_mincut(X: SimplicialComplex) -> CheegerCertificate:
    """Exact h_m of a non-branching complex through h_m = h_S on the dual graph.

    Dual vertex i < |S_m| is facet ordinal i, so the witness carries over as an
    m-chain of X.
    """
    cert = dirichlet_cheeger_mincut(dual_graph(X))
    m = X.dim
    witness = Z2Chain(m, X.n(m), cert.witness.bits)
    return CheegerCertificate(cert.value, witness, cert.numerator, cert.denominator, "mincut", m, "boundary")


def agreement_check(X: SimplicialComplex, tol: float = 1e-10, sweep_cap_bits: int = 24) -> AgreementReport:
    """Compare L_m(X) with the Dirichlet Laplacian of the dual graph, and h_m with h_S.

    L_m is taken under a coherent orientation when one exists, otherwise under
    the reference orientation.
    """
    _require_non_branching(X)
    m = X.dim
    G = dual_graph(X)
    LS = G.dirichlet_laplacian()
    Lm = laplacian(X, m, "down").matrix
    signs = X.coherent_orientation()
    if signs is not None:
        d = np.array(signs, dtype=np.int64)
        Lm = Lm * np.outer(d, d)
    diff = np.argwhere(Lm != LS)
    mismatch = None
    if len(diff):
        # prefer an off-diagonal witness
        off = [tuple(map(int, rc)) for rc in diff if rc[0] != rc[1]]
        r, c = off[0] if off else tuple(map(int, diff[0]))
        mismatch = (r, c, int(Lm[r, c]), int(LS[r, c]))
    h_top = cheeger(X, m, "boundary", sweep_cap_bits=sweep_cap_bits)
    lam_s, h_s = dirichlet_pair(G, tol, sweep_cap_bits)
    lam_top = float(jacobi_eigenvalues(Lm, tol)[0])
    return AgreementReport(
        matrices_equal=mismatch is None,
        h_equal=h_top.value == h_s.value,
        orientable=signs is not None,
        h_top=h_top.value,
        h_dirichlet=h_s.value,
        lambda_top=lam_top,
        lambda_dirichlet=lam_s,
        mismatch=mismatch,
    )
