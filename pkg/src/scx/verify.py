"""Mechanical verification of the inequalities and closed forms on generated complexes.

A suite is a list of tasks; each task returns a list of checks. Tasks may run
on a thread pool, but the report always lists checks in task order.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from . import generators as gen
from .algebra import Z2Chain, betti, betti_numbers, smith_normal_form, signed_boundary, z2_boundary
from .cheeger import cheeger, chain_certificate, structural_cheeger, verify_certificate
from .config import Config
from .dirichlet import agreement_check, top_cheeger_mincut
from .report import fmt_rational
from .spectra import laplacian, nonzero_spectrum, spectral_gap

SPEC_TOL = 1e-8
INEQ_TOL = 1e-9


@dataclass
class Check:
    claim_id: str
    anchor: str  # the statement being checked
    values: dict
    bound: str
    passed: bool
    runtime: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_document(self, timing: bool = True) -> dict:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not timing:
                d.pop("runtime")
            checks.append(d)
        return {"suite": self.suite, "params": self.params, "passed": self.passed, "checks": checks}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_document(timing), indent=2, sort_keys=True, default=_jsonable) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            vals = ", ".join(f"{k}={_short(v)}" for k, v in c.values.items())
            lines.append(f"{mark}  {c.claim_id:<34} {c.anchor}  [{c.bound}]  {vals}")
        n_fail = sum(not c.passed for c in self.checks)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def _jsonable(x):
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    raise TypeError(type(x))


def _short(v):
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, list) and len(v) > 6:
        return f"[{len(v)} items]"
    return v


def _q(x) -> str:
    return fmt_rational(x)


def _fl(x: float):
    return "inf" if math.isinf(x) else float(x)


def check(claim_id: str, anchor: str, bound: str, fn) -> Check:
    t0 = time.perf_counter()
    passed, values = fn()
    return Check(claim_id, anchor, values, bound, bool(passed), time.perf_counter() - t0)


# -- task factories --------------------------------------------------------------


def xk_tasks(m: int, kmax: int, cfg: Config, factory=gen.xk) -> list:
    def task(k):
        X = factory(m, k)
        out = [check(
            f"xk.m{m}.k{k}.non_branching", "X_k is non-branching", "true",
            lambda: (X.is_non_branching(), {"non_branching": X.is_non_branching()}),
        )]

        def radius():
            rep = X.depth_and_radius()
            s = structural_cheeger(X, "h_top_cochain_via_radius")
            vals = {"radius": rep.radius, "h_top_cochain": _q(s.value)}
            ok = rep.radius == k and s.value == Fraction(1, k)
            if X.n(m - 1) <= 21:
                b = cheeger(X, m - 1, "coboundary", sweep_cap_bits=cfg.brute_cap_bits,
                            coset_cap_bits=cfg.coset_cap_bits)
                vals["h_top_cochain_brute"] = _q(b.value)
                ok = ok and b.value == s.value
            return ok, vals
        out.append(check(f"xk.m{m}.k{k}.radius", "h^(m-1)(X_k) = 1/rad(X_k) = 1/k", "== 1/k", radius))

        def chain():
            formula = Fraction((m + 1) * (m - 1)) / (Fraction(m + 1) - 2 * Fraction(m) ** (1 - k))
            cut = top_cheeger_mincut(X)
            vals = {"h_top_chain": _q(cut.value), "formula": _q(formula), "method": "mincut"}
            ok = cut.value >= m - 1 and cut.value == formula and verify_certificate(X, cut)
            if X.n(m) <= 20:
                b = cheeger(X, m, "boundary", sweep_cap_bits=cfg.brute_cap_bits)
                vals["h_top_chain_brute"] = _q(b.value)
                ok = ok and b.value == cut.value
            return ok, vals
        out.append(check(f"xk.m{m}.k{k}.h_top_chain", "h_m(X_k) = (m+1)(m-1)/((m+1) - 2m^(1-k)) >= m-1",
                         ">= m-1", chain))

        def gaps():
            up = spectral_gap(X, m - 1, "up", tol=cfg.eig_tol)
            down = spectral_gap(X, m, "down", tol=cfg.eig_tol)
            lb = (m - 1) ** 2 / (2 * (m + 1))
            ok = abs(up - down) <= SPEC_TOL and up >= lb - INEQ_TOL
            return ok, {"lambda_up": up, "lambda_down": down, "lower_bound": lb}
        out.append(check(f"xk.m{m}.k{k}.lambda", "lambda^(m-1)(X_k) = lambda_m >= (m-1)^2/(2(m+1))",
                         ">= (m-1)^2/(2(m+1))", gaps))
        return out
    return [lambda k=k: task(k) for k in range(1, kmax + 1)]


def yk_tasks(m: int, kmax: int, cfg: Config) -> list:
    def task(k):
        Y = gen.yk(m, k)
        centre = m + 1
        out = []

        def counts():
            inner = sum(1 for t in Y.facets if centre in t)
            total = (m + 1) * (m ** k - 1) // (m - 1)
            ok = inner == (m + 1) * m ** (k - 1) and Y.n(m) == total and len(Y.boundary_faces()) == m + 1
            return ok, {"inner_facets": inner, "facets": Y.n(m), "boundary_faces": len(Y.boundary_faces())}
        out.append(check(f"yk.m{m}.k{k}.counts",
                         "Y_k: (m+1)m^(k-1) inner facets, (m+1)(m^k-1)/(m-1) facets, m+1 boundary faces",
                         "==", counts))

        def cochain():
            s = structural_cheeger(Y, "h_top_cochain_via_radius")
            return s.value >= Fraction(1, k), {"h_top_cochain": _q(s.value), "radius": s.denominator}
        out.append(check(f"yk.m{m}.k{k}.h_top_cochain", "h^(m-1)(Y_k) >= 1/k", ">= 1/k", cochain))

        def chain():
            cert = chain_certificate(Y, Z2Chain(m, Y.n(m), (1 << Y.n(m)) - 1))
            exact = top_cheeger_mincut(Y).value
            bound = Fraction(1, m ** (k - 1))
            ok = cert.value <= bound and exact <= cert.value
            return ok, {"all_facets_ratio": _q(cert.value), "h_top_chain": _q(exact), "upper_bound": _q(bound)}
        out.append(check(f"yk.m{m}.k{k}.h_top_chain", "h_m(Y_k) <= 1/m^(k-1) via the all-facets chain",
                         "<= 1/m^(k-1)", chain))

        if k > 1:
            def gaps():
                up = spectral_gap(Y, m - 1, "up", tol=cfg.eig_tol)
                down = spectral_gap(Y, m, "down", tol=cfg.eig_tol)
                ub = 1 / m ** (k - 1)
                ok = abs(up - down) <= SPEC_TOL and up <= ub + INEQ_TOL
                return ok, {"lambda_up": up, "lambda_down": down, "upper_bound": ub}
            out.append(check(f"yk.m{m}.k{k}.lambda", "lambda^(m-1)(Y_k) = lambda_m <= 1/m^(k-1)",
                             "<= 1/m^(k-1)", gaps))
        return out
    return [lambda k=k: task(k) for k in range(1, kmax + 1)]


def sigma_tasks(ms, cfg: Config) -> list:
    def task(m):
        S = gen.sigma(m - 1)
        out = []

        def spectrum():
            worst = 0.0
            for k in range(m):
                ev = nonzero_spectrum(laplacian(S, k), cfg.eig_tol)
                if len(ev):
                    worst = max(worst, float(np.max(np.abs(ev - m))))
            return worst <= SPEC_TOL, {"max_deviation_from_m": worst}
        out.append(check(f"sigma.m{m}.spectrum", "nonzero Laplacian eigenvalues of Sigma^(m-1) equal m",
                         "|ev - m| <= 1e-8", spectrum))

        def bounds():
            vals, ok = {}, True
            for k in range(m):
                red = k == 0
                hu = cheeger(S, k, "coboundary", red, cfg.brute_cap_bits, cfg.coset_cap_bits)
                hd = cheeger(S, k, "boundary", red, cfg.brute_cap_bits, cfg.coset_cap_bits)
                vals[f"h^{k}"] = _q(hu.value)
                vals[f"h_{k}"] = _q(hd.value)
                ok &= hu.value is None or hu.value >= Fraction(m, k + 2)
                ok &= hd.value is None or hd.value >= Fraction(m, m - k)
            return ok, vals
        out.append(check(f"sigma.m{m}.cheeger", "h^k >= m/(k+2) and h_k >= m/(m-k) on Sigma^(m-1)",
                         ">=", bounds))
        return out
    return [lambda m=m: task(m) for m in ms]


def rp2_tasks(cfg: Config) -> list:
    def task():
        X = gen.rp2()
        out = []

        def homology():
            z2, q = betti_numbers(X, "z2"), betti_numbers(X, "rational")
            snf = smith_normal_form(signed_boundary(X, 2))
            ok = z2 == (1, 1, 1) and q == (1, 0, 0) and snf.torsion == (2,)
            return ok, {"betti_z2": list(z2), "betti_q": list(q), "torsion_d2": list(snf.torsion)}
        out.append(check("rp2.homology", "RP^2: Z2 Betti (1,1,1), rational (1,0,0), torsion Z/2",
                         "==", homology))

        def cheeger_vs_gap():
            h = cheeger(X, 2, "boundary")
            lam = spectral_gap(X, 2, "down", tol=cfg.eig_tol)
            ok = h.value == 0 and h.witness.weight == X.n(2) and lam > 0.05
            return ok, {"h_2": _q(h.value), "witness_weight": h.witness.weight, "lambda_2": lam}
        out.append(check("rp2.h2_vs_lambda2", "RP^2: h_2 = 0 while lambda_2 > 0", "h=0, lambda>0.05",
                         cheeger_vs_gap))
        out.append(check("rp2.non_orientable", "RP^2 admits no coherent orientation", "absent",
                         lambda: (X.coherent_orientation() is None,
                                  {"orientable": X.coherent_orientation() is not None})))
        return out
    return [task]


def inequality_tasks(seeds: int, cfg: Config, max_triangles: int = 12) -> list:
    def task(seed):
        t = 1 + seed % max_triangles
        X = gen.random_disk(t, seed)

        def ineq():
            h = cheeger(X, 2, "boundary", sweep_cap_bits=cfg.brute_cap_bits).value
            lam = spectral_gap(X, 2, "down", tol=cfg.eig_tol)
            ok = float(h) >= lam - INEQ_TOL and lam >= float(h) ** 2 / 6 - INEQ_TOL
            return ok, {"triangles": t, "h_2": _q(h), "lambda_2": lam}

        def invariants():
            ok = True
            for k in range(1, X.dim + 1):
                ok &= not (signed_boundary(X, k - 1) @ signed_boundary(X, k)).any() if k > 1 else True
                ok &= (z2_boundary(X, k - 1) @ z2_boundary(X, k)).is_zero() if k > 1 else True
            for k in range(X.dim + 1):
                ev = np.linalg.eigvalsh(laplacian(X, k).matrix.astype(float))
                ok &= int(np.sum(ev < SPEC_TOL)) == betti(X, k, "rational")
            for k in range(X.dim):
                a = nonzero_spectrum(laplacian(X, k, "up"), cfg.eig_tol)
                b = nonzero_spectrum(laplacian(X, k + 1, "down"), cfg.eig_tol)
                ok &= len(a) == len(b) and bool(np.all(np.abs(np.sort(a) - np.sort(b)) <= SPEC_TOL))
            return ok, {"triangles": t}
        return [
            check(f"cheeger_ineq.seed{seed}.cheeger", "h_2 >= lambda_2 >= h_2^2/(2(m+1))", "1e-9", ineq),
            check(f"cheeger_ineq.seed{seed}.invariants",
                  "dd = 0; zero multiplicity = rational Betti; up/down spectra match", "1e-8", invariants),
        ]
    return [lambda s=s: task(s) for s in range(seeds)]


def structural_tasks(seeds: int, cfg: Config, max_triangles: int = 8) -> list:
    def tree_task(seed):
        T = gen.random_tree(3 + seed % 12, seed)

        def diam():
            h = cheeger(T, 1, "boundary").value
            d = T.distance_and_diameter().diameter
            s = structural_cheeger(T, "h1_via_diameter").value
            return betti(T, 1, "z2") == 0 and h * d == 2 and s == h, {"h_1": _q(h), "diameter": d}
        return [check(f"structural.tree{seed}.diameter", "h_1 * diam = 2 when H_1(Z2) = 0", "== 2", diam)]

    def disk_task(seed):
        t = 1 + seed % max_triangles
        X = gen.random_disk(t, 1000 + seed)

        def diam():
            h = cheeger(X, 1, "boundary", sweep_cap_bits=cfg.brute_cap_bits,
                        coset_cap_bits=cfg.coset_cap_bits).value
            d = X.distance_and_diameter().diameter
            return betti(X, 1, "z2") == 0 and h * d == 2, {"h_1": _q(h), "diameter": d}

        def rad():
            hyp = betti(X, 1, "z2") == 0 and betti(X, 2, "z2") == 0 and X.is_non_branching()
            h = cheeger(X, 1, "coboundary", sweep_cap_bits=cfg.brute_cap_bits,
                        coset_cap_bits=cfg.coset_cap_bits).value
            r = X.depth_and_radius("bfs").radius
            return hyp and h * r == 1, {"h^1": _q(h), "radius": r}

        def depth():
            a = X.depth_and_radius("bfs").depths
            vals = {"edges": X.n(1)}
            if X.n(1) > 20:
                return True, {**vals, "note": "skipped: more than 20 edges"}
            b = X.depth_and_radius("brute").depths
            return a == b, {**vals, "depths": list(a)}
        return [
            check(f"structural.disk{seed}.diameter", "h_1 * diam = 2 when H_1(Z2) = 0", "== 2", diam),
            check(f"structural.disk{seed}.radius", "h^(m-1) * rad = 1 under the cohomology hypotheses",
                  "== 1", rad),
            check(f"structural.disk{seed}.depth", "BFS depth equals brute-force depth", "==", depth),
        ]
    return [lambda s=s: tree_task(s) for s in range(seeds)] + [lambda s=s: disk_task(s) for s in range(seeds)]


def gk_tasks(kmax: int, cfg: Config) -> list:
    def task(k):
        G = gen.gk(k)

        def values():
            h0 = cheeger(G, 0, "coboundary", reduced=True).value
            h1 = cheeger(G, 1, "boundary").value
            lam1 = spectral_gap(G, 1, "down", tol=cfg.eig_tol)
            lam0 = spectral_gap(G, 0, "up", reduced=True, tol=cfg.eig_tol)
            ok = (h0 == Fraction(1, k + 1) and h1 == Fraction(2, 3) and abs(lam1 - lam0) <= SPEC_TOL
                  and lam1 <= 2 / (k + 1) + INEQ_TOL)
            return ok, {"h^0_reduced": _q(h0), "h_1": _q(h1), "lambda_1": lam1, "lambda^0_reduced": lam0}
        return [check(f"gk.k{k}", "G_k: h^0 = 1/(k+1), h_1 = 2/3, lambda_1 = lambda^0 <= 2/(k+1)",
                      "==, <=", values)]
    return [lambda k=k: task(k) for k in range(1, kmax + 1)]


def dual_graph_tasks(count: int, cfg: Config, max_triangles: int = 12) -> list:
    def task(seed):
        X = gen.random_disk(1 + seed % max_triangles, 2000 + seed)

        def agree():
            rep = agreement_check(X, cfg.eig_tol)
            hs = float(rep.h_dirichlet)
            lam = rep.lambda_dirichlet
            ok = (rep.matrices_equal and rep.h_equal and hs >= lam - INEQ_TOL
                  and lam >= hs ** 2 / (2 * (X.dim + 1)) - INEQ_TOL)
            return ok, {"h_m": _q(rep.h_top), "h_S": _q(rep.h_dirichlet), "lambda_S": lam,
                        "matrices_equal": rep.matrices_equal}
        return [check(f"dual.seed{seed}", "orientable non-branching: L_m = L_0^S, h_m = h_S, "
                      "h_S >= lambda_S >= h_S^2/(2(m+1))", "exact / 1e-9", agree)]

    def rp2_task():
        X = gen.rp2()

        def contrast():
            rep = agreement_check(X, cfg.eig_tol)
            lam2 = spectral_gap(X, 2, "down", tol=cfg.eig_tol)
            ok = abs(rep.lambda_dirichlet) <= SPEC_TOL and lam2 > 0 and not rep.matrices_equal and rep.h_equal
            return ok, {"lambda_S": rep.lambda_dirichlet, "lambda_2": lam2,
                        "matrices_equal": rep.matrices_equal, "h_equal": rep.h_equal}
        return [check("dual.rp2", "RP^2: lambda_S = 0 < lambda_2, L_2 != L_0^S, h_2 = h_S",
                      "1e-8", contrast)]
    return [lambda s=s: task(s) for s in range(count)] + [rp2_task]


# -- suites -----------------------------------------------------------------------


def build_tasks(suite: str, m: int, kmax: int, seeds: int, cfg: Config, factories: dict | None = None) -> list:
    factories = factories or {}
    xk_factory = factories.get("xk", gen.xk)
    if suite == "paper":
        return (
            xk_tasks(m, kmax, cfg, xk_factory)
            + (xk_tasks(3, 3, cfg, xk_factory) if m != 3 else [])
            + yk_tasks(m, min(kmax, 4), cfg)
            + sigma_tasks((3, 4, 5), cfg)
            + rp2_tasks(cfg)
            + inequality_tasks(seeds, cfg)
            + structural_tasks(max(1, seeds // 2), cfg)
            + gk_tasks(6, cfg)
            + dual_graph_tasks(max(1, (2 * seeds) // 5), cfg)
        )
    if suite == "quick":
        return (
            xk_tasks(m, min(kmax, 3), cfg, xk_factory)
            + yk_tasks(m, min(kmax, 3), cfg)
            + sigma_tasks((3,), cfg)
            + rp2_tasks(cfg)
            + inequality_tasks(min(seeds, 5), cfg)
            + structural_tasks(min(seeds, 3), cfg)
            + gk_tasks(3, cfg)
            + dual_graph_tasks(min(seeds, 3), cfg)
        )
    raise ValueError(f"unknown suite {suite!r}")


def run_suite(suite: str = "paper", m: int = 2, kmax: int = 5, seeds: int = 50,
              config: Config | None = None, threads: int = 1, factories: dict | None = None) -> VerificationReport:
    """Run every check of ``suite``; results are independent of ``threads``."""
    cfg = config or Config()
    if m < 2:
        raise ValueError("the suites need m >= 2")
    tasks = build_tasks(suite, m, kmax, seeds, cfg, factories)
    if threads <= 1:
        groups = [t() for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            groups = list(pool.map(lambda t: t(), tasks))
    params = {"m": m, "kmax": kmax, "seeds": seeds}
    return VerificationReport(suite, params, [c for g in groups for c in g])
