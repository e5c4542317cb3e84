"""Per-complex analysis document, text table and CSV export."""

from __future__ import annotations

import csv
import io
import math
from fractions import Fraction

from .algebra import betti, torsion_coefficients
from .cheeger import CheegerCertificate, cheeger, structural_cheeger
from .complex import SimplicialComplex
from .config import Config
from .dirichlet import top_cheeger_mincut
from .errors import BeyondBruteForceCap, HypothesisViolated, NoBoundary
from .spectra import nonzero_spectrum, laplacian, spectral_gap


def fmt_rational(x) -> str:
    if x is None:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_float(x: float):
    return "inf" if math.isinf(x) else x


def certificate_doc(cert: CheegerCertificate) -> dict:
    return {
        "dimension": cert.dimension,
        "direction": cert.direction,
        "reduced": cert.reduced,
        "value": fmt_rational(cert.value),
        "numerator": cert.numerator,
        "denominator": cert.denominator,
        "witness": list(cert.witness.support) if cert.witness is not None else None,
        "method": cert.method,
    }


def parse_dims(selector: str | None, top: int) -> list[int]:
    if selector in (None, "", "all"):
        return list(range(top + 1))
    dims = sorted({int(d) for d in selector.split(",")})
    bad = [d for d in dims if not 0 <= d <= top]
    if bad:
        raise ValueError(f"dimensions {bad} outside 0..{top}")
    return dims


def analyze(X: SimplicialComplex, config: Config | None = None, dims: list[int] | None = None,
            structural_only: bool = False) -> dict:
    """Every invariant the library computes, as one JSON-ready document."""
    cfg = config or Config()
    m = X.dim
    dims = list(range(m + 1)) if dims is None else dims
    doc: dict = {
        "dimension": m,
        "counts": list(X.counts),
        "euler_characteristic": X.euler_characteristic,
        "connected": X.is_connected(),
        "non_branching": X.is_non_branching(),
        "orientable": X.is_orientable(),
        "boundary_faces": len(X.boundary_faces()),
        "betti": {
            "z2": [betti(X, k, "z2") for k in range(m + 1)],
            "rational": [betti(X, k, "rational") for k in range(m + 1)],
            "z2_reduced": [betti(X, k, "z2", True) for k in range(m + 1)],
            "rational_reduced": [betti(X, k, "rational", True) for k in range(m + 1)],
        },
        "torsion": {str(k): list(torsion_coefficients(X, k)) for k in range(m + 1)},
    }
    if m >= 1:
        dd = X.distance_and_diameter()
        doc["diameter"] = dd.diameter
        if not dd.connected:
            doc["diameter_note"] = "disconnected: cross-component pairs count as distance 0"
        try:
            doc["radius"] = X.depth_and_radius("auto", cfg.brute_cap_bits).radius
        except (NoBoundary, BeyondBruteForceCap) as exc:
            doc["radius"] = None
            doc["radius_note"] = str(exc)
    spectral = []
    for k in dims:
        row = {
            "k": k,
            "lambda_up": fmt_float(spectral_gap(X, k, "up", tol=cfg.eig_tol)),
            "lambda_down": fmt_float(spectral_gap(X, k, "down", tol=cfg.eig_tol)),
            "nonzero_spectrum": [float(x) for x in nonzero_spectrum(laplacian(X, k), cfg.eig_tol)],
        }
        if k == 0:
            row["lambda_up_reduced"] = fmt_float(spectral_gap(X, 0, "up", True, cfg.eig_tol))
            row["lambda_down_reduced"] = fmt_float(spectral_gap(X, 0, "down", True, cfg.eig_tol))
        spectral.append(row)
    doc["spectral"] = spectral
    structural = {}
    for target in ("h1_via_diameter", "h_top_cochain_via_radius"):
        try:
            structural[target] = certificate_doc(structural_cheeger(X, target, cfg.brute_cap_bits))
        except (HypothesisViolated, NoBoundary, BeyondBruteForceCap) as exc:
            structural[target] = {"skipped": str(exc)}
    if m >= 1 and X.is_non_branching():
        structural["h_top_chain_via_dual_mincut"] = certificate_doc(top_cheeger_mincut(X))
    doc["structural"] = structural
    if not structural_only:
        certs = []
        for k in dims:
            for direction in ("coboundary", "boundary"):
                for reduced in ((False, True) if k == 0 else (False,)):
                    certs.append(certificate_doc(cheeger(
                        X, k, direction, reduced, cfg.brute_cap_bits, cfg.coset_cap_bits, cfg.workers
                    )))
        doc["cheeger"] = certs
    return doc


TABLE_COLUMNS = ("k", "n_k", "betti_z2", "betti_q", "torsion", "lambda^k", "lambda_k", "h^k", "h_k")


def table_rows(doc: dict) -> list[list[str]]:
    """One row per analysed dimension; k = 0 uses the reduced complex."""
    cheeg = {}
    for c in doc.get("cheeger", []):
        if c["dimension"] == 0 and not c["reduced"]:
            continue
        cheeg[(c["dimension"], c["direction"])] = c["value"]
    for c in doc.get("structural", {}).values():
        if "value" in c:
            cheeg.setdefault((c["dimension"], c["direction"]), c["value"] + "*")
    rows = []
    for s in doc["spectral"]:
        k = s["k"]
        red = k == 0
        lam_up = s["lambda_up_reduced"] if red else s["lambda_up"]
        lam_down = s["lambda_down_reduced"] if red else s["lambda_down"]
        rows.append([
            str(k) + ("~" if red else ""),
            str(doc["counts"][k]),
            str(doc["betti"]["z2_reduced" if red else "z2"][k]),
            str(doc["betti"]["rational_reduced" if red else "rational"][k]),
            " ".join(map(str, doc["torsion"][str(k)])) or "-",
            _fmt_cell(lam_up),
            _fmt_cell(lam_down),
            cheeg.get((k, "coboundary"), "-"),
            cheeg.get((k, "boundary"), "-"),
        ])
    return rows


def _fmt_cell(x) -> str:
    return x if isinstance(x, str) else f"{x:.10g}"


def text_table(doc: dict) -> str:
    rows = [list(TABLE_COLUMNS)] + table_rows(doc)
    widths = [max(len(r[i]) for r in rows) for i in range(len(TABLE_COLUMNS))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    summary = [
        f"dimension {doc['dimension']}  counts {tuple(doc['counts'])}  chi {doc['euler_characteristic']}",
        f"connected {doc['connected']}  non-branching {doc['non_branching']}  "
        f"orientable {doc['orientable']}  boundary faces {doc['boundary_faces']}",
    ]
    if "diameter" in doc:
        summary.append(f"diameter {doc['diameter']}  radius {doc.get('radius')}")
    return "\n".join(summary + [""] + lines + ["", "(~ = reduced complex, * = structural shortcut)"]) + "\n"


def csv_table(doc: dict) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    w.writerows(table_rows(doc))
    return out.getvalue()
