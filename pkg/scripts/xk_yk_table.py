"""Cheeger numbers and spectral gaps along the X_k and Y_k families.

    python3 scripts/xk_yk_table.py --m 2 --kmax 5
"""

from __future__ import annotations

import argparse

from scx import generators as gen
from scx.algebra import Z2Chain
from scx.cheeger import chain_certificate, cheeger, structural_cheeger
from scx.report import fmt_rational
from scx.spectra import spectral_gap


def row(name, X, k, m, brute_bits):
    h_cochain = structural_cheeger(X, "h_top_cochain_via_radius").value
    if X.n(m) <= brute_bits:
        h_chain, how = cheeger(X, m, "boundary").value, "exact"
    else:
        h_chain = chain_certificate(X, Z2Chain(m, X.n(m), (1 << X.n(m)) - 1)).value
        how = "<="
    lam = spectral_gap(X, m - 1, "up")
    return (f"{name:<4}{k:>3}{X.n(m):>8}{fmt_rational(h_cochain):>10}"
            f"{how:>7} {fmt_rational(h_chain):<9}{lam:>12.6f}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--brute-bits", type=int, default=20, help="largest facet count for an exact h_m")
    args = p.parse_args()
    m = args.m
    print(f"{'fam':<4}{'k':>3}{'facets':>8}{'h^(m-1)':>10}{'h_m':>7} {'':<9}{'lambda^(m-1)':>12}")
    for k in range(1, args.kmax + 1):
        print(row("X", gen.xk(m, k), k, m, args.brute_bits))
    for k in range(1, args.kmax + 1):
        print(row("Y", gen.yk(m, k), k, m, args.brute_bits))


if __name__ == "__main__":
    main()
