"""RP^2: Z2 Cheeger number zero, real spectral gap positive, and the dual-graph contrast."""

from __future__ import annotations

from scx import generators as gen
from scx.algebra import betti_numbers, torsion_coefficients
from scx.cheeger import cheeger
from scx.dirichlet import agreement_check
from scx.spectra import spectral_gap


def main():
    X = gen.rp2()
    print("counts             ", X.counts)
    print("Betti over Z2      ", betti_numbers(X, "z2"))
    print("Betti over Q       ", betti_numbers(X, "rational"))
    print("torsion of H_1(Z)  ", torsion_coefficients(X, 1))
    h = cheeger(X, 2, "boundary")
    print("h_2                ", h.value, "witness weight", h.witness.weight)
    print("lambda_2           ", f"{spectral_gap(X, 2, 'down'):.10f}")
    rep = agreement_check(X)
    print("orientable         ", rep.orientable)
    print("L_2 == L_0^S       ", rep.matrices_equal, "first mismatch", rep.mismatch)
    print("h_S                ", rep.h_dirichlet)
    print("lambda_S           ", f"{rep.lambda_dirichlet:.3e}")


if __name__ == "__main__":
    main()
