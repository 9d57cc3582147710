"""Algebraic dimension of complex 2-tori, exactly.

Three period matrices with three different answers: the square torus is an
abelian surface (a = 2), a root-of-2 shear leaves a single elliptic fibration
(a = 1), and independent irrational periods kill every divisor (a = 0).

Run: python3 demos/torus_dimension.py
"""

from nilalg import CScalar, PeriodTau, RealAlg, algebraic_dimension, ns_lattice

i = CScalar.of(0, 1)
r2, r3, r6 = RealAlg.sqrt(2), RealAlg.sqrt(3), RealAlg.sqrt(6)


def show(label, tau):
    out = algebraic_dimension(tau, radius=5)
    lattice = ns_lattice(tau)
    print(label)
    print("  lattice rank:", len(lattice.basis))
    for row in lattice.basis:
        print("   ", row)
    print("  a =", out.value, "(exact)" if out.exact else "(lower bound)")
    if out.witness is not None:
        print("  witness:", out.witness, "with pairing rank", out.witness_rank)
    print()


show("square torus, tau = i Id:", PeriodTau.of([[i, 0], [0, i]]))

show(
    "sheared by 2*r2 - 2i*r3 in the corner:",
    PeriodTau.of([[i, CScalar.of(2 * r2, -2 * r3)], [0, i]]),
)

show(
    "independent irrational periods:",
    PeriodTau.of([[CScalar.of(0, r2), CScalar.of(r3)], [CScalar.of(r6), i]]),
)
