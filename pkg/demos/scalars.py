"""Exact scalar arithmetic: field towers, decidable signs, parsing.

Run: python3 demos/scalars.py
"""

from fractions import Fraction

from nilalg import CScalar, RealAlg, format_realalg, parse_realalg

r2 = RealAlg.sqrt(2)
r3 = RealAlg.sqrt(3)

# Products stay inside the tower Q(r2, r3); r2 * r3 lands on the basis
# element r6 without growing the tower.
x = (1 + r2) * (2 - r3)
print("x          =", x)
print("x * x      =", x * x)
print("x - x      =", x - x, "(exactly zero, no epsilon)")

# Squaring is exact: (3 + r2)^2 agrees with the expansion 11 + 6*r2.
lhs = (3 + r2) * (3 + r2)
print("(3+r2)^2 == 11+6*r2:", (lhs - (11 + 6 * r2)).is_zero())

# A classically close call, decided by interval refinement rather than
# a rounded decimal: r2 + r3 versus 3.146.
gap = (r2 + r3) - Fraction(3146, 1000)
print("sign(r2 + r3 - 3146/1000) =", gap.sign())

# Round trip through the text grammar used by every file format.
text = format_realalg(Fraction(-7, 3) + 5 * r2 * r3)
print("formatted   =", text)
print("parsed back =", parse_realalg(text))

# Complex values are plain pairs of field elements.
z = CScalar.of(Fraction(1, 2), r2)
print("z           =", z)
print("|z|^2       =", z.norm_sq(), "(exact)")
