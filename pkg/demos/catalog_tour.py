"""Walk the built-in catalog and reproduce its headline numbers.

Run: python3 demos/catalog_tour.py
"""

from nilalg import (
    CScalar,
    Mat,
    RealAlg,
    entry_names,
    get_entry,
    iwasawa_algebraic_dimension,
    ugarte_b,
)

print("catalog entries:", ", ".join(entry_names()))
print()

for name in entry_names():
    entry = get_entry(name)
    report = entry.report()
    print(f"{name:16s} dim {report['dim']}  b1 {report['b1']}  "
          f"h1Dim {report['h1Dim']}  bound {report['algDimUpperBound']}")

print()
print("parameter families move h1 between 1 and 3:")
for params, h1 in [((1, 1), 1), ((0, 1), 2), ((1, 0), 2), ((0, 0), 3)]:
    entry = ugarte_b(*params)
    print(f"  eps={params[0]} rho={params[1]}: h1Dim = {entry.report()['h1Dim']}  (expected {h1})")

# Composite: deform the complex structure, recompute the torus base's
# algebraic dimension.  The bound from the invariant report stays 2, but
# the actual value can drop strictly below it.
print()
zero = Mat.zeros(2, 2)
print("flat structure:      a =", iwasawa_algebraic_dimension(zero, radius=2).value)
shear = Mat.of([[0, CScalar.of(RealAlg.sqrt(2), -RealAlg.sqrt(3))], [0, 0]])
print("sheared structure:   a =", iwasawa_algebraic_dimension(shear, radius=3).value)
