"""Build a nilpotent algebra with a complex structure and read off its
invariants: first cohomology, holomorphic 1-forms, the Albanese quotient.

Run: python3 demos/invariants.py
"""

import json

from nilalg import (
    ComplexStructure,
    NilpotentLieAlgebra,
    cohomology_dims,
    invariant_report,
)

# Structure constants of the real algebra underlying the Heisenberg group
# over the complex numbers: [e1,e3] = -e5, [e2,e4] = e5, [e1,e4] = -e6,
# [e2,e3] = -e6, everything else zero.  Keys are 0-based index pairs; values
# give the coordinates of the bracket.
alg = NilpotentLieAlgebra(
    6,
    {
        (0, 2): (0, 0, 0, 0, -1, 0),
        (1, 3): (0, 0, 0, 0, 1, 0),
        (0, 3): (0, 0, 0, 0, 0, -1),
        (1, 2): (0, 0, 0, 0, 0, -1),
    },
)

report = alg.validate()
print("valid Lie algebra:", report.ok)
print("lower central series dims:", report.series_dims)
print("betti numbers:", cohomology_dims(alg))

# J pairs the basis as e1 -> e2, e3 -> e4, e5 -> e6.
j = ComplexStructure.of(
    [
        [0, -1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 1, 0],
    ]
)

inv = invariant_report(alg, j)
print(json.dumps(inv, indent=2, sort_keys=True))

# The headline chain: meromorphic function theory is constrained by the
# holomorphic 1-form count, which caps the algebraic dimension.
print("holomorphic 1-form count:", inv["h1Dim"])
print("algebraic dimension bound:", inv["algDimUpperBound"])
print("Albanese torus dimension:", inv["albaneseDim"])
