"""Closed semipositive (1,1)-forms from the abelianized quotient.

A positive form downstairs pulls back to a closed semipositive form whose
null-space is exactly the commutator directions and their J-images.  This is
the mechanism that caps the rank any closed semipositive form can reach.

Run: python3 demos/semipositive_forms.py
"""

import random

from nilalg import (
    abelianization,
    hermitian_nullspace,
    hermitian_signature,
    is_closed,
    is_holomorphic_subalgebra,
    iwasawa,
    pullback_two_form,
    random_positive_hermitian_form,
)

entry = iwasawa()
alg, j = entry.algebra, entry.j

ab = abelianization(alg, j)
print("ambient dimension:", alg.dim)
print("h = [g,g] + J[g,g] has dimension:", ab.h.dim)
print("quotient coordinates:", ab.free_columns)

rng = random.Random(21)
eta = pullback_two_form(random_positive_hermitian_form(ab.quotient_j, rng), ab.projection)

print("pulled-back form closed:", is_closed(alg, eta))
print("signature (pos, neg, zero):", hermitian_signature(eta, j))

nullspace = hermitian_nullspace(eta, j)
print("null-space dimension:", nullspace.dim)
print("null-space equals h:", nullspace == ab.h)
print("null-space is a holomorphic subalgebra:", is_holomorphic_subalgebra(alg, j, nullspace))

# The positive rank is capped by the quotient dimension no matter which
# positive form we start from.
ranks = set()
for _ in range(25):
    form = pullback_two_form(random_positive_hermitian_form(ab.quotient_j, rng), ab.projection)
    ranks.add(hermitian_signature(form, j)[0])
print("positive ranks seen over 25 draws:", sorted(ranks))
