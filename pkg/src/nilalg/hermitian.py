"""Invariant 2-forms paired with a complex structure.

For a 2-form eta with antisymmetric matrix N and a structure J, the pairing
b(x, y) = eta(x, Jy) has matrix N J.  The form has type (1,1) exactly when b
is symmetric; then b's signature decides semipositivity and the nullspace.
The chain culminating here: a closed semipositive (1,1) form on a nilpotent
algebra always kills the commutator, and verify_nullspace_contains_commutator
checks that containment after enforcing each precondition by name.

Degenerate-but-useful forms come from the abelian quotient: project g along
h = [g, g] + J [g, g], put a positive (1,1) form on the quotient, pull back.
The pullback is closed with radical exactly h.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from nilalg.complexstruct import ComplexStructure, commutator_j_span
from nilalg.liealg import KForm, NilpotentLieAlgebra
from nilalg.linalg import Mat, Scalar, ShapeError, Subspace, kernel, symmetric_signature
from nilalg.scalar import ScalarParseError, format_realalg, is_zero, parse_realalg

__all__ = [
    "PreconditionError",
    "two_form_matrix",
    "two_form_from_matrix",
    "hermitian_matrix",
    "is_one_one",
    "hermitian_signature",
    "is_semipositive",
    "hermitian_nullspace",
    "contraction_nullspace",
    "is_closed",
    "is_subalgebra",
    "contraction_nullspace_report",
    "is_holomorphic_subalgebra",
    "adjoint_square_identity_holds",
    "verify_nullspace_contains_commutator",
    "Abelianization",
    "abelianization",
    "positive_hermitian_form",
    "random_positive_hermitian_form",
    "pullback_two_form",
    "load_two_form",
    "two_form_to_data",
]


class PreconditionError(ValueError):
    """A named hypothesis of an operation does not hold."""

    def __init__(self, label: str, message: str):
        super().__init__(f"{label}: {message}")
        self.label = label


def _require_two_form(form: KForm) -> None:
    if form.k != 2:
        raise ShapeError(f"need a 2-form, got degree {form.k}")


def two_form_matrix(form: KForm) -> Mat:
    """Antisymmetric N with N[a][b] = eta(e_a, e_b)."""
    _require_two_form(form)
    n = form.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (a, b), c in form.coeffs.items():
        rows[a][b] = c
        rows[b][a] = -c
    return Mat.of(rows)


def two_form_from_matrix(mat: Mat) -> KForm:
    if mat.nrows != mat.ncols:
        raise ShapeError("2-form matrix must be square")
    n = mat.nrows
    coeffs = {}
    for a in range(n):
        if not is_zero(mat.rows[a][a]):
            raise ValueError("2-form matrix must be antisymmetric")
        for b in range(a + 1, n):
            if mat.rows[a][b] != -mat.rows[b][a]:
                raise ValueError("2-form matrix must be antisymmetric")
            if not is_zero(mat.rows[a][b]):
                coeffs[(a, b)] = mat.rows[a][b]
    return KForm(n, 2, coeffs)


def hermitian_matrix(form: KForm, j: ComplexStructure) -> Mat:
    """Matrix of b(x, y) = eta(x, Jy)."""
    _require_two_form(form)
    if form.n != j.n:
        raise ShapeError("form and J dimensions differ")
    return two_form_matrix(form) @ j.mat


def is_one_one(form: KForm, j: ComplexStructure) -> bool:
    """eta(Jx, Jy) = eta(x, y), equivalently b symmetric."""
    b = hermitian_matrix(form, j)
    return all(
        b.rows[a][c] == b.rows[c][a] for a in range(b.nrows) for c in range(a + 1, b.nrows)
    )


def hermitian_signature(form: KForm, j: ComplexStructure) -> tuple[int, int, int]:
    if not is_one_one(form, j):
        raise PreconditionError("oneOne", "the form is not of type (1,1) for this J")
    return symmetric_signature(hermitian_matrix(form, j))


def is_semipositive(form: KForm, j: ComplexStructure) -> bool:
    """No negative directions in b; requires type (1,1)."""
    return hermitian_signature(form, j)[1] == 0


def hermitian_nullspace(form: KForm, j: ComplexStructure) -> Subspace:
    """Kernel of b for a semipositive (1,1) form."""
    if not is_semipositive(form, j):
        raise PreconditionError("semipositive", "b has a negative direction")
    ker = kernel(hermitian_matrix(form, j))
    if not ker.rows:
        return Subspace.zero(form.n)
    return Subspace.span(ker, ambient=form.n)


def contraction_nullspace(form: KForm) -> Subspace:
    """Radical {x : eta(x, .) = 0}, no J involved."""
    _require_two_form(form)
    ker = kernel(two_form_matrix(form))
    if not ker.rows:
        return Subspace.zero(form.n)
    return Subspace.span(ker, ambient=form.n)


def is_closed(alg: NilpotentLieAlgebra, form: KForm) -> bool:
    return alg.differential(form).is_zero()


def is_subalgebra(alg: NilpotentLieAlgebra, space: Subspace) -> bool:
    if space.ambient != alg.dim:
        raise ShapeError("subspace and algebra dimensions differ")
    rows = space.basis.rows
    return all(
        space.contains(alg.bracket(x, y)) for i, x in enumerate(rows) for y in rows[i + 1 :]
    )


def contraction_nullspace_report(alg: NilpotentLieAlgebra, form: KForm) -> dict[str, object]:
    """Radical of a closed form, flagged with whether it is a subalgebra.

    Closedness makes the flag a theorem (the radical of a closed 2-form is
    always bracket-closed), so it is required up front.
    """
    if not is_closed(alg, form):
        raise PreconditionError("closed", "d eta != 0")
    rad = contraction_nullspace(form)
    return {"dim": rad.dim, "isSubalgebra": is_subalgebra(alg, rad), "space": rad}


def is_holomorphic_subalgebra(
    alg: NilpotentLieAlgebra, j: ComplexStructure, space: Subspace
) -> bool:
    """Whether a J-invariant subspace is closed under the bracket induced on
    (1,0)-vectors: [y, x] + [Jy, Jx] + J[Jy, x] - J[y, Jx] must stay inside.

    The combination is bilinear, so basis pairs decide it.
    """
    if space.ambient != alg.dim or alg.dim != j.n:
        raise ShapeError("dimensions differ")
    for row in space.basis.rows:
        if not space.contains(j.apply(row)):
            raise PreconditionError("jInvariant", "the subspace is not J-invariant")
    rows = space.basis.rows
    for x in rows:
        jx = j.apply(x)
        for y in rows:
            jy = j.apply(y)
            val = [
                a + b + c - d
                for a, b, c, d in zip(
                    alg.bracket(y, x),
                    alg.bracket(jy, jx),
                    j.apply(alg.bracket(jy, x)),
                    j.apply(alg.bracket(y, jx)),
                )
            ]
            if not space.contains(val):
                return False
    return True


def adjoint_square_identity_holds(
    alg: NilpotentLieAlgebra,
    j: ComplexStructure,
    form: KForm,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
) -> bool:
    """eta([y, x], J [y, x]) = -eta([x, [x, y]], J y) for the given vectors."""
    _require_two_form(form)
    yx = alg.bracket(y, x)
    lhs = form.evaluate(yx, j.apply(yx))
    xxy = alg.bracket(x, alg.bracket(x, y))
    rhs = -form.evaluate(xxy, j.apply(y))
    return is_zero(lhs - rhs)


def verify_nullspace_contains_commutator(
    alg: NilpotentLieAlgebra, j: ComplexStructure, form: KForm
) -> bool:
    """For a closed semipositive (1,1) form, check [g, g] inside the
    nullspace of b.  Each precondition failure raises PreconditionError with
    its label ("closed", "oneOne", "semipositive")."""
    if not is_closed(alg, form):
        raise PreconditionError("closed", "d eta != 0")
    if not is_one_one(form, j):
        raise PreconditionError("oneOne", "the form is not of type (1,1) for this J")
    if not is_semipositive(form, j):
        raise PreconditionError("semipositive", "b has a negative direction")
    nullspace = hermitian_nullspace(form, j)
    return nullspace.contains_space(alg.commutator_subspace())


@dataclass(frozen=True)
class Abelianization:
    """Quotient of g by h = [g, g] + J [g, g], in free coordinates.

    projection maps ambient coordinates onto the rows indexed by the non-pivot
    columns of h's canonical basis; quotient_j is the descended structure.
    """

    h: Subspace
    free_columns: tuple[int, ...]
    projection: Mat
    quotient_j: ComplexStructure


def abelianization(alg: NilpotentLieAlgebra, j: ComplexStructure) -> Abelianization:
    h = commutator_j_span(alg, j)
    n = alg.dim
    pivots = []
    for row in h.basis.rows:
        pivots.append(next(c for c, x in enumerate(row) if not is_zero(x)))
    free = [c for c in range(n) if c not in pivots]
    proj_rows = []
    for f in free:
        row: list[Scalar] = [Fraction(0)] * n
        row[f] = Fraction(1)
        for prow, p in zip(h.basis.rows, pivots):
            row[p] = -prow[f]
        proj_rows.append(row)
    proj = Mat.of(proj_rows) if free else Mat(())
    section = Mat.of([[Fraction(1 if r == f else 0) for f in free] for r in range(n)])
    qj = ComplexStructure(proj @ j.mat @ section)
    return Abelianization(h, tuple(free), proj, qj)


def positive_hermitian_form(j: ComplexStructure, g0: Mat) -> KForm:
    """Positive (1,1) form built from a positive metric seed G0:
    G' = G0 + J^T G0 J is J-compatible, N = J^T G' is the form matrix."""
    if g0.shape != (j.n, j.n):
        raise ShapeError("metric seed and J dimensions differ")
    g_prime = g0 + j.mat.T @ g0 @ j.mat
    return two_form_from_matrix(j.mat.T @ g_prime)


def random_positive_hermitian_form(j: ComplexStructure, rng: random.Random) -> KForm:
    """Random positive (1,1) form: seed A^T A + Id is positive definite."""
    n = j.n
    a = Mat.of([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
    return positive_hermitian_form(j, a.T @ a + Mat.identity(n))


def pullback_two_form(form: KForm, projection: Mat) -> KForm:
    """pi^T N pi: the form pulled back along a quotient projection."""
    _require_two_form(form)
    if projection.nrows != form.n:
        raise ShapeError("projection does not land in the form's space")
    return two_form_from_matrix(projection.T @ two_form_matrix(form) @ projection)


# -- file format -----------------------------------------------------------------


def load_two_form(data: Mapping[str, object], dim: int) -> KForm:
    """Read {"twoform": [{"i", "j", "c"}, ...]} with 1-based i < j."""
    if "twoform" not in data:
        raise ValueError("document needs a \"twoform\" field")
    entries = data["twoform"]
    if not isinstance(entries, list):
        raise ValueError("\"twoform\" must be a list")
    coeffs: dict[tuple[int, ...], Scalar] = {}
    for pos, e in enumerate(entries):
        where = f"twoform[{pos}]"
        if not isinstance(e, dict) or not {"i", "j", "c"} <= set(e):
            raise ValueError(f"{where}: need fields i, j, c")
        i, jj, c = e["i"], e["j"], e["c"]
        for name, v in (("i", i), ("j", jj)):
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= dim:
                raise ValueError(f"{where}: index {name}={v!r} out of range 1..{dim}")
        if i >= jj:
            raise ValueError(f"{where}: need i < j")
        if (i - 1, jj - 1) in coeffs:
            raise ValueError(f"{where}: duplicate pair ({i}, {jj})")
        if isinstance(c, bool) or isinstance(c, float):
            raise ScalarParseError(f"{where}: exact scalar required")
        coeffs[(i - 1, jj - 1)] = parse_realalg(c) if isinstance(c, str) else Fraction(c)
    return KForm(dim, 2, coeffs)


def two_form_to_data(form: KForm) -> dict[str, object]:
    _require_two_form(form)
    return {
        "twoform": [
            {"i": a + 1, "j": b + 1, "c": format_realalg(c)}
            for (a, b), c in sorted(form.coeffs.items())
        ]
    }
