"""Invariant complex structures on nilpotent Lie algebras.

A complex structure is an exact real matrix J with J^2 = -Id.  Integrability
against a bracket is the vanishing of the Nijenhuis tensor

    N(x, y) = [Jx, Jy] - [x, y] - J[Jx, y] - J[x, Jy],

checked on basis pairs with an explicit witness when it fails.

Two invariants of an integrable pair (g, J) are computed by quotients:

* counting independent closed (1,0)-forms.  These are the complex covectors
  vanishing on h = [g, g] + J[g, g], so their count is (n - dim h) / 2; the
  same number is recomputed over CScalar as the solution space of
  phi . J = i phi, phi|_[g,g] = 0, and both routes are exposed.
* the dimension (n - dim S) / 2, where S is the smallest rational J-invariant
  subspace containing [g, g].  S is grown by alternating two closure steps,
  adding J-images and taking rational hulls, until stable; each step only
  adds vectors forced into any rational J-invariant superspace of [g, g],
  so the fixpoint is minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from nilalg.liealg import NilpotentLieAlgebra, cohomology_dims
from nilalg.linalg import Mat, Scalar, ShapeError, Subspace, kernel, solve
from nilalg.scalar import (
    CScalar,
    RealAlg,
    ScalarParseError,
    format_realalg,
    is_zero,
    parse_cscalar,
    parse_realalg,
)

__all__ = [
    "ComplexStructure",
    "nijenhuis_tensor",
    "integrability_witness",
    "is_integrable",
    "commutator_j_span",
    "holomorphic_one_forms_dim",
    "closed_one_zero_forms_dim",
    "rational_hull",
    "j_invariant_span",
    "rational_j_invariant_span",
    "albanese_dim",
    "is_rational_j",
    "kahler_rank",
    "invariant_report",
    "load_complex_structure",
    "complex_structure_to_data",
]


@dataclass(frozen=True)
class ComplexStructure:
    """Endomorphism with J^2 = -Id, acting on coordinate columns."""

    mat: Mat

    def __post_init__(self) -> None:
        m = self.mat
        if m.nrows != m.ncols:
            raise ShapeError("J must be square")
        if m.nrows % 2:
            raise ValueError("J needs an even-dimensional space")
        for row in m.rows:
            for x in row:
                if isinstance(x, CScalar):
                    raise TypeError("J must be a real matrix")
        if not ((m @ m) + Mat.identity(m.nrows)).is_zero():
            raise ValueError("J^2 != -Id")

    @staticmethod
    def of(rows: Iterable[Iterable[object]]) -> "ComplexStructure":
        return ComplexStructure(Mat.of(rows))

    @property
    def n(self) -> int:
        return self.mat.nrows

    def apply(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(vec) != self.n:
            raise ShapeError("vector length does not match J")
        return (self.mat @ Mat.col_vec(vec)).col(0)

    def basis_image(self, i: int) -> tuple[Scalar, ...]:
        """J e_i (0-based)."""
        return self.mat.col(i)


def nijenhuis_tensor(
    alg: NilpotentLieAlgebra, j: ComplexStructure, x: Sequence[Scalar], y: Sequence[Scalar]
) -> tuple[Scalar, ...]:
    if alg.dim != j.n:
        raise ShapeError("algebra and J dimensions differ")
    jx, jy = j.apply(x), j.apply(y)
    t1 = alg.bracket(jx, jy)
    t2 = alg.bracket(x, y)
    t3 = j.apply(alg.bracket(jx, y))
    t4 = j.apply(alg.bracket(x, jy))
    return tuple(a - b - c - d for a, b, c, d in zip(t1, t2, t3, t4))


def integrability_witness(
    alg: NilpotentLieAlgebra, j: ComplexStructure
) -> "tuple[int, int, tuple[Scalar, ...]] | None":
    """First basis pair (1-based) with nonzero Nijenhuis value, or None."""
    n = alg.dim
    for a in range(n):
        ea = [Fraction(1 if t == a else 0) for t in range(n)]
        for b in range(a + 1, n):
            eb = [Fraction(1 if t == b else 0) for t in range(n)]
            val = nijenhuis_tensor(alg, j, ea, eb)
            if any(not is_zero(c) for c in val):
                return (a + 1, b + 1, val)
    return None


def is_integrable(alg: NilpotentLieAlgebra, j: ComplexStructure) -> bool:
    return integrability_witness(alg, j) is None


def j_invariant_span(space: Subspace, j: ComplexStructure) -> Subspace:
    """Smallest J-invariant subspace containing the input: S + JS."""
    if space.ambient != j.n:
        raise ShapeError("subspace and J dimensions differ")
    if space.dim == 0:
        return space
    images = [j.apply(row) for row in space.basis.rows]
    return space + Subspace.span(images, ambient=space.ambient)


def commutator_j_span(alg: NilpotentLieAlgebra, j: ComplexStructure) -> Subspace:
    """h = [g, g] + J [g, g]; complex covectors on g/h are the closed
    (1,0)-forms."""
    return j_invariant_span(alg.commutator_subspace(), j)


def holomorphic_one_forms_dim(alg: NilpotentLieAlgebra, j: ComplexStructure) -> int:
    h = commutator_j_span(alg, j)
    rest = alg.dim - h.dim
    assert rest % 2 == 0, "J-invariant complement has even dimension"
    return rest // 2


def closed_one_zero_forms_dim(alg: NilpotentLieAlgebra, j: ComplexStructure) -> int:
    """Same count through the complex linear system phi J = i phi,
    phi([g, g]) = 0, solved over CScalar."""
    if alg.dim != j.n:
        raise ShapeError("algebra and J dimensions differ")
    n = alg.dim
    jt = j.mat.T.map(CScalar.from_real)
    i_id = Mat.of(
        [[CScalar.i() if r == c else CScalar.zero() for c in range(n)] for r in range(n)]
    )
    rows = jt - i_id
    g1 = alg.commutator_subspace()
    if g1.dim:
        rows = rows.vstack(g1.basis.map(CScalar.from_real))
    return kernel(rows).nrows


def rational_hull(space: Subspace) -> Subspace:
    """Smallest subspace with a rational basis containing the input.

    Each basis vector is split along the square roots appearing in its
    entries; every rational component vector lies in any rational subspace
    containing the original, so their joint span is exact, not just an
    upper bound.
    """
    component_vectors: list[list[Fraction]] = []
    for row in space.basis.rows:
        per_root: dict[int, list[Fraction]] = {}
        for pos, entry in enumerate(row):
            terms = (
                entry.reduced_terms()
                if isinstance(entry, RealAlg)
                else ((1, Fraction(entry)),)
            )
            for d, q in terms:
                if q:
                    vec = per_root.setdefault(d, [Fraction(0)] * space.ambient)
                    vec[pos] = q
        component_vectors.extend(per_root.values())
    if not component_vectors:
        return Subspace.zero(space.ambient)
    return Subspace.span(component_vectors, ambient=space.ambient)


def rational_j_invariant_span(space: Subspace, j: ComplexStructure) -> Subspace:
    """Fixpoint of rational_hull and j_invariant_span: the smallest rational
    J-invariant subspace containing the input.  Dimensions strictly grow
    until stable, so at most ambient-many rounds run."""
    current = rational_hull(space)
    while True:
        grown = rational_hull(j_invariant_span(current, j))
        if grown.dim == current.dim:
            return current
        current = grown


def albanese_dim(alg: NilpotentLieAlgebra, j: ComplexStructure) -> int:
    """(n - dim S) / 2 for S the rational J-invariant span of [g, g]."""
    s = rational_j_invariant_span(alg.commutator_subspace(), j)
    rest = alg.dim - s.dim
    assert rest % 2 == 0
    return rest // 2


def is_rational_j(j: ComplexStructure) -> bool:
    """True when every entry of J is rational (preserves the basis Q-structure)."""
    return all(
        RealAlg.coerce(entry).is_rational() for row in j.mat.rows for entry in row
    )


def kahler_rank(alg: NilpotentLieAlgebra, j: ComplexStructure) -> int:
    """Largest semipositive rank a closed compatible form can reach; for this
    class of algebras it coincides with the holomorphic 1-form count."""
    return holomorphic_one_forms_dim(alg, j)


def _basis_rows(space: Subspace) -> list[list[str]]:
    return [[format_realalg(v) for v in row] for row in space.basis.rows]


def invariant_report(alg: NilpotentLieAlgebra, j: ComplexStructure) -> dict[str, object]:
    """All scalar invariants of the pair, with 1-based witnesses.

    The sigma entries duplicate the h entries on purpose: the directions
    along which meromorphic functions are constant are exactly g1 + J g1.
    """
    if alg.dim != j.n:
        raise ShapeError("algebra and J dimensions differ")
    witness = integrability_witness(alg, j)
    g1 = alg.commutator_subspace()
    h = commutator_j_span(alg, j)
    s = rational_j_invariant_span(g1, j)
    series_dims = [sp.dim for sp in alg.lower_central_series()]
    h1_dim = (alg.dim - h.dim) // 2
    report: dict[str, object] = {
        "dim": alg.dim,
        "lowerCentralDims": series_dims,
        "nilpotencyStep": len(series_dims) - 1 if series_dims[-1] == 0 else None,
        "b1": cohomology_dims(alg, 1)[1],
        "integrable": witness is None,
        "commutatorDim": g1.dim,
        "hDim": h.dim,
        "h1Dim": h1_dim,
        "algDimUpperBound": h1_dim,
        "kahlerRank": h1_dim,
        "closedOneZeroFormsDim": closed_one_zero_forms_dim(alg, j),
        "rationalSpanDim": s.dim,
        "albaneseDim": (alg.dim - s.dim) // 2,
        "isRationalJ": is_rational_j(j),
        "sigmaBasis": _basis_rows(h),
        "hBasis": _basis_rows(h),
        "h1Basis": _basis_rows(s),
    }
    if witness is not None:
        a, b, val = witness
        report["nijenhuisWitness"] = {
            "i": a,
            "j": b,
            "value": [format_realalg(c) for c in val],
        }
    return report


# -- file format -----------------------------------------------------------------


def _parse_real_entry(value: object, where: str) -> "Fraction | RealAlg":
    if isinstance(value, bool) or isinstance(value, float):
        raise ScalarParseError(f"{where}: exact scalar required, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_realalg(value)
    raise ScalarParseError(f"{where}: exact scalar required, got {value!r}")


def load_complex_structure(data: Mapping[str, object], dim: int) -> ComplexStructure:
    """Read a structure from either flavor of document:

    * "J": n x n row-major matrix of exact real scalars, or
    * "oneforms": n/2 x n complex matrix W whose rows are independent
      (1,0)-forms; J is recovered by solving [W; conj W] J = [iW; -i conj W]
      and must come out real with J^2 = -Id.
    """
    has_j = "J" in data
    has_w = "oneforms" in data
    if has_j == has_w:
        raise ValueError("need exactly one of \"J\" or \"oneforms\"")
    if has_j:
        rows = data["J"]
        if not isinstance(rows, list) or len(rows) != dim:
            raise ValueError(f"\"J\" must be a {dim} x {dim} matrix")
        parsed = []
        for r, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != dim:
                raise ValueError(f"\"J\" row {r + 1} must have {dim} entries")
            parsed.append([_parse_real_entry(x, f"J[{r + 1}]") for x in row])
        return ComplexStructure.of(parsed)
    rows = data["oneforms"]
    if dim % 2:
        raise ValueError("oneforms need an even dimension")
    if not isinstance(rows, list) or len(rows) != dim // 2:
        raise ValueError(f"\"oneforms\" must have {dim // 2} rows")
    w_rows = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ValueError(f"oneforms row {r + 1} must have {dim} entries")
        w_rows.append([parse_cscalar(x) for x in row])
    w = Mat.of(w_rows)
    stacked = w.vstack(w.conj())
    i = CScalar.i()
    target = (w * i).vstack(w.conj() * (-i))
    j_mat = solve(stacked, target)
    if j_mat is None or kernel(stacked).nrows:
        raise ValueError("oneforms rows do not span the (1,0) covectors")
    real_rows = []
    for r, row in enumerate(j_mat.rows):
        real_row = []
        for c, entry in enumerate(row):
            assert isinstance(entry, CScalar)
            if not entry.imag.is_zero():
                raise ValueError(f"recovered J has a non-real entry at ({r + 1}, {c + 1})")
            real_row.append(entry.real)
        real_rows.append(real_row)
    return ComplexStructure.of(real_rows)


def complex_structure_to_data(j: ComplexStructure) -> dict[str, object]:
    return {"J": [[format_realalg(x) for x in row] for row in j.mat.rows]}
