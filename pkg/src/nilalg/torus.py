"""Complex 2-tori with exact period matrices, and their algebraic dimension.

A torus is C^2 / (Z^2 + tau Z^2) for a 2 x 2 complex tau with invertible
imaginary part.  The same data is carried by the lattice automorphism J
(a real 4 x 4 matrix with J^2 = -Id); writing tau = x + i y and J in 2 x 2
blocks, the two views convert by

    J_tau = [[y^-1 x, y^-1], [-y - x y^-1 x, -x y^-1]],
    tau_J = B^-1 A + i B^-1   for J = [[A, B], [C, D]].

Integral 2-forms live on the lattice as antisymmetric integer matrices E,
flattened to coordinates (a, b, c, d, e, f) = (E12, E13, E14, E23, E34, E24).
E pairs J-compatibly (type (1,1)) exactly when

    a + d tau11 - b tau12 + f tau21 - c tau22 + e det(tau) = 0,

one complex linear condition whose integer solutions form the Neron-Severi
lattice here.  The algebraic dimension is half the largest rank of J^T E
over lattice members with J^T E positive semidefinite; the search enumerates
combination shells and certifies exactness where the lattice shape allows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from nilalg.complexstruct import ComplexStructure
from nilalg.linalg import (
    IntLattice,
    Mat,
    ShapeError,
    integer_kernel,
    inverse,
    rank,
    symmetric_signature,
)
from nilalg.scalar import CScalar, format_cscalar, parse_cscalar, sign_of

__all__ = [
    "PeriodTau",
    "tau_from_J",
    "J_from_tau",
    "J_from_X",
    "E_COORD_PAIRS",
    "e_matrix",
    "e_coords",
    "ns_condition_coefficients",
    "ns_condition_value",
    "ns_lattice",
    "is_one_one_on_torus",
    "alpha_degeneracy",
    "AlgebraicDimension",
    "algebraic_dimension",
    "load_torus",
    "tau_to_data",
]


def _as_cscalar_mat(rows: Iterable[Iterable[object]]) -> Mat:
    return Mat.of(rows).map(lambda x: x if isinstance(x, CScalar) else CScalar.from_real(x))


@dataclass(frozen=True)
class PeriodTau:
    """2 x 2 complex period matrix with invertible imaginary part."""

    mat: Mat

    def __post_init__(self) -> None:
        if self.mat.shape != (2, 2):
            raise ShapeError("period matrix must be 2 x 2")
        object.__setattr__(self, "mat", _as_cscalar_mat(self.mat.rows))
        if rank(self.imag_part()) != 2:
            raise ValueError("imaginary part of tau must be invertible")

    @staticmethod
    def of(rows: Iterable[Iterable[object]]) -> "PeriodTau":
        return PeriodTau(Mat.of(rows))

    def entry(self, r: int, c: int) -> CScalar:
        return self.mat.rows[r][c]

    def real_part(self) -> Mat:
        return self.mat.map(lambda z: z.real)

    def imag_part(self) -> Mat:
        return self.mat.map(lambda z: z.imag)

    def det(self) -> CScalar:
        m = self.mat.rows
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    def is_upper_triangular(self) -> bool:
        return self.entry(1, 0).is_zero()


def tau_from_J(j: ComplexStructure) -> PeriodTau:
    """Period matrix B^-1 A + i B^-1 from the blocks J = [[A, B], [C, D]]."""
    if j.n != 4:
        raise ShapeError("torus J must be 4 x 4")
    a = Mat.of([row[:2] for row in j.mat.rows[:2]])
    b = Mat.of([row[2:] for row in j.mat.rows[:2]])
    if rank(b) != 2:
        raise ValueError("upper-right block of J is singular; tau is not defined")
    b_inv = inverse(b)
    x = b_inv @ a
    rows = [
        [CScalar.of(x.rows[r][c], b_inv.rows[r][c]) for c in range(2)] for r in range(2)
    ]
    return PeriodTau(Mat.of(rows))


def J_from_tau(tau: PeriodTau) -> ComplexStructure:
    """[[y^-1 x, y^-1], [-y - x y^-1 x, -x y^-1]] for tau = x + i y."""
    x, y = tau.real_part(), tau.imag_part()
    y_inv = inverse(y)
    top_left = y_inv @ x
    bottom_left = -(y + x @ top_left)
    bottom_right = -(x @ y_inv)
    rows = []
    for r in range(2):
        rows.append(list(top_left.rows[r]) + list(y_inv.rows[r]))
    for r in range(2):
        rows.append(list(bottom_left.rows[r]) + list(bottom_right.rows[r]))
    return ComplexStructure.of(rows)


def J_from_X(x: Mat) -> ComplexStructure:
    """Conjugate the square structure at tau = i Id by
    C = [[Id + X2, X1], [X1, Id - X2]] for X = X1 + i X2: J = C^-1 J0 C.

    For upper-nilpotent X this lands at tau = i Id + 2 X; in general any X
    with C invertible is accepted.
    """
    if x.shape != (2, 2):
        raise ShapeError("X must be 2 x 2")
    xc = _as_cscalar_mat(x.rows)
    x1 = xc.map(lambda z: z.real)
    x2 = xc.map(lambda z: z.imag)
    ident = Mat.identity(2)
    top = (ident + x2).hstack(x1)
    bottom = x1.hstack(ident - x2)
    conj = top.vstack(bottom)
    j0 = Mat.of(
        [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    )
    try:
        conj_inv = inverse(conj)
    except ZeroDivisionError:
        raise ValueError("X gives a singular change of basis; no structure defined")
    return ComplexStructure(conj_inv @ j0 @ conj)


# Coordinate slots (a, b, c, d, e, f) of an antisymmetric integer matrix.
E_COORD_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3))


def e_matrix(coords: Sequence[object]) -> Mat:
    if len(coords) != 6:
        raise ShapeError("need 6 coordinates (a, b, c, d, e, f)")
    rows = [[Fraction(0)] * 4 for _ in range(4)]
    for (r, c), v in zip(E_COORD_PAIRS, coords):
        rows[r][c] = v
        rows[c][r] = -v
    return Mat.of(rows)


def e_coords(e: Mat) -> tuple[object, ...]:
    if e.shape != (4, 4):
        raise ShapeError("E must be 4 x 4")
    return tuple(e.rows[r][c] for (r, c) in E_COORD_PAIRS)


def ns_condition_coefficients(tau: PeriodTau) -> tuple[CScalar, ...]:
    """Complex weights of (a, b, c, d, e, f) in the pairing condition."""
    return (
        CScalar.one(),
        -tau.entry(0, 1),
        -tau.entry(1, 1),
        tau.entry(0, 0),
        tau.det(),
        tau.entry(1, 0),
    )


def ns_condition_value(tau: PeriodTau, coords: Sequence[object]) -> CScalar:
    if len(coords) != 6:
        raise ShapeError("need 6 coordinates")
    total = CScalar.zero()
    for w, v in zip(ns_condition_coefficients(tau), coords):
        cv = v if isinstance(v, CScalar) else CScalar.from_real(v)
        total = total + w * cv
    return total


def _rational_coordinates(values: Sequence[CScalar]) -> Mat:
    """Stack each complex number as a rational row over the joint basis of
    (real/imag part, square root) slots appearing across all of them."""
    keys: list[tuple[int, int]] = []
    seen = set()
    terms = []
    for z in values:
        per = {}
        for part_index, part in enumerate((z.real, z.imag)):
            for d, q in part.reduced_terms():
                key = (part_index, d)
                per[key] = q
                if key not in seen:
                    seen.add(key)
                    keys.append(key)
        terms.append(per)
    keys.sort()
    return Mat.of([[per.get(k, Fraction(0)) for k in keys] for per in terms])


def ns_lattice(tau: PeriodTau) -> IntLattice:
    """Integer solutions of the pairing condition, as a canonical lattice.

    The complex condition splits into one rational linear constraint per
    (part, root) slot; the solution set is the left kernel of the transposed
    constraint matrix, saturated by construction.
    """
    coeff_rows = _rational_coordinates(ns_condition_coefficients(tau))
    lat = integer_kernel(coeff_rows, ambient=6)
    for row in lat.basis:
        # expansion bug tripwire; the kernel must solve the original equation
        assert ns_condition_value(tau, row).is_zero()
    return lat


def is_one_one_on_torus(tau: PeriodTau, coords: Sequence[object]) -> bool:
    """Direct route: J^T E symmetric for this torus's J."""
    j = J_from_tau(tau)
    b = j.mat.T @ e_matrix(coords)
    return all(
        b.rows[r][c] == b.rows[c][r] for r in range(4) for c in range(r + 1, 4)
    )


def alpha_degeneracy(tau: PeriodTau) -> bool:
    """For upper-triangular tau: whether tau12 falls in the rational span of
    {tau11, tau11 tau22, 1, tau22}.  Degeneracy opens the door to extra
    lattice members; its absence caps the algebraic dimension at 1."""
    if not tau.is_upper_triangular():
        raise ValueError("alpha degeneracy is defined for upper-triangular tau")
    spanning = [
        tau.entry(0, 0),
        tau.entry(0, 0) * tau.entry(1, 1),
        CScalar.one(),
        tau.entry(1, 1),
    ]
    coords = _rational_coordinates(spanning + [tau.entry(0, 1)])
    base = Mat(coords.rows[:4])
    return rank(base) == rank(coords)


@dataclass(frozen=True)
class AlgebraicDimension:
    """Search outcome: the dimension value, whether it is certified exact
    (otherwise it is a lower bound at the given radius), and a witness."""

    value: int
    exact: bool
    radius: int
    ns_rank: int
    witness: "tuple[int, ...] | None"
    witness_rank: int

    def as_dict(self) -> dict[str, object]:
        return {
            "value": self.value,
            "exact": self.exact,
            "radius": self.radius,
            "nsRank": self.ns_rank,
            "witness": list(self.witness) if self.witness is not None else None,
            "witnessRank": self.witness_rank,
        }


def _psd_rank(j: ComplexStructure, coords: Sequence[int]) -> "int | None":
    """Rank of J^T E when positive semidefinite, else None."""
    b = j.mat.T @ e_matrix(coords)
    diag_signs = [sign_of(b.rows[r][r]) for r in range(4)]
    if any(s < 0 for s in diag_signs):
        return None
    n_plus, n_minus, _ = symmetric_signature(b)
    if n_minus:
        return None
    return n_plus


def algebraic_dimension(tau: PeriodTau, radius: int = 5) -> AlgebraicDimension:
    """Largest rank over positive semidefinite pairings, halved.

    Enumerates primitive lattice members whose basis coefficients have
    maximum absolute value r = 1..radius, trying both signs of each.  The
    result is certified exact when any of these holds:

    * the lattice is trivial (value 0) or rank 4 is reached (value 2);
    * the lattice has rank 1, so the primitive generator decides;
    * tau is upper-triangular and tau12 sits outside the rational span of
      {tau11, tau11 tau22, 1, tau22}: the f-slot member gives value >= 1 and
      the span condition forbids 2, pinning the value at 1.

    radius 0 skips the shell search and reports only what is free: the
    trivial-lattice case and the upper-triangular floor.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    lat = ns_lattice(tau)
    k = lat.dim
    if k == 0:
        return AlgebraicDimension(0, True, radius, 0, None, 0)
    j = J_from_tau(tau)
    best_rank = 0
    best_coords: "tuple[int, ...] | None" = None

    def consider(t: tuple[int, ...]) -> None:
        nonlocal best_rank, best_coords
        for signed in (t, tuple(-v for v in t)):
            r = _psd_rank(j, signed)
            if r is None or r == 0:
                continue
            if r > best_rank or (
                r == best_rank and best_coords is not None and signed < best_coords
            ):
                best_rank = r
                best_coords = signed

    capped_at_one = False
    if tau.is_upper_triangular():
        # f alone always solves the condition here; its pairing is definite
        # on a 2-dim piece, so the dimension is at least 1 at any radius.
        consider((0, 0, 0, 0, 0, 1))
        capped_at_one = not alpha_degeneracy(tau)

    basis = lat.basis
    for r in range(1, radius + 1):
        for combo in itertools.product(range(-r, r + 1), repeat=k):
            if max(abs(v) for v in combo) != r:
                continue
            t = tuple(
                sum(combo[i] * basis[i][pos] for i in range(k)) for pos in range(6)
            )
            g = 0
            for v in t:
                g = gcd(g, v)
            if g != 1:
                continue
            first = next(v for v in t if v)
            if first < 0:
                continue
            consider(t)
        if best_rank == 4:
            break
        if capped_at_one and best_rank >= 2:
            break
        if k == 1:
            break

    exact = (
        best_rank == 4
        or k == 1
        or (capped_at_one and best_rank >= 2)
    )
    return AlgebraicDimension(best_rank // 2, exact, radius, k, best_coords, best_rank)


# -- file format -----------------------------------------------------------------


def _parse_complex_2x2(rows: object, where: str) -> Mat:
    if not isinstance(rows, list) or len(rows) != 2:
        raise ValueError(f"\"{where}\" must be a 2 x 2 matrix")
    parsed = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 2:
            raise ValueError(f"\"{where}\" row {r + 1} must have 2 entries")
        parsed.append([parse_cscalar(x) for x in row])
    return Mat.of(parsed)


def load_torus(data: Mapping[str, object]) -> PeriodTau:
    """Read a torus from exactly one of:

    * "tau": 2 x 2 complex period matrix,
    * "X": 2 x 2 complex displacement, going through the tau = i Id square,
    * "J4": 4 x 4 real lattice automorphism with J^2 = -Id.
    """
    present = [key for key in ("tau", "X", "J4") if key in data]
    if len(present) != 1:
        raise ValueError("need exactly one of \"tau\", \"X\", \"J4\"")
    key = present[0]
    if key == "tau":
        return PeriodTau(_parse_complex_2x2(data["tau"], "tau"))
    if key == "X":
        return tau_from_J(J_from_X(_parse_complex_2x2(data["X"], "X")))
    rows = data["J4"]
    if not isinstance(rows, list) or len(rows) != 4:
        raise ValueError("\"J4\" must be a 4 x 4 matrix")
    parsed = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 4:
            raise ValueError(f"\"J4\" row {r + 1} must have 4 entries")
        entries = []
        for x in row:
            z = parse_cscalar(x)
            if not z.is_real():
                raise ValueError("\"J4\" must be a real matrix")
            entries.append(z.real)
        parsed.append(entries)
    return tau_from_J(ComplexStructure.of(parsed))


def tau_to_data(tau: PeriodTau) -> dict[str, object]:
    return {"tau": [[format_cscalar(tau.entry(r, c)) for c in range(2)] for r in range(2)]}
