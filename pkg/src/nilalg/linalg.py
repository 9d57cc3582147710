"""Exact dense linear algebra over the scalar types.

Matrices are immutable, entries are Fraction, RealAlg or CScalar (ints are
coerced to Fraction, floats rejected: this is the exactness boundary).
Everything downstream relies on two canonical forms computed here:

* reduced row echelon form with unit pivots, making row spaces and kernels
  canonical so subspaces compare by representation;
* row-style Hermite normal form with positive pivots and entries above a
  pivot reduced into [0, pivot), making integer lattices canonical.

Rational and integer routines are exact; no scalar ever passes through a
float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence, Union

from nilalg.scalar import CScalar, RealAlg, is_zero, sign_of

__all__ = [
    "ShapeError",
    "Scalar",
    "Mat",
    "rref",
    "rank",
    "kernel",
    "row_space",
    "image",
    "solve",
    "inverse",
    "Subspace",
    "hermite_normal_form",
    "IntLattice",
    "integer_kernel",
    "symmetric_signature",
]

Scalar = Union[Fraction, RealAlg, CScalar]


class ShapeError(ValueError):
    """Matrix dimensions or structure do not fit the operation."""


def _coerce_entry(x: object) -> Scalar:
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; use Fraction, RealAlg or CScalar")
    if isinstance(x, (Fraction, RealAlg, CScalar)):
        return x
    raise TypeError(f"unsupported matrix entry {x!r}")


@dataclass(frozen=True)
class Mat:
    """Immutable rectangular matrix with exact entries."""

    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(_coerce_entry(x) for x in r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "rows", rows)

    @staticmethod
    def of(rows: Iterable[Iterable[object]]) -> "Mat":
        return Mat(tuple(tuple(r) for r in rows))

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Mat":
        return Mat(tuple((Fraction(0),) * ncols for _ in range(nrows)))

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))

    @staticmethod
    def row_vec(entries: Iterable[object]) -> "Mat":
        return Mat.of([entries])

    @staticmethod
    def col_vec(entries: Iterable[object]) -> "Mat":
        return Mat.of([[x] for x in entries])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Mat":
        return Mat(tuple(zip(*self.rows))) if self.rows else Mat(())

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def map(self, fn: Callable[[Scalar], object]) -> "Mat":
        return Mat.of([[fn(x) for x in r] for r in self.rows])

    def conj(self) -> "Mat":
        return self.map(lambda x: x.conj() if isinstance(x, CScalar) else x)

    def is_zero(self) -> bool:
        return all(is_zero(x) for r in self.rows for x in r)

    def __add__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Mat.of([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Mat":
        return self.map(lambda x: -x)

    def __mul__(self, scalar: object) -> "Mat":
        if isinstance(scalar, Mat):
            raise TypeError("use @ for matrix products")
        c = _coerce_entry(scalar)
        return self.map(lambda x: x * c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().rows
        return Mat.of(
            [[_dot(r, c) for c in cols] for r in self.rows]
        ) if self.rows and cols else Mat.zeros(self.nrows, other.ncols)

    def hstack(self, other: "Mat") -> "Mat":
        if self.nrows != other.nrows:
            raise ShapeError("row counts differ")
        return Mat.of([list(a) + list(b) for a, b in zip(self.rows, other.rows)])

    def vstack(self, other: "Mat") -> "Mat":
        if self.nrows and other.nrows and self.ncols != other.ncols:
            raise ShapeError("column counts differ")
        return Mat(self.rows + other.rows)

    def to_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + "]"


def _dot(r: Sequence[Scalar], c: Sequence[Scalar]) -> Scalar:
    acc: Scalar = Fraction(0)
    for a, b in zip(r, c):
        acc = acc + a * b
    return acc


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns (unit pivots)."""
    rows = m.to_lists()
    nr, nc = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if not is_zero(rows[i][c])), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and not is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Mat.of(rows), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel(m: Mat) -> Mat:
    """Rows spanning the right null space {x : m @ x = 0}, in canonical form.

    A matrix with no rows has the full ambient space as kernel.
    """
    nc = m.ncols
    r, pivots = rref(m)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v: list[Scalar] = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r.rows[i][f]
        basis.append(v)
    return rref(Mat.of(basis))[0] if basis else Mat(())


def row_space(m: Mat) -> "Subspace":
    return Subspace.span(m, ambient=m.ncols)


def image(m: Mat) -> "Subspace":
    """Column space, as vectors of length nrows."""
    return Subspace.span(m.transpose(), ambient=m.nrows)


def solve(a: Mat, b: Mat) -> "Mat | None":
    """A particular solution X of a @ X = b, or None if inconsistent."""
    if a.nrows != b.nrows:
        raise ShapeError("left and right sides disagree on row count")
    aug, pivots = rref(a.hstack(b))
    if any(p >= a.ncols for p in pivots):
        return None
    x = Mat.zeros(a.ncols, b.ncols).to_lists()
    for i, p in enumerate(pivots):
        for j in range(b.ncols):
            x[p][j] = aug.rows[i][a.ncols + j]
    return Mat.of(x)


def inverse(m: Mat) -> Mat:
    if m.nrows != m.ncols:
        raise ShapeError("inverse of a non-square matrix")
    x = solve(m, Mat.identity(m.nrows))
    if x is None or rank(m) != m.nrows:
        raise ZeroDivisionError("matrix is singular")
    return x


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of F^n stored by its canonical (RREF) row basis.

    Equality is representational: two subspaces are equal exactly when their
    canonical bases coincide entrywise.
    """

    ambient: int
    basis: Mat

    @staticmethod
    def span(vectors: "Mat | Iterable[Iterable[object]]", ambient: "int | None" = None) -> "Subspace":
        m = vectors if isinstance(vectors, Mat) else Mat.of(vectors)
        if ambient is None:
            if not m.rows:
                raise ShapeError("cannot infer ambient dimension from an empty span")
            ambient = m.ncols
        if m.rows and m.ncols != ambient:
            raise ShapeError(f"vectors of length {m.ncols} in ambient dimension {ambient}")
        r, pivots = rref(m)
        return Subspace(ambient, Mat(r.rows[: len(pivots)]))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, Mat(()))

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace(ambient, Mat.identity(ambient))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def contains(self, vector: "Iterable[object] | Mat") -> bool:
        v = vector if isinstance(vector, Mat) else Mat.row_vec(vector)
        if v.ncols != self.ambient:
            raise ShapeError("vector length does not match ambient dimension")
        return rank(self.basis.vstack(v)) == self.dim

    def __contains__(self, vector: object) -> bool:
        return self.contains(vector)  # type: ignore[arg-type]

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(Mat.row_vec(r)) for r in other.basis.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ShapeError("ambient dimensions differ")
        return Subspace.span(self.basis.vstack(other.basis), ambient=self.ambient)

    def annihilator(self) -> Mat:
        """Rows c with basis @ c^T = 0; the space is exactly their joint kernel."""
        if self.dim == 0:
            return Mat.identity(self.ambient)
        return kernel(self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ShapeError("ambient dimensions differ")
        ann = self.annihilator().vstack(other.annihilator())
        if not ann.rows:
            return Subspace.full(self.ambient)
        ker = kernel(ann)
        if not ker.rows:
            return Subspace.zero(self.ambient)
        return Subspace.span(ker, ambient=self.ambient)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)

    def __str__(self) -> str:
        return f"Subspace(dim {self.dim} of F^{self.ambient})"


def _as_int_rows(rows: "Mat | Iterable[Iterable[object]]") -> list[list[int]]:
    m = rows if isinstance(rows, Mat) else Mat.of(rows)
    out = []
    for r in m.rows:
        row = []
        for x in r:
            if isinstance(x, Fraction) and x.denominator == 1:
                row.append(int(x))
            else:
                raise TypeError(f"integer matrix required, got entry {x!r}")
        out.append(row)
    return out


def hermite_normal_form(
    rows: "Mat | Iterable[Iterable[object]]",
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Row-style Hermite normal form H of an integer matrix M, with U @ M = H.

    U is unimodular.  Pivots are positive, strictly to the right as rows
    descend, entries above a pivot lie in [0, pivot), zero rows are last.
    """
    h = _as_int_rows(rows)
    nr = len(h)
    nc = len(h[0]) if h else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            live = [i for i in range(r, nr) if h[i][c]]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(h[i][c]))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            done = True
            for i in range(r + 1, nr):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-a for a in h[r]]
            u[r] = [-a for a in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        r += 1
    return tuple(tuple(row) for row in h), tuple(tuple(row) for row in u)


@dataclass(frozen=True)
class IntLattice:
    """Sublattice of Z^n stored by its canonical (HNF) basis rows."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @staticmethod
    def span(rows: "Mat | Iterable[Iterable[object]]", ambient: "int | None" = None) -> "IntLattice":
        ints = _as_int_rows(rows)
        if ambient is None:
            if not ints:
                raise ShapeError("cannot infer ambient dimension from an empty span")
            ambient = len(ints[0])
        if ints and len(ints[0]) != ambient:
            raise ShapeError("row length does not match ambient dimension")
        h, _ = hermite_normal_form(ints) if ints else ((), ())
        return IntLattice(ambient, tuple(row for row in h if any(row)))

    @staticmethod
    def zero(ambient: int) -> "IntLattice":
        return IntLattice(ambient, ())

    @staticmethod
    def full(ambient: int) -> "IntLattice":
        return IntLattice.span([[1 if i == j else 0 for j in range(ambient)] for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Iterable[object]) -> bool:
        v = _as_int_rows([list(vector)])[0]
        if len(v) != self.ambient:
            raise ShapeError("vector length does not match ambient dimension")
        for row in self.basis:
            c = next((j for j, x in enumerate(row) if x), None)
            if c is None or v[c] == 0:
                continue
            q, rem = divmod(v[c], row[c])
            if rem:
                return False
            v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def __contains__(self, vector: object) -> bool:
        return self.contains(vector)  # type: ignore[arg-type]


def integer_kernel(rows: "Mat | Iterable[Iterable[object]]", ambient: "int | None" = None) -> IntLattice:
    """All integer x with x @ M = 0, as a canonical lattice.

    M may have rational entries; each column is scaled integral first, which
    leaves the left kernel unchanged.  The result is the full kernel lattice
    (saturated) because it is read off from a unimodular transform.
    """
    m = rows if isinstance(rows, Mat) else Mat.of(rows)
    if ambient is None:
        ambient = m.nrows
    if m.nrows != ambient:
        raise ShapeError("row count does not match ambient dimension")
    if m.nrows == 0:
        return IntLattice.zero(0)
    if m.ncols == 0:
        return IntLattice.full(ambient)
    cols = []
    for j in range(m.ncols):
        col = [x for x in m.col(j)]
        if any(isinstance(x, (RealAlg, CScalar)) for x in col):
            raise TypeError("integer kernel needs rational entries")
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        cols.append([int(x * den) for x in col])
    int_m = [list(r) for r in zip(*cols)]
    h, u = hermite_normal_form(int_m)
    zero_rows = [u[i] for i in range(len(h)) if not any(h[i])]
    if not zero_rows:
        return IntLattice.zero(ambient)
    return IntLattice.span(zero_rows, ambient=ambient)


def symmetric_signature(m: Mat) -> tuple[int, int, int]:
    """(nPlus, nMinus, nZero) of an exactly symmetric real matrix.

    Congruence pivoting with rational or RealAlg entries; a zero diagonal
    with a nonzero off-diagonal entry is repaired by adding one row and the
    matching column, which turns each hyperbolic pair into one plus and one
    minus.
    """
    if m.nrows != m.ncols:
        raise ShapeError("signature of a non-square matrix")
    n = m.nrows
    for i in range(n):
        for j in range(i + 1, n):
            if m.rows[i][j] != m.rows[j][i]:
                raise ShapeError(f"matrix is not symmetric at ({i}, {j})")
    a = m.to_lists()
    n_plus = n_minus = n_zero = 0
    for k in range(n):
        if is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(a[i][i])), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for r in range(n):
                    a[r][k], a[r][swap] = a[r][swap], a[r][k]
            else:
                j = next((j for j in range(k + 1, n) if not is_zero(a[k][j])), None)
                if j is None:
                    # Row and column k vanish on the active block: a null direction.
                    n_zero += 1
                    continue
                # Whole active diagonal is zero, so congruence by
                # (row k += row j, col k += col j) makes a[k][k] = 2 a[k][j] != 0.
                a[k] = [x + y for x, y in zip(a[k], a[j])]
                for r in range(n):
                    a[r][k] = a[r][k] + a[r][j]
        p = a[k][k]
        s = sign_of(p)
        if s > 0:
            n_plus += 1
        else:
            n_minus += 1
        for r in range(k + 1, n):
            if not is_zero(a[r][k]):
                f = a[r][k] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
                for t in range(n):
                    a[t][r] = a[t][r] - f * a[t][k]
    return n_plus, n_minus, n_zero
