"""Nilpotent Lie algebras with exact structure constants, and their
invariant-form complex.

An algebra on basis e_1..e_n is stored through the constants c^k_{ij} of
[e_i, e_j] = sum_k c^k_{ij} e_k for i < j (antisymmetry fills in the rest).
Indices are 0-based internally; files and reports use 1-based labels.

Dual picture: for the basis 1-forms, de^m(x, y) = -e^m([x, y]), so

    de^m = - sum_{a<b} c^m_{ab} e^a wedge e^b,

and the differential extends to k-forms by the graded Leibniz rule.  The
complex squares to zero exactly when the Jacobi identity holds, which the
validator checks directly with witnesses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from nilalg.linalg import Mat, Scalar, ShapeError, Subspace, rank
from nilalg.scalar import (
    CScalar,
    RealAlg,
    ScalarParseError,
    format_realalg,
    is_zero,
    parse_realalg,
)

__all__ = [
    "RealScalar",
    "NilpotentLieAlgebra",
    "ValidationReport",
    "KForm",
    "cohomology_dims",
    "average",
    "load_algebra",
    "algebra_to_data",
]

RealScalar = Union[Fraction, RealAlg]


def _coerce_real(x: object) -> RealScalar:
    if isinstance(x, bool):
        raise TypeError("booleans are not structure constants")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, RealAlg)):
        return x
    if isinstance(x, CScalar):
        if x.is_real():
            return x.real
        raise TypeError("structure constants must be real")
    raise TypeError(f"not an exact real scalar: {x!r}")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the structural checks on a bracket table."""

    dim: int
    jacobi_failures: tuple[tuple[int, int, int], ...]  # 1-based triples
    series_dims: tuple[int, ...]
    nilpotent: bool

    @property
    def jacobi_ok(self) -> bool:
        return not self.jacobi_failures

    @property
    def ok(self) -> bool:
        return self.jacobi_ok and self.nilpotent

    def problems(self) -> list[str]:
        out = []
        for i, j, k in self.jacobi_failures:
            out.append(f"jacobi fails on (e{i}, e{j}, e{k})")
        if self.jacobi_ok and not self.nilpotent:
            out.append(
                "lower central series stalls at dimension "
                f"{self.series_dims[-1]}; the algebra is not nilpotent"
            )
        return out


class NilpotentLieAlgebra:
    """Lie algebra given by exact structure constants on a fixed basis.

    Construction does not validate Jacobi or nilpotency; call validate() for
    a report, or require_valid() to raise.  This keeps deliberately broken
    tables representable so they can be reported on.
    """

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Sequence[object]]):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        table: dict[tuple[int, int], tuple[RealScalar, ...]] = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bad bracket key ({i}, {j}) for dimension {dim} (need 0 <= i < j)")
            vec = tuple(_coerce_real(c) for c in coeffs)
            if len(vec) != dim:
                raise ValueError(f"bracket ({i}, {j}) has {len(vec)} coefficients, want {dim}")
            if any(vec):
                table[(i, j)] = vec
        self._table = table

    # -- brackets ------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> tuple[RealScalar, ...]:
        """[e_i, e_j] as a coordinate vector (0-based indices)."""
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self._table.get((i, j), (Fraction(0),) * self.dim)
        return tuple(-c for c in self.bracket_basis(j, i))

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Bilinear extension of the bracket to coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ShapeError("vector length does not match the algebra dimension")
        out: list[Scalar] = [Fraction(0)] * self.dim
        for (i, j), vec in self._table.items():
            f = x[i] * y[j] - x[j] * y[i]
            if not is_zero(f):
                for k, c in enumerate(vec):
                    if c:
                        out[k] = out[k] + f * c
        return tuple(out)

    def structure_constant(self, k: int, i: int, j: int) -> RealScalar:
        """c^k_{ij}, any index order (0-based)."""
        return self.bracket_basis(i, j)[k]

    # -- structure -----------------------------------------------------------

    def commutator_subspace(self) -> Subspace:
        """g1 = [g, g] as a subspace of coordinate vectors."""
        vecs = list(self._table.values())
        if not vecs:
            return Subspace.zero(self.dim)
        return Subspace.span(vecs, ambient=self.dim)

    def lower_central_series(self) -> list[Subspace]:
        """g = g0, g1 = [g, g0], g2 = [g, g1], ... until it stabilizes."""
        series = [Subspace.full(self.dim)]
        while True:
            prev = series[-1]
            vecs = []
            for i in range(self.dim):
                basis_i = [Fraction(1 if t == i else 0) for t in range(self.dim)]
                for row in prev.basis.rows:
                    vecs.append(self.bracket(basis_i, row))
            nxt = Subspace.span(vecs, ambient=self.dim) if vecs else Subspace.zero(self.dim)
            if nxt.dim == prev.dim:
                series.append(nxt)
                return series
            series.append(nxt)
            if nxt.dim == 0:
                return series

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].dim == 0

    def nilpotency_step(self) -> int:
        """Smallest s with g^s = 0 (an abelian algebra has step 1)."""
        series = self.lower_central_series()
        if series[-1].dim != 0:
            raise ValueError("the algebra is not nilpotent")
        return len(series) - 1

    def jacobi_failures(self) -> list[tuple[int, int, int]]:
        """1-based basis triples where the Jacobi identity breaks."""
        bad = []
        for i, j, k in itertools.combinations(range(self.dim), 3):
            ei = [Fraction(1 if t == i else 0) for t in range(self.dim)]
            ej = [Fraction(1 if t == j else 0) for t in range(self.dim)]
            ek = [Fraction(1 if t == k else 0) for t in range(self.dim)]
            total = [
                a + b + c
                for a, b, c in zip(
                    self.bracket(ei, self.bracket(ej, ek)),
                    self.bracket(ej, self.bracket(ek, ei)),
                    self.bracket(ek, self.bracket(ei, ej)),
                )
            ]
            if any(not is_zero(t) for t in total):
                bad.append((i + 1, j + 1, k + 1))
        return bad

    def validate(self) -> ValidationReport:
        jac = tuple(self.jacobi_failures())
        series = self.lower_central_series()
        dims = tuple(s.dim for s in series)
        return ValidationReport(self.dim, jac, dims, series[-1].dim == 0)

    def require_valid(self) -> None:
        report = self.validate()
        if not report.ok:
            raise ValueError("; ".join(report.problems()))

    # -- invariant forms -------------------------------------------------------

    def one_form_differential(self, m: int) -> "KForm":
        """de^m = - sum_{a<b} c^m_{ab} e^a ^ e^b  (0-based m)."""
        coeffs = {}
        for (a, b), vec in self._table.items():
            if vec[m]:
                coeffs[(a, b)] = -vec[m]
        return KForm(self.dim, 2, coeffs)

    def differential(self, form: "KForm") -> "KForm":
        """Graded Leibniz extension of the basis differentials."""
        if form.n != self.dim:
            raise ShapeError("form and algebra dimensions differ")
        out = KForm.zero(self.dim, form.k + 1)
        for idx, c in form.coeffs.items():
            for pos in range(len(idx)):
                rest = idx[:pos] + idx[pos + 1 :]
                dpart = self.one_form_differential(idx[pos])
                sign = -1 if pos % 2 else 1
                for pair, q in dpart.coeffs.items():
                    term = _wedge_indices(pair, rest)
                    if term is None:
                        continue
                    merged, s2 = term
                    out = out.add_term(merged, sign * s2 * q * c)
        return out

    def differential_matrix(self, k: int) -> Mat:
        """Matrix of d from degree k to k + 1 in the subset bases.

        Columns follow itertools.combinations order on k-subsets, rows on
        (k+1)-subsets.  Degrees outside 0..n give an empty matrix.
        """
        n = self.dim
        if k < 0 or k >= n:
            return Mat(())
        src = list(itertools.combinations(range(n), k))
        dst = {idx: r for r, idx in enumerate(itertools.combinations(range(n), k + 1))}
        cols = []
        for idx in src:
            img = self.differential(KForm(n, k, {idx: Fraction(1)}))
            col: list[Scalar] = [Fraction(0)] * len(dst)
            for jdx, c in img.coeffs.items():
                col[dst[jdx]] = c
            cols.append(col)
        return Mat.of(cols).transpose()


def _wedge_indices(a: tuple[int, ...], b: tuple[int, ...]) -> "tuple[tuple[int, ...], int] | None":
    """Sorted merge of two strictly increasing index tuples, with the
    permutation sign; None when they collide."""
    if set(a) & set(b):
        return None
    merged = tuple(sorted(a + b))
    seq = list(a + b)
    sign = 1
    # Count inversions of the concatenation; tuples are short, n^2 is fine.
    for s in range(len(seq)):
        for t in range(s + 1, len(seq)):
            if seq[s] > seq[t]:
                sign = -sign
    return merged, sign


@dataclass(frozen=True)
class KForm:
    """Invariant alternating k-form, coefficients over strictly increasing
    index tuples.  Zero coefficients are dropped, so equality is canonical."""

    n: int
    k: int
    coeffs: Mapping[tuple[int, ...], Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[tuple[int, ...], Scalar] = {}
        for idx, c in self.coeffs.items():
            idx = tuple(idx)
            if len(idx) != self.k:
                raise ValueError(f"index {idx} does not have degree {self.k}")
            if any(not 0 <= t < self.n for t in idx):
                raise ValueError(f"index {idx} out of range for dimension {self.n}")
            if any(x >= y for x, y in zip(idx, idx[1:])):
                raise ValueError(f"index {idx} must be strictly increasing")
            if isinstance(c, bool) or isinstance(c, float):
                raise TypeError("coefficients must be exact scalars")
            if isinstance(c, int):
                c = Fraction(c)
            if not is_zero(c):
                clean[idx] = c
        object.__setattr__(self, "coeffs", clean)

    @staticmethod
    def zero(n: int, k: int) -> "KForm":
        return KForm(n, k, {})

    @staticmethod
    def basis(n: int, idx: Sequence[int]) -> "KForm":
        return KForm(n, len(idx), {tuple(idx): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def add_term(self, idx: tuple[int, ...], c: Scalar) -> "KForm":
        coeffs = dict(self.coeffs)
        coeffs[idx] = coeffs.get(idx, Fraction(0)) + c
        return KForm(self.n, self.k, coeffs)

    def __add__(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm):
            return NotImplemented
        if (self.n, self.k) != (other.n, other.k):
            raise ShapeError("cannot add forms of different shape")
        out = self
        for idx, c in other.coeffs.items():
            out = out.add_term(idx, c)
        return out

    def __neg__(self) -> "KForm":
        return KForm(self.n, self.k, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: object) -> "KForm":
        if isinstance(scalar, (KForm, Mat)):
            raise TypeError("use wedge for products of forms")
        return KForm(self.n, self.k, {i: c * scalar for i, c in self.coeffs.items()})

    __rmul__ = __mul__

    def wedge(self, other: "KForm") -> "KForm":
        if self.n != other.n:
            raise ShapeError("forms live on different algebras")
        out = KForm.zero(self.n, self.k + other.k)
        for ia, ca in self.coeffs.items():
            for ib, cb in other.coeffs.items():
                term = _wedge_indices(ia, ib)
                if term is not None:
                    merged, sign = term
                    out = out.add_term(merged, sign * ca * cb)
        return out

    def evaluate(self, *vectors: Sequence[Scalar]) -> Scalar:
        """Exact value on k coordinate vectors (alternating multilinear)."""
        if len(vectors) != self.k:
            raise ShapeError(f"{self.k}-form applied to {len(vectors)} vectors")
        for v in vectors:
            if len(v) != self.n:
                raise ShapeError("vector length does not match the algebra dimension")
        total: Scalar = Fraction(0)
        for idx, c in self.coeffs.items():
            det: Scalar = Fraction(0)
            for perm in itertools.permutations(range(self.k)):
                sign = 1
                for s in range(self.k):
                    for t in range(s + 1, self.k):
                        if perm[s] > perm[t]:
                            sign = -sign
                prod: Scalar = Fraction(sign)
                for row, col in enumerate(perm):
                    prod = prod * vectors[row][idx[col]]
                det = det + prod
            total = total + c * det
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            c = self.coeffs[idx]
            label = "^".join(f"e{t + 1}" for t in idx) if idx else "1"
            parts.append(f"({c})*{label}" if idx else f"({c})")
        return " + ".join(parts)


def cohomology_dims(alg: NilpotentLieAlgebra, max_degree: "int | None" = None) -> list[int]:
    """Betti numbers b_0..b_max of the invariant-form complex.

    b_k = C(n, k) - rank d_k - rank d_{k-1}.
    """
    n = alg.dim
    top = n if max_degree is None else min(max_degree, n)
    if top < 0:
        return []
    ranks = {}
    for k in range(-1, top + 1):
        ranks[k] = rank(alg.differential_matrix(k)) if 0 <= k < n else 0
    return [math.comb(n, k) - ranks[k] - ranks[k - 1] for k in range(top + 1)]


def average(form: KForm) -> KForm:
    """Averaging over the compact quotient fixes every invariant form.

    Present so callers can mark the averaging step explicitly; on this
    representation it is the identity.
    """
    return form


# -- file format ---------------------------------------------------------------


def _parse_real_field(value: object, where: str) -> RealScalar:
    if isinstance(value, bool) or isinstance(value, float):
        raise ScalarParseError(f"{where}: exact scalar required, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_realalg(value)
    raise ScalarParseError(f"{where}: exact scalar required, got {value!r}")


def load_algebra(data: Mapping[str, object]) -> NilpotentLieAlgebra:
    """Build an algebra from a mapping with "dim" and exactly one of
    "brackets" (entries i, j, k, c for c^k_{ij}) or "dforms" (entries k,
    terms[{i, j, c}] for de^k).  All indices 1-based.  Unknown keys are
    ignored so annotated documents load as-is."""
    if "dim" not in data:
        raise ValueError("algebra needs a \"dim\" field")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError(f"bad dimension {dim!r}")
    has_brackets = "brackets" in data
    has_dforms = "dforms" in data
    if has_brackets == has_dforms:
        raise ValueError("algebra needs exactly one of \"brackets\" or \"dforms\"")
    table: dict[tuple[int, int], list[RealScalar]] = {}

    def add(i: int, j: int, k: int, c: RealScalar, where: str) -> None:
        for name, v in (("i", i), ("j", j), ("k", k)):
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= dim:
                raise ValueError(f"{where}: index {name}={v!r} out of range 1..{dim}")
        if i >= j:
            raise ValueError(f"{where}: need i < j, got i={i}, j={j}")
        key = (i - 1, j - 1)
        vec = table.setdefault(key, [Fraction(0)] * dim)
        if vec[k - 1]:
            raise ValueError(f"{where}: duplicate coefficient for ({i}, {j}) -> {k}")
        vec[k - 1] = c

    if has_brackets:
        entries = data["brackets"]
        if not isinstance(entries, list):
            raise ValueError("\"brackets\" must be a list")
        for pos, e in enumerate(entries):
            where = f"brackets[{pos}]"
            if not isinstance(e, dict) or not {"i", "j", "k", "c"} <= set(e):
                raise ValueError(f"{where}: need fields i, j, k, c")
            add(e["i"], e["j"], e["k"], _parse_real_field(e["c"], where), where)
    else:
        entries = data["dforms"]
        if not isinstance(entries, list):
            raise ValueError("\"dforms\" must be a list")
        for pos, e in enumerate(entries):
            where = f"dforms[{pos}]"
            if not isinstance(e, dict) or "k" not in e or "terms" not in e:
                raise ValueError(f"{where}: need fields k and terms")
            terms = e["terms"]
            if not isinstance(terms, list):
                raise ValueError(f"{where}: terms must be a list")
            for tpos, t in enumerate(terms):
                twhere = f"{where}.terms[{tpos}]"
                if not isinstance(t, dict) or not {"i", "j", "c"} <= set(t):
                    raise ValueError(f"{twhere}: need fields i, j, c")
                # de^k = sum c * e^i ^ e^j means c^k_{ij} = -c.
                add(t["i"], t["j"], e["k"], -_parse_real_field(t["c"], twhere), twhere)
    return NilpotentLieAlgebra(dim, {k: tuple(v) for k, v in table.items()})


def algebra_to_data(alg: NilpotentLieAlgebra) -> dict[str, object]:
    """Serialize as the "brackets" flavor with 1-based indices."""
    out = []
    for (i, j) in sorted(alg._table):
        for k, c in enumerate(alg._table[(i, j)]):
            if c:
                out.append({"i": i + 1, "j": j + 1, "k": k + 1, "c": format_realalg(c)})
    return {"dim": alg.dim, "brackets": out}
