"""Built-in algebra/structure pairs, with their known invariants attached.

Six-dimensional entries are generated from complex structure equations: a
basis of (1,0)-forms w^1..w^m with each dw^k expanded in wedges of w^a and
conj(w^b).  The conversion to real structure constants is mechanical, via
w^k = e^{2k-1} + i e^{2k} and the sign convention da(x, y) = -a([x, y]), and
is shared by every family so a single converter is exercised against the
entry whose real equations are known independently.

Each constructed entry re-validates itself: the bracket table must pass the
Jacobi and nilpotency checks, the block structure must be integrable, and
every expected invariant must match a fresh recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from nilalg.complexstruct import (
    ComplexStructure,
    complex_structure_to_data,
    invariant_report,
    is_integrable,
)
from nilalg.liealg import NilpotentLieAlgebra, algebra_to_data
from nilalg.linalg import Mat, ShapeError
from nilalg.scalar import CScalar, RealAlg, parse_cscalar, parse_realalg
from nilalg.torus import AlgebraicDimension, J_from_X, algebraic_dimension, tau_from_J

__all__ = [
    "CatalogEntry",
    "standard_block_j",
    "algebra_from_one_form_differentials",
    "iwasawa",
    "kodaira_thurston",
    "h3_r3",
    "ugarte_a",
    "ugarte_b",
    "iwasawa_algebraic_dimension",
    "entry_names",
    "get_entry",
    "default_entries",
    "entry_to_data",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family_tag: str
    algebra: NilpotentLieAlgebra
    j: ComplexStructure
    expected: Mapping[str, object]
    params: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.algebra.require_valid()
        if not is_integrable(self.algebra, self.j):
            raise ValueError(f"catalog entry {self.name}: structure is not integrable")
        report = invariant_report(self.algebra, self.j)
        for key, want in self.expected.items():
            got = report.get(key)
            if got != want:
                raise ValueError(
                    f"catalog entry {self.name}: expected {key}={want!r}, computed {got!r}"
                )

    def report(self) -> dict[str, object]:
        return invariant_report(self.algebra, self.j)


def standard_block_j(dim: int) -> ComplexStructure:
    """J sending e_{2k-1} to e_{2k}, the structure whose (1,0)-forms are
    e^{2k-1} + i e^{2k}."""
    if dim % 2:
        raise ShapeError("block structure needs even dimension")
    rows = [[0] * dim for _ in range(dim)]
    for k in range(0, dim, 2):
        rows[k + 1][k] = 1
        rows[k][k + 1] = -1
    return ComplexStructure.of(rows)


# -- complex equations to real structure constants ---------------------------------

# a differential term is (coefficient, p, q): the wedge of form p with form q,
# where +a means w^a and -a means conj(w^a).


def _form_vector(m: int, code: int) -> list[CScalar]:
    row = [CScalar.zero()] * (2 * m)
    a = abs(code)
    if not 1 <= a <= m:
        raise ValueError(f"form index {code} out of range 1..{m}")
    row[2 * a - 2] = CScalar.one()
    row[2 * a - 1] = CScalar.of(0, -1 if code < 0 else 1)
    return row


def _wedge(u: Sequence[CScalar], v: Sequence[CScalar]) -> dict[tuple[int, int], CScalar]:
    out: dict[tuple[int, int], CScalar] = {}
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            c = u[i] * v[j] - u[j] * v[i]
            if not c.is_zero():
                out[(i, j)] = c
    return out


def algebra_from_one_form_differentials(
    m: int, dforms: Mapping[int, Sequence[tuple[object, int, int]]]
) -> NilpotentLieAlgebra:
    """Real 2m-dimensional algebra whose (1,0)-form differentials are given.

    dforms maps k (1-based) to terms (coeff, p, q); missing k means dw^k = 0.
    The real and imaginary parts of each dw^k become de^{2k-1} and de^{2k},
    and brackets are read off as c^t_{ij} = -(de^t)_{ij}.
    """
    n = 2 * m
    brackets: dict[tuple[int, int], list[object]] = {}
    for k, terms in dforms.items():
        if not 1 <= k <= m:
            raise ValueError(f"dform index {k} out of range 1..{m}")
        total: dict[tuple[int, int], CScalar] = {}
        for coeff, p, q in terms:
            c = CScalar.coerce(coeff)
            if c is None:
                raise TypeError(f"dw^{k}: bad coefficient {coeff!r}")
            for pos, w in _wedge(_form_vector(m, p), _form_vector(m, q)).items():
                prev = total.get(pos, CScalar.zero())
                total[pos] = prev + c * w
        for (i, j), value in total.items():
            if value.is_zero():
                continue
            for t, part in ((2 * k - 2, value.real), (2 * k - 1, value.imag)):
                if part.is_zero():
                    continue
                vec = brackets.setdefault((i, j), [Fraction(0)] * n)
                vec[t] = vec[t] - part
    return NilpotentLieAlgebra(n, brackets)


# -- fixed entries ------------------------------------------------------------------


def iwasawa() -> CatalogEntry:
    """Quotient of the complex Heisenberg group: dw^3 = w^1 ^ w^2."""
    alg = algebra_from_one_form_differentials(3, {3: [(1, 1, 2)]})
    center = [["0", "0", "0", "0", "1", "0"], ["0", "0", "0", "0", "0", "1"]]
    return CatalogEntry(
        name="iwasawa",
        family_tag="iwasawa",
        algebra=alg,
        j=standard_block_j(6),
        expected={
            "h1Dim": 2,
            "algDimUpperBound": 2,
            "b1": 4,
            "commutatorDim": 2,
            "hDim": 2,
            "albaneseDim": 2,
            "isRationalJ": True,
            "sigmaBasis": center,
            "hBasis": center,
        },
    )


def kodaira_thurston() -> CatalogEntry:
    """h3 x R with the structure pairing the center with the extra factor."""
    alg = NilpotentLieAlgebra(4, {(0, 1): (0, 0, 1, 0)})
    return CatalogEntry(
        name="kodairaThurston",
        family_tag="kodairaThurston",
        algebra=alg,
        j=standard_block_j(4),
        expected={"h1Dim": 1, "b1": 3, "commutatorDim": 1, "albaneseDim": 1},
    )


def h3_r3() -> CatalogEntry:
    """h3 x R^3; matches the nilpotent family at eps = 1, rho = B = C = 0."""
    alg = NilpotentLieAlgebra(6, {(0, 1): (0, 0, 1, 0, 0, 0)})
    return CatalogEntry(
        name="h3xR3",
        family_tag="h3xR3",
        algebra=alg,
        j=standard_block_j(6),
        expected={"h1Dim": 2, "b1": 5, "commutatorDim": 1, "albaneseDim": 2},
    )


def _require_rational(z: "CScalar | None", name: str) -> CScalar:
    if z is None or not z.is_rational():
        raise ValueError(f"parameter {name} needs rational real and imaginary parts")
    return z


def ugarte_a(a: object = 0, e: object = 1, b: object = 1) -> CatalogEntry:
    """Non-nilpotent-structure family:

        dw^1 = 0
        dw^2 = E w^1 ^ w^3  +  w^1 ^ conj(w^3)
        dw^3 = A w^1 ^ conj(w^1)  +  ib w^1 ^ conj(w^2)  -  ib conj(E) w^2 ^ conj(w^1)

    with |E| = 1 exactly and real b != 0.  Any such instance has exactly one
    independent holomorphic differential.
    """
    a_c = _require_rational(CScalar.coerce(a), "A")
    e_c = _require_rational(CScalar.coerce(e), "E")
    b_r = RealAlg.coerce(b)
    if b_r is None or not b_r.is_rational():
        raise ValueError("parameter b must be rational")
    if b_r.is_zero():
        raise ValueError("parameter b must be nonzero")
    if e_c.norm_sq() != RealAlg.one():
        raise ValueError("parameter E must satisfy |E| = 1 exactly")
    ib = CScalar.of(0, b_r)
    alg = algebra_from_one_form_differentials(
        3,
        {
            2: [(e_c, 1, 3), (1, 1, -3)],
            3: [(a_c, 1, -1), (ib, 1, -2), (-(ib * e_c.conj()), 2, -1)],
        },
    )
    return CatalogEntry(
        name="ugarteA",
        family_tag="ugarteA",
        algebra=alg,
        j=standard_block_j(6),
        expected={"h1Dim": 1, "algDimUpperBound": 1},
        params={"A": str(a_c), "E": str(e_c), "b": str(b_r)},
    )


def ugarte_b(
    eps: int = 1,
    rho: int = 1,
    a: object = 0,
    b: object = 0,
    c: object = 0,
    d: object = 0,
) -> CatalogEntry:
    """Nilpotent-structure family:

        dw^1 = 0
        dw^2 = eps w^1 ^ conj(w^1)
        dw^3 = rho w^1 ^ w^2 + (1-eps) A w^1 ^ conj(w^1) + B w^1 ^ conj(w^2)
               + C w^2 ^ conj(w^1) + (1-eps) D w^2 ^ conj(w^2)

    with eps, rho in {0, 1}.  The holomorphic-differential count is 1 when
    eps = 1 and (rho, B, C) != 0, otherwise 2; the fully degenerate choice is
    abelian and gets 3.
    """
    if eps not in (0, 1) or rho not in (0, 1):
        raise ValueError("eps and rho must be 0 or 1")
    a_c = _require_rational(CScalar.coerce(a), "A")
    b_c = _require_rational(CScalar.coerce(b), "B")
    c_c = _require_rational(CScalar.coerce(c), "C")
    d_c = _require_rational(CScalar.coerce(d), "D")
    one_minus_eps = CScalar.of(1 - eps)
    alg = algebra_from_one_form_differentials(
        3,
        {
            2: [(eps, 1, -1)],
            3: [
                (rho, 1, 2),
                (one_minus_eps * a_c, 1, -1),
                (b_c, 1, -2),
                (c_c, 2, -1),
                (one_minus_eps * d_c, 2, -2),
            ],
        },
    )
    abelian = (
        eps == 0
        and rho == 0
        and a_c.is_zero()
        and b_c.is_zero()
        and c_c.is_zero()
        and d_c.is_zero()
    )
    if abelian:
        h1 = 3
    elif eps == 0:
        h1 = 2
    elif rho != 0 or not b_c.is_zero() or not c_c.is_zero():
        h1 = 1
    else:
        h1 = 2
    return CatalogEntry(
        name="ugarteB",
        family_tag="ugarteB",
        algebra=alg,
        j=standard_block_j(6),
        expected={"h1Dim": h1},
        params={
            "eps": str(eps),
            "rho": str(rho),
            "A": str(a_c),
            "B": str(b_c),
            "C": str(c_c),
            "D": str(d_c),
        },
    )


# -- torus composite ----------------------------------------------------------------


def iwasawa_algebraic_dimension(x: Mat, radius: int = 5) -> AlgebraicDimension:
    """Algebraic dimension of the 4-torus base attached to a displacement X.

    Meromorphic functions upstairs are constant on the fibers of the bundle
    projection, so this number is also the algebraic dimension of the total
    space.  X must be strictly upper triangular (the admissible block shape);
    other structures on the base do not arise this way.
    """
    if x.shape != (2, 2):
        raise ShapeError("X must be 2 x 2")
    entries = [[CScalar.coerce(v) for v in row] for row in x.rows]
    if any(v is None for row in entries for v in row):
        raise TypeError("X entries must be exact scalars")
    for r, c in ((0, 0), (1, 0), (1, 1)):
        if not entries[r][c].is_zero():
            raise ValueError("X must be strictly upper triangular")
    return algebraic_dimension(tau_from_J(J_from_X(x)), radius)


# -- access by name -----------------------------------------------------------------

_FIXED = {
    "iwasawa": iwasawa,
    "kodairaThurston": kodaira_thurston,
    "h3xR3": h3_r3,
}


def entry_names() -> list[str]:
    return ["iwasawa", "kodairaThurston", "h3xR3", "ugarteA", "ugarteB"]


def _param_cscalar(params: Mapping[str, object], key: str, default: object) -> object:
    if key not in params:
        return default
    return parse_cscalar(params[key])


def _param_int(params: Mapping[str, object], key: str, default: int) -> int:
    v = params.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"parameter {key} must be an integer")
    return v


def get_entry(name: str, params: "Mapping[str, object] | None" = None) -> CatalogEntry:
    """Entry by name; parameters apply to the two families only."""
    params = dict(params or {})
    if name in _FIXED:
        if params:
            raise ValueError(f"{name} takes no parameters")
        return _FIXED[name]()
    if name == "ugarteA":
        unknown = set(params) - {"A", "E", "b"}
        if unknown:
            raise ValueError(f"unknown parameters for ugarteA: {sorted(unknown)}")
        b = params.get("b", 1)
        return ugarte_a(
            _param_cscalar(params, "A", 0),
            _param_cscalar(params, "E", 1),
            parse_realalg(b) if isinstance(b, str) else b,
        )
    if name == "ugarteB":
        unknown = set(params) - {"eps", "rho", "A", "B", "C", "D"}
        if unknown:
            raise ValueError(f"unknown parameters for ugarteB: {sorted(unknown)}")
        return ugarte_b(
            _param_int(params, "eps", 1),
            _param_int(params, "rho", 1),
            _param_cscalar(params, "A", 0),
            _param_cscalar(params, "B", 0),
            _param_cscalar(params, "C", 0),
            _param_cscalar(params, "D", 0),
        )
    raise ValueError(f"unknown catalog entry {name!r}; available: {', '.join(entry_names())}")


def default_entries() -> list[CatalogEntry]:
    """One representative per family, for property suites."""
    return [
        iwasawa(),
        kodaira_thurston(),
        h3_r3(),
        ugarte_a(),
        ugarte_b(),
    ]


def entry_to_data(entry: CatalogEntry) -> dict[str, object]:
    """Single document holding the algebra, the structure, and metadata; the
    algebra and structure loaders ignore the extra keys."""
    data: dict[str, object] = {"name": entry.name, "familyTag": entry.family_tag}
    if entry.params:
        data["params"] = dict(entry.params)
    data.update(algebra_to_data(entry.algebra))
    data.update(complex_structure_to_data(entry.j))
    data["expected"] = {k: v for k, v in entry.expected.items()}
    return data
