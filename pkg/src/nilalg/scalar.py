"""Exact scalars: rationals, real multi-quadratic field elements, and their
complexifications.

A :class:`RealAlg` value lives in a field Q(sqrt(d1), ..., sqrt(dm)) whose
radicand list is carried by a :class:`FieldTower`.  Coordinates are rationals
over the basis of subset products of the square roots, so zero-testing and
equality are plain coordinate checks.  The sign of a nonzero value is decided
by outward-rounded rational interval refinement at doubling precision; this
terminates because a nonzero algebraic number is bounded away from zero.

Scalar text grammar (used by file formats and reports)::

    rat     := '-'? digits ('/' digits)?
    term    := rat ('*r' digits)?          # "r d" denotes sqrt(d)
    realalg := term (('+'|'-') term)*

so ``"1/2+3*r2"`` is 1/2 + 3*sqrt(2).  Complex scalars are JSON objects
``{"re": realalg, "im": realalg}``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

__all__ = [
    "TOWER_CAP",
    "TowerOverflowError",
    "ScalarParseError",
    "FieldTower",
    "RealAlg",
    "CScalar",
    "parse_rational",
    "parse_realalg",
    "format_realalg",
    "parse_cscalar",
    "format_cscalar",
    "sign_of",
    "is_zero",
]

TOWER_CAP = 3

_PRECISION_ENV = "NILALG_PRECISION_START"
_PRECISION_DEFAULT = 64
_PRECISION_LIMIT = 1 << 20


class TowerOverflowError(ValueError):
    """An operation would need more than TOWER_CAP independent radicands."""


class ScalarParseError(ValueError):
    """Input text does not match the scalar grammar."""


def _factor_squarefree(n: int) -> tuple[int, int]:
    """Split n > 0 as s*s*d with d squarefree; returns (s, d)."""
    s, d, m = 1, 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e % 2:
                d *= p
            s *= p ** (e // 2)
        p += 1 if p == 2 else 2
    if m > 1:
        d *= m
    return s, d


def _prime_support(d: int) -> frozenset[int]:
    """Primes dividing a squarefree d."""
    out, m, p = [], d, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return frozenset(out)


@dataclass(frozen=True)
class FieldTower:
    """Ordered radicand list (d1 < d2 < ...) describing Q(sqrt(d1), ..., sqrt(dm)).

    Radicands are distinct squarefree integers >= 2, at most TOWER_CAP of them,
    and multiplicatively independent modulo squares: no product of two or more
    of them is a perfect square.  Independence is what makes the 2^m subset
    products a basis, hence coordinates canonical.
    """

    radicands: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rads = tuple(int(d) for d in self.radicands)
        object.__setattr__(self, "radicands", rads)
        if len(rads) > TOWER_CAP:
            raise TowerOverflowError(f"tower needs {len(rads)} radicands, cap is {TOWER_CAP}")
        for d in rads:
            if d < 2:
                raise ValueError(f"radicand {d} must be >= 2")
            if _factor_squarefree(d)[0] != 1:
                raise ValueError(f"radicand {d} is not squarefree")
        if any(a >= b for a, b in zip(rads, rads[1:])):
            raise ValueError("radicands must be strictly increasing")
        # Any dependent subset of distinct squarefree numbers has size >= 3.
        for mask in range(1, 1 << len(rads)):
            if bin(mask).count("1") < 3:
                continue
            prod = 1
            for i in range(len(rads)):
                if mask >> i & 1:
                    prod *= rads[i]
            if _factor_squarefree(prod)[1] == 1:
                bad = [rads[i] for i in range(len(rads)) if mask >> i & 1]
                raise ValueError(f"radicands {bad} are multiplicatively dependent")

    @property
    def size(self) -> int:
        return 1 << len(self.radicands)

    def mask_product(self, mask: int) -> int:
        """Product of the radicands selected by mask (1 for the empty mask)."""
        prod = 1
        for i, d in enumerate(self.radicands):
            if mask >> i & 1:
                prod *= d
        return prod


@lru_cache(maxsize=None)
def _mask_products(tower: FieldTower) -> tuple[int, ...]:
    return tuple(tower.mask_product(m) for m in range(tower.size))


# An embedding maps each source basis mask to (rational factor, target mask).
_Embedding = tuple[tuple[Fraction, int], ...]


@lru_cache(maxsize=None)
def _unify(t1: FieldTower, t2: FieldTower) -> tuple[FieldTower, _Embedding, _Embedding]:
    """Smallest common tower for t1, t2 plus coordinate embeddings into it.

    The union of the radicand sets is reduced to a multiplicatively independent
    generator list by GF(2) elimination on prime supports, so dependent unions
    like {2,3} + {6} land in the tower (2,3) with sqrt(6) -> sqrt(2)*sqrt(3).
    """
    union = sorted(set(t1.radicands) | set(t2.radicands))
    gens: list[int] = []
    rows: dict[int, tuple[frozenset[int], int]] = {}  # pivot prime -> (vector, gen mask)
    expr: dict[int, tuple[Fraction, int]] = {}  # radicand -> (factor, gen mask)
    for d in union:
        v = _prime_support(d)
        combo = 0
        while v:
            p = max(v)
            if p not in rows:
                break
            rv, rc = rows[p]
            v = v ^ rv
            combo ^= rc
        if v:
            bit = 1 << len(gens)
            gens.append(d)
            rows[max(v)] = (v, combo ^ bit)
            expr[d] = (Fraction(1), bit)
        else:
            prod = 1
            for i, g in enumerate(gens):
                if combo >> i & 1:
                    prod *= g
            t = isqrt(d * prod)
            assert t * t == d * prod
            expr[d] = (Fraction(t, prod), combo)
    if len(gens) > TOWER_CAP:
        raise TowerOverflowError(
            f"no common tower within cap {TOWER_CAP} for {t1.radicands} and {t2.radicands}"
        )
    target = FieldTower(tuple(gens))
    gen_products = _mask_products(target)

    def embedding(src: FieldTower) -> _Embedding:
        out = []
        for mask in range(src.size):
            factor, tmask = Fraction(1), 0
            for i, d in enumerate(src.radicands):
                if not mask >> i & 1:
                    continue
                f, m = expr[d]
                factor *= f * gen_products[tmask & m]
                tmask ^= m
            out.append((factor, tmask))
        return tuple(out)

    return target, embedding(t1), embedding(t2)


def _embed_coords(coords: tuple[Fraction, ...], emb: _Embedding, size: int) -> list[Fraction]:
    out = [Fraction(0)] * size
    for q, (factor, tmask) in zip(coords, emb):
        if q:
            out[tmask] += q * factor
    return out


_RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class RealAlg:
    """Element of a real multi-quadratic field, with exact coordinates."""

    tower: FieldTower
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.tower.size:
            raise ValueError("coordinate count does not match tower size")
        object.__setattr__(self, "coords", tuple(Fraction(q) for q in self.coords))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q: _RationalLike) -> "RealAlg":
        return RealAlg(FieldTower(), (Fraction(q),))

    @staticmethod
    def zero() -> "RealAlg":
        return RealAlg.from_rational(0)

    @staticmethod
    def one() -> "RealAlg":
        return RealAlg.from_rational(1)

    @staticmethod
    def sqrt(n: int) -> "RealAlg":
        """Exact sqrt(n) for integer n >= 0 (square part pulled out)."""
        if n < 0:
            raise ValueError("negative radicand")
        if n == 0:
            return RealAlg.zero()
        s, d = _factor_squarefree(n)
        if d == 1:
            return RealAlg.from_rational(s)
        return RealAlg(FieldTower((d,)), (Fraction(0), Fraction(s)))

    @staticmethod
    def coerce(x: object) -> "RealAlg | None":
        if isinstance(x, RealAlg):
            return x
        if isinstance(x, (int, Fraction)):
            return RealAlg.from_rational(x)
        return None

    # -- structure ---------------------------------------------------------

    def reduced_terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Canonical value form: sorted (d, q) pairs meaning sum of q*sqrt(d).

        Each basis product sqrt(d_i1)*...*sqrt(d_ik) is reduced to s*sqrt(d0)
        with d0 squarefree; this form is tower-independent, so it backs
        equality, hashing and printing.
        """
        products = _mask_products(self.tower)
        acc: dict[int, Fraction] = {}
        for mask, q in enumerate(self.coords):
            if q:
                s, d0 = _factor_squarefree(products[mask])
                acc[d0] = acc.get(d0, Fraction(0)) + q * s
        return tuple(sorted((d, q) for d, q in acc.items() if q))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self.reduced_terms())

    def to_fraction(self) -> Fraction:
        terms = self.reduced_terms()
        if not terms:
            return Fraction(0)
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        raise ValueError(f"{self} is not rational")

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def _aligned(self, other: "RealAlg") -> tuple[FieldTower, list[Fraction], list[Fraction]]:
        if self.tower == other.tower:
            return self.tower, list(self.coords), list(other.coords)
        tower, e1, e2 = _unify(self.tower, other.tower)
        return tower, _embed_coords(self.coords, e1, tower.size), _embed_coords(
            other.coords, e2, tower.size
        )

    def __add__(self, other: object) -> "RealAlg":
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        tower, a, b = self._aligned(o)
        return RealAlg(tower, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "RealAlg":
        return RealAlg(self.tower, tuple(-q for q in self.coords))

    def __sub__(self, other: object) -> "RealAlg":
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "RealAlg":
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "RealAlg":
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        tower, a, b = self._aligned(o)
        products = _mask_products(tower)
        out = [Fraction(0)] * tower.size
        for s, x in enumerate(a):
            if not x:
                continue
            for t, y in enumerate(b):
                if y:
                    out[s ^ t] += x * y * products[s & t]
        return RealAlg(tower, tuple(out))

    __rmul__ = __mul__

    def _inverse(self) -> "RealAlg":
        if self.is_zero():
            raise ZeroDivisionError("division by zero field element")
        n = self.tower.size
        products = _mask_products(self.tower)
        # Column t of M is the coordinate vector of self * basis_t.
        m = [[Fraction(0)] * n for _ in range(n)]
        for s, x in enumerate(self.coords):
            if not x:
                continue
            for t in range(n):
                m[s ^ t][t] += x * products[s & t]
        rhs = [Fraction(1 if i == 0 else 0) for i in range(n)]
        # Small dense Gaussian solve; M is invertible since self != 0.
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col])
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            rhs[col] *= inv
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [v - f * w for v, w in zip(m[r], m[col])]
                    rhs[r] -= f * rhs[col]
        return RealAlg(self.tower, tuple(rhs))

    def __truediv__(self, other: object) -> "RealAlg":
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other: object) -> "RealAlg":
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    # -- comparisons -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}.

        Zero is a coordinate check.  Otherwise each reduced term q*sqrt(d) is
        enclosed in rational bounds built from isqrt(d * 4^p), the bounds are
        summed outward, and p doubles until the enclosure excludes zero.
        """
        terms = self.reduced_terms()
        if not terms:
            return 0
        if len(terms) == 1:
            return 1 if terms[0][1] > 0 else -1
        p = int(os.environ.get(_PRECISION_ENV, _PRECISION_DEFAULT))
        if p < 1:
            p = _PRECISION_DEFAULT
        while p <= _PRECISION_LIMIT:
            lo = hi = Fraction(0)
            scale = 1 << p
            for d, q in terms:
                if d == 1:
                    lo += q
                    hi += q
                    continue
                r = isqrt(d << (2 * p))
                lb, ub = Fraction(r, scale), Fraction(r + 1, scale)
                if q > 0:
                    lo += q * lb
                    hi += q * ub
                else:
                    lo += q * ub
                    hi += q * lb
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            p *= 2
        raise ArithmeticError("interval refinement failed to separate a nonzero value from 0")

    def __eq__(self, other: object) -> bool:
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return self.reduced_terms() == o.reduced_terms()

    def __hash__(self) -> int:
        terms = self.reduced_terms()
        if not terms:
            return hash(Fraction(0))
        if len(terms) == 1 and terms[0][0] == 1:
            return hash(terms[0][1])
        return hash(terms)

    def __lt__(self, other: object) -> bool:
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: object) -> bool:
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: object) -> bool:
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: object) -> bool:
        o = RealAlg.coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        terms = self.reduced_terms()
        if not terms:
            return "0"
        parts: list[str] = []
        for d, q in terms:
            body = str(abs(q)) if d == 1 else f"{abs(q)}*r{d}"
            if not parts:
                parts.append(("-" if q < 0 else "") + body)
            else:
                parts.append(("-" if q < 0 else "+") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"RealAlg({str(self)!r})"


_RAT_RE = re.compile(r"-?\d+(?:/\d+)?")
_TERM_RE = re.compile(r"(-?\d+(?:/\d+)?)(?:\*r(\d+))?")
_CHUNK_RE = re.compile(r"[+-]?[^+-]+")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not _RAT_RE.fullmatch(s):
        raise ScalarParseError(f"not a rational: {text!r}")
    num, _, den = s.partition("/")
    if den == "":
        return Fraction(int(num))
    if int(den) == 0:
        raise ScalarParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den))


def parse_realalg(text: str) -> RealAlg:
    s = text.replace(" ", "")
    if not s:
        raise ScalarParseError("empty scalar")
    chunks = _CHUNK_RE.findall(s)
    if "".join(chunks) != s:
        raise ScalarParseError(f"bad scalar: {text!r}")
    value = RealAlg.zero()
    for chunk in chunks:
        body = chunk[1:] if chunk[0] == "+" else chunk
        m = _TERM_RE.fullmatch(body)
        if not m:
            raise ScalarParseError(f"bad term {chunk!r} in {text!r}")
        q = parse_rational(m.group(1))
        if m.group(2) is None:
            value = value + q
        else:
            d = int(m.group(2))
            if d < 1:
                raise ScalarParseError(f"bad radicand in term {chunk!r}")
            value = value + q * RealAlg.sqrt(d)
    return value


def format_realalg(x: "RealAlg | int | Fraction") -> str:
    r = RealAlg.coerce(x)
    if r is None:
        raise TypeError(f"not a real scalar: {x!r}")
    return str(r)


@dataclass(frozen=True, eq=False)
class CScalar:
    """Complex scalar with RealAlg real and imaginary parts (shared tower)."""

    real: RealAlg
    imag: RealAlg

    def __post_init__(self) -> None:
        tower, a, b = self.real._aligned(self.imag)
        object.__setattr__(self, "real", RealAlg(tower, tuple(a)))
        object.__setattr__(self, "imag", RealAlg(tower, tuple(b)))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_real(x: "RealAlg | int | Fraction") -> "CScalar":
        r = RealAlg.coerce(x)
        if r is None:
            raise TypeError(f"not a real scalar: {x!r}")
        return CScalar(r, RealAlg.zero())

    @staticmethod
    def of(re: "RealAlg | int | Fraction" = 0, im: "RealAlg | int | Fraction" = 0) -> "CScalar":
        re_a, im_a = RealAlg.coerce(re), RealAlg.coerce(im)
        if re_a is None or im_a is None:
            raise TypeError("CScalar parts must be exact real scalars")
        return CScalar(re_a, im_a)

    @staticmethod
    def i() -> "CScalar":
        return CScalar(RealAlg.zero(), RealAlg.one())

    @staticmethod
    def zero() -> "CScalar":
        return CScalar.of(0, 0)

    @staticmethod
    def one() -> "CScalar":
        return CScalar.of(1, 0)

    @staticmethod
    def coerce(x: object) -> "CScalar | None":
        if isinstance(x, CScalar):
            return x
        r = RealAlg.coerce(x)
        if r is not None:
            return CScalar(r, RealAlg.zero())
        return None

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.real.is_zero() and self.imag.is_zero()

    def is_real(self) -> bool:
        return self.imag.is_zero()

    def is_rational(self) -> bool:
        return self.real.is_rational() and self.imag.is_rational()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conj(self) -> "CScalar":
        return CScalar(self.real, -self.imag)

    def norm_sq(self) -> RealAlg:
        return self.real * self.real + self.imag * self.imag

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: object) -> "CScalar":
        o = CScalar.coerce(other)
        if o is None:
            return NotImplemented
        return CScalar(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __neg__(self) -> "CScalar":
        return CScalar(-self.real, -self.imag)

    def __sub__(self, other: object) -> "CScalar":
        o = CScalar.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "CScalar":
        o = CScalar.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "CScalar":
        o = CScalar.coerce(other)
        if o is None:
            return NotImplemented
        return CScalar(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "CScalar":
        n = self.norm_sq()
        if n.is_zero():
            raise ZeroDivisionError("division by zero complex scalar")
        inv = n._inverse()
        return CScalar(self.real * inv, -self.imag * inv)

    def __truediv__(self, other: object) -> "CScalar":
        o = CScalar.coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other: object) -> "CScalar":
        o = CScalar.coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __eq__(self, other: object) -> bool:
        o = CScalar.coerce(other)
        if o is None:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self) -> int:
        if self.imag.is_zero():
            return hash(self.real)
        return hash((self.real, self.imag))

    def __str__(self) -> str:
        if self.imag.is_zero():
            return str(self.real)
        return f"({self.real})+({self.imag})i"

    def __repr__(self) -> str:
        return f"CScalar(re={str(self.real)!r}, im={str(self.imag)!r})"


def parse_cscalar(obj: object) -> CScalar:
    """Parse a complex scalar: a realalg string, an int, or {"re":..., "im":...}."""
    if isinstance(obj, bool):
        raise ScalarParseError(f"not a scalar: {obj!r}")
    if isinstance(obj, str):
        return CScalar.from_real(parse_realalg(obj))
    if isinstance(obj, int):
        return CScalar.of(obj, 0)
    if isinstance(obj, float):
        raise ScalarParseError("floats are not exact scalars; use strings like \"1/2+3*r2\"")
    if isinstance(obj, dict):
        unknown = set(obj) - {"re", "im"}
        if unknown:
            raise ScalarParseError(f"unknown complex scalar fields: {sorted(unknown)}")
        def part(key: str) -> RealAlg:
            v = obj.get(key, "0")
            if isinstance(v, bool) or isinstance(v, float):
                raise ScalarParseError(f"field {key!r} must be an exact scalar string or int")
            if isinstance(v, int):
                return RealAlg.from_rational(v)
            if isinstance(v, str):
                return parse_realalg(v)
            raise ScalarParseError(f"field {key!r} must be an exact scalar string or int")
        return CScalar(part("re"), part("im"))
    raise ScalarParseError(f"not a complex scalar: {obj!r}")


def format_cscalar(z: "CScalar | RealAlg | int | Fraction") -> dict[str, str]:
    c = CScalar.coerce(z)
    if c is None:
        raise TypeError(f"not a scalar: {z!r}")
    return {"re": str(c.real), "im": str(c.imag)}


def sign_of(x: object) -> int:
    """Exact sign of a real exact scalar (int, Fraction or RealAlg)."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    if isinstance(x, RealAlg):
        return x.sign()
    if isinstance(x, CScalar):
        if x.is_real():
            return x.real.sign()
        raise TypeError("sign of a non-real complex scalar")
    raise TypeError(f"no exact sign for {type(x).__name__}")


def is_zero(x: object) -> bool:
    """Exact zero test for any supported scalar."""
    if isinstance(x, (int, Fraction)):
        return x == 0
    if isinstance(x, (RealAlg, CScalar)):
        return x.is_zero()
    raise TypeError(f"not an exact scalar: {type(x).__name__}")
