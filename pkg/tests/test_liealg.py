import itertools
import math
import random
from fractions import Fraction

import pytest

from nilalg.liealg import (
    KForm,
    NilpotentLieAlgebra,
    algebra_to_data,
    average,
    cohomology_dims,
    load_algebra,
)
from nilalg.linalg import ShapeError
from nilalg.scalar import RealAlg

# Hand-built tables, 0-based keys, full coefficient vectors.


def _h3():
    return NilpotentLieAlgebra(3, {(0, 1): (0, 0, 1)})


def _l4():
    return NilpotentLieAlgebra(4, {(0, 1): (0, 0, 1, 0), (0, 2): (0, 0, 0, 1)})


def _kt():
    return NilpotentLieAlgebra(4, {(0, 1): (0, 0, 1, 0)})


def _iwasawa():
    return NilpotentLieAlgebra(
        6,
        {
            (0, 2): (0, 0, 0, 0, -1, 0),
            (1, 3): (0, 0, 0, 0, 1, 0),
            (0, 3): (0, 0, 0, 0, 0, -1),
            (1, 2): (0, 0, 0, 0, 0, -1),
        },
    )


# Independent route to the differential: the simplex formula
# (d a)(x_0..x_k) = sum_{s<t} (-1)^(s+t) a([x_s, x_t], x_0, ..^s, ..^t, .., x_k)
# evaluated entrywise on basis subsets, with a local naive determinant.


def _basis_vec(n, i):
    return [Fraction(1 if t == i else 0) for t in range(n)]


def _local_bracket(alg, i, j):
    return list(alg.bracket(_basis_vec(alg.dim, i), _basis_vec(alg.dim, j)))


def _eval_basis_form(idx, vectors):
    k = len(idx)
    total = Fraction(0)
    for perm in itertools.permutations(range(k)):
        sign = 1
        for s in range(k):
            for t in range(s + 1, k):
                if perm[s] > perm[t]:
                    sign = -sign
        prod = Fraction(sign)
        for row, col in enumerate(perm):
            prod *= vectors[row][idx[col]]
        total += prod
    return total


def _oracle_d_matrix(alg, k):
    n = alg.dim
    src = list(itertools.combinations(range(n), k))
    dst = list(itertools.combinations(range(n), k + 1))
    rows = []
    for jdx in dst:
        row = []
        for idx in src:
            val = Fraction(0)
            for s in range(k + 1):
                for t in range(s + 1, k + 1):
                    args = [_local_bracket(alg, jdx[s], jdx[t])]
                    args += [
                        _basis_vec(n, jdx[u]) for u in range(k + 1) if u != s and u != t
                    ]
                    sign = -1 if (s + t) % 2 else 1
                    val += sign * _eval_basis_form(idx, args)
            row.append(val)
        rows.append(row)
    return rows


def _naive_rank(rows):
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = Fraction(m[i][c], 1) / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _oracle_betti(alg):
    n = alg.dim
    ranks = [
        _naive_rank(_oracle_d_matrix(alg, k)) if 0 <= k < n else 0 for k in range(n)
    ]
    ranks.append(0)
    return [math.comb(n, k) - ranks[k] - (ranks[k - 1] if k else 0) for k in range(n + 1)]


ALGEBRAS = {"h3": _h3, "l4": _l4, "kt": _kt, "iwasawa": _iwasawa}

FROZEN_BETTI = {
    "h3": [1, 2, 2, 1],
    "l4": [1, 2, 2, 2, 1],
    "kt": [1, 3, 4, 3, 1],
    "iwasawa": [1, 4, 8, 10, 8, 4, 1],
}


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_betti_frozen_and_oracle(name):
    alg = ALGEBRAS[name]()
    assert cohomology_dims(alg) == FROZEN_BETTI[name]
    assert _oracle_betti(alg) == FROZEN_BETTI[name]


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_differential_matrix_matches_simplex_formula(name):
    alg = ALGEBRAS[name]()
    for k in range(alg.dim):
        mine = alg.differential_matrix(k).to_lists()
        oracle = _oracle_d_matrix(alg, k)
        assert mine == oracle


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_d_squared_zero(name):
    alg = ALGEBRAS[name]()
    rng = random.Random(hash(name) & 0xFFFF)
    for k in range(alg.dim - 1):
        form = KForm(
            alg.dim,
            k,
            {
                idx: Fraction(rng.randint(-3, 3))
                for idx in itertools.combinations(range(alg.dim), k)
            },
        )
        assert alg.differential(alg.differential(form)).is_zero()


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_b1_equals_codim_of_commutator(name):
    alg = ALGEBRAS[name]()
    assert cohomology_dims(alg, 1)[1] == alg.dim - alg.commutator_subspace().dim


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_poincare_duality_and_euler(name):
    b = FROZEN_BETTI[name]
    assert b == b[::-1]
    assert sum((-1) ** k * x for k, x in enumerate(b)) == 0


def test_bracket_antisymmetric_and_bilinear():
    alg = _iwasawa()
    rng = random.Random(8)
    for _ in range(40):
        x = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        y = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        z = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        xy = alg.bracket(x, y)
        assert list(alg.bracket(y, x)) == [-c for c in xy]
        lhs = alg.bracket([a + b for a, b in zip(x, z)], y)
        rhs = [a + b for a, b in zip(xy, alg.bracket(z, y))]
        assert list(lhs) == rhs
    assert all(c == 0 for c in alg.bracket(x, x))


def test_lower_central_series_and_step():
    assert [s.dim for s in _h3().lower_central_series()] == [3, 1, 0]
    assert _h3().nilpotency_step() == 2
    assert _l4().nilpotency_step() == 3
    assert _iwasawa().nilpotency_step() == 2
    abelian = NilpotentLieAlgebra(2, {})
    assert abelian.nilpotency_step() == 1
    assert abelian.validate().ok


def test_validate_rejects_solvable_not_nilpotent():
    # [e1, e2] = e2 keeps Jacobi but the series stalls at span(e2).
    alg = NilpotentLieAlgebra(2, {(0, 1): (0, 1)})
    report = alg.validate()
    assert report.jacobi_ok
    assert not report.nilpotent
    assert report.series_dims[-1] == 1
    assert not report.ok and report.problems()
    with pytest.raises(ValueError):
        alg.require_valid()


def test_validate_reports_jacobi_witness():
    # [e1, e2] = e3, [e1, e3] = e1 breaks Jacobi on (e1, e2, e3).
    alg = NilpotentLieAlgebra(3, {(0, 1): (0, 0, 1), (0, 2): (1, 0, 0)})
    report = alg.validate()
    assert report.jacobi_failures == ((1, 2, 3),)
    assert "e1" in report.problems()[0]


def test_wedge_graded_commutative_and_associative():
    rng = random.Random(13)
    n = 5
    for _ in range(25):
        def rand_form(k):
            return KForm(
                n,
                k,
                {
                    idx: Fraction(rng.randint(-2, 2))
                    for idx in itertools.combinations(range(n), k)
                },
            )

        p, q = rng.randint(1, 2), rng.randint(1, 2)
        a, b, c = rand_form(p), rand_form(q), rand_form(1)
        ab = a.wedge(b)
        ba = b.wedge(a)
        sign = (-1) ** (p * q)
        assert ab.coeffs == (sign * ba).coeffs
        assert a.wedge(b.wedge(c)).coeffs == ab.wedge(c).coeffs


def test_wedge_of_one_forms_evaluates_as_determinant():
    n = 4
    f1 = KForm(n, 1, {(0,): Fraction(1), (2,): Fraction(3)})
    f2 = KForm(n, 1, {(1,): Fraction(2)})
    w = f1.wedge(f2)
    x = [Fraction(v) for v in (1, 0, 2, 5)]
    y = [Fraction(v) for v in (0, 1, 1, -1)]
    direct = f1.evaluate(x) * f2.evaluate(y) - f1.evaluate(y) * f2.evaluate(x)
    assert w.evaluate(x, y) == direct


def test_form_with_root_coefficients():
    alg = _h3()
    form = KForm(3, 1, {(2,): RealAlg.sqrt(2)})
    d = alg.differential(form)
    assert d.coeffs == {(0, 1): -RealAlg.sqrt(2)}
    assert d.evaluate([1, 0, 0], [0, 1, 0]) == -RealAlg.sqrt(2)


def test_average_is_identity():
    form = KForm(3, 2, {(0, 1): Fraction(5)})
    assert average(form) is form


def test_kform_validation():
    with pytest.raises(ValueError):
        KForm(3, 2, {(1, 1): Fraction(1)})
    with pytest.raises(ValueError):
        KForm(3, 2, {(2, 1): Fraction(1)})
    with pytest.raises(ValueError):
        KForm(3, 2, {(1, 5): Fraction(1)})
    with pytest.raises(TypeError):
        KForm(3, 2, {(0, 1): 0.5})
    with pytest.raises(ShapeError):
        KForm(3, 1, {(0,): Fraction(1)}) + KForm(3, 2, {(0, 1): Fraction(1)})


def test_load_algebra_brackets_and_dforms_agree():
    brackets = {
        "dim": 6,
        "brackets": [
            {"i": 1, "j": 3, "k": 5, "c": -1},
            {"i": 2, "j": 4, "k": 5, "c": 1},
            {"i": 1, "j": 4, "k": 6, "c": -1},
            {"i": 2, "j": 3, "k": 6, "c": -1},
        ],
    }
    dforms = {
        "dim": 6,
        "dforms": [
            {"k": 5, "terms": [{"i": 1, "j": 3, "c": "1"}, {"i": 2, "j": 4, "c": "-1"}]},
            {"k": 6, "terms": [{"i": 1, "j": 4, "c": "1"}, {"i": 2, "j": 3, "c": "1"}]},
        ],
    }
    a, b = load_algebra(brackets), load_algebra(dforms)
    assert algebra_to_data(a) == algebra_to_data(b)
    assert a._table == _iwasawa()._table


def test_load_algebra_round_trip():
    alg = _iwasawa()
    again = load_algebra(algebra_to_data(alg))
    assert again._table == alg._table
    assert cohomology_dims(again) == FROZEN_BETTI["iwasawa"]


def test_load_algebra_tolerates_metadata():
    data = algebra_to_data(_h3())
    data.update({"name": "x", "family": "y", "expected": {"b1": 2}})
    assert load_algebra(data)._table == _h3()._table


def test_load_algebra_errors():
    with pytest.raises(ValueError):
        load_algebra({"brackets": []})
    with pytest.raises(ValueError):
        load_algebra({"dim": 3})
    with pytest.raises(ValueError):
        load_algebra({"dim": 3, "brackets": [], "dforms": []})
    with pytest.raises(ValueError):
        load_algebra({"dim": 3, "brackets": [{"i": 2, "j": 1, "k": 3, "c": 1}]})
    with pytest.raises(ValueError):
        load_algebra({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 4, "c": 1}]})
    with pytest.raises(ValueError):
        load_algebra(
            {
                "dim": 3,
                "brackets": [
                    {"i": 1, "j": 2, "k": 3, "c": 1},
                    {"i": 1, "j": 2, "k": 3, "c": 2},
                ],
            }
        )
    with pytest.raises(Exception):
        load_algebra({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": 0.5}]})
