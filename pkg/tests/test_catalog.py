import json
from fractions import Fraction

import pytest

from nilalg.catalog import (
    algebra_from_one_form_differentials,
    default_entries,
    entry_names,
    entry_to_data,
    get_entry,
    h3_r3,
    iwasawa,
    iwasawa_algebraic_dimension,
    kodaira_thurston,
    standard_block_j,
    ugarte_a,
    ugarte_b,
)
from nilalg.complexstruct import load_complex_structure
from nilalg.liealg import NilpotentLieAlgebra, load_algebra
from nilalg.linalg import Mat
from nilalg.scalar import CScalar, RealAlg


def _table(alg: NilpotentLieAlgebra):
    return {
        (i, j): alg.bracket_basis(i, j)
        for i in range(alg.dim)
        for j in range(i + 1, alg.dim)
        if any(alg.bracket_basis(i, j))
    }


def test_converter_reproduces_printed_iwasawa_equations():
    # de^5 = e1^e3 - e2^e4 and de^6 = e1^e4 + e2^e3, i.e. brackets
    # [e1,e3] = -e5, [e2,e4] = e5, [e1,e4] = -e6, [e2,e3] = -e6.
    direct = NilpotentLieAlgebra(
        6,
        {
            (0, 2): (0, 0, 0, 0, -1, 0),
            (1, 3): (0, 0, 0, 0, 1, 0),
            (0, 3): (0, 0, 0, 0, 0, -1),
            (1, 2): (0, 0, 0, 0, 0, -1),
        },
    )
    assert _table(iwasawa().algebra) == _table(direct)


def test_block_j_squares_to_minus_identity_and_pairs_consecutive():
    j = standard_block_j(6)
    for k in range(0, 6, 2):
        col = j.mat.col(k)
        assert [i for i, v in enumerate(col) if v] == [k + 1]


def test_block_j_rejects_odd_dimension():
    with pytest.raises(Exception):
        standard_block_j(5)


def test_converter_rejects_bad_indices():
    with pytest.raises(ValueError):
        algebra_from_one_form_differentials(2, {3: [(1, 1, 2)]})
    with pytest.raises(ValueError):
        algebra_from_one_form_differentials(2, {1: [(1, 1, 5)]})


def test_nilpotent_family_at_rho_one_is_iwasawa():
    assert _table(ugarte_b(0, 1, 0, 0, 0, 0).algebra) == _table(iwasawa().algebra)


def test_default_entries_cover_all_families_and_validate():
    entries = default_entries()
    assert [e.family_tag for e in entries] == [
        "iwasawa",
        "kodairaThurston",
        "h3xR3",
        "ugarteA",
        "ugarteB",
    ]
    for entry in entries:
        report = entry.report()
        for key, want in entry.expected.items():
            assert report[key] == want


def test_fixed_entry_invariants():
    assert iwasawa().expected["h1Dim"] == 2
    assert kodaira_thurston().report()["h1Dim"] == 1
    assert h3_r3().report()["h1Dim"] == 2


def test_non_nilpotent_family_h1_is_one_for_varied_parameters():
    half = Fraction(1, 2)
    cases = [
        ugarte_a(0, 1, 1),
        ugarte_a(CScalar.of(0, 1), CScalar.of(0, 1), 2),
        ugarte_a(CScalar.of(half, 3), CScalar.of(Fraction(3, 5), Fraction(4, 5)), -1),
    ]
    for entry in cases:
        assert entry.expected["h1Dim"] == 1
        assert entry.report()["h1Dim"] == 1


def test_nilpotent_family_h1_case_analysis():
    # eps = 1 with (rho, B, C) not all zero: one differential.
    for entry in (ugarte_b(1, 1), ugarte_b(1, 0, 0, 1, 0, 0), ugarte_b(1, 0, 0, 0, CScalar.of(2, 1), 0)):
        assert entry.report()["h1Dim"] == 1
    # eps = 0, not abelian: two.
    for entry in (ugarte_b(0, 1), ugarte_b(0, 0, 1, 0, 0, 0), ugarte_b(0, 0, 1, 1, 1, 1)):
        assert entry.report()["h1Dim"] == 2
    # eps = 1, rho = B = C = 0: two, regardless of D.
    for entry in (ugarte_b(1, 0), ugarte_b(1, 0, 0, 0, 0, 5)):
        assert entry.report()["h1Dim"] == 2
    # all parameters zero: abelian, three.
    assert ugarte_b(0, 0).report()["h1Dim"] == 3


def test_non_nilpotent_family_parameter_errors():
    with pytest.raises(ValueError):
        ugarte_a(0, 2, 1)  # |E| != 1
    with pytest.raises(ValueError):
        ugarte_a(0, 1, 0)  # b = 0
    root_half = RealAlg.sqrt(2) / 2
    with pytest.raises(ValueError):
        ugarte_a(0, CScalar.of(root_half, root_half), 1)  # irrational parts
    with pytest.raises(ValueError):
        ugarte_b(2, 0)


def test_torus_composite_worked_cases():
    flat = iwasawa_algebraic_dimension(Mat.zeros(2, 2), radius=2)
    assert (flat.value, flat.exact) == (2, True)
    x = Mat.of([[CScalar.zero(), CScalar.of(RealAlg.sqrt(2), -RealAlg.sqrt(3))], [0, 0]])
    shifted = iwasawa_algebraic_dimension(x, radius=3)
    assert (shifted.value, shifted.exact) == (1, True)
    assert shifted.ns_rank == 3


def test_torus_composite_requires_admissible_shape():
    with pytest.raises(ValueError):
        iwasawa_algebraic_dimension(Mat.of([[0, 0], [1, 0]]))
    with pytest.raises(Exception):
        iwasawa_algebraic_dimension(Mat.zeros(3, 3))


def test_get_entry_by_name_and_params():
    assert get_entry("iwasawa").name == "iwasawa"
    assert get_entry("h3xR3").family_tag == "h3xR3"
    e = get_entry("ugarteA", {"A": {"re": "1"}, "E": {"re": "3/5", "im": "4/5"}, "b": "2"})
    assert e.params["E"] == "(3/5)+(4/5)i"
    b2 = get_entry("ugarteB", {"eps": 0, "rho": 1})
    assert b2.expected["h1Dim"] == 2


def test_get_entry_errors():
    with pytest.raises(ValueError):
        get_entry("nope")
    with pytest.raises(ValueError):
        get_entry("iwasawa", {"A": 1})
    with pytest.raises(ValueError):
        get_entry("ugarteA", {"Q": 1})
    with pytest.raises(ValueError):
        get_entry("ugarteB", {"eps": True})


def test_entry_names_listing():
    assert entry_names() == ["iwasawa", "kodairaThurston", "h3xR3", "ugarteA", "ugarteB"]


def test_entry_documents_round_trip_and_serialize():
    for entry in default_entries():
        data = entry_to_data(entry)
        json.dumps(data)  # plain types only
        alg = load_algebra(data)
        assert _table(alg) == _table(entry.algebra)
        j = load_complex_structure(data, alg.dim)
        assert j.mat.rows == entry.j.mat.rows
