"""Classification data: order formulas, counting rules, the rank-1 basis check."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from so42pt import catalog
from so42pt.errors import InvalidInputError, NotSemiSimpleError
from so42pt.exact import Q2


def test_family_minimum_rank_rows():
    for letter, rank, order, diff, rep in catalog.FAMILY_TABLE_MIN:
        assert catalog.CANONICAL_MIN_RANK[letter] == rank
        data = catalog.family_data(catalog.FamilyId(letter, rank))
        assert (data.order, data.order_minus_rank, data.representative_name) == (order, diff, rep)


def test_family_order_formulas():
    assert catalog.family_data(catalog.FamilyId("A", 3)).order == 15
    assert catalog.family_data(catalog.FamilyId("B", 2)).order == 10
    assert catalog.family_data(catalog.FamilyId("C", 4)).order == 36
    assert catalog.family_data(catalog.FamilyId("D", 3)).order == 15
    assert catalog.family_data(catalog.FamilyId("D", 3)).representative_name == "so(6)"


@given(st.sampled_from("ABCD"), st.integers(min_value=1, max_value=12))
def test_order_minus_rank_is_consistent(letter, rank):
    data = catalog.family_data(catalog.FamilyId(letter, rank))
    assert data.order_minus_rank == data.order - rank
    assert data.order >= rank


def test_low_rank_coincidences():
    assert catalog.coincidence(catalog.FamilyId("B", 1)) == "≅ A1"
    assert catalog.coincidence(catalog.FamilyId("C", 1)) == "≅ A1"
    assert catalog.coincidence(catalog.FamilyId("C", 2)) == "≅ B2"
    assert catalog.coincidence(catalog.FamilyId("D", 2)) == "≅ A1⊕A1"
    assert catalog.coincidence(catalog.FamilyId("D", 3)) == "≅ A3"
    assert catalog.coincidence(catalog.FamilyId("A", 5)) is None


def test_family_id_validation():
    with pytest.raises(InvalidInputError):
        catalog.FamilyId("E", 6)
    with pytest.raises(InvalidInputError):
        catalog.FamilyId("A", 0)


def test_exceptional_orders():
    for name, rank, order, diff in catalog.EXCEPTIONAL_TABLE:
        data = catalog.exceptional_data(name)
        assert data.rank == rank
        assert data.order_paper == order
        assert order - rank == diff
    assert catalog.exceptional_data("E8").order_standard == 248
    assert catalog.exceptional_data("E8").discrepancy
    assert not any(catalog.exceptional_data(n).discrepancy for n in ("G2", "F4", "E6", "E7"))
    assert catalog.exceptional_names() == ("G2", "F4", "E6", "E7", "E8")
    with pytest.raises(InvalidInputError):
        catalog.exceptional_data("E9")


def test_racah_counting_examples():
    rep = catalog.racah_and_commuting(15, 3)
    assert (rep.racah_number, rep.commuting_count) == (3, 9)
    rep = catalog.racah_and_commuting(36, 4)
    assert (rep.racah_number, rep.commuting_count) == (12, 20)
    rep = catalog.racah_and_commuting(3, 1)
    assert (rep.racah_number, rep.commuting_count) == (0, 2)


def test_racah_rejects_bad_pairs():
    with pytest.raises(NotSemiSimpleError):
        catalog.racah_and_commuting(7, 2)  # r - 3l odd
    with pytest.raises(NotSemiSimpleError):
        catalog.racah_and_commuting(5, 2)  # r - 3l negative
    with pytest.raises(InvalidInputError):
        catalog.racah_and_commuting(2, 3)


@given(st.sampled_from("ABCD"), st.integers(min_value=1, max_value=10))
def test_families_pass_the_counting_rule(letter, rank):
    # every classical algebra has a well-defined Racah number, except the
    # abelian outlier D1 = so(2)
    order = catalog.family_data(catalog.FamilyId(letter, rank)).order
    if (letter, rank) == ("D", 1):
        with pytest.raises(NotSemiSimpleError):
            catalog.racah_and_commuting(order, rank)
        return
    rep = catalog.racah_and_commuting(order, rank)
    assert rep.racah_number == (order - 3 * rank) // 2
    assert 2 * rep.commuting_count == order + rank


def test_group_table_orders_match_the_family_formulas():
    assert len(catalog.GROUP_TABLE) == 8
    for name, algebra, order in catalog.GROUP_TABLE:
        letter, rank = algebra[0], int(algebra[1:])
        assert catalog.family_data(catalog.FamilyId(letter, rank)).order == order, name


def test_counting_table_rows_reproduce_the_rule():
    assert len(catalog.COUNTING_TABLE) == 5
    for groups, _, order, rank, f, commuting in catalog.COUNTING_TABLE:
        rep = catalog.racah_and_commuting(order, rank)
        assert rep.racah_number == f, groups
        assert rep.commuting_count == commuting, groups


def test_rank1_cartan_basis():
    rep = catalog.a1_cartan_verify()
    assert str(rep.root_values[0]) == "(1/2)*sqrt(2)"
    assert str(rep.root_values[1]) == "(-1/2)*sqrt(2)"
    assert rep.root_values[0] == -rep.root_values[1]
    assert rep.hermitian_pairing_ok
    # the advertised quadratic identity misses by a constant quarter
    assert rep.casimir_identity_residual == Fraction(1, 4)
    quarter = Q2.coerce(Fraction(1, 4))
    zero = Q2.coerce(0)
    assert rep.residual_matrix == ((quarter, zero), (zero, quarter))
    assert "sqrt(2)" in rep.convention
