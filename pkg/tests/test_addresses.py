"""Addresses, the atomic-number formula, filling rules, and the datasets."""

import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from so42pt import addresses as A
from so42pt.errors import InvalidInputError

GOLDEN = Path(__file__).parent / "golden"


def test_formula_examples():
    assert A.atomic_number(A.Address(1, 0, 1, -1)) == 1
    assert A.atomic_number(A.Address(4, 3, 5, -5)) == 57
    assert A.atomic_number(A.Address(3, 2, 5, 5)) == 30
    assert A.atomic_number(A.Address(5, 4, 7, -7)) == 121


def test_inverse_examples():
    assert A.address_of(2) == A.Address(1, 0, 1, 1)
    assert A.address_of(89) == A.Address(5, 3, 5, -5)
    assert A.address_of(119) == A.Address(8, 0, 1, -1)


def test_address_invariants_are_enforced():
    with pytest.raises(InvalidInputError):
        A.Address(1, 1, 1, 1)  # l > n-1
    with pytest.raises(InvalidInputError):
        A.Address(2, 1, 5, 1)  # jj not in {2l-1, 2l+1}
    with pytest.raises(InvalidInputError):
        A.Address(2, 0, -1, -1)  # jj must be positive
    with pytest.raises(InvalidInputError):
        A.Address(2, 1, 3, 4)  # mm must be odd
    with pytest.raises(InvalidInputError):
        A.Address(2, 1, 3, -5)  # |mm| <= jj


def test_enumeration_positions_are_atomic_numbers():
    addrs = A.enumerate_addresses(500)
    for k, a in enumerate(addrs, start=1):
        assert A.atomic_number(a) == k
        assert A.address_of(k) == a
    assert [a == A.address_of(z) for z, a in ((1, addrs[0]), (4, addrs[3]))]
    assert addrs[4] == A.Address(2, 1, 1, -1)  # boron


@given(st.integers(min_value=1, max_value=5000))
def test_formula_inverts_the_enumeration(z):
    a = A.address_of(z)
    assert A.atomic_number(a) == z
    assert A.parity_class(a) == ("even" if (a.n + a.l) % 2 == 0 else "odd")


def test_table2_rows_match_the_enumeration():
    rows = A.table2_rows()
    assert len(rows) == 116
    for addr, z, symbol, name in rows:
        assert A.atomic_number(addr) == z
        assert A.address_of(z) == addr
        if 111 <= z <= 116:
            assert symbol is None and name == "not named"
        else:
            assert symbol


def test_dataset_naming_quirks_are_preserved():
    names = {z: name for _, z, _, name in A.table2_rows()}
    assert names[15] == "phosphorous"
    assert names[109] == "meitneirium"
    assert names[71] == "lutetium"


def test_element_records():
    la = A.element_record(57)
    assert (la.name, la.symbol) == ("lanthanum", "La")
    assert str(la.address) == "(4,3,5/2,-5/2)"
    assert str(la.entry) == "[7 4]"
    assert la.parity == "odd"
    assert la.discovery_year is None
    assert A.element_record(105).discovery_year == 1968
    assert A.element_record(116).discovery_year == 1999
    beyond = A.element_record(121)
    assert beyond.symbol is None and beyond.name == "not named"
    assert str(beyond.entry) == "[9 5]"
    assert A.element_by_symbol("Sn").z == 50
    assert A.element_by_symbol("w").z == 74
    with pytest.raises(InvalidInputError):
        A.element_by_symbol("Xx")


def test_shell_entry_capacity_is_the_multiplet_sum():
    for n in range(1, 10):
        for l in range(n):
            entry = A.ShellEntry(n + l, n)
            assert entry.capacity == 2 * (2 * l + 1)
            assert sum(entry.sub_multiplet_lengths) == entry.capacity
            if l == 0:
                assert entry.sub_multiplet_lengths == (2,)
            else:
                assert entry.sub_multiplet_lengths == (2 * l, 2 * l + 2)
    with pytest.raises(InvalidInputError):
        A.ShellEntry(5, 2)  # l = 3 > n-1


def test_parity_is_constant_on_entries():
    for a in A.enumerate_addresses(300):
        assert A.parity_class(a) == ("even" if (a.shell_sum % 2 == 0) else "odd")


def test_degeneracy_and_energy():
    assert A.degeneracy_and_energy(1) == (1, 2, Fraction(1))
    assert A.degeneracy_and_energy(2) == (4, 8, Fraction(1, 4))
    assert A.degeneracy_and_energy(5) == (25, 50, Fraction(1, 25))
    with pytest.raises(InvalidInputError):
        A.degeneracy_and_energy(0)


def _labels(rule, count):
    return " ".join(A.subshell_label(n, l) for n, l in A.shell_sequence(rule, count))


def test_madelung_sequence_first_twenty():
    assert _labels(A.MADELUNG, 20) == (
        "1s 2s 2p 3s 3p 4s 3d 4p 5s 4d 5p 6s 4f 5d 6p 7s 5f 6d 7p 8s"
    )


def test_other_named_rules():
    assert _labels(A.HYDROGENIC, 6) == "1s 2s 2p 3s 3p 3d"
    assert _labels(A.OSCILLATOR, 5) == "1s 2p 2s 3d 3p"
    assert A.FillingRule.named("half").q == Fraction(1, 2)
    with pytest.raises(InvalidInputError):
        A.FillingRule.named("isotropic")


@given(
    st.fractions(min_value=-1, max_value=3, max_denominator=4),
    st.integers(min_value=2, max_value=40),
)
def test_shell_sequence_keys_are_sorted(q, count):
    rule = A.FillingRule(q)
    seq = A.shell_sequence(rule, count)
    assert len(seq) == count
    assert len(set(seq)) == count
    keys = [rule.key(n, l) for n, l in seq]
    assert keys == sorted(keys)


def test_unbounded_rules_are_rejected():
    with pytest.raises(InvalidInputError):
        A.shell_sequence(A.FillingRule(Fraction(-3, 2)), 5)
    with pytest.raises(InvalidInputError):
        A.shell_sequence(A.MADELUNG, 0)


@given(st.integers(min_value=1, max_value=200))
def test_configuration_totals_and_capacities(z):
    config = A.electron_configuration(z)
    assert config.total == z
    occupancies = list(config.subshells)
    for (n, l), occ in occupancies:
        assert 1 <= occ <= 2 * (2 * l + 1)
    # every subshell before the last is at capacity
    for (n, l), occ in occupancies[:-1]:
        assert occ == 2 * (2 * l + 1)
    full = sum(occ for (n, l), occ in occupancies if occ == 2 * (2 * l + 1))
    assert config.closed_core_count == full


def test_configuration_examples():
    assert A.electron_configuration(1).compact() == "1s1"
    fe = A.electron_configuration(26)
    assert fe.compact() == "1s2 2s2 2p6 3s2 3p6 4s2 3d6"
    assert fe.occupancies() == dict(A.table3_reference(26))
    cr = A.electron_configuration(24)
    assert cr.compact().endswith("4s2 3d4")
    assert dict(A.table3_reference(24))[(4, 0)] == 1  # the dataset says 4s1 3d5


def test_reference_dataset_sums():
    for z in range(1, 104):
        assert sum(occ for _, occ in A.table3_reference(z)) == z
    with pytest.raises(InvalidInputError):
        A.table3_reference(104)


def test_diff_small_prefixes():
    assert A.configuration_diff(18) == ()
    assert {e.z for e in A.configuration_diff(30)} == {24, 29}


def test_diff_matches_the_golden_exception_set():
    golden = json.loads((GOLDEN / "madelung_exceptions.json").read_text())
    diff = A.configuration_diff(golden["z_max"], A.FillingRule.named(golden["rule"]))
    assert sorted(e.z for e in diff) == golden["exception_z"]
    for entry in diff:
        assert entry.predicted.occupancies() != dict(entry.reference)


def test_diff_bounds():
    with pytest.raises(InvalidInputError):
        A.configuration_diff(104)
    with pytest.raises(InvalidInputError):
        A.configuration_diff(0)


def test_address_parsing_round_trip():
    a = A.Address(4, 3, 5, -5)
    assert A.Address.parse(str(a)) == a
    assert A.Address.parse(" (1, 0, 0.5, -0.5) ") == A.Address(1, 0, 1, -1)
    for bad in ("(1,0,1/3,1/2)", "(1,0)", "spam", "(1,0,1/2,0)"):
        with pytest.raises(InvalidInputError):
            A.Address.parse(bad)


@given(st.integers(min_value=1, max_value=12))
def test_subshell_labels_round_trip(n):
    for l in range(n):
        if l < len(A.SUBSHELL_LETTERS):
            assert A.parse_subshell(A.subshell_label(n, l)) == (n, l)


def test_discovery_years_cover_the_late_block():
    years = A.discovery_years()
    assert sorted(years) == list(range(105, 117))
    assert years[106] == 1974
    assert years[113] == 2004
