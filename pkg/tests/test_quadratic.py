"""Boson bilinear algebra: exact commutators, relations, and closures."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from so42pt import quadratic as q
from so42pt.errors import InvalidInputError
from so42pt.exact import CRat

I = CRat.imag_unit()
SP8 = q.sp8_hermitian_basis()


def test_metric_signature():
    assert q.METRIC == (-1, -1, -1, -1, 1, 1)


def test_generator_set_shape():
    gs = q.build_so42()
    assert len(gs.members) == 15
    assert gs.pairs() == tuple((a, b) for a in range(1, 6) for b in range(a + 1, 7))
    assert gs.J(2, 1) == -gs.J(1, 2)
    assert gs.J(3, 3).is_zero()
    with pytest.raises(InvalidInputError):
        gs.J(0, 7)


def test_all_fifteen_generators_are_hermitian():
    gs = q.build_so42()
    assert all(q.hermitian_check(f) for f in gs.members.values())


def test_j56_counts_quanta():
    # J_56 = (1/2)(a+a + b+b + 2): diagonal half, plain constant one
    j56 = q.build_so42().J(5, 6)
    half = CRat(Fraction(1, 2))
    for i in range(4):
        assert j56.conserving[i][i] == half
    assert j56.scalar == CRat(1)
    assert j56.scalar_sym == CRat(0)
    assert j56.raising == q.ZERO_FORM.raising
    assert j56.lowering == q.ZERO_FORM.lowering


def test_all_105_relations_hold_exactly():
    report = q.verify_so42_relations(q.build_so42())
    assert report.total == 105
    assert report.passes == 105
    assert report.failures == ()
    assert report.ok


def test_perturbed_generator_fails_relations():
    gs = q.build_so42()
    broken = gs.replaced(4, 5, 2 * gs.J(4, 5))
    report = q.verify_so42_relations(broken)
    assert not report.ok
    assert report.failures


def test_flip_alpha4_also_closes():
    # the alpha-4 sign is a convention: both choices satisfy the relations
    report = q.verify_so42_relations(q.build_so42(flip_alpha4=True))
    assert report.ok
    assert q.CONVENTION_LEDGER["alpha4_sign_flipped"] is False


def test_commutator_antisymmetry_and_bilinearity():
    rng = random.Random(11)
    for _ in range(50):
        x, y = rng.sample(SP8, 2)
        c = q.normal_order_commutator(x, y)
        assert q.normal_order_commutator(y, x) == -c
        assert q.normal_order_commutator(x + y, y) == c
        assert q.normal_order_commutator(3 * x, y) == 3 * c


def test_jacobi_identity_on_random_triples():
    rng = random.Random(23)
    for _ in range(50):
        x, y, z = rng.sample(SP8, 3)
        total = (
            q.normal_order_commutator(q.normal_order_commutator(x, y), z)
            + q.normal_order_commutator(q.normal_order_commutator(y, z), x)
            + q.normal_order_commutator(q.normal_order_commutator(z, x), y)
        )
        assert total.is_zero()


def test_i_times_commutator_preserves_hermiticity():
    rng = random.Random(5)
    for _ in range(50):
        x, y = rng.sample(SP8, 2)
        assert q.hermitian_check(I * q.normal_order_commutator(x, y))


def test_commutators_have_no_symmetrized_constant():
    rng = random.Random(17)
    for _ in range(50):
        x, y = rng.sample(SP8, 2)
        assert q.normal_order_commutator(x, y).scalar_sym.is_zero()


@given(st.integers(min_value=0, max_value=35), st.integers(min_value=0, max_value=35))
def test_antisymmetry_on_the_whole_basis(i, j):
    c = q.normal_order_commutator(SP8[i], SP8[j])
    assert q.normal_order_commutator(SP8[j], SP8[i]) == -c
    if i == j:
        assert c.is_zero()


def test_form_constructors():
    n12 = q.number_form(1, 2)
    assert n12.coeff("c", 1, 2) == CRat(1)
    assert n12.coeff("c", 2, 1) == CRat(0)
    cp = q.creator_pair(1, 3, Fraction(1, 2))
    assert cp.coeff("r", 1, 3) == CRat(Fraction(1, 2))
    assert cp.coeff("r", 3, 1) == CRat(Fraction(1, 2))
    assert cp.dagger() == q.annihilator_pair(1, 3, Fraction(1, 2))
    # h_ij = a_i+ a_j + delta_ij/2: off-diagonal h is a plain number form
    assert q.h_form(2, 3) == q.number_form(2, 3)
    h22 = q.h_form(2, 2)
    assert h22.scalar == CRat(Fraction(1, 2))
    assert h22.scalar_sym == CRat(0)
    assert q.hermitian_check(h22)
    with pytest.raises(InvalidInputError):
        n12.coeff("x", 1, 1)


def test_canonical_vector_uniqueness():
    gs = q.build_so42()
    x = gs.J(1, 2)
    assert (x - x).is_zero()
    assert x + x == 2 * x
    assert len(x.vector()) == 37
    vectors = {gs.J(a, b).vector() for a, b in gs.pairs()}
    assert len(vectors) == 15


def test_sp8_closure():
    report = q.closure_report(SP8)
    assert report.closed
    assert report.first_failure is None
    assert len(report.structure_constants) == 36 * 35 // 2


def test_so42_closure():
    gs = q.build_so42()
    report = q.closure_report([gs.J(a, b) for a, b in gs.pairs()])
    assert report.closed
    assert len(report.structure_constants) == 105


def test_closure_failure_is_witnessed():
    gs = q.build_so42()
    # [J_12, J_14] is proportional to J_24, outside the two-element span
    report = q.closure_report([gs.J(1, 2), gs.J(1, 4)])
    assert not report.closed
    assert report.first_failure == (0, 1)


def test_closure_rejects_dependent_input():
    gs = q.build_so42()
    with pytest.raises(InvalidInputError):
        q.closure_report([gs.J(1, 2), 2 * gs.J(1, 2)])


def test_spin_form_is_su2():
    forms = [q.spin_form(k, (1, 2)) for k in (1, 2, 3)]
    # [S_1, S_2] = i S_3 and cyclic
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        assert q.normal_order_commutator(forms[a], forms[b]) == I * forms[c]
    assert all(q.hermitian_check(f) for f in forms)
    with pytest.raises(InvalidInputError):
        q.spin_form(4, (1, 2))


def test_sp8_basis_spans_so42():
    # appending any so(4,2) generator to the 36-form basis is a linear
    # dependence, which is exactly what spanning means here
    gs = q.build_so42()
    for a, b in ((4, 5), (1, 2), (5, 6)):
        with pytest.raises(InvalidInputError):
            q.closure_report(tuple(SP8) + (gs.J(a, b),))
