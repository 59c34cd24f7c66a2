import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammalab.core import (GROUPOID, AxiomError, ElementSet, PoGammaStructure,
                           StructureError,
                           require_valid, structural_profile, up_set, validate)

from conftest import left_zero, minimum_chain, trivial
from oracles import axioms_hold


def test_meet_semilattice_validates():
    s = PoGammaStructure.from_tables([[[0, 0], [0, 1]]], [[1, 1], [0, 1]])
    assert validate(s).ok
    assert not validate(s)


def test_associativity_violation_witness():
    s = PoGammaStructure.from_tables([[[1, 0], [1, 0]]])  # a o b = 1 - b
    report = validate(s)
    assert [v.axiom for v in report] == ["associativity"] * len(report)
    assert report.violations[0].witness == (0, 0, 0, 0, 0)
    # (0 o 0) o 0 = 1 o 0 = 1 but 0 o (0 o 0) = 0 o 1 = 0
    assert str(report.violations[0]) == "associativity at (0,0,0,0,0)"


def test_groupoid_skips_associativity_only():
    s = PoGammaStructure.from_tables([[[1, 0], [1, 0]]], kind=GROUPOID)
    assert validate(s).ok
    bad = PoGammaStructure.from_tables([[[1, 0], [1, 0]]], [[1, 1], [0, 1]], kind=GROUPOID)
    assert {v.axiom for v in validate(bad)} == {"compatibility-left"}


@pytest.mark.parametrize("g", [1, 2, 3])
def test_one_element_structure_is_valid(g):
    assert validate(trivial(g)).ok


def test_order_axioms_reported():
    s = PoGammaStructure(2, 1, bytes(4), bytes([1, 1, 1, 1]))
    assert [v.axiom for v in validate(s)] == ["antisymmetry"]
    s = PoGammaStructure(2, 1, bytes(4), bytes([0, 0, 0, 1]))
    assert str(validate(s).violations[0]) == "reflexivity at (0,0)"
    s = PoGammaStructure(3, 1, bytes(9), bytes([1, 1, 0, 0, 1, 1, 0, 0, 1]))
    assert ("transitivity", (0, 1, 2)) in [(v.axiom, v.witness) for v in validate(s)]
    with pytest.raises(AxiomError):
        require_valid(s)


@pytest.mark.parametrize("kwargs", [
    dict(n=0, g=1, op=b"", leq=b""),
    dict(n=2, g=0, op=b"", leq=bytes(4)),
    dict(n=2, g=1, op=bytes(3), leq=bytes(4)),
    dict(n=2, g=1, op=bytes([0, 0, 0, 2]), leq=bytes([1, 0, 0, 1])),
    dict(n=2, g=1, op=bytes(4), leq=bytes([1, 0, 0, 2])),
])
def test_structural_errors(kwargs):
    with pytest.raises(StructureError):
        PoGammaStructure(**kwargs)


def test_structural_error_is_not_axiom_error():
    with pytest.raises(StructureError) as err:
        PoGammaStructure.from_tables([[[0, 5], [0, 1]]])
    assert not isinstance(err.value, AxiomError)


def test_up_set_examples():
    c3 = minimum_chain(3)
    assert up_set(c3, 1).tolist() == [1, 2]
    assert up_set(c3, 0).tolist() == [0, 1, 2]
    assert up_set(left_zero(2), 0).tolist() == [0]
    with pytest.raises(StructureError):
        up_set(c3, 3)


def test_profile_examples():
    p = structural_profile(minimum_chain(3, g=2))
    assert (p.is_band, p.is_commutative, p.is_semilattice, p.order_iff) == (True, True, True, True)
    p = structural_profile(left_zero(2))
    assert (p.is_band, p.is_commutative, p.is_semilattice) == (True, False, False)
    p = structural_profile(trivial(2))
    assert all(vars(p).values())


def test_profile_invariants(mixed_corpus):
    for s in mixed_corpus:
        p = structural_profile(s)
        assert p.is_semilattice == (p.is_band and p.is_commutative)
        assert not p.order_iff or p.order_forward


def test_band_from_order_on_corpus(mixed_corpus):
    checked = 0
    for s in mixed_corpus:
        p = structural_profile(s)
        if p.order_forward:
            checked += 1
            assert p.is_band
    assert checked > 50


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_up_set_contains_and_upward_closed(data, small_corpus):
    s = data.draw(st.sampled_from(small_corpus))
    a = data.draw(st.integers(0, s.n - 1))
    U = up_set(s, a)
    assert a in U
    for t in U:
        for u in range(s.n):
            if s.le(t, u):
                assert u in U


def _mutate(s, rng):
    if rng.random() < 0.5:
        op = bytearray(s.op)
        i = rng.randrange(len(op))
        op[i] = (op[i] + rng.randrange(1, s.n)) % s.n if s.n > 1 else 0
        return PoGammaStructure(s.n, s.g, bytes(op), s.leq, s.kind)
    leq = bytearray(s.leq)
    i = rng.randrange(len(leq))
    leq[i] ^= 1
    return PoGammaStructure(s.n, s.g, s.op, bytes(leq), s.kind)


def test_validate_agrees_with_naive_axioms_under_mutation(mixed_corpus):
    rng = random.Random(7)
    invalid = 0
    for _ in range(3000):
        s = _mutate(rng.choice(mixed_corpus), rng)
        report = validate(s)
        assert report.ok == axioms_hold(s)
        invalid += not report.ok
    assert invalid > 1000


def test_element_set_basics():
    A = ElementSet.of(5, [4, 0, 2])
    assert list(A) == [0, 2, 4] and len(A) == 3 and 2 in A and 1 not in A
    assert ElementSet.of(5, [0]) <= A and not A <= ElementSet.of(5, [0])
    assert repr(A) == "{0,2,4}"
    assert (A - ElementSet.of(5, [0])).tolist() == [2, 4]
    with pytest.raises(StructureError):
        ElementSet.of(3, [3])
