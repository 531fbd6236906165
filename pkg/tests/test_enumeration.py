import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esnkit.algebra import PartialTable, antichain, chain_semilattice, group_z2
from esnkit.enumeration import (CLASSES, GUARD, _lms_by_order, _lms_by_table, canonicalize,
                                enumerate_structures, oracle_count, permute, verify_member)
from esnkit.errors import InputError, SizeError
from esnkit.fileio import serialize

from _data import FROZEN_COUNTS, enum

CASES = [(c, n) for c in CLASSES for n in range(GUARD[c] + 1)]


@pytest.mark.parametrize("cls,n", CASES)
def test_frozen_counts(cls, n):
    labelled, classes = FROZEN_COUNTS[cls][n]
    assert len(enum(cls, n)) == labelled
    assert len(enum(cls, n, True)) == classes


@pytest.mark.parametrize("cls,n", CASES)
def test_oracle_agrees(cls, n):
    assert oracle_count(cls, n) == len(enum(cls, n))


def test_local_meet_semilattice_oracles_agree():
    for n in range(4):
        assert _lms_by_table(n) == _lms_by_order(n)


def test_guards():
    with pytest.raises(SizeError):
        list(enumerate_structures("ehresmann", 4))
    with pytest.raises(SizeError):
        list(enumerate_structures("local-meet-semilattice", 5))
    with pytest.raises(SizeError):
        oracle_count("lbec", 4)
    with pytest.raises(InputError):
        list(enumerate_structures("monoid", 1))


def test_small_cases():
    assert enum("local-meet-semilattice", 1) == (PartialTable(((0,),)),)
    assert set(enum("semigroupoid", 1)) == {PartialTable(((None,),)), PartialTable(((0,),))}
    for cls in CLASSES:
        assert len(enum(cls, 0)) == 1


def test_inverse_pairs_include_group_and_chain():
    forms = {canonicalize(s) for s in enum("inverse", 2)}
    assert canonicalize(group_z2()) in forms
    assert canonicalize(chain_semilattice(2)) in forms


@pytest.mark.parametrize("cls,n", CASES)
def test_emitted_structures_pass_their_checker(cls, n):
    assert all(verify_member(cls, x) for x in enum(cls, n))


def test_class_lattice_inclusions():
    for n in range(4):
        inv = {canonicalize(x) for x in enum("inverse", n)}
        res = {canonicalize(x) for x in enum("restriction", n)}
        ehr = {canonicalize(x) for x in enum("ehresmann", n)}
        assert inv <= res <= ehr


def test_dedup_is_sorted_and_distinct():
    for cls, n in CASES:
        forms = [canonicalize(x) for x in enum(cls, n, True)]
        assert forms == sorted(set(forms))
        assert set(forms) == {canonicalize(x) for x in enum(cls, n)}


def test_canonical_forms():
    one = chain_semilattice(1)
    assert canonicalize(one) == serialize(one, with_labels=False).encode()
    z2 = group_z2()
    swapped = type(z2)(type(z2.base)(z2.base.rows, ("g", "1")), z2.plus, z2.star)
    assert canonicalize(swapped) == canonicalize(z2)
    assert canonicalize(chain_semilattice(2).base) != canonicalize(antichain(2).base)


ALL = [x for cls, n in CASES if n >= 2 for x in enum(cls, n, True)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_canonical_form_is_relabeling_invariant(x, data):
    perm = data.draw(st.permutations(range(x.n)))
    assert canonicalize(permute(x, perm)) == canonicalize(x)
