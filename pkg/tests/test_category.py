from itertools import product

import pytest

from esnkit.algebra import (OrderRel, PartialTable, antichain, chain_semilattice, gen_relation_semigroup,
                            group_z2)
from esnkit.category import (MODES, BiorderedCategory, FiniteCategory, check_category, check_lbec,
                             check_locally_inductive, check_ordered, check_restriction_corestriction_swap,
                             derive_meet, discrete_biordered, meet_from_order, pseudo_product,
                             pseudo_product_table)
from esnkit.errors import InputError
from esnkit.esn import build_category

from _data import enum_upto

E, F, X = 0, 1, 2
ARROW = FiniteCategory({E, F}, (E, F, F), (E, F, E),
                       PartialTable.from_entries(3, [(E, E, E), (F, F, F), (E, X, X), (X, F, X)]))


def lbecs():
    return [build_category(s) for s in enum_upto("ehresmann")]


# -- categories ------------------------------------------------------------

def test_single_identity():
    assert check_category(FiniteCategory({0}, (0,), (0,), PartialTable(((0,),)))).verdict


def test_arrow_category():
    assert check_category(ARROW).verdict


def test_missing_right_identity_law():
    broken = FiniteCategory({E, F}, ARROW.dom, ARROW.ran,
                            PartialTable.from_entries(3, [(E, E, E), (F, F, F), (E, X, X)]))
    rep = check_category(broken)
    assert (X, F) in rep.witnesses("C3")


def test_dom_must_be_object():
    with pytest.raises(InputError):
        FiniteCategory({E}, (E, F, F), (E, E, E), ARROW.comp)


# -- ordered categories ----------------------------------------------------

@pytest.mark.parametrize("mode", MODES)
def test_discrete_order_passes_every_mode(mode):
    rep = check_ordered(ARROW, OrderRel.discrete(3), mode)
    assert rep.verdict
    if "restriction" in rep.data:
        assert rep.data["restriction"] == {(x, ARROW.dom[x]): x for x in range(3)}


def test_chain_category_restriction():
    c = build_category(chain_semilattice(2))
    rep = check_ordered(c.cat, c.leq_r, "with-both")
    assert rep.verdict and rep.data["restriction"][(1, 0)] == 0


def test_order_failure_reported_before_axioms():
    c = build_category(group_z2())
    rep = check_ordered(c.cat, OrderRel.from_pairs(2, [(0, 1), (1, 0)]), "with-both")
    assert "order-antisymmetric" in rep.tags()
    assert not rep.tags() & {"O1", "O2", "Or", "Oc"}


def test_restrictions_unique_by_exhaustive_search():
    for c in lbecs():
        cat = c.cat
        for x in range(c.n):
            for e in cat.objects:
                if c.leq_r.leq(e, cat.dom[x]):
                    cands = [z for z in range(c.n) if c.leq_r.leq(z, x) and cat.dom[z] == e]
                    assert cands == [c.restrictions[(x, e)]]
                if c.leq_l.leq(e, cat.ran[x]):
                    cands = [z for z in range(c.n) if c.leq_l.leq(z, x) and cat.ran[z] == e]
                    assert cands == [c.corestrictions[(e, x)]]


def test_restriction_lemma():
    for c in lbecs():
        o, dom, res = c.leq_r, c.cat.dom, c.restrictions
        objs = sorted(c.cat.objects)
        for x in range(c.n):
            for e, f in product(objs, repeat=2):
                if o.leq(f, e) and o.leq(e, dom[x]):
                    xe, xf = res[(x, e)], res[(x, f)]
                    assert res[(xe, f)] == xf
                    assert o.leq(xf, xe) and o.leq(xe, x)


# -- meets on objects ------------------------------------------------------

def test_incomparable_objects_meet_only_themselves():
    _, meet = meet_from_order([0, 1], OrderRel.discrete(2))
    assert meet.as_dict() == {(0, 0): 0, (1, 1): 1, (0, 1): None, (1, 0): None}


def test_chain_objects_meet():
    _, meet = meet_from_order([0, 1], OrderRel.from_pairs(2, [(0, 1)]))
    assert meet.meet(0, 1) == 0 == meet.meet(1, 0)


def test_relation_category_meet_is_intersection():
    c = build_category(gen_relation_semigroup(2))
    m = derive_meet(c)
    diag = sorted(c.cat.objects)
    assert diag == [0, 1, 8, 9]
    for e, f in product(diag, repeat=2):
        assert m.meet(e, f) == e & f


def test_missing_meet_is_ec3():
    # two minimal elements below a common top
    rep, meet = meet_from_order([0, 1, 2], OrderRel.from_pairs(3, [(0, 2), (1, 2)]))
    assert meet is None and (0, 1) in rep.witnesses("ec3")


# -- local biordered Ehresmann categories ----------------------------------

def test_discrete_arrow_category_is_lbec():
    assert discrete_biordered(ARROW).is_lbec()


def test_relation_category_is_lbec_with_global_meets():
    rep = check_lbec(build_category(gen_relation_semigroup(2)))
    assert rep.verdict and rep.data["objects_meet_semilattice"]


def test_orders_differing_on_objects_fail_ec4():
    cat = FiniteCategory({0, 1}, (0, 1), (0, 1), antichain(2).base)
    c = BiorderedCategory(cat, OrderRel.from_pairs(2, [(0, 1)]), OrderRel.discrete(2))
    rep = check_lbec(c)
    assert "ec4" in rep.tags()
    assert any("conditional on ec4" in note for note in rep.notes)


def test_non_category_reported_with_prefix():
    broken = FiniteCategory({E, F}, ARROW.dom, ARROW.ran,
                            PartialTable.from_entries(3, [(E, E, E), (F, F, F), (E, X, X)]))
    rep = check_lbec(discrete_biordered(broken))
    assert "category-C3" in rep.tags()


# -- pseudo-product --------------------------------------------------------

def test_pseudo_product_identities_and_meets():
    for c in lbecs():
        dom, ran = c.cat.dom, c.cat.ran
        m = c.meet_table.meet
        for x in range(c.n):
            assert pseudo_product(c, x, dom[x]) == x
            assert pseudo_product(c, ran[x], x) == x
        for e, f in product(sorted(c.cat.objects), repeat=2):
            assert pseudo_product(c, e, f) == m(e, f) == pseudo_product(c, f, e)


def test_pseudo_product_on_z2():
    c = build_category(group_z2())
    assert pseudo_product(c, 1, 1) == 0


def test_pseudo_product_refuses_non_lbec():
    c = BiorderedCategory(ARROW, OrderRel.from_pairs(3, [(0, 1)]), OrderRel.discrete(3))
    with pytest.raises(InputError):
        pseudo_product(c, 0, 0)


def test_pseudo_product_range_and_domain():
    for c in lbecs():
        t, dom, ran = pseudo_product_table(c), c.cat.dom, c.cat.ran
        for x, y, xy in t.entries():
            assert ran[xy] == ran[t(x, ran[y])]
            assert dom[xy] == dom[t(dom[x], y)]


def test_pseudo_product_definedness_and_associativity():
    for c in lbecs():
        t = pseudo_product_table(c)
        d = t.defined
        for x, y, z in product(range(c.n), repeat=3):
            a = d(x, y) and d(y, z)
            b = d(x, y) and d(t(x, y), z)
            cc = d(y, z) and d(x, t(y, z))
            assert a == b == cc
            if a:
                assert t(t(x, y), z) == t(x, t(y, z))


# -- locally inductive -----------------------------------------------------

def test_restriction_categories_are_locally_inductive():
    for s in enum_upto("restriction"):
        c = build_category(s)
        assert c.leq_l == c.leq_r
        assert check_locally_inductive(c.cat, c.leq_l, "category").verdict


def test_z2_is_locally_inductive_groupoid():
    c = build_category(group_z2())
    rep = check_locally_inductive(c.cat, c.leq_l, "groupoid")
    assert rep.verdict and rep.data["inverse"] == [0, 1]


def test_arrow_is_lic_not_groupoid():
    o = OrderRel.discrete(3)
    assert check_locally_inductive(ARROW, o, "category").verdict
    rep = check_locally_inductive(ARROW, o, "groupoid")
    assert rep.witnesses("groupoid") == [(X,)]


def test_restriction_corestriction_swap():
    assert check_restriction_corestriction_swap(ARROW, OrderRel.discrete(3)).verdict
    for s in enum_upto("restriction"):
        c = build_category(s)
        assert check_restriction_corestriction_swap(c.cat, c.leq_l).verdict


def test_swap_needs_lic():
    c = build_category(gen_relation_semigroup(1))
    bad = OrderRel.from_pairs(2, [(1, 0), (0, 1)])
    with pytest.raises(InputError):
        check_restriction_corestriction_swap(c.cat, bad)
