from functools import lru_cache

import pytest

from esnkit.algebra import chain_semilattice, check_inverse, gen_relation_semigroup, group_z2
from esnkit.errors import InputError, SizeError
from esnkit.esn import build_category
from esnkit.morphisms import (CarrierMap, all_maps, check_cat_functor, check_sgpd_map, compose_maps,
                              identity_map, is_order_preserving, preserves_products, verify_correspondence)

from _data import enum, enum_upto

CHAIN2 = chain_semilattice(2)
POINT = chain_semilattice(1)


@lru_cache(maxsize=None)
def sweep():
    """All maps with at most 27 sends between restriction representatives of size <= 3."""
    reps = enum_upto("restriction", dedup=True)
    return [m for s in reps for t in reps if t.n ** s.n <= 27 for m in all_maps(s, t)]


def cat_map(m):
    return CarrierMap(build_category(m.src), build_category(m.dst), m.send)


def test_identity_passes_everything():
    for s in enum_upto("restriction", dedup=True):
        m = identity_map(s)
        for kind in ("211", "vee", "wedge"):
            assert check_sgpd_map(m, kind).verdict
        for kind in ("inductive", "ordered", "prefunctor"):
            assert check_cat_functor(cat_map(m), kind).verdict
        assert verify_correspondence(m).data["verdicts"] == dict.fromkeys(
            ("211", "inductive", "vee", "ordered", "wedge", "prefunctor"), True)


def test_collapse_to_a_point():
    m = CarrierMap(CHAIN2, POINT, (0, 0))
    assert check_sgpd_map(m, "211").verdict
    assert check_cat_functor(cat_map(m), "ifunctor").verdict
    v = verify_correspondence(m).data["verdicts"]
    assert v["211"] and v["inductive"]


def test_vee_premorphism_failing_m1_exists():
    found = [m for m in sweep() if check_sgpd_map(m, "vee").verdict
             and "m1" in check_sgpd_map(m, "211").tags()]
    assert found
    m = found[0]
    assert not preserves_products(m)


def test_prefunctor_failing_only_ip5_exists():
    assert any(check_cat_functor(cat_map(m), "iprefunctor").tags() == {"ip5"} for m in sweep())


def test_two_one_one_implies_premorphisms():
    for m in sweep():
        if check_sgpd_map(m, "211").verdict:
            assert check_sgpd_map(m, "vee").verdict
            assert check_sgpd_map(m, "wedge").verdict


def test_inductive_implies_ordered_and_prefunctor():
    for m in sweep():
        c = cat_map(m)
        if check_cat_functor(c, "inductive").verdict:
            assert check_cat_functor(c, "ordered").verdict
            assert check_cat_functor(c, "prefunctor").verdict


def test_vee_maps_preserve_order():
    for m in sweep():
        if check_sgpd_map(m, "vee").verdict:
            assert is_order_preserving(m)


def test_wedge_maps_send_projections_to_projections():
    for m in sweep():
        if check_sgpd_map(m, "wedge").verdict:
            assert is_order_preserving(m)
            targets = set(m.dst.plus)
            assert all(m.send[e] in targets for e in set(m.src.plus))


def test_lax_unary_condition_is_equivalent():
    for m in sweep():
        assert check_sgpd_map(m, "vee").verdict == check_sgpd_map(m, "vee", lax_unary=True).verdict


def test_composition_preserving_maps_on_inverse_inputs():
    reps = enum_upto("inverse", dedup=True)
    checked = 0
    for s in reps:
        for t in reps:
            for m in all_maps(s, t):
                if preserves_products(m):
                    checked += 1
                    assert check_sgpd_map(m, "211").verdict
    assert checked


def test_correspondence_on_sweep():
    for m in sweep():
        assert verify_correspondence(m).verdict


def test_premorphism_kinds_skipped_off_restriction_inputs():
    rep = verify_correspondence(identity_map(gen_relation_semigroup(2)))
    assert rep.verdict and set(rep.data["verdicts"]) == {"211", "inductive"}
    ehr = [s for s in enum("ehresmann", 3) if s not in set(enum("restriction", 3))]
    assert ehr
    for s in ehr:
        assert set(verify_correspondence(identity_map(s)).data["verdicts"]) == {"211", "inductive"}


def test_compositions():
    m = identity_map(CHAIN2)
    assert compose_maps(m, m) == m
    a = CarrierMap(chain_semilattice(3), CHAIN2, (0, 0, 0))
    b = CarrierMap(CHAIN2, POINT, (0, 0))
    ab = compose_maps(a, b)
    assert ab.send == (0, 0, 0) and check_sgpd_map(ab, "211").verdict
    with pytest.raises(InputError):
        compose_maps(b, a)


def test_kind_checks():
    b2 = gen_relation_semigroup(2)
    with pytest.raises(InputError):
        check_sgpd_map(identity_map(b2), "vee")
    with pytest.raises(InputError):
        check_sgpd_map(identity_map(CHAIN2), "join")
    with pytest.raises(InputError):
        CarrierMap(CHAIN2, POINT, (0, 1))
    with pytest.raises(SizeError):
        next(all_maps(b2, b2))


def test_group_automorphism_and_trivial_map():
    z2 = group_z2()
    assert check_inverse(z2.base)[0].verdict
    assert check_sgpd_map(CarrierMap(z2, z2, (0, 1)), "211").verdict
    assert check_sgpd_map(CarrierMap(z2, z2, (0, 0)), "211").verdict
    bad = check_sgpd_map(CarrierMap(z2, z2, (1, 1)), "211")
    assert bad.tags() == {"m1", "m2"}
