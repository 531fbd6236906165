"""Finite categories with one or two partial orders.

Composition ``comp(x, y)`` is ``x o y``, defined exactly when D(x) = R(y).
Restrictions ``x|e`` are taken in the right order and corestrictions ``e|x``
in the left order, as in a biordered category.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from esnkit.algebra import (ComponentPartition, OrderRel, PartialTable, UnaryStructure,
                            check_local_meet_semilattice, meet_table_from_order)
from esnkit.errors import AxiomFailure, InputError, TheoremViolation
from esnkit.report import Report

MODES = ("plain", "with-restrictions", "with-corestrictions", "with-both")


@dataclass(frozen=True)
class FiniteCategory:
    objects: frozenset
    dom: tuple
    ran: tuple
    comp: PartialTable

    def __post_init__(self):
        n = self.comp.n
        object.__setattr__(self, "objects", frozenset(self.objects))
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "ran", tuple(self.ran))
        if any(not 0 <= e < n for e in self.objects):
            raise InputError("object id out of range")
        for name in ("dom", "ran"):
            m = getattr(self, name)
            if len(m) != n:
                raise InputError(f"{name} must give a value for each of the {n} arrows")
            for x, v in enumerate(m):
                if v not in self.objects:
                    raise InputError(f"{name}({x}) = {v} is not an object")

    @property
    def n(self) -> int:
        return self.comp.n


@dataclass(frozen=True)
class MeetTable:
    """The meet of a local meet-semilattice of objects, in global ids."""

    objects: tuple
    table: PartialTable

    def meet(self, e: int, f: int) -> Optional[int]:
        pos = {x: i for i, x in enumerate(self.objects)}
        v = self.table(pos[e], pos[f])
        return None if v is None else self.objects[v]

    def as_dict(self) -> dict:
        return {(e, f): self.meet(e, f) for e in self.objects for f in self.objects}


@dataclass(frozen=True)
class BiorderedCategory:
    cat: FiniteCategory
    leq_l: OrderRel
    leq_r: OrderRel

    def __post_init__(self):
        for o in (self.leq_l, self.leq_r):
            if o.n != self.cat.n:
                raise InputError("order size differs from the number of arrows")

    @property
    def n(self) -> int:
        return self.cat.n

    @cached_property
    def lbec_report(self) -> Report:
        return check_lbec(self)

    def is_lbec(self) -> bool:
        return self.lbec_report.verdict

    @property
    def restrictions(self) -> dict:
        return self.lbec_report.data["restriction"]

    @property
    def corestrictions(self) -> dict:
        return self.lbec_report.data["corestriction"]

    @property
    def meet_table(self) -> "MeetTable":
        return self.lbec_report.data["_meet"]


# -- categories ------------------------------------------------------------

def check_category(c: FiniteCategory) -> Report:
    rep = Report("category")
    n, comp, dom, ran = c.n, c.comp, c.dom, c.ran
    for x in range(n):
        for y in range(n):
            if comp.defined(x, y) != (dom[x] == ran[y]):
                rep.add("comp-domain", x, y)
    for x, y, z in comp.entries():
        if dom[z] != dom[y] or ran[z] != ran[x]:
            rep.add("C1", x, y)
    for x, y, xy in comp.entries():
        for w in range(n):
            yw = comp(y, w)
            if dom[y] != ran[w]:
                continue
            a = comp(xy, w)
            b = comp(x, yw) if yw is not None else None
            if a is None or b is None or a != b:
                rep.add("C2", x, y, w)
    for e in sorted(c.objects):
        if dom[e] != e or ran[e] != e:
            rep.add("C3", e)
    for x in range(n):
        if comp(x, dom[x]) != x:
            rep.add("C3", x, dom[x])
        if comp(ran[x], x) != x:
            rep.add("C3", ran[x], x)
    return rep


def category_as_semigroupoid(c: FiniteCategory) -> UnaryStructure:
    """The category as an Ehresmann semigroupoid with x+ = R(x) and x* = D(x)."""
    return UnaryStructure(c.comp, c.ran, c.dom)


# -- ordered categories ----------------------------------------------------

def check_ordered(c: FiniteCategory, o: OrderRel, mode: str = "plain") -> Report:
    """O1, O2 and, by mode, existence and uniqueness of (co)restrictions.

    On success the lookup tables are in ``data["restriction"]`` (keyed by
    ``(x, e)``) and ``data["corestriction"]`` (keyed by ``(e, x)``).
    """
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}")
    rep = Report(f"ordered category ({mode})")
    if o.n != c.n:
        raise InputError("order size differs from the number of arrows")
    po = o.check_partial_order()
    if not po.verdict:
        rep.merge(po, prefix="order-")
        return rep
    n, comp, dom, ran = c.n, c.comp, c.dom, c.ran
    below = o.pairs()
    for x, y in below:
        if not o.leq(dom[x], dom[y]) or not o.leq(ran[x], ran[y]):
            rep.add("O1", x, y)
    for x, y in below:
        for x2, y2 in below:
            a, b = comp(x, x2), comp(y, y2)
            if a is not None and b is not None and not o.leq(a, b):
                rep.add("O2", x, y, x2, y2)
    objs = sorted(c.objects)
    if mode in ("with-restrictions", "with-both"):
        table = {}
        for x in range(n):
            for e in objs:
                if not o.leq(e, dom[x]):
                    continue
                cands = [z for z in o.down(x) if dom[z] == e]
                if len(cands) == 1:
                    table[(x, e)] = cands[0]
                else:
                    rep.add("Or", x, e, frozenset(cands))
        rep.data["restriction"] = table
        if rep.verdict:
            for x in range(n):
                for y in range(n):
                    rhs = o.leq(dom[x], dom[y]) and table.get((y, dom[x])) == x
                    if o.leq(x, y) != rhs:
                        rep.add("oc-order", x, y)
    if mode in ("with-corestrictions", "with-both"):
        table = {}
        for x in range(n):
            for e in objs:
                if not o.leq(e, ran[x]):
                    continue
                cands = [z for z in o.down(x) if ran[z] == e]
                if len(cands) == 1:
                    table[(e, x)] = cands[0]
                else:
                    rep.add("Oc", e, x, frozenset(cands))
        rep.data["corestriction"] = table
        if rep.verdict:
            for x in range(n):
                for y in range(n):
                    rhs = o.leq(ran[x], ran[y]) and table.get((ran[x], y)) == x
                    if o.leq(x, y) != rhs:
                        rep.add("oc-order", x, y)
    return rep


# -- meets on objects ------------------------------------------------------

def _components(order: OrderRel, ids) -> list[list[int]]:
    ids = list(ids)
    left = set(ids)
    out = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            a = stack.pop()
            for b in ids:
                if b not in comp and (order.leq(a, b) or order.leq(b, a)):
                    comp.add(b)
                    stack.append(b)
        left -= comp
        out.append(sorted(comp))
    return out


def meet_from_order(objects, order: OrderRel):
    """``(report, MeetTable | None)`` for the order restricted to ``objects``.

    Two objects meet iff they lie in one comparability component, and then the
    meet is their greatest lower bound.
    """
    rep = Report("meet of objects")
    objs = tuple(sorted(objects))
    sub = order.restrict(objs)
    blocks = _components(sub, range(len(objs)))
    for b in blocks:
        for i in b:
            for j in b:
                lower = [k for k in b if sub.leq(k, i) and sub.leq(k, j)]
                top = [k for k in lower if all(sub.leq(m, k) for m in lower)]
                if len(top) != 1:
                    rep.add("ec3", objs[i], objs[j])
    if not rep.verdict:
        return rep, None
    table = meet_table_from_order(sub, ComponentPartition(tuple(frozenset(b) for b in blocks)))
    lms, _ = check_local_meet_semilattice(table)
    if not lms.verdict:
        rep.merge(lms, prefix="ec3-")
        return rep, None
    return rep, MeetTable(objs, table)


def derive_meet(c: BiorderedCategory) -> MeetTable:
    objs = sorted(c.cat.objects)
    if c.leq_l.on(objs) != c.leq_r.on(objs):
        raise InputError("the two orders differ on objects; no common meet")
    rep, meet = meet_from_order(objs, c.leq_l)
    if meet is None:
        raise AxiomFailure(rep)
    return meet


# -- local biordered Ehresmann categories ----------------------------------

def check_lbec(c: BiorderedCategory) -> Report:
    """ec1 to ec7, each reported separately.

    ec3 uses the left order on objects; if ec4 fails the later axioms are
    still evaluated and a note says they are conditional on ec4.
    """
    rep = Report("local biordered Ehresmann category")
    cat = c.cat
    base = check_category(cat)
    if not base.verdict:
        rep.merge(base, prefix="category-")
        return rep
    n, comp, dom, ran = cat.n, cat.comp, cat.dom, cat.ran
    objs = sorted(cat.objects)
    ol = check_ordered(cat, c.leq_l, "with-corestrictions")
    orr = check_ordered(cat, c.leq_r, "with-restrictions")
    rep.merge(ol, prefix="ec1:")
    rep.merge(orr, prefix="ec2:")
    cores = ol.data.get("corestriction", {})
    res = orr.data.get("restriction", {})
    rep.data["restriction"] = res
    rep.data["corestriction"] = cores
    mrep, meet = meet_from_order(objs, c.leq_l)
    rep.merge(mrep)
    rep.data["_meet"] = meet
    ec4 = c.leq_l.on(objs) == c.leq_r.on(objs)
    if not ec4:
        for e in objs:
            for f in objs:
                if c.leq_l.leq(e, f) != c.leq_r.leq(e, f):
                    rep.add("ec4", e, f)
        rep.notes.append("ec5-ec7 conditional on ec4")
    lr = c.leq_l.compose(c.leq_r)
    rl = c.leq_r.compose(c.leq_l)
    for x in range(n):
        diff = lr.rows[x] ^ rl.rows[x]
        for y in range(n):
            if diff >> y & 1:
                rep.add("ec5", x, y)
    if meet is None:
        rep.notes.append("ec6/ec7 not evaluated: objects have no meet")
    else:
        m = meet.meet
        for x, y in c.leq_l.pairs():
            for e in objs:
                a = m(dom[x], e)
                if a is None:
                    continue
                b = m(dom[y], e)
                p = res.get((x, a))
                q = res.get((y, b)) if b is not None else None
                if p is None or q is None:
                    rep.add("ec6-welldef", x, y, e)
                elif not c.leq_l.leq(p, q):
                    rep.add("ec6", x, y, e)
        for x, y in c.leq_r.pairs():
            for e in objs:
                a = m(e, ran[x])
                if a is None:
                    continue
                b = m(e, ran[y])
                p = cores.get((a, x))
                q = cores.get((b, y)) if b is not None else None
                if p is None or q is None:
                    rep.add("ec7-welldef", x, y, e)
                elif not c.leq_r.leq(p, q):
                    rep.add("ec7", x, y, e)
        rep.data["objects_meet_semilattice"] = all(
            m(e, f) is not None for e in objs for f in objs)
    return rep


def pseudo_product(c: BiorderedCategory, x: int, y: int) -> Optional[int]:
    """x (x) y = (x|e) o (e|y) with e = D(x) ^ R(y); None when the meet is undefined."""
    if not c.is_lbec():
        raise InputError("pseudo-product is only defined on local biordered Ehresmann categories")
    cat = c.cat
    e = c.meet_table.meet(cat.dom[x], cat.ran[y])
    if e is None:
        return None
    return cat.comp(c.restrictions[(x, e)], c.corestrictions[(e, y)])


def pseudo_product_table(c: BiorderedCategory) -> PartialTable:
    n = c.n
    return PartialTable(tuple(tuple(pseudo_product(c, x, y) for y in range(n)) for x in range(n)),
                        c.cat.comp.labels)


# -- locally inductive categories and groupoids ----------------------------

def groupoid_inverses(c: FiniteCategory):
    """``(inverse map or None, list of arrows without a unique inverse)``."""
    inv, bad = [], []
    for x in range(c.n):
        cands = [y for y in range(c.n)
                 if c.comp(x, y) == c.ran[x] and c.comp(y, x) == c.dom[x]]
        if len(cands) == 1:
            inv.append(cands[0])
        else:
            bad.append(x)
            inv.append(None)
    return (None if bad else tuple(inv)), bad


def check_locally_inductive(c: FiniteCategory, o: OrderRel, want: str = "category") -> Report:
    """Locally inductive category (ic1, ic2) or groupoid (ig1 to ig5).

    The category verdict is cross-checked against the biordered check with
    both orders equal, and for groupoids the known implications between the
    two notions are asserted.
    """
    if want not in ("category", "groupoid"):
        raise InputError("want must be 'category' or 'groupoid'")
    base = check_category(c)
    if not base.verdict:
        rep = Report(f"locally inductive {want}")
        rep.merge(base, prefix="category-")
        return rep
    ordered = check_ordered(c, o, "with-both")
    lic = Report("locally inductive category")
    lic.merge(ordered, prefix="ic1:")
    if o.check_partial_order().verdict:
        mrep, _ = meet_from_order(c.objects, o)
        for tag, w in mrep.violations:
            lic.add("ic2", *w)
    lic.data.update(ordered.data)
    lbec = check_lbec(BiorderedCategory(c, o, o))
    if lbec.verdict != lic.verdict:
        raise TheoremViolation(
            f"locally inductive check ({lic.summary()}) disagrees with biordered check ({lbec.summary()})")
    if want == "category":
        return lic
    rep = Report("locally inductive groupoid")
    inv, bad = groupoid_inverses(c)
    for x in bad:
        rep.add("groupoid", x)
    po = o.check_partial_order()
    if not po.verdict:
        rep.merge(po, prefix="order-")
    else:
        if inv is not None:
            for x, y in o.pairs():
                if not o.leq(inv[x], inv[y]):
                    rep.add("ig1", x, y)
        renamed = {"O2": "ig2", "Or": "ig3", "Oc": "ig4"}
        for tag, w in ordered.violations:
            if tag in renamed:
                rep.add(renamed[tag], *w)
        for tag, w in lic.violations:
            if tag == "ic2":
                rep.add("ig5", *w)
    if inv is not None:
        rep.data["inverse"] = list(inv)
    if rep.verdict and not lic.verdict:
        raise TheoremViolation("locally inductive groupoid that is not a locally inductive category")
    if lic.verdict and inv is not None and "ig1" in rep.tags():
        raise TheoremViolation("locally inductive category and groupoid, but inversion is not monotone")
    rep.data.update(ordered.data)
    return rep


def check_restriction_corestriction_swap(c: FiniteCategory, o: OrderRel) -> Report:
    """x|e = R(x|e)|x and e|x = x|D(e|x) for all admissible (x, e)."""
    lic = check_locally_inductive(c, o, "category")
    if not lic.verdict:
        raise InputError(f"not a locally inductive category: {lic.summary()}")
    res, cores = lic.data["restriction"], lic.data["corestriction"]
    rep = Report("restriction/corestriction swap")
    for (x, e), z in res.items():
        if cores.get((c.ran[z], x)) != z:
            rep.add("swap-restriction", x, e)
    for (e, x), z in cores.items():
        if res.get((x, c.dom[z])) != z:
            rep.add("swap-corestriction", e, x)
    return rep


def discrete_biordered(c: FiniteCategory) -> BiorderedCategory:
    d = OrderRel.discrete(c.n)
    return BiorderedCategory(c, d, d)

