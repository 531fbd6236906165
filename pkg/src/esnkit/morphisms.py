"""Maps between semigroupoids and between their categories.

Semigroupoid side: (2,1,1)-morphisms, vee-premorphisms, wedge-premorphisms.
Category side: inductive functors, ordered functors, inductive prefunctors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Union

from esnkit.algebra import OrderRel, PartialTable, UnaryStructure, derive_order, passes
from esnkit.category import BiorderedCategory, check_locally_inductive, pseudo_product_table
from esnkit.errors import InputError, SizeError
from esnkit.esn import build_category
from esnkit.report import Report

SGPD_KINDS = ("211", "vee", "wedge")
CAT_KINDS = ("inductive", "ordered", "prefunctor")
KIND_ALIASES = {"two-one-one": "211", "ifunctor": "inductive", "ofunctor": "ordered",
                "iprefunctor": "prefunctor"}
PAIRS = (("211", "inductive"), ("vee", "ordered"), ("wedge", "prefunctor"))
MAX_MAPS = 10 ** 6

Structure = Union[UnaryStructure, BiorderedCategory]


@dataclass(frozen=True)
class CarrierMap:
    src: Structure
    dst: Structure
    send: tuple

    def __post_init__(self):
        send = tuple(self.send)
        object.__setattr__(self, "send", send)
        if len(send) != self.src.n:
            raise InputError(f"map sends {len(send)} ids, source has {self.src.n}")
        for i, v in enumerate(send):
            if not isinstance(v, int) or not 0 <= v < self.dst.n:
                raise InputError(f"send {i} -> {v!r} out of range for target size {self.dst.n}")

    def __call__(self, x: int) -> int:
        return self.send[x]


def _kind(kind: str) -> str:
    return KIND_ALIASES.get(kind, kind)


@lru_cache(maxsize=4096)
def _is_ehresmann(s: UnaryStructure) -> bool:
    return s.star is not None and passes(s, "two-sided-ehresmann")


@lru_cache(maxsize=4096)
def _is_restriction(s: UnaryStructure) -> bool:
    return s.star is not None and passes(s, "two-sided-restriction")


@lru_cache(maxsize=4096)
def _order(s: UnaryStructure) -> OrderRel:
    return derive_order(s, "left")


@lru_cache(maxsize=4096)
def _is_lic(c: BiorderedCategory) -> bool:
    return c.leq_l == c.leq_r and check_locally_inductive(c.cat, c.leq_l, "category").verdict


@lru_cache(maxsize=4096)
def _otimes(c: BiorderedCategory) -> PartialTable:
    return pseudo_product_table(c)


# -- semigroupoid side -----------------------------------------------------

def check_sgpd_map(m: CarrierMap, kind: str, lax_unary: bool = False) -> Report:
    """Membership of ``m`` in a semigroupoid morphism class.

    ``lax_unary`` replaces the equalities of vm2 by phi(s+) <= phi(s)+ and
    phi(s*) <= phi(s)* (only meaningful for ``vee``).
    """
    kind = _kind(kind)
    if kind not in SGPD_KINDS:
        raise InputError(f"unknown semigroupoid map kind {kind!r}")
    S, T = m.src, m.dst
    if not isinstance(S, UnaryStructure) or not isinstance(T, UnaryStructure):
        raise InputError("semigroupoid maps need semigroupoid source and target")
    if not (_is_ehresmann(S) and _is_ehresmann(T)):
        raise InputError("source and target must be two-sided Ehresmann")
    if kind != "211" and not (_is_restriction(S) and _is_restriction(T)):
        raise InputError(f"{kind} maps are defined between restriction semigroupoids")
    rep = Report(f"{kind} map")
    f = m.send
    st_, tt = S.base, T.base
    if kind == "211":
        for s, t, st in st_.entries():
            if tt(f[s], f[t]) != f[st]:
                rep.add("m1", s, t)
        for s in range(S.n):
            if f[S.plus[s]] != T.plus[f[s]] or f[S.star[s]] != T.star[f[s]]:
                rep.add("m2", s)
        return rep
    leq = _order(T).leq
    if kind == "vee":
        for s, t, st in st_.entries():
            p = tt(f[s], f[t])
            if p is None or not leq(f[st], p):
                rep.add("vm1", s, t)
        for s in range(S.n):
            if lax_unary:
                ok = leq(f[S.plus[s]], T.plus[f[s]]) and leq(f[S.star[s]], T.star[f[s]])
            else:
                ok = f[S.plus[s]] == T.plus[f[s]] and f[S.star[s]] == T.star[f[s]]
            if not ok:
                rep.add("vm2", s)
        return rep
    for s, t, st in st_.entries():
        a = tt(f[s], f[t])
        b = tt(T.plus[f[s]], f[st])
        c = tt(f[st], T.star[f[t]])
        if a is None or b is None or c is None or not a == b == c:
            rep.add("wm1", s, t)
    for s in range(S.n):
        if not (leq(T.plus[f[s]], f[S.plus[s]]) and leq(T.star[f[s]], f[S.star[s]])):
            rep.add("wm2", s)
    return rep


# -- category side ---------------------------------------------------------

def check_cat_functor(m: CarrierMap, kind: str) -> Report:
    kind = _kind(kind)
    if kind not in CAT_KINDS:
        raise InputError(f"unknown functor kind {kind!r}")
    C, D = m.src, m.dst
    if not isinstance(C, BiorderedCategory) or not isinstance(D, BiorderedCategory):
        raise InputError("functors need category source and target")
    if not (C.is_lbec() and D.is_lbec()):
        raise InputError("source and target must be local biordered Ehresmann categories")
    if kind != "inductive" and not (_is_lic(C) and _is_lic(D)):
        raise InputError(f"{kind} functors are defined between locally inductive categories")
    rep = Report(f"{kind} functor")
    f = m.send
    c, d = C.cat, D.cat
    if kind in ("inductive", "ordered"):
        t1, t2 = ("if1", "if2") if kind == "inductive" else ("of1", "of2")
        for x in range(C.n):
            if f[c.dom[x]] != d.dom[f[x]] or f[c.ran[x]] != d.ran[f[x]]:
                rep.add(t1, x)
        for x, y, xy in c.comp.entries():
            if d.comp(f[x], f[y]) != f[xy]:
                rep.add(t2, x, y)
        if kind == "ordered":
            for x, y in C.leq_l.pairs():
                if not D.leq_l.leq(f[x], f[y]):
                    rep.add("of3", x, y)
            return rep
        for x, y in C.leq_l.pairs():
            if not D.leq_l.leq(f[x], f[y]):
                rep.add("if3", x, y)
        for x, y in C.leq_r.pairs():
            if not D.leq_r.leq(f[x], f[y]):
                rep.add("if4", x, y)
        cm, dm = C.meet_table, D.meet_table
        dobj = d.objects
        for e in sorted(c.objects):
            for g in sorted(c.objects):
                a = cm.meet(e, g)
                if a is None:
                    continue
                if f[e] not in dobj or f[g] not in dobj or dm.meet(f[e], f[g]) != f[a]:
                    rep.add("if5", e, g)
        return rep
    return _check_prefunctor(m, rep)


def _check_prefunctor(m: CarrierMap, rep: Report) -> Report:
    C, D = m.src, m.dst
    f = m.send
    c, d = C.cat, D.cat
    leq = D.leq_l.leq
    ox, od = _otimes(C), _otimes(D)
    dm = D.meet_table
    dobj = d.objects

    def meet(e, g):
        if e not in dobj or g not in dobj:
            return None
        return dm.meet(e, g)

    # well-definedness first
    for e in sorted(c.objects):
        if f[e] not in dobj:
            rep.add("ip-welldef", "object", e)
    for x, y, _ in ox.entries():
        if od(f[x], f[y]) is None:
            rep.add("ip-welldef", "product", x, y)
    for x, y, xy in c.comp.entries():
        p = od(f[x], f[y])
        if p is None or not leq(p, f[xy]):
            rep.add("ip1", x, y)
    for x in range(C.n):
        if not (leq(d.dom[f[x]], f[c.dom[x]]) and leq(d.ran[f[x]], f[c.ran[x]])):
            rep.add("ip2", x)
    for x, y in C.leq_l.pairs():
        if not leq(f[x], f[y]):
            rep.add("ip3", x, y)
    for x in range(C.n):
        for e in sorted(c.objects):
            xe = ox(x, e)
            if xe is not None:
                p = od(f[x], f[e])
                if p is None or not leq(p, f[xe]):
                    rep.add("ip4", x, e, "right")
            ex = ox(e, x)
            if ex is not None:
                p = od(f[e], f[x])
                if p is None or not leq(p, f[ex]):
                    rep.add("ip4", e, x, "left")
    for x, y, xy in ox.entries():
        p = od(f[x], f[y])
        if p is None:
            rep.add("ip5", x, y)
            continue
        r = meet(d.ran[f[x]], d.ran[f[xy]])
        dd = meet(d.dom[f[xy]], d.dom[f[y]])
        if r is None or dd is None:
            rep.add("ip-welldef", "ip5", x, y)
            rep.add("ip5", x, y)
        elif d.ran[p] != r or d.dom[p] != dd:
            rep.add("ip5", x, y)
    return rep


# -- the correspondence ----------------------------------------------------

def verify_correspondence(m: CarrierMap) -> Report:
    """Six verdicts for one send map and the three biconditionals between them."""
    S, T = m.src, m.dst
    if not (_is_ehresmann(S) and _is_ehresmann(T)):
        raise InputError("source and target must be two-sided Ehresmann")
    cm = CarrierMap(build_category(S), build_category(T), m.send)
    restriction = _is_restriction(S) and _is_restriction(T)
    rep = Report("morphism correspondence")
    verdicts = {}
    for sk, ck in PAIRS:
        if sk != "211" and not restriction:
            continue
        a = check_sgpd_map(m, sk).verdict
        b = check_cat_functor(cm, ck).verdict
        verdicts[sk] = a
        verdicts[ck] = b
        if a != b:
            rep.add(f"theorem-violation:{sk}-{ck}", sk, a, ck, b)
    rep.data["verdicts"] = verdicts
    return rep


def compose_maps(f: CarrierMap, g: CarrierMap) -> CarrierMap:
    """g after f."""
    if f.dst != g.src:
        raise InputError("target of the first map is not the source of the second")
    return CarrierMap(f.src, g.dst, tuple(g.send[x] for x in f.send))


def identity_map(s: Structure) -> CarrierMap:
    return CarrierMap(s, s, tuple(range(s.n)))


def all_maps(src: Structure, dst: Structure, cap: int = MAX_MAPS) -> Iterator[CarrierMap]:
    total = dst.n ** src.n
    if total > cap:
        raise SizeError(f"{total} maps exceed the cap of {cap}")
    for send in product(range(dst.n), repeat=src.n):
        yield CarrierMap(src, dst, send)


def is_order_preserving(m: CarrierMap) -> bool:
    a, b = _order(m.src), _order(m.dst)
    return all(b.leq(m.send[x], m.send[y]) for x, y in a.pairs())


def preserves_products(m: CarrierMap) -> bool:
    t = m.dst.base
    return all(t(m.send[s], m.send[u]) == m.send[v] for s, u, v in m.src.base.entries())
