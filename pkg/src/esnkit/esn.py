"""The constructions S -> C(S) and C -> S(C), round trips and classification."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterator, Optional, Union

from esnkit.algebra import (PartialTable, UnaryStructure, check_inverse, derive_order, passes)
from esnkit.category import (BiorderedCategory, FiniteCategory, check_category,
                             check_locally_inductive, groupoid_inverses, pseudo_product_table)
from esnkit.errors import InputError, TheoremViolation
from esnkit.report import Report


# Equality of tables ignores labels, so the caches key on them explicitly.

def build_category(s: UnaryStructure) -> BiorderedCategory:
    """C(S): objects U, D(s) = s*, R(s) = s+, s o t = st when s* = t+."""
    return _build_category(s, s.base.labels)


@lru_cache(maxsize=4096)
def _build_category(s: UnaryStructure, labels) -> BiorderedCategory:
    if s.star is None or not passes(s, "two-sided-ehresmann"):
        raise InputError("C(S) needs a two-sided Ehresmann semigroupoid")
    rows, plus, star, n = s.base.rows, s.plus, s.star, s.n
    comp = PartialTable(tuple(
        tuple(rows[a][b] if star[a] == plus[b] else None for b in range(n)) for a in range(n)),
        s.base.labels)
    cat = FiniteCategory(frozenset(plus), star, plus, comp)
    return BiorderedCategory(cat, derive_order(s, "left"), derive_order(s, "right"))


def build_semigroupoid(c: BiorderedCategory) -> UnaryStructure:
    """S(C): the pseudo-product with x+ = R(x) and x* = D(x)."""
    return _build_semigroupoid(c, c.cat.comp.labels)


@lru_cache(maxsize=4096)
def _build_semigroupoid(c: BiorderedCategory, labels) -> UnaryStructure:
    if not c.is_lbec():
        raise InputError(f"S(C) needs a local biordered Ehresmann category: {c.lbec_report.summary()}")
    return UnaryStructure(pseudo_product_table(c), c.cat.ran, c.cat.dom)


def _diff_tables(rep, tag, a: PartialTable, b: PartialTable):
    for i in range(a.n):
        for j in range(a.n):
            if a(i, j) != b(i, j):
                rep.add(tag, i, j)


def _diff_maps(rep, tag, a, b):
    for i, (u, v) in enumerate(zip(a, b)):
        if u != v:
            rep.add(tag, i)


def _compare_categories(rep, c: BiorderedCategory, d: BiorderedCategory):
    if c.cat.objects != d.cat.objects:
        rep.add("roundtrip-objects", frozenset(c.cat.objects ^ d.cat.objects))
    _diff_maps(rep, "roundtrip-dom", c.cat.dom, d.cat.dom)
    _diff_maps(rep, "roundtrip-ran", c.cat.ran, d.cat.ran)
    _diff_tables(rep, "roundtrip-comp", c.cat.comp, d.cat.comp)
    _diff_maps(rep, "roundtrip-leq_l", c.leq_l.rows, d.leq_l.rows)
    _diff_maps(rep, "roundtrip-leq_r", c.leq_r.rows, d.leq_r.rows)


def roundtrip_verify(x: Union[UnaryStructure, BiorderedCategory]) -> Report:
    """Entrywise comparison of S(C(S)) with S and C(S(C)) with C."""
    rep = Report("round trip")
    if isinstance(x, UnaryStructure):
        c = build_category(x)
        back = build_semigroupoid(c)
        _diff_tables(rep, "roundtrip-table", x.base, back.base)
        _diff_maps(rep, "roundtrip-plus", x.plus, back.plus)
        _diff_maps(rep, "roundtrip-star", x.star, back.star)
        if rep.verdict:
            _compare_categories(rep, c, build_category(back))
    elif isinstance(x, BiorderedCategory):
        s = build_semigroupoid(x)
        _compare_categories(rep, x, build_category(s))
    else:
        raise InputError(f"cannot round-trip a {type(x).__name__}")
    return rep


# -- category structures ---------------------------------------------------

def local_identities(t: PartialTable) -> list[int]:
    """Idempotents that act as identities on every side where they are defined."""
    out = []
    for e in range(t.n):
        if t(e, e) != e:
            continue
        if all(t(x, e) in (None, x) and t(e, x) in (None, x) for x in range(t.n)):
            out.append(e)
    return out


def find_category_structures(t: PartialTable) -> Iterator[FiniteCategory]:
    """Category structures on the semigroupoid ``t`` with the same product.

    Object sets are tried in increasing bitmask order over the local
    identities; D(x) and R(x) are the unique objects with xe and ex defined.
    """
    cands = local_identities(t)
    n = t.n
    for mask in range(1 << len(cands)):
        objs = [cands[i] for i in range(len(cands)) if mask >> i & 1]
        dom, ran = [], []
        ok = True
        for x in range(n):
            d = [e for e in objs if t(x, e) is not None]
            r = [e for e in objs if t(e, x) is not None]
            if len(d) != 1 or len(r) != 1:
                ok = False
                break
            dom.append(d[0])
            ran.append(r[0])
        if not ok:
            continue
        c = FiniteCategory(frozenset(objs), tuple(dom), tuple(ran), t)
        if check_category(c).verdict:
            yield c


def first_category_structure(t: PartialTable) -> Optional[FiniteCategory]:
    return next(find_category_structures(t), None)


def extend_category_structure(s: UnaryStructure) -> Optional[FiniteCategory]:
    """Lift a category structure on the projections to the whole semigroupoid.

    D(s) = d(s*) and R(s) = r(s+) for the first structure (d, r) found on U.
    """
    if s.star is None or not passes(s, "two-sided-ehresmann"):
        raise InputError("needs a two-sided Ehresmann semigroupoid")
    u = sorted(set(s.plus))
    sub = s.base.restrict(u)
    found = first_category_structure(sub)
    if found is None:
        return None
    d = [u[found.dom[i]] for i in range(len(u))]
    r = [u[found.ran[i]] for i in range(len(u))]
    pos = {e: i for i, e in enumerate(u)}
    dom = tuple(d[pos[s.star[x]]] for x in range(s.n))
    ran = tuple(r[pos[s.plus[x]]] for x in range(s.n))
    lifted = FiniteCategory(frozenset(u[i] for i in found.objects), dom, ran, s.base)
    rep = check_category(lifted)
    if not rep.verdict:
        raise TheoremViolation(f"lifted category structure fails: {rep.summary()}")
    return lifted


# -- classification --------------------------------------------------------

@dataclass(frozen=True)
class ClassFlags:
    is_semigroupoid: bool
    is_ehresmann: bool
    is_restriction: bool
    is_inverse: bool
    is_semigroup: bool
    admits_category_structure: bool
    projections_meet_semilattice: bool
    projections_locally_complete: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _agree(name: str, **routes):
    vals = set(routes.values())
    if len(vals) != 1:
        raise TheoremViolation(f"{name}: routes disagree {routes}")
    return vals.pop()


def is_induced_inverse(s: UnaryStructure) -> bool:
    """The table is inverse and + and * are s s^-1 and s^-1 s."""
    rep, _, induced = check_inverse(s.base)
    return rep.verdict and induced.plus == s.plus and induced.star == s.star


@lru_cache(maxsize=4096)
def classify(s: UnaryStructure) -> ClassFlags:
    """Class membership, each biconditional computed along independent routes."""
    if s.star is None or not passes(s, "two-sided-ehresmann"):
        raise InputError("classification needs a two-sided Ehresmann semigroupoid")
    c = build_category(s)
    cat = c.cat
    same_order = c.leq_l == c.leq_r

    restriction = _agree(
        "restriction",
        axioms=passes(s, "two-sided-restriction"),
        category=same_order and check_locally_inductive(cat, c.leq_l, "category").verdict,
    )
    inverse = _agree(
        "inverse",
        pseudo_inverses=is_induced_inverse(s),
        groupoid=same_order and check_locally_inductive(cat, c.leq_l, "groupoid").verdict,
        lic_and_groupoid=restriction and groupoid_inverses(cat)[0] is not None,
    )
    u = sorted(set(s.plus))
    sub = s.base.restrict(u)
    meet_sl = sub.is_total()
    semigroup = _agree(
        "semigroup",
        total=s.base.is_total(),
        projections=meet_sl,
        objects=bool(c.lbec_report.data.get("objects_meet_semilattice")),
    )
    locally_complete = first_category_structure(sub) is not None
    category = _agree(
        "category",
        direct=first_category_structure(s.base) is not None,
        projections=locally_complete,
        lifted=extend_category_structure(s) is not None,
    )
    flags = ClassFlags(True, True, restriction, inverse, semigroup, category, meet_sl, locally_complete)
    if flags.is_inverse and not flags.is_restriction:
        raise TheoremViolation("inverse but not restriction")
    return flags
