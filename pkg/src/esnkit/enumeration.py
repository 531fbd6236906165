"""Exhaustive generation of small structures, canonical forms and oracle counts.

``enumerate_structures`` runs the backtracking kernels; ``oracle_count`` is a
separate brute-force filter over the raw search space and is only meant for
tests.  The empty structure belongs to every class.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator

from esnkit import kernels
from esnkit.algebra import (OrderRel, PartialTable, UnaryStructure, check_associativity, check_inverse,
                            check_local_meet_semilattice, check_unary_axioms)
from esnkit.category import (BiorderedCategory, FiniteCategory, check_lbec, check_locally_inductive,
                             check_ordered, meet_from_order)
from esnkit.errors import InputError, InternalInconsistency, SizeError
from esnkit.esn import build_category
from esnkit.fileio import serialize

CLASSES = ("semigroupoid", "ehresmann", "restriction", "inverse", "local-meet-semilattice",
           "lbec", "lic", "lig")
GUARD = {c: 3 for c in CLASSES}
GUARD["local-meet-semilattice"] = 4


def _guard(cls: str, n: int) -> None:
    if cls not in CLASSES:
        raise InputError(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")
    if n < 0 or n > GUARD[cls]:
        raise SizeError(f"class {cls} is enumerated only for 0 <= n <= {GUARD[cls]}")


# -- backtracking ----------------------------------------------------------

def _tables(n, lms=False):
    for flat in kernels.search_tables(n, lms):
        yield flat, PartialTable.from_flat(n, flat)


def _unary(n, restriction):
    for flat, t in _tables(n):
        lefts = kernels.search_unary(flat, n, False, restriction)
        if not lefts:
            continue
        rights = kernels.search_unary(flat, n, True, restriction)
        for plus in lefts:
            for star in rights:
                if all(star[plus[x]] == plus[x] and plus[star[x]] == star[x] for x in range(n)):
                    yield UnaryStructure(t, plus, star)


def _inverse(n):
    for flat, t in _tables(n):
        inv = kernels.unique_pseudo_inverses(flat, n)
        if inv is None:
            continue
        rows = t.rows
        yield UnaryStructure(t, tuple(rows[s][inv[s]] for s in range(n)),
                             tuple(rows[inv[s]][s] for s in range(n)))


def _raw(cls: str, n: int) -> Iterator:
    if cls == "semigroupoid":
        return (t for _, t in _tables(n))
    if cls == "local-meet-semilattice":
        return (t for _, t in _tables(n, lms=True))
    if cls == "ehresmann":
        return _unary(n, False)
    if cls == "restriction":
        return _unary(n, True)
    if cls == "inverse":
        return _inverse(n)
    source = {"lbec": "ehresmann", "lic": "restriction", "lig": "inverse"}[cls]
    return (build_category(s) for s in _raw(source, n))


def verify_member(cls: str, x) -> bool:
    """Full (non-kernel) class check used on every emitted structure."""
    if cls == "semigroupoid":
        return check_associativity(x).verdict
    if cls == "local-meet-semilattice":
        return check_local_meet_semilattice(x)[0].verdict
    if cls == "ehresmann":
        return check_unary_axioms(x, "two-sided-ehresmann").verdict
    if cls == "restriction":
        return check_unary_axioms(x, "two-sided-restriction").verdict
    if cls == "inverse":
        rep, _, induced = check_inverse(x.base)
        return rep.verdict and induced == x
    if cls == "lbec":
        return check_lbec(x).verdict
    if x.leq_l != x.leq_r:
        return False
    want = "category" if cls == "lic" else "groupoid"
    return check_locally_inductive(x.cat, x.leq_l, want).verdict


def enumerate_structures(cls: str, n: int, dedup: bool = False) -> Iterator:
    """All structures of ``cls`` on ids ``0..n-1``.

    Without ``dedup`` the order is the search order (cells row-major,
    undefined before each value).  With ``dedup`` one representative per
    isomorphism class is kept and the output is sorted by canonical form.
    """
    _guard(cls, n)

    def checked():
        for x in _raw(cls, n):
            if not verify_member(cls, x):
                raise InternalInconsistency(f"generated {cls} structure fails its check:\n{serialize(x)}")
            yield x

    if not dedup:
        yield from checked()
        return
    seen = {}
    for x in checked():
        seen.setdefault(canonicalize(x), x)
    for key in sorted(seen):
        yield seen[key]


def count(cls: str, n: int, dedup: bool = False) -> int:
    return sum(1 for _ in enumerate_structures(cls, n, dedup))


# -- canonical forms -------------------------------------------------------

def permute(x, perm):
    """Relabel ``x`` so that old id ``i`` becomes ``perm[i]``; labels are dropped."""
    n = len(perm)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i

    def table(t: PartialTable) -> PartialTable:
        return PartialTable(tuple(
            tuple(None if t(inv[a], inv[b]) is None else perm[t(inv[a], inv[b])] for b in range(n))
            for a in range(n)))

    def unary(u):
        return tuple(perm[u[inv[a]]] for a in range(n))

    def order(o: OrderRel) -> OrderRel:
        return OrderRel.from_matrix([[o.leq(inv[a], inv[b]) for b in range(n)] for a in range(n)])

    if isinstance(x, PartialTable):
        return table(x)
    if isinstance(x, UnaryStructure):
        return UnaryStructure(table(x.base), unary(x.plus), None if x.star is None else unary(x.star))
    cat = x.cat if isinstance(x, BiorderedCategory) else x
    c = FiniteCategory(frozenset(perm[e] for e in cat.objects), unary(cat.dom), unary(cat.ran), table(cat.comp))
    if isinstance(x, BiorderedCategory):
        return BiorderedCategory(c, order(x.leq_l), order(x.leq_r))
    return c


def canonicalize(x) -> bytes:
    """Least serialization over all relabelings."""
    return min(serialize(permute(x, p), with_labels=False).encode() for p in permutations(range(x.n)))


# -- oracle ----------------------------------------------------------------

def _all_tables(n):
    for flat in product(range(-1, n), repeat=n * n):
        yield tuple(tuple(None if v < 0 else v for v in flat[i * n:(i + 1) * n]) for i in range(n))


def _naive_assoc(rows, n) -> bool:
    for s in range(n):
        for t in range(n):
            for r in range(n):
                st, tr = rows[s][t], rows[t][r]
                a = rows[st][r] if st is not None else None
                b = rows[s][tr] if tr is not None else None
                if (st is not None and tr is not None) or (st is not None and a is not None) \
                        or (tr is not None and b is not None):
                    if st is None or tr is None or a is None or a != b:
                        return False
    return True


def _semigroupoid_tables(n):
    for rows in _all_tables(n):
        if _naive_assoc(rows, n):
            yield PartialTable(rows)


def _lms_by_table(n) -> int:
    total = 0
    for t in _semigroupoid_tables(n):
        r = t.rows
        if all(r[e][e] == e for e in range(n)) and all(r[a][b] == r[b][a] for a in range(n) for b in range(n)):
            total += 1
    return total


def partial_orders(n: int) -> list[OrderRel]:
    """Every partial order on ``range(n)``, by filtering all reflexive relations."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for bits in range(1 << len(off)):
        o = OrderRel.from_pairs(n, [off[k] for k in range(len(off)) if bits >> k & 1])
        if o.check_partial_order().verdict:
            out.append(o)
    return out


def _lms_by_order(n) -> int:
    """Local meet-semilattices as partial orders whose components are meet-semilattices."""
    return sum(1 for o in partial_orders(n) if meet_from_order(range(n), o)[1] is not None)


def _unary_count(n, restriction) -> int:
    left_kind = "left-restriction" if restriction else "left-ehresmann"
    right_kind = "right-restriction" if restriction else "right-ehresmann"
    maps = list(product(range(n), repeat=n))
    total = 0
    for t in _semigroupoid_tables(n):
        lefts = [p for p in maps if check_unary_axioms(UnaryStructure(t, p), left_kind).verdict]
        if not lefts:
            continue
        rights = [q for q in maps if check_unary_axioms(UnaryStructure(t, q, q), right_kind).verdict]
        total += sum(1 for p in lefts for q in rights
                     if all(q[p[x]] == p[x] and p[q[x]] == q[x] for x in range(n)))
    return total


def _naive_is_category(objs, dom, ran, rows, n) -> bool:
    for x in range(n):
        for y in range(n):
            if (rows[x][y] is not None) != (dom[x] == ran[y]):
                return False
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            if xy is None:
                continue
            if dom[xy] != dom[y] or ran[xy] != ran[x]:
                return False
            for z in range(n):
                if dom[y] == ran[z] and rows[xy][z] != rows[x][rows[y][z]]:
                    return False
    for x in range(n):
        if rows[x][dom[x]] != x or rows[ran[x]][x] != x:
            return False
    return True


def raw_categories(n: int) -> Iterator[FiniteCategory]:
    """All categories on ``n`` labelled arrows, filtered from raw data."""
    for k in range(n + 1):
        for objs in (set(c) for c in combinations(range(n), k)):
            if n and not objs:
                continue
            ol = sorted(objs)
            for dom in product(ol, repeat=n):
                if any(dom[e] != e for e in ol):
                    continue
                for ran in product(ol, repeat=n):
                    if any(ran[e] != e for e in ol):
                        continue
                    pairs = [(x, y) for x in range(n) for y in range(n) if dom[x] == ran[y]]
                    for vals in product(range(n), repeat=len(pairs)):
                        rows = [[None] * n for _ in range(n)]
                        for (x, y), v in zip(pairs, vals):
                            rows[x][y] = v
                        if _naive_is_category(objs, dom, ran, rows, n):
                            yield FiniteCategory(frozenset(objs), dom, ran,
                                                 PartialTable(tuple(map(tuple, rows))))


def _category_count(cls: str, n: int) -> int:
    orders = partial_orders(n)
    total = 0
    for c in raw_categories(n):
        if cls == "lbec":
            lefts = [o for o in orders if check_ordered(c, o, "with-corestrictions").verdict]
            rights = [o for o in orders if check_ordered(c, o, "with-restrictions").verdict]
            total += sum(1 for a in lefts for b in rights if check_lbec(BiorderedCategory(c, a, b)).verdict)
        else:
            want = "category" if cls == "lic" else "groupoid"
            total += sum(1 for o in orders if check_locally_inductive(c, o, want).verdict)
    return total


def oracle_count(cls: str, n: int) -> int:
    """Brute-force count of labelled structures, independent of the search kernels."""
    _guard(cls, n)
    if n == 0:
        return 1
    if cls == "semigroupoid":
        return sum(1 for _ in _semigroupoid_tables(n))
    if cls == "local-meet-semilattice":
        return _lms_by_table(n) if n <= 3 else _lms_by_order(n)
    if cls == "ehresmann":
        return _unary_count(n, False)
    if cls == "restriction":
        return _unary_count(n, True)
    if cls == "inverse":
        return sum(1 for t in _semigroupoid_tables(n) if check_inverse(t)[0].verdict)
    return _category_count(cls, n)
