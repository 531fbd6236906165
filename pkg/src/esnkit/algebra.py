"""Finite semigroupoids with unary structure, their axiom checks and orders.

Elements are ids ``0..n-1``.  An undefined product is stored as ``None`` in
``PartialTable.rows``; the flat kernel encoding uses -1 instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from esnkit import kernels
from esnkit.errors import InputError, InternalInconsistency, SizeError, TheoremViolation
from esnkit.report import Report

Entry = Optional[int]

LEFT_KINDS = ("left-ehresmann", "left-restriction")
RIGHT_KINDS = ("right-ehresmann", "right-restriction")
TWO_SIDED_KINDS = ("two-sided-ehresmann", "two-sided-restriction")
UNARY_KINDS = LEFT_KINDS + RIGHT_KINDS + TWO_SIDED_KINDS


@dataclass(frozen=True)
class PartialTable:
    """A partially defined binary operation on ``range(n)``."""

    rows: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise InputError(f"row {i} has length {len(r)}, expected {n}")
            for j, v in enumerate(r):
                if v is None:
                    continue
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise InputError(f"entry ({i},{j}) = {v!r} out of range for size {n}")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != n:
                raise InputError(f"{len(labels)} labels for {n} elements")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[tuple[int, int, int]], labels=None) -> "PartialTable":
        rows = [[None] * n for _ in range(n)]
        for i, j, k in entries:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"product ({i},{j}) out of range for size {n}")
            if rows[i][j] is not None and rows[i][j] != k:
                raise InputError(f"product ({i},{j}) given twice with different values")
            rows[i][j] = k
        return cls(tuple(map(tuple, rows)), labels)

    @classmethod
    def from_flat(cls, n: int, flat: Sequence[int], labels=None) -> "PartialTable":
        return cls(tuple(tuple(None if v < 0 else v for v in flat[i * n:(i + 1) * n]) for i in range(n)), labels)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __call__(self, i: int, j: int) -> Entry:
        return self.rows[i][j]

    mul = __call__

    def defined(self, i: int, j: int) -> bool:
        return self.rows[i][j] is not None

    def entries(self):
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if v is not None:
                    yield i, j, v

    @cached_property
    def flat(self) -> tuple:
        return tuple(-1 if v is None else v for r in self.rows for v in r)

    def is_total(self) -> bool:
        return all(v is not None for r in self.rows for v in r)

    def opposite(self) -> "PartialTable":
        n = self.n
        return PartialTable(tuple(tuple(self.rows[j][i] for j in range(n)) for i in range(n)), self.labels)

    def restrict(self, ids: Sequence[int]) -> "PartialTable":
        """Sub-table on ``ids`` (renumbered in the given order); must be closed."""
        pos = {x: k for k, x in enumerate(ids)}
        rows = []
        for a in ids:
            row = []
            for b in ids:
                v = self.rows[a][b]
                if v is not None and v not in pos:
                    raise InputError(f"{a}*{b}={v} leaves the subset")
                row.append(None if v is None else pos[v])
            rows.append(tuple(row))
        return PartialTable(tuple(rows))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)


@dataclass(frozen=True)
class UnaryStructure:
    base: PartialTable
    plus: tuple
    star: Optional[tuple] = None

    def __post_init__(self):
        n = self.base.n
        for name in ("plus", "star"):
            u = getattr(self, name)
            if u is None:
                continue
            u = tuple(u)
            object.__setattr__(self, name, u)
            if len(u) != n or any(not isinstance(v, int) or not 0 <= v < n for v in u):
                raise InputError(f"{name} map must send each of the {n} ids to an id")

    @property
    def n(self) -> int:
        return self.base.n


@dataclass(frozen=True)
class OrderRel:
    """Binary relation on ``range(n)``; ``rows[i]`` has bit j set iff i <= j."""

    n: int
    rows: tuple

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "OrderRel":
        rows = [1 << i for i in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"order pair ({i},{j}) out of range for size {n}")
            rows[i] |= 1 << j
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, mat) -> "OrderRel":
        return cls(len(mat), tuple(sum(1 << j for j, b in enumerate(r) if b) for r in mat))

    @classmethod
    def discrete(cls, n: int) -> "OrderRel":
        return cls(n, tuple(1 << i for i in range(n)))

    def leq(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def up(self, i: int) -> list[int]:
        return [j for j in range(self.n) if self.rows[i] >> j & 1]

    def down(self, j: int) -> list[int]:
        return [i for i in range(self.n) if self.rows[i] >> j & 1]

    def pairs(self):
        return [(i, j) for i in range(self.n) for j in range(self.n) if self.rows[i] >> j & 1]

    def mat(self) -> list[list[bool]]:
        return [[self.leq(i, j) for j in range(self.n)] for i in range(self.n)]

    def compose(self, other: "OrderRel") -> "OrderRel":
        """(x,y) in self o other iff some z has (x,z) in self and (z,y) in other."""
        rows = []
        for i in range(self.n):
            acc = 0
            for z in range(self.n):
                if self.rows[i] >> z & 1:
                    acc |= other.rows[z]
            rows.append(acc)
        return OrderRel(self.n, tuple(rows))

    def restrict(self, ids: Sequence[int]) -> "OrderRel":
        return OrderRel(len(ids), tuple(
            sum(1 << b for b, y in enumerate(ids) if self.leq(x, y)) for x in ids))

    def on(self, ids: Iterable[int]) -> set:
        ids = list(ids)
        return {(x, y) for x in ids for y in ids if self.leq(x, y)}

    def check_partial_order(self) -> Report:
        rep = Report("partial order")
        n = self.n
        for i in range(n):
            if not self.leq(i, i):
                rep.add("reflexive", i)
        for i in range(n):
            for j in range(i + 1, n):
                if self.leq(i, j) and self.leq(j, i):
                    rep.add("antisymmetric", i, j)
        for i in range(n):
            for j in self.up(i):
                missing = self.rows[j] & ~self.rows[i]
                for k in range(n):
                    if missing >> k & 1:
                        rep.add("transitive", i, j, k)
        return rep


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple

    def block_of(self, x: int) -> frozenset:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)


@dataclass(frozen=True)
class InverseData:
    inv: tuple


# -- associativity ---------------------------------------------------------

def check_associativity(t: PartialTable) -> Report:
    """Every triple violating the three-case associativity condition."""
    rep = Report("associativity")
    rows, n = t.rows, t.n
    for s in range(n):
        for u in range(n):
            st = rows[s][u]
            for r in range(n):
                tr = rows[u][r]
                x = rows[st][r] if st is not None else None
                y = rows[s][tr] if tr is not None else None
                if st is not None and tr is not None:
                    tag = "s1"
                elif st is not None and x is not None:
                    tag = "s2"
                elif tr is not None and y is not None:
                    tag = "s3"
                else:
                    continue
                if None in (st, tr, x, y) or x != y:
                    rep.add(tag, s, u, r)
    return rep


def is_semigroupoid(t: PartialTable) -> bool:
    return kernels.assoc_ok(t.flat, t.n)


# -- unary axioms ----------------------------------------------------------

def _left_axioms(rows, u, n, restriction, names, rep):
    ax1, ax2, ax3, ax4 = names
    for s in range(n):
        if rows[u[s]][s] != s:
            rep.add(ax1, s)
    for s in range(n):
        ps = u[s]
        for t in range(n):
            pt = u[t]
            a = rows[ps][pt]
            if a is not None:
                if rows[pt][ps] != a:
                    rep.add(ax2, s, t)
                c = rows[ps][t]
                if c is None or u[c] != a:
                    rep.add(ax3, s, t)
            st = rows[s][t]
            if st is None:
                continue
            d = rows[s][pt]
            if restriction:
                if d is None or d != rows[u[st]][s]:
                    rep.add(ax4, s, t)
            elif d is None or u[st] != u[d]:
                rep.add(ax4, s, t)


def check_unary_axioms(s: UnaryStructure, kind: str) -> Report:
    """Check one of the six axiom systems (associativity is checked as well).

    Right-hand axioms are evaluated on the opposite table, so a right witness
    ``(s, t)`` is reported in the original orientation.
    """
    if kind not in UNARY_KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(UNARY_KINDS)}")
    restriction = kind.endswith("restriction")
    want_left = kind not in RIGHT_KINDS
    want_right = kind not in LEFT_KINDS
    if want_right and s.star is None:
        raise InputError(f"kind {kind} needs a star map")
    rep = Report(kind)
    rep.merge(check_associativity(s.base))
    n = s.n
    if want_left:
        names = ("lr1", "lr2", "lr3", "lr4") if restriction else ("le1", "le2", "le3", "le4")
        _left_axioms(s.base.rows, s.plus, n, restriction, names, rep)
    if want_right:
        names = ("rr1", "rr2", "rr3", "rr4") if restriction else ("re1", "re2", "re3", "re4")
        side = Report("right")
        _left_axioms(s.base.opposite().rows, s.star, n, restriction, names, side)
        for tag, w in side.violations:
            rep.add(tag, *(w if len(w) == 1 else w[::-1]))
    if want_left and want_right:
        for x in range(n):
            if s.star[s.plus[x]] != s.plus[x] or s.plus[s.star[x]] != s.star[x]:
                rep.add("E", x)
    pp = sorted(set(s.plus))
    rep.data["projections_plus"] = pp
    if s.star is not None:
        ps = sorted(set(s.star))
        rep.data["projections_star"] = ps
        rep.data["projections_agree"] = pp == ps
    return rep


def passes(s: UnaryStructure, kind: str) -> bool:
    """Fast boolean form of ``check_unary_axioms`` using the kernels."""
    n, flat = s.n, s.base.flat
    if not kernels.assoc_ok(flat, n):
        return False
    restriction = kind.endswith("restriction")
    if kind not in RIGHT_KINDS and not kernels.unary_ok(flat, s.plus, n, False, restriction):
        return False
    if kind not in LEFT_KINDS:
        if s.star is None:
            raise InputError(f"kind {kind} needs a star map")
        if not kernels.unary_ok(flat, s.star, n, True, restriction):
            return False
    if kind in TWO_SIDED_KINDS:
        return all(s.star[s.plus[x]] == s.plus[x] and s.plus[s.star[x]] == s.star[x] for x in range(n))
    return True


def projections(s: UnaryStructure) -> frozenset:
    """The projection set U = S+ = S* of a two-sided Ehresmann structure."""
    if s.star is None:
        raise InputError("projections of a two-sided structure need a star map")
    if not passes(s, "two-sided-ehresmann"):
        raise InputError("structure is not two-sided Ehresmann")
    return frozenset(s.plus)


# -- natural orders --------------------------------------------------------

def derive_order(s: UnaryStructure, side: str) -> OrderRel:
    """Natural left or right order, checked to be a partial order."""
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', not {side!r}")
    if side == "right" and s.star is None:
        raise InputError("the right order needs a star map")
    if not passes(s, f"{side}-ehresmann"):
        raise InputError(f"structure is not {side} Ehresmann")
    rows, n = s.base.rows, s.n
    if side == "left":
        u = s.plus

        def rel(i, j):
            return rows[u[i]][j] == i

        def exists(i, j):
            return any(rows[e][j] == i for e in set(u))
    else:
        u = s.star

        def rel(i, j):
            return rows[j][u[i]] == i

        def exists(i, j):
            return any(rows[j][e] == i for e in set(u))
    order = OrderRel.from_matrix([[rel(i, j) for j in range(n)] for i in range(n)])
    po = order.check_partial_order()
    if not po.verdict:
        raise InternalInconsistency(f"{side} order is not a partial order: {po.summary()}")
    for i, j in product(range(n), repeat=2):
        if rel(i, j) != exists(i, j):
            raise InternalInconsistency(f"{side} order disagrees with its existential form at ({i},{j})")
    return order


def check_order_coincidence_on_projections(s: UnaryStructure) -> Report:
    if not passes(s, "two-sided-ehresmann"):
        raise InputError("structure is not two-sided Ehresmann")
    rep = Report("order coincidence")
    left, right = derive_order(s, "left"), derive_order(s, "right")
    u = sorted(set(s.plus))
    for e in u:
        for f in u:
            if left.leq(e, f) != right.leq(e, f):
                rep.add("lre-order", e, f)
    if passes(s, "two-sided-restriction"):
        rep.data["restriction"] = True
        for i, j in product(range(s.n), repeat=2):
            if left.leq(i, j) != right.leq(i, j):
                rep.add("restriction-order", i, j)
    else:
        rep.data["restriction"] = False
    return rep


# -- local meet-semilattices -----------------------------------------------

def check_local_meet_semilattice(t: PartialTable):
    """Returns ``(report, partition)``; the partition is None on failure."""
    rep = Report("local meet-semilattice")
    rep.merge(check_associativity(t))
    rows, n = t.rows, t.n
    for e in range(n):
        if rows[e][e] != e:
            rep.add("idempotent", e)
    for s in range(n):
        for u in range(s + 1, n):
            if rows[s][u] != rows[u][s]:
                rep.add("commutative", s, u)
    if not rep.verdict:
        return rep, None
    blocks = []
    seen = set()
    for s in range(n):
        if s in seen:
            continue
        block = frozenset(u for u in range(n) if rows[s][u] is not None)
        for u in block:
            if frozenset(v for v in range(n) if rows[u][v] is not None) != block:
                raise InternalInconsistency(f"definedness is not an equivalence at ({s},{u})")
        seen |= block
        blocks.append(block)
    part = ComponentPartition(tuple(blocks))
    # each block is a meet-semilattice for s <= u iff su = s, and the table is
    # recovered from that order alone
    order = OrderRel.from_matrix([[rows[i][j] == i for j in range(n)] for i in range(n)])
    if not order.check_partial_order().verdict:
        raise InternalInconsistency("order of a local meet-semilattice is not a partial order")
    rebuilt = meet_table_from_order(order, part)
    if rebuilt is None or rebuilt.rows != t.rows:
        raise InternalInconsistency("table is not recovered from its order and blocks")
    rep.data["blocks"] = [sorted(b) for b in blocks]
    return rep, part


def meet_table_from_order(order: OrderRel, part: ComponentPartition) -> Optional[PartialTable]:
    """Greatest lower bounds inside each block; None if some glb is missing."""
    n = order.n
    rows = [[None] * n for _ in range(n)]
    for b in part.blocks:
        for s in b:
            for u in b:
                lower = [x for x in b if order.leq(x, s) and order.leq(x, u)]
                top = [x for x in lower if all(order.leq(y, x) for y in lower)]
                if len(top) != 1:
                    return None
                rows[s][u] = top[0]
    return PartialTable(tuple(map(tuple, rows)))


# -- generators ------------------------------------------------------------

def _compose_rel(r: int, s: int, k: int) -> int:
    out = 0
    for i in range(k):
        for z in range(k):
            if r >> (i * k + z) & 1:
                out |= ((s >> (z * k)) & ((1 << k) - 1)) << (i * k)
    return out


def gen_relation_semigroup(x_size: int) -> UnaryStructure:
    """All binary relations on an ``x_size``-set; id = bitmask, bit i*k+j for (i,j)."""
    if x_size not in (1, 2):
        raise SizeError(f"relation semigroup needs |X| in {{1, 2}}, got {x_size}")
    k = x_size
    size = 1 << (k * k)
    rows = tuple(tuple(_compose_rel(r, s, k) for s in range(size)) for r in range(size))
    plus, star = [], []
    for r in range(size):
        p = q = 0
        for i in range(k):
            for j in range(k):
                if r >> (i * k + j) & 1:
                    p |= 1 << (i * k + i)
                    q |= 1 << (j * k + j)
        plus.append(p)
        star.append(q)
    labels = tuple(
        "{" + ",".join(f"{i}{j}" for i in range(k) for j in range(k) if r >> (i * k + j) & 1) + "}"
        for r in range(size))
    return UnaryStructure(PartialTable(rows, labels), tuple(plus), tuple(star))


def chain_semilattice(n: int) -> UnaryStructure:
    """The chain 0 < 1 < ... < n-1 under min, with identity unary maps."""
    t = PartialTable(tuple(tuple(min(i, j) for j in range(n)) for i in range(n)))
    return UnaryStructure(t, tuple(range(n)), tuple(range(n)))


def antichain(n: int) -> UnaryStructure:
    """n idempotents with no products between distinct elements."""
    t = PartialTable(tuple(tuple(i if i == j else None for j in range(n)) for i in range(n)))
    return UnaryStructure(t, tuple(range(n)), tuple(range(n)))


def group_z2() -> UnaryStructure:
    t = PartialTable(((0, 1), (1, 0)), ("1", "g"))
    return UnaryStructure(t, (0, 0), (0, 0))


def arrow_category() -> UnaryStructure:
    """Objects e=0, f=1 and one arrow x=2 from f to e, as a semigroupoid."""
    t = PartialTable.from_entries(3, [(0, 0, 0), (1, 1, 1), (0, 2, 2), (2, 1, 2)], ("e", "f", "x"))
    return UnaryStructure(t, (0, 1, 0), (0, 1, 1))


def local_semilattice_structure(t: PartialTable) -> UnaryStructure:
    return UnaryStructure(t, tuple(range(t.n)), tuple(range(t.n)))


# -- inverse semigroupoids -------------------------------------------------

def pseudo_inverses(t: PartialTable, s: int) -> list[int]:
    rows = t.rows
    out = []
    for u in range(t.n):
        su, us = rows[s][u], rows[u][s]
        if su is None or us is None:
            continue
        if rows[su][s] == s and rows[us][u] == u:
            out.append(u)
    return out


def idempotents(t: PartialTable) -> list[int]:
    return [e for e in range(t.n) if t.rows[e][e] == e]


def idempotents_commute(t: PartialTable) -> bool:
    rows = t.rows
    es = idempotents(t)
    return all(rows[e][f] is None or rows[e][f] == rows[f][e] for e in es for f in es)


def check_inverse(t: PartialTable):
    """``(report, inverse data, induced restriction structure)``.

    The last two are None unless every element has exactly one pseudo-inverse.
    """
    rep = Report("inverse")
    assoc = check_associativity(t)
    if not assoc.verdict:
        raise InputError(f"not a semigroupoid: {assoc.summary()}")
    cands = [pseudo_inverses(t, s) for s in range(t.n)]
    for s, c in enumerate(cands):
        if not c:
            rep.add("regular", s)
        elif len(c) > 1:
            rep.add("unique-pseudo-inverse", s, frozenset(c))
    regular = all(cands)
    commute = idempotents_commute(t)
    rep.data["regular"] = regular
    rep.data["idempotents_commute"] = commute
    if rep.verdict != (regular and commute):
        raise TheoremViolation("unique pseudo-inverses disagree with regularity plus commuting idempotents")
    if not rep.verdict:
        return rep, None, None
    inv = tuple(c[0] for c in cands)
    rows = t.rows
    u = UnaryStructure(t, tuple(rows[s][inv[s]] for s in range(t.n)),
                       tuple(rows[inv[s]][s] for s in range(t.n)))
    rep.data["inverse"] = list(inv)
    return rep, InverseData(inv), u
