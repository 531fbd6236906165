"""Pure-Python search kernels.

Tables are flat row-major int sequences of length n*n; ``UNDEF`` marks an
undefined product and ``UNKNOWN`` a cell the search has not decided yet.
The compiled module ``_ckernels`` implements the same functions with the
same semantics.
"""

UNDEF = -1
UNKNOWN = -2


def _assoc_scan(T, n):
    for s in range(n):
        for t in range(n):
            st = T[s * n + t]
            for r in range(n):
                tr = T[t * n + r]
                x = T[st * n + r] if st >= 0 else st
                y = T[s * n + tr] if tr >= 0 else tr
                if not ((st >= 0 and (tr >= 0 or x >= 0)) or (tr >= 0 and y >= 0)):
                    continue
                if st == UNDEF or tr == UNDEF or x == UNDEF or y == UNDEF:
                    return False
                if st >= 0 and tr >= 0 and x >= 0 and y >= 0 and x != y:
                    return False
    return True


def assoc_ok(tab, n):
    """True iff the (possibly partially decided) table has no decided violation."""
    return _assoc_scan(list(tab), n)


def search_tables(n, lms=False):
    """All semigroupoid tables on n elements (local meet-semilattices if ``lms``).

    Cells are decided in row-major order, "undefined" before each value.
    """
    size = n * n
    T = [UNKNOWN] * size
    out = []

    def fits(k):
        if lms:
            i, j = divmod(k, n)
            v = T[k]
            if i == j and v != i:
                return False
            w = T[j * n + i]
            if w != UNKNOWN and w != v:
                return False
        return _assoc_scan(T, n)

    def rec(k):
        if k == size:
            out.append(tuple(T))
            return
        for v in range(-1, n):
            T[k] = v
            if fits(k):
                rec(k + 1)
        T[k] = UNKNOWN

    rec(0)
    return out


def _left_scan(T, u, n, restriction):
    for s in range(n):
        ps = u[s]
        if ps >= 0 and T[ps * n + s] != s:
            return False
    for s in range(n):
        ps = u[s]
        for t in range(n):
            pt = u[t]
            if pt < 0:
                continue
            if ps >= 0:
                a = T[ps * n + pt]
                if a >= 0:
                    if T[pt * n + ps] != a:
                        return False
                    c = T[ps * n + t]
                    if c < 0:
                        return False
                    if u[c] >= 0 and u[c] != a:
                        return False
            st = T[s * n + t]
            if st < 0:
                continue
            d = T[s * n + pt]
            if d < 0:
                return False
            pst = u[st]
            if pst < 0:
                continue
            if restriction:
                if T[pst * n + s] != d:
                    return False
            elif u[d] >= 0 and pst != u[d]:
                return False
    return True


def _transpose(T, n):
    return [T[j * n + i] for i in range(n) for j in range(n)]


def unary_ok(tab, u, n, right=False, restriction=False):
    """Left (or, on the transposed table, right) Ehresmann/restriction axioms.

    Entries of ``u`` may be UNKNOWN; only fully decided instances are tested.
    """
    T = list(tab)
    if right:
        T = _transpose(T, n)
    return _left_scan(T, list(u), n, restriction)


def search_unary(tab, n, right=False, restriction=False):
    """All unary maps satisfying the one-sided axiom set, by backtracking."""
    T = list(tab)
    if right:
        T = _transpose(T, n)
    u = [UNKNOWN] * n
    out = []

    def rec(k):
        if k == n:
            out.append(tuple(u))
            return
        for v in range(n):
            u[k] = v
            if _left_scan(T, u, n, restriction):
                rec(k + 1)
        u[k] = UNKNOWN

    rec(0)
    return out


def unique_pseudo_inverses(tab, n):
    """The pseudo-inverse of every element, or None unless each is unique."""
    T = list(tab)
    inv = []
    for s in range(n):
        found = -1
        count = 0
        for u in range(n):
            su = T[s * n + u]
            us = T[u * n + s]
            if su < 0 or us < 0:
                continue
            if T[su * n + s] == s and T[us * n + u] == u:
                count += 1
                found = u
        if count != 1:
            return None
        inv.append(found)
    return inv
