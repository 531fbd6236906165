"""Line-oriented text formats for structures and maps.

One directive per line, whitespace separated, ``#`` starts a comment::

    kind sgpd          # sgpd | cat | lbec | lic
    size 2
    label 1 g          # optional display names
    mul 0 1 1          # 0*1 = 1 (composition for category kinds)
    plus 1 0           # 1+ = 0
    star 1 0
    unary plus         # declares a map with no lines (only needed at size 0)
    object 0           # category kinds
    dom 1 0
    ran 1 0
    leq_l 0 1          # lbec; lic files use "leq" for the single order

Order lines are closed reflexively and nothing else is inferred.
"""

from __future__ import annotations

import os
from typing import Union

from esnkit.algebra import OrderRel, PartialTable, UnaryStructure
from esnkit.category import BiorderedCategory, FiniteCategory
from esnkit.errors import InputError

KINDS = ("sgpd", "cat", "lbec", "lic")
ARITY = {"kind": 1, "size": 1, "unary": 1, "label": 2, "object": 1, "dom": 2, "ran": 2, "mul": 3,
         "plus": 2, "star": 2, "leq_l": 2, "leq_r": 2, "leq": 2}
ORDER = tuple(ARITY)
ALLOWED = {
    "sgpd": {"kind", "size", "unary", "label", "mul", "plus", "star"},
    "cat": {"kind", "size", "label", "object", "dom", "ran", "mul"},
    "lbec": {"kind", "size", "label", "object", "dom", "ran", "mul", "leq_l", "leq_r"},
    "lic": {"kind", "size", "label", "object", "dom", "ran", "mul", "leq"},
}

Structure = Union[PartialTable, UnaryStructure, FiniteCategory, BiorderedCategory]


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _read_directives(text: str):
    """``{directive: {key: (value, lineno)}}`` with duplicates checked."""
    out: dict = {d: {} for d in ARITY}
    for lineno, toks in _tokens(text):
        d, args = toks[0], toks[1:]
        if d not in ARITY:
            raise InputError(f"line {lineno}: unknown directive {d!r}")
        if len(args) != ARITY[d]:
            raise InputError(f"line {lineno}: {d} takes {ARITY[d]} argument(s), got {len(args)}")
        if d == "kind":
            key, val = (), args[0]
        elif d == "unary":
            if args[0] not in ("plus", "star"):
                raise InputError(f"line {lineno}: unary takes 'plus' or 'star', got {args[0]!r}")
            key, val = (args[0],), True
        elif d == "label":
            key, val = (_int(args[0], lineno),), args[1]
        else:
            nums = tuple(_int(a, lineno) for a in args)
            if d in ("size", "object") or d.startswith("leq"):
                key, val = nums, True
            else:
                key, val = nums[:-1], nums[-1]
        prev = out[d].get(key)
        if prev is not None and prev[0] != val:
            raise InputError(f"line {lineno}: {d} {' '.join(args)} contradicts line {prev[1]}")
        out[d][key] = (val, lineno)
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _check_range(dirs, n):
    for d, entries in dirs.items():
        if d in ("kind", "size", "unary"):
            continue
        for key, (val, lineno) in entries.items():
            ids = list(key)
            if d not in ("label", "object") and not d.startswith("leq"):
                ids.append(val)
            for i in ids:
                if not 0 <= i < n:
                    raise InputError(f"line {lineno}: id {i} out of range for size {n}")


def _total_map(dirs, name, n):
    m = {k[0]: v for k, (v, _) in dirs[name].items()}
    missing = [i for i in range(n) if i not in m]
    if missing:
        raise InputError(f"{name} is missing for id(s) {missing}")
    return tuple(m[i] for i in range(n))


def parse_structure_text(text: str) -> Structure:
    dirs = _read_directives(text)
    if not dirs["kind"]:
        raise InputError("missing 'kind' line")
    kind, kline = dirs["kind"][()]
    if kind not in KINDS:
        raise InputError(f"line {kline}: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if len(dirs["size"]) != 1:
        raise InputError("exactly one 'size' line is required")
    ((n,), (_, sline)), = dirs["size"].items()
    if n < 0:
        raise InputError(f"line {sline}: size must be non-negative")
    for d, entries in dirs.items():
        if entries and d not in ALLOWED[kind]:
            line = min(l for _, l in entries.values())
            raise InputError(f"line {line}: directive {d!r} is not allowed in kind {kind}")
    _check_range(dirs, n)
    labels = None
    if dirs["label"]:
        lab = {k[0]: v for k, (v, _) in dirs["label"].items()}
        labels = tuple(lab.get(i, str(i)) for i in range(n))
    table = PartialTable.from_entries(n, [(i, j, k) for (i, j), (k, _) in dirs["mul"].items()], labels)
    if kind == "sgpd":
        has = {m for m in ("plus", "star") if dirs[m] or (m,) in dirs["unary"]}
        if "plus" not in has:
            if "star" in has:
                raise InputError("a star map needs a plus map as well")
            return table
        star = _total_map(dirs, "star", n) if "star" in has else None
        return UnaryStructure(table, _total_map(dirs, "plus", n), star)
    objects = frozenset(k[0] for k in dirs["object"])
    cat = FiniteCategory(objects, _total_map(dirs, "dom", n), _total_map(dirs, "ran", n), table)
    if kind == "cat":
        return cat
    if kind == "lic":
        o = OrderRel.from_pairs(n, dirs["leq"])
        return BiorderedCategory(cat, o, o)
    return BiorderedCategory(cat, OrderRel.from_pairs(n, dirs["leq_l"]), OrderRel.from_pairs(n, dirs["leq_r"]))


def read_text(path: str) -> str:
    if path == "-":
        import sys
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def parse_structure(path: str) -> Structure:
    return parse_structure_text(read_text(path))


# -- serialization ---------------------------------------------------------

def _lines(x: Structure, with_labels: bool = True) -> list[tuple]:
    s = x
    out = []
    if isinstance(s, PartialTable):
        kind, table, n = "sgpd", s, s.n
    elif isinstance(s, UnaryStructure):
        kind, table, n = "sgpd", s.base, s.n
        out += [("plus", i, v) for i, v in enumerate(s.plus)]
        if s.star is not None:
            out += [("star", i, v) for i, v in enumerate(s.star)]
        if n == 0:
            out += [("unary", "plus")] + ([("unary", "star")] if s.star is not None else [])
    else:
        cat = s.cat if isinstance(s, BiorderedCategory) else s
        kind = "lbec" if isinstance(s, BiorderedCategory) else "cat"
        table, n = cat.comp, cat.n
        out += [("object", e) for e in cat.objects]
        out += [("dom", i, v) for i, v in enumerate(cat.dom)]
        out += [("ran", i, v) for i, v in enumerate(cat.ran)]
        if isinstance(s, BiorderedCategory):
            out += [("leq_l", i, j) for i, j in s.leq_l.pairs() if i != j]
            out += [("leq_r", i, j) for i, j in s.leq_r.pairs() if i != j]
    out += [("mul",) + e for e in table.entries()]
    if with_labels and table.labels:
        out += [("label", i, lab) for i, lab in enumerate(table.labels) if lab != str(i)]
    out.sort(key=lambda t: (ORDER.index(t[0]),) + tuple(t[1:]))
    return [("kind", kind), ("size", n)] + out


def serialize(x: Structure, with_labels: bool = True) -> str:
    return "".join(" ".join(str(a) for a in line) + "\n" for line in _lines(x, with_labels))


def write_structure(x: Structure, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(x))


# -- maps ------------------------------------------------------------------

def parse_map_text(text: str, base_dir: str = "."):
    """Returns ``(src, dst, send)`` with both structures loaded."""
    src = dst = None
    send: dict = {}
    for lineno, toks in _tokens(text):
        d, args = toks[0], toks[1:]
        if d in ("src", "dst"):
            if len(args) != 1:
                raise InputError(f"line {lineno}: {d} takes one path")
            path = args[0] if os.path.isabs(args[0]) else os.path.join(base_dir, args[0])
            if d == "src":
                src = (path, lineno)
            else:
                dst = (path, lineno)
        elif d == "send":
            if len(args) != 2:
                raise InputError(f"line {lineno}: send takes 2 arguments")
            i, j = (_int(a, lineno) for a in args)
            if i in send and send[i][0] != j:
                raise InputError(f"line {lineno}: send {i} contradicts line {send[i][1]}")
            send[i] = (j, lineno)
        else:
            raise InputError(f"line {lineno}: unknown map directive {d!r}")
    if src is None or dst is None:
        raise InputError("map file needs both 'src' and 'dst'")
    s, t = parse_structure(src[0]), parse_structure(dst[0])
    for i, (j, lineno) in send.items():
        if not 0 <= i < s.n:
            raise InputError(f"line {lineno}: source id {i} out of range for size {s.n}")
        if not 0 <= j < t.n:
            raise InputError(f"line {lineno}: target id {j} out of range for size {t.n}")
    missing = [i for i in range(s.n) if i not in send]
    if missing:
        raise InputError(f"map is not total: no send line for {missing}")
    return s, t, tuple(send[i][0] for i in range(s.n))


def parse_map(path: str):
    return parse_map_text(read_text(path), os.path.dirname(os.path.abspath(path)) if path != "-" else ".")


def serialize_map(src_path: str, dst_path: str, send) -> str:
    return f"src {src_path}\ndst {dst_path}\n" + "".join(f"send {i} {j}\n" for i, j in enumerate(send))
