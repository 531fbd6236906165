import pytest

from esnkit.algebra import PartialTable, UnaryStructure, gen_relation_semigroup, group_z2
from esnkit.category import BiorderedCategory
from esnkit.enumeration import CLASSES, GUARD
from esnkit.errors import InputError
from esnkit.esn import build_category
from esnkit.fileio import parse_map, parse_structure_text, serialize, serialize_map

from _data import enum


def parse_error(text):
    with pytest.raises(InputError) as exc:
        parse_structure_text(text)
    return str(exc.value)


def test_minimal_file():
    assert parse_structure_text("kind sgpd\nsize 1\nmul 0 0 0\n") == PartialTable(((0,),))


def test_orders_closed_reflexively_only():
    text = "kind lbec\nsize 2\nobject 0\nobject 1\ndom 0 0\ndom 1 1\nran 0 0\nran 1 1\n" \
           "mul 0 0 0\nmul 1 1 1\nleq_l 0 1\nleq_r 0 1\n"
    c = parse_structure_text(text)
    assert c.leq_l.leq(0, 0) and c.leq_l.leq(1, 1) and c.leq_l.leq(0, 1)
    assert not c.leq_l.leq(1, 0)


def test_single_order_kind():
    text = "kind lic\nsize 1\nobject 0\ndom 0 0\nran 0 0\nmul 0 0 0\n"
    c = parse_structure_text(text)
    assert isinstance(c, BiorderedCategory) and c.leq_l == c.leq_r


def test_comments_and_blank_lines():
    assert parse_structure_text("# header\n\nkind sgpd  # tag\nsize 1\n") == PartialTable(((None,),))


@pytest.mark.parametrize("text,fragment", [
    ("kind sgpd\nsize 3\nmul 0 0 5\n", "line 3: id 5 out of range"),
    ("kind sgpd\nsize 1\nfrob 0\n", "line 3: unknown directive"),
    ("kind sgpd\nsize 1\nmul 0 0\n", "line 3: mul takes 3"),
    ("kind sgpd\nsize 1\nmul 0 0 x\n", "line 3: expected an integer"),
    ("kind sgpd\nsize 2\nmul 0 0 0\nmul 0 0 1\n", "line 4: mul 0 0 1 contradicts line 3"),
    ("kind sgpd\nsize 1\nobject 0\n", "line 3: directive 'object' is not allowed"),
    ("kind groupoid\nsize 1\n", "line 1: unknown kind"),
    ("size 1\n", "missing 'kind'"),
    ("kind sgpd\n", "exactly one 'size'"),
    ("kind cat\nsize 1\nobject 0\nran 0 0\nmul 0 0 0\n", "dom is missing"),
    ("kind sgpd\nsize 1\nstar 0 0\n", "needs a plus"),
    ("kind sgpd\nsize 0\nunary both\n", "line 3: unary takes"),
    ("kind cat\nsize 0\nunary plus\n", "line 3: directive 'unary' is not allowed"),
])
def test_errors(text, fragment):
    assert fragment in parse_error(text)


def test_empty_structures_keep_their_maps():
    empty = PartialTable(())
    assert parse_structure_text(serialize(empty)) == empty
    for star in (None, ()):
        u = UnaryStructure(empty, (), star)
        assert parse_structure_text(serialize(u)) == u


def test_repeated_identical_lines_are_fine():
    assert parse_structure_text("kind sgpd\nsize 1\nmul 0 0 0\nmul 0 0 0\n") == PartialTable(((0,),))


def test_labels_round_trip():
    b2 = gen_relation_semigroup(2)
    text = serialize(b2)
    back = parse_structure_text(text)
    assert back == b2 and back.base.labels == b2.base.labels
    assert serialize(back) == text


@pytest.mark.parametrize("cls", CLASSES)
def test_round_trip_every_enumerated_structure(cls):
    for n in range(GUARD[cls] + 1):
        for x in enum(cls, n):
            text = serialize(x)
            back = parse_structure_text(text)
            assert back == x
            assert serialize(back) == text


def test_category_round_trip():
    c = build_category(group_z2())
    assert parse_structure_text(serialize(c.cat)) == c.cat
    assert parse_structure_text(serialize(c)) == c


def test_serialization_is_canonically_ordered():
    lines = serialize(group_z2()).splitlines()
    assert lines[:2] == ["kind sgpd", "size 2"]
    assert lines.index("mul 0 0 0") < lines.index("plus 0 0") < lines.index("star 0 0")


def test_map_files(tmp_path):
    z2 = group_z2()
    (tmp_path / "z2.txt").write_text(serialize(z2))
    (tmp_path / "m.txt").write_text(serialize_map("z2.txt", "z2.txt", (0, 1)))
    src, dst, send = parse_map(str(tmp_path / "m.txt"))
    assert src == dst == z2 and send == (0, 1)
    (tmp_path / "bad.txt").write_text("src z2.txt\ndst z2.txt\nsend 0 0\n")
    with pytest.raises(InputError, match="not total"):
        parse_map(str(tmp_path / "bad.txt"))
    (tmp_path / "far.txt").write_text("src z2.txt\ndst z2.txt\nsend 0 0\nsend 1 2\n")
    with pytest.raises(InputError, match="line 4: target id 2"):
        parse_map(str(tmp_path / "far.txt"))
    (tmp_path / "odd.txt").write_text("src z2.txt\nsend 0 0\n")
    with pytest.raises(InputError, match="both"):
        parse_map(str(tmp_path / "odd.txt"))
