import pytest

from looplab import catalog
from looplab.errors import ParseError
from looplab.table import Classification
from looplab.textformat import content_hash, format_table, parse, parse_many


def test_roundtrip_catalog():
    for name in ("o16", "q8", "smallest_cc"):
        t = catalog.get(name).table
        parsed = parse(format_table(t, comment=name))
        assert parsed.loop == t
        assert content_hash(parsed.loop) == content_hash(t)


def test_comments_and_blank_lines():
    text = "# cyclic 3\n\n3  # order\n0 1 2\n\n1 2 0 # row one\n2 0 1\n"
    p = parse(text)
    assert p.classification is Classification.LOOP
    assert p.row_lines == (4, 6, 7)


def test_non_latin_accepted_and_tagged():
    p = parse("2\n0 1\n1 1\n")
    assert p.classification is Classification.MAGMA
    assert p.loop is None


@pytest.mark.parametrize("text, line", [
    ("2\n0 1\n1 2\n", 3),
    ("2\n0 1\n1\n", 3),
    ("2\n0 x\n1 0\n", 2),
    ("3\n0 1 2\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == line


def test_parse_many():
    t = catalog.cyclic(3).table
    tables = parse_many(format_table(t) + "\n" + format_table(t))
    assert len(tables) == 2
    with pytest.raises(ParseError):
        parse(format_table(t) + "\n" + format_table(t))


def test_hash_ignores_formatting():
    a = parse("3\n0 1 2\n1 2 0\n2 0 1\n").table
    b = parse("# x\n3\n0   1 2\n1 2 0\n\n2 0 1   # y\n").table
    assert content_hash(a) == content_hash(b)
