import pytest

from symcoset import ParseError, UnknownTypeName, builtin_group, parse_group_literal, resolve_group
from symcoset.models import describe, format_group_literal, normalize_name


@pytest.mark.parametrize("name,degree,order", [
    ("A7", 7, 2520),
    ("S4", 4, 24),
    ("Z6", 6, 6),
    ("Z2xA7", 9, 5040),
    ("Z3xA7", 10, 7560),
    ("Z4xA7", 11, 10080),
    ("Z2^2xA7", 11, 10080),
    ("Z9xA7", 16, 22680),
    ("Z3^2xA7", 13, 22680),
    ("F42xZ2", 9, 84),
    ("D14", 7, 14),
])
def test_builtin_models(name, degree, order):
    G = builtin_group(name)
    assert (G.degree, G.order()) == (degree, order)


def test_alternating_generators_even():
    for n in range(3, 10):
        G = builtin_group(f"A{n}")
        assert G.all_even()


def test_name_normalization():
    assert normalize_name("Z2 × A7") == "Z2xA7"
    assert normalize_name("Z3²xA7") == "Z3^2xA7"
    assert builtin_group("Z3²×A7").order() == 22680


def test_unknown_name():
    with pytest.raises(UnknownTypeName):
        builtin_group("M11")
    assert "generators" in describe("A7")


def test_group_literal_round_trip(tmp_path):
    G = builtin_group("Z2xA7")
    text = format_group_literal(G)
    H = parse_group_literal("# comment\n" + text)
    assert H.order() == G.order() and H.degree == G.degree
    path = tmp_path / "g.txt"
    path.write_text(text)
    assert resolve_group(str(path)).order() == 5040


@pytest.mark.parametrize("text", ["(1,2)\n", "degree: x\n", "degree: 3\n(1,4)\n", ""])
def test_group_literal_errors(text):
    with pytest.raises(ParseError):
        parse_group_literal(text)
