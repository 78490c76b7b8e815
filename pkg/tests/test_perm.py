import re

import pytest
from hypothesis import given, strategies as st

from symcoset import DegreeMismatch, ParseError, Permutation, format_cycles, parse_cycles
from symcoset.perm import compose, inverse, is_two_element, order, parity, power


def perms(max_degree=9):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation)
    )


def same_degree_pair(max_degree=9):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.tuples(*[st.permutations(list(range(1, n + 1))).map(Permutation)] * 3)
    )


def test_right_action_convention():
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    # p first, then q: 1 -> 2 -> 3
    assert (p * q)(1) == 3
    assert compose(p, q) == p * q
    assert (q * p)(1) == 2


def test_parse_examples():
    p = parse_cycles("(1, 2, 4)(3, 6, 10)", 10)
    assert p(1) == 2 and p(4) == 1 and p(10) == 3 and p(5) == 5
    assert parse_cycles("", 4).is_identity()
    assert parse_cycles("()", 4).is_identity()
    assert parse_cycles("(21,31, 43)", 63)(31) == 43


@pytest.mark.parametrize("text,fragment", [
    ("(1,2)(2,3)", "repeated point 2"),
    ("(1,9)", "out of range"),
    ("(1,2", "unterminated"),
    ("(1,a)", "expected integer"),
    ("(3)", "cycle of length 1"),
    ("1,2)", "expected '('"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=re.escape(fragment)) as info:
        parse_cycles(text, 5)
    assert info.value.position >= 0


def test_format():
    assert format_cycles(Permutation.identity(5)) == "()"
    assert format_cycles(parse_cycles("(5, 3)(4,1, 2)", 6)) == "(1,2,4)(3,5)"


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        parse_cycles("(1,2)", 3) * parse_cycles("(1,2)", 4)
    assert parse_cycles("(1,2)", 3).pad(4) * parse_cycles("(1,2)", 4) == Permutation.identity(4)


def test_shift():
    p = parse_cycles("(1,2,3)", 3).shift(7, 10)
    assert p == parse_cycles("(8,9,10)", 10)


def test_two_elements_and_parity():
    assert is_two_element(Permutation.identity(3))
    assert is_two_element(parse_cycles("(1,2,3,4)", 4))
    assert not is_two_element(parse_cycles("(1,2,3)", 4))
    assert not is_two_element(parse_cycles("(1,2)(3,4,5,6)(7,8,9)", 9))
    assert parity(parse_cycles("(1,2,3,4)", 4)) == "odd"
    assert parity(parse_cycles("(1,2)(3,4)", 4)) == "even"


def test_power_and_order():
    p = parse_cycles("(1,2,3)(4,5)", 5)
    assert order(p) == 6
    assert power(p, 6).is_identity()
    assert power(p, -1) == inverse(p)
    assert p ** 0 == Permutation.identity(5)


def test_bad_image_table():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


@given(same_degree_pair())
def test_group_axioms(t):
    p, q, r = t
    assert (p * q) * r == p * (q * r)
    assert (p * ~p).is_identity()
    assert ~(p * q) == ~q * ~p


@given(perms())
def test_round_trip(p):
    assert parse_cycles(format_cycles(p), p.degree) == p


@given(perms())
def test_order_is_minimal_power(p):
    k = p.order()
    assert (p ** k).is_identity()
    assert all(not (p ** j).is_identity() for j in range(1, k))


@given(same_degree_pair())
def test_parity_is_a_homomorphism(t):
    p, q, _ = t
    odd = (parity(p) == "odd") ^ (parity(q) == "odd")
    assert parity(p * q) == ("odd" if odd else "even")


@given(perms())
def test_cycles_partition_support(p):
    pts = [x for c in p.cycles() for x in c]
    assert sorted(pts) == p.support()
    assert sum(p.cycle_type()) == p.degree
