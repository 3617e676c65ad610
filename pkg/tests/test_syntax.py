import random

import pytest

from oracles import random_tree
from rxe.syntax import (
    CHAR,
    CONCAT,
    STAR,
    UNION,
    ParseTree,
    RegexSyntaxError,
    TreeBuilder,
    parse,
)

A, B_, C = ord("a"), ord("b"), ord("c")


def test_reference_pattern_structure():
    t = parse("ac|a*b")
    assert t.canonical() == (
        UNION,
        (CONCAT, (CHAR, A), (CHAR, ord("c"))),
        (CONCAT, (STAR, (CHAR, A)), (CHAR, B_)),
    )
    # 4 literal leaves + 3 binary operators + 1 star
    assert t.node_count == 8


def test_single_char_and_redundant_groups():
    assert parse("a").node_count == 1
    assert parse("a").canonical() == (CHAR, A)
    assert parse("((a))").canonical() == parse("a").canonical()
    assert parse("(((((a)))))").node_count == 1


def test_left_associativity():
    assert parse("abc").canonical() == (
        CONCAT, (CONCAT, (CHAR, A), (CHAR, B_)), (CHAR, C))
    assert parse("a|b|c").canonical() == (
        UNION, (UNION, (CHAR, A), (CHAR, B_)), (CHAR, C))


def test_star_binds_tightest():
    assert parse("ab*").canonical() == (CONCAT, (CHAR, A), (STAR, (CHAR, B_)))
    assert parse("a**").canonical() == (STAR, (STAR, (CHAR, A)))
    assert parse("(ab)*").canonical() == (
        STAR, (CONCAT, (CHAR, A), (CHAR, B_)))


def test_escapes():
    assert parse(r"\*").canonical() == (CHAR, ord("*"))
    assert parse("\\\\").canonical() == (CHAR, ord("\\"))
    assert parse(r"\(").canonical() == (CHAR, ord("("))
    # escaping a non-metacharacter denotes that byte
    assert parse(r"\a").canonical() == (CHAR, A)


def test_byte_alphabet():
    t = parse(bytes([200, 201]))
    assert t.canonical() == (CONCAT, (CHAR, 200), (CHAR, 201))
    # str input is UTF-8: a two-byte character concatenates two byte leaves
    assert parse("é").canonical() == (CONCAT, (CHAR, 0xC3), (CHAR, 0xA9))


@pytest.mark.parametrize(
    "pattern,position",
    [
        ("*a", 0),
        ("", 0),
        ("a|", 2),
        ("|a", 0),
        ("a||b", 2),
        ("(", 0),
        ("(a", 0),
        ("a)", 1),
        (")", 0),
        ("()", 0),
        ("(|a)", 1),
        ("a\\", 1),
        ("(a*(b|)c)", 6),
    ],
)
def test_syntax_errors_carry_position(pattern, position):
    with pytest.raises(RegexSyntaxError) as info:
        parse(pattern)
    assert info.value.position == position
    assert isinstance(info.value, ValueError)


def test_unparse_round_trip():
    rng = random.Random(23)
    for _ in range(300):
        t = random_tree(rng, rng.randint(1, 25))
        assert parse(t.unparse()).canonical() == t.canonical()


def test_unparse_round_trip_with_metachar_leaves():
    b = TreeBuilder()
    star_leaf = b.char(ord("*"))
    backslash = b.char(ord("\\"))
    t = b.build(b.concat(b.star(star_leaf), backslash))
    assert t.unparse() == b"\\**\\\\"
    assert parse(t.unparse()).canonical() == t.canonical()


def test_leaf_count_equals_literal_count():
    rng = random.Random(29)
    for _ in range(100):
        t = random_tree(rng, rng.randint(1, 30))
        leaves = sum(1 for node in t.nodes if node.kind == CHAR)
        literals = sum(
            1 for node in parse(t.unparse()).nodes if node.kind == CHAR)
        assert leaves == literals


def test_children_arity_invariants():
    rng = random.Random(31)
    for _ in range(50):
        t = random_tree(rng, rng.randint(1, 30))
        reparsed = parse(t.unparse())
        for node in reparsed.nodes:
            if node.kind == CHAR:
                assert node.children == ()
            elif node.kind == STAR:
                assert len(node.children) == 1
            else:
                assert len(node.children) == 2
