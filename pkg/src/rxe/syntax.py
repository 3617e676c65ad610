"""Pattern parsing into an explicit parse tree.

The alphabet is single bytes (0..255).  Metacharacters are ``( ) | * \\``
and a backslash escapes the byte that follows it.  Union and the implicit
concatenation are left associative; ``*`` binds tightest.  The parse tree
is stored as a flat node array so later passes can address nodes by id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

CHAR = "char"
CONCAT = "concat"
UNION = "union"
STAR = "star"

# Reserved non-byte symbol used internally when a subtree is replaced by a
# placeholder leaf; it is not expressible in pattern syntax.
PSEUDO_SYMBOL = 256

_METACHARS = frozenset(b"()|*\\")


class RegexSyntaxError(ValueError):
    """Raised for malformed patterns; carries the byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__("%s at position %d" % (message, position))
        self.position = position


@dataclass(frozen=True)
class Node:
    kind: str
    sym: Optional[int]  # byte value (or PSEUDO_SYMBOL) for char nodes
    children: tuple


class ParseTree:
    """Flat-array parse tree; node ids are indices into ``nodes``."""

    def __init__(self, nodes: list, root: int):
        self.nodes = nodes
        self.root = root

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def kind(self, v: int) -> str:
        return self.nodes[v].kind

    def children(self, v: int) -> tuple:
        return self.nodes[v].children

    def canonical(self, v: Optional[int] = None):
        """Nested-tuple form, independent of node numbering."""
        if v is None:
            v = self.root
        node = self.nodes[v]
        if node.kind == CHAR:
            return (CHAR, node.sym)
        return (node.kind,) + tuple(self.canonical(c) for c in node.children)

    def unparse(self, v: Optional[int] = None, _parent_level: int = 0) -> bytes:
        """Pattern text that reparses to an isomorphic tree."""
        if v is None:
            v = self.root
        node = self.nodes[v]
        if node.kind == CHAR:
            if node.sym == PSEUDO_SYMBOL:
                raise ValueError("placeholder leaves have no pattern syntax")
            byte = bytes([node.sym])
            return b"\\" + byte if node.sym in _METACHARS else byte
        if node.kind == STAR:
            text = self.unparse(node.children[0], 2) + b"*"
            level = 2
        elif node.kind == CONCAT:
            left, right = node.children
            text = self.unparse(left, 1) + self.unparse(right, 2)
            level = 1
        else:
            left, right = node.children
            text = self.unparse(left, 0) + b"|" + self.unparse(right, 1)
            level = 0
        if level < _parent_level:
            return b"(" + text + b")"
        return text

    def __repr__(self):
        return "ParseTree(%r)" % self.canonical()


class TreeBuilder:
    """Accumulates nodes; children must be created before parents."""

    def __init__(self):
        self.nodes = []

    def _add(self, node: Node) -> int:
        self.nodes.append(node)
        return len(self.nodes) - 1

    def char(self, sym: int) -> int:
        if not 0 <= sym <= PSEUDO_SYMBOL:
            raise ValueError("symbol out of range: %r" % (sym,))
        return self._add(Node(CHAR, sym, ()))

    def star(self, child: int) -> int:
        return self._add(Node(STAR, None, (child,)))

    def concat(self, left: int, right: int) -> int:
        return self._add(Node(CONCAT, None, (left, right)))

    def union(self, left: int, right: int) -> int:
        return self._add(Node(UNION, None, (left, right)))

    def build(self, root: int) -> ParseTree:
        return ParseTree(self.nodes, root)


class _Parser:
    def __init__(self, text: bytes):
        self.text = text
        self.pos = 0
        self.builder = TreeBuilder()

    def peek(self) -> int:
        return self.text[self.pos] if self.pos < len(self.text) else -1

    def parse_union(self) -> int:
        left = self.parse_concat()
        while self.peek() == ord("|"):
            self.pos += 1
            right = self.parse_concat()
            left = self.builder.union(left, right)
        return left

    def parse_concat(self) -> int:
        left = self.parse_factor()
        while self.peek() not in (-1, ord("|"), ord(")")):
            right = self.parse_factor()
            left = self.builder.concat(left, right)
        return left

    def parse_factor(self) -> int:
        node = self.parse_atom()
        while self.peek() == ord("*"):
            self.pos += 1
            node = self.builder.star(node)
        return node

    def parse_atom(self) -> int:
        c = self.peek()
        if c == -1:
            raise RegexSyntaxError("missing operand", self.pos)
        if c == ord("*"):
            raise RegexSyntaxError("nothing to repeat", self.pos)
        if c == ord("|"):
            raise RegexSyntaxError("missing operand", self.pos)
        if c == ord(")"):
            raise RegexSyntaxError("unmatched ')'", self.pos)
        if c == ord("("):
            open_pos = self.pos
            self.pos += 1
            if self.peek() == ord(")"):
                raise RegexSyntaxError("empty group", open_pos)
            node = self.parse_union()
            if self.peek() != ord(")"):
                raise RegexSyntaxError("unclosed group", open_pos)
            self.pos += 1
            return node
        if c == ord("\\"):
            if self.pos + 1 >= len(self.text):
                raise RegexSyntaxError("trailing escape", self.pos)
            self.pos += 2
            return self.builder.char(self.text[self.pos - 1])
        self.pos += 1
        return self.builder.char(c)


def parse(pattern) -> ParseTree:
    """Parse a pattern (str or bytes) into a ParseTree.

    str patterns are taken as UTF-8; multi-byte characters become
    concatenations of byte literals.
    """
    if isinstance(pattern, str):
        pattern = pattern.encode("utf-8")
    if not pattern:
        raise RegexSyntaxError("empty pattern", 0)
    p = _Parser(pattern)
    root = p.parse_union()
    if p.pos != len(pattern):
        # parse_union stops only at ')' here
        raise RegexSyntaxError("unmatched ')'", p.pos)
    return p.builder.build(root)
