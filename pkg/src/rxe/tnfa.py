"""Thompson-style nondeterministic automata over parse trees.

Each parse node contributes exactly two states, so a k-node tree yields
2k states.  Concatenation gets its own state pair (rather than merging
endpoints), which keeps every state's out-degree at most 2 and makes the
start/accept pair of every subtree explicit.  States are numbered
topologically over the forward transitions with the two endpoints of
every symbol transition consecutive; the single cycle-creating edge per
star (its "back" transition) is excluded from the ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from rxe.bitstring import BitString
from rxe.syntax import CHAR, CONCAT, STAR, UNION, ParseTree

EPSILON = None


@dataclass(frozen=True)
class Transition:
    src: int
    dst: int
    label: Optional[int]  # byte value / PSEUDO_SYMBOL, or EPSILON
    back: bool = False


def _as_symbol(sym) -> int:
    if isinstance(sym, str):
        sym = sym.encode("utf-8")
    if isinstance(sym, (bytes, bytearray)):
        if len(sym) != 1:
            raise ValueError("symbol must be a single byte")
        return sym[0]
    return sym


class StateSet:
    """A set of automaton states, stored as a bit mask over 1..m.

    State r corresponds to position r of the backing bit string, i.e. to
    bit 2**(m - r) of the value.
    """

    __slots__ = ("m", "value")

    def __init__(self, m: int, value: int = 0):
        if value < 0 or value >> m:
            raise ValueError("value does not fit %d states" % m)
        self.m = m
        self.value = value

    @classmethod
    def from_states(cls, m: int, states) -> "StateSet":
        value = 0
        for r in states:
            if not 1 <= r <= m:
                raise ValueError("state %d out of range 1..%d" % (r, m))
            value |= 1 << (m - r)
        return cls(m, value)

    @property
    def bits(self) -> BitString:
        return BitString(self.m, self.value)

    def states(self) -> frozenset:
        out, v, m = [], self.value, self.m
        while v:
            low = v & -v
            out.append(m - low.bit_length() + 1)
            v ^= low
        return frozenset(out)

    def member(self, r: int) -> bool:
        return bool((self.value >> (self.m - r)) & 1)

    def insert(self, r: int) -> "StateSet":
        return StateSet(self.m, self.value | (1 << (self.m - r)))

    def __eq__(self, other):
        return (
            isinstance(other, StateSet)
            and self.m == other.m
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.m, self.value))

    def __repr__(self):
        return "StateSet(%d, {%s})" % (
            self.m,
            ", ".join(str(r) for r in sorted(self.states())),
        )


class Tnfa:
    """Automaton with states 1..n (n = 2 * parse node count).

    start is always state 1 and accept is state n.  ``assoc`` maps each
    parse node id to its (start, accept) state pair.
    """

    def __init__(
        self,
        tree: ParseTree,
        n: int,
        transitions: List[Transition],
        assoc: Dict[int, Tuple[int, int]],
    ):
        self.tree = tree
        self.n = n
        self.start = 1
        self.accept = n
        self.transitions = transitions
        self.assoc = assoc

        eps_out: List[List[int]] = [[] for _ in range(n + 1)]
        eps_in: List[List[int]] = [[] for _ in range(n + 1)]
        sym_pairs: Dict[int, List[Tuple[int, int]]] = {}
        alpha_of: Dict[int, int] = {}
        back_edges: List[Tuple[int, int]] = []
        for t in transitions:
            if t.label is EPSILON:
                eps_out[t.src].append(t.dst)
                eps_in[t.dst].append(t.src)
                if t.back:
                    back_edges.append((t.src, t.dst))
            else:
                sym_pairs.setdefault(t.label, []).append((t.src, t.dst))
                alpha_of[t.dst] = t.label
        self.eps_out = [tuple(s) for s in eps_out]
        self.eps_in = [tuple(s) for s in eps_in]
        self.sym_pairs = sym_pairs
        self.alpha_of = alpha_of
        self.back_edges = back_edges

    @property
    def symbols(self):
        return sorted(self.sym_pairs)

    def __repr__(self):
        return "Tnfa(n=%d, transitions=%d)" % (self.n, len(self.transitions))


def _toposort(n: int, out_edges: List[List[Tuple[int, Optional[int], bool]]],
              start: int) -> List[int]:
    """Rank states 1..n; forward edges go up, symbol edges step by one.

    Depth-first ordering: the target of a symbol transition is emitted
    immediately after its source, and ties among epsilon successors are
    broken in favor of the earliest-constructed transition.
    """
    indeg = [0] * n
    for src in range(n):
        for dst, _label, back in out_edges[src]:
            if not back:
                indeg[dst] += 1
    rank = [0] * n
    next_rank = 1
    stack = [start]
    while stack:
        u = stack.pop()
        rank[u] = next_rank
        next_rank += 1
        ready_eps = []
        ready_sym = None
        for dst, label, back in out_edges[u]:
            if back:
                continue
            indeg[dst] -= 1
            if indeg[dst] == 0:
                if label is EPSILON:
                    ready_eps.append(dst)
                else:
                    ready_sym = dst
        for v in reversed(ready_eps):
            stack.append(v)
        if ready_sym is not None:
            stack.append(ready_sym)
    if next_rank != n + 1:
        raise ValueError("cycle detected in forward transition graph")
    return rank


def thompson(tree: ParseTree) -> Tnfa:
    """Build the automaton for a parse tree, states renumbered 1..2k."""
    out_edges: List[List[Tuple[int, Optional[int], bool]]] = []
    edge_list: List[Tuple[int, int, Optional[int], bool]] = []
    pair: Dict[int, Tuple[int, int]] = {}

    def new_state() -> int:
        out_edges.append([])
        return len(out_edges) - 1

    def add_edge(src: int, dst: int, label: Optional[int], back: bool = False):
        out_edges[src].append((dst, label, back))
        edge_list.append((src, dst, label, back))

    # iterative post-order so deep trees cannot hit the recursion limit
    order: List[int] = []
    stack = [(tree.root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            order.append(v)
            continue
        stack.append((v, True))
        for c in reversed(tree.children(v)):
            stack.append((c, False))

    for v in order:
        node = tree.nodes[v]
        theta, phi = new_state(), new_state()
        if node.kind == CHAR:
            add_edge(theta, phi, node.sym)
        elif node.kind == CONCAT:
            s, t = (pair[c] for c in node.children)
            add_edge(theta, s[0], EPSILON)
            add_edge(s[1], t[0], EPSILON)
            add_edge(t[1], phi, EPSILON)
        elif node.kind == UNION:
            s, t = (pair[c] for c in node.children)
            add_edge(theta, s[0], EPSILON)
            add_edge(theta, t[0], EPSILON)
            add_edge(s[1], phi, EPSILON)
            add_edge(t[1], phi, EPSILON)
        elif node.kind == STAR:
            s = pair[node.children[0]]
            add_edge(theta, s[0], EPSILON)
            add_edge(theta, phi, EPSILON)
            add_edge(s[1], phi, EPSILON)
            add_edge(s[1], s[0], EPSILON, back=True)
        else:
            raise ValueError("unknown node kind: %r" % node.kind)
        pair[v] = (theta, phi)

    n = len(out_edges)
    rank = _toposort(n, out_edges, pair[tree.root][0])
    transitions = [
        Transition(rank[src], rank[dst], label, back)
        for src, dst, label, back in edge_list
    ]
    assoc = {v: (rank[theta], rank[phi]) for v, (theta, phi) in pair.items()}
    return Tnfa(tree, n, transitions, assoc)


def topo_order(tnfa: Tnfa) -> Dict[int, int]:
    """Topological numbering of the states (identity after thompson())."""
    out_edges: List[List[Tuple[int, Optional[int], bool]]] = [
        [] for _ in range(tnfa.n)
    ]
    for t in tnfa.transitions:
        out_edges[t.src - 1].append((t.dst - 1, t.label, t.back))
    rank = _toposort(tnfa.n, out_edges, tnfa.start - 1)
    return {s + 1: rank[s] for s in range(tnfa.n)}


# ---------------------------------------------------------------------------
# Naive state-set simulation: the reference semantics for all backends.


def _move_value(tnfa: Tnfa, value: int, sym: int) -> int:
    m = tnfa.n
    out = 0
    for src, dst in tnfa.sym_pairs.get(sym, ()):
        if (value >> (m - src)) & 1:
            out |= 1 << (m - dst)
    return out


def _close_value(tnfa: Tnfa, value: int) -> int:
    m = tnfa.n
    eps_out = tnfa.eps_out
    out = value
    stack = []
    v = value
    while v:
        low = v & -v
        stack.append(m - low.bit_length() + 1)
        v ^= low
    while stack:
        u = stack.pop()
        for w in eps_out[u]:
            b = 1 << (m - w)
            if not out & b:
                out |= b
                stack.append(w)
    return out


def naive_move(tnfa: Tnfa, s: StateSet, sym) -> StateSet:
    """States reachable from s by one transition labeled sym."""
    if s.m != tnfa.n:
        raise ValueError("state set size %d does not match automaton" % s.m)
    return StateSet(tnfa.n, _move_value(tnfa, s.value, _as_symbol(sym)))


def naive_close(tnfa: Tnfa, s: StateSet) -> StateSet:
    """Epsilon closure of s (graph search; includes s itself)."""
    if s.m != tnfa.n:
        raise ValueError("state set size %d does not match automaton" % s.m)
    return StateSet(tnfa.n, _close_value(tnfa, s.value))


def naive_match(tnfa: Tnfa, q) -> bool:
    """Full-string membership by stepwise Move/Close simulation."""
    if isinstance(q, str):
        q = q.encode("utf-8")
    value = _close_value(tnfa, 1 << (tnfa.n - tnfa.start))
    for byte in q:
        value = _close_value(tnfa, _move_value(tnfa, value, byte))
    return bool((value >> (tnfa.n - tnfa.accept)) & 1)
