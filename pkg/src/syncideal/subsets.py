"""Power and pair automata, synchronizing-word languages, language equality.

Subsets of the base state set are bit masks.  Every singleton is merged into
one absorbing sink ``s``, so the power automaton read from the full state set
accepts exactly the synchronizing words.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .core import ALPHABET, LETTERS, Dfa, ResourceLimitError, word_of

DEFAULT_SUBSET_LIMIT = 1_000_000


@dataclass(frozen=True)
class SubsetDfa:
    """Deterministic automaton on subsets of a base DFA's states.

    ``subsets[i]`` is the set carried by state ``i``; the sink carries None.
    """

    base_state_count: int
    subsets: tuple[frozenset[int] | None, ...]
    delta: tuple[tuple[int, int], ...]
    sink: int | None
    initial: int | None

    @property
    def state_count(self) -> int:
        return len(self.subsets)

    def index(self, subset) -> int:
        """State id of `subset`; any singleton resolves to the sink."""
        subset = frozenset(subset)
        if len(subset) == 1:
            if self.sink is None:
                raise KeyError("sink is not reachable in this automaton")
            return self.sink
        return self.subsets.index(subset)

    def labels(self) -> list[str]:
        return ["s" if s is None else "{" + ",".join(map(str, sorted(s))) + "}" for s in self.subsets]

    def as_dfa(self) -> Dfa:
        """Re-encode as an ordinary acceptor with final state ``{s}``."""
        finals = frozenset() if self.sink is None else frozenset({self.sink})
        return Dfa(self.delta, self.initial, finals)


def _mask(states) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def _members(mask: int) -> frozenset[int]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return frozenset(out)


def _image(d: Dfa, mask: int, x: int) -> int:
    out = 0
    q = 0
    delta = d.delta
    while mask:
        if mask & 1:
            out |= 1 << delta[q][x]
        mask >>= 1
        q += 1
    return out


def _is_singleton(mask: int) -> bool:
    return mask & (mask - 1) == 0


SINK = -1


def _explore(d: Dfa, starts: list[int], limit: int | None):
    """Breadth-first closure from `starts`; singletons collapse to SINK."""
    ids: dict[int, int] = {}
    order: list[int] = []
    rows: list[list[int]] = []

    def intern(mask: int) -> int:
        key = SINK if _is_singleton(mask) else mask
        if key not in ids:
            if limit is not None and len(order) >= limit:
                raise ResourceLimitError("subset automaton state count", limit)
            ids[key] = len(order)
            order.append(key)
            rows.append([0, 0])
        return ids[key]

    for s in starts:
        intern(s)
    head = 0
    while head < len(order):
        key = order[head]
        for x in LETTERS:
            if key == SINK:
                rows[head][x] = head
            else:
                rows[head][x] = intern(_image(d, key, x))
        head += 1
    subsets = tuple(None if k == SINK else _members(k) for k in order)
    sink = ids.get(SINK)
    return subsets, tuple(tuple(r) for r in rows), sink


def power_automaton(d: Dfa, limit: int | None = DEFAULT_SUBSET_LIMIT) -> SubsetDfa:
    """Subsets reachable from the full state set, singletons merged to ``s``."""
    subsets, delta, sink = _explore(d, [(1 << d.state_count) - 1], limit)
    return SubsetDfa(d.state_count, subsets, delta, sink, initial=0)


def pair_automaton(d: Dfa) -> SubsetDfa:
    """All 2-element subsets in lexicographic order, then the sink."""
    m = d.state_count
    pairs = list(combinations(range(m), 2))
    ids = {_mask(p): i for i, p in enumerate(pairs)}
    sink = len(pairs)
    delta = []
    for p in pairs:
        row = []
        for x in LETTERS:
            img = _image(d, _mask(p), x)
            row.append(sink if _is_singleton(img) else ids[img])
        delta.append(tuple(row))
    delta.append((sink, sink))
    subsets = tuple(frozenset(p) for p in pairs) + (None,)
    return SubsetDfa(m, subsets, tuple(delta), sink, initial=None)


def is_synchronizing(d: Dfa) -> bool:
    """Every pair of states can be merged by some word."""
    pa = pair_automaton(d)
    preds: list[list[int]] = [[] for _ in range(pa.state_count)]
    for i, row in enumerate(pa.delta):
        for t in row:
            preds[t].append(i)
    seen = {pa.sink}
    todo = [pa.sink]
    while todo:
        v = todo.pop()
        for u in preds[v]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == pa.state_count


def syn_acceptor(d: Dfa, limit: int | None = DEFAULT_SUBSET_LIMIT) -> Dfa:
    """A DFA accepting exactly the synchronizing words of `d`."""
    return power_automaton(d, limit).as_dfa()


class Comparison(NamedTuple):
    equal: bool
    counterexample: str | None = None

    def __bool__(self):
        return self.equal


def languages_equal(d1: Dfa, d2: Dfa) -> Comparison:
    """Compare the languages of two acceptors.

    On inequality, the counterexample is the shortlex-least word accepted by
    exactly one of them.
    """
    for d in (d1, d2):
        if d.initial is None or d.finals is None:
            raise ValueError("languages_equal needs acceptors with initial and final states")
    start = (d1.initial, d2.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in d1.finals) != (q in d2.finals):
            letters = []
            while parent[pair] is not None:
                pair, x = parent[pair]
                letters.append(x)
            return Comparison(False, word_of(reversed(letters)))
        for x in LETTERS:
            nxt = (d1.delta[p][x], d2.delta[q][x])
            if nxt not in parent:
                parent[nxt] = (pair, x)
                queue.append(nxt)
    return Comparison(True)


def shortest_sync_word(d: Dfa, limit: int | None = DEFAULT_SUBSET_LIMIT) -> str | None:
    """Shortlex-least reset word of `d`, or None if `d` is not synchronizing.

    A one-state automaton is reset by the empty word.
    """
    if d.state_count == 1:
        return ""
    pa = power_automaton(d, limit)
    if pa.sink is None:
        return None
    parent: dict[int, tuple[int, int] | None] = {0: None}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        if v == pa.sink:
            letters = []
            while parent[v] is not None:
                v, x = parent[v]
                letters.append(x)
            return "".join(ALPHABET[x] for x in reversed(letters))
        for x in LETTERS:
            t = pa.delta[v][x]
            if t not in parent:
                parent[t] = (v, x)
                queue.append(t)
    return None  # pragma: no cover - sink is reachable by construction


def equivalence_classes(d: Dfa) -> list[int]:
    """Moore partition refinement of an acceptor; returns a class id per state."""
    if d.finals is None:
        raise ValueError("equivalence_classes needs final states")
    cls = [1 if q in d.finals else 0 for q in d.states]
    while True:
        sig = [(cls[q], cls[d.delta[q][0]], cls[d.delta[q][1]]) for q in d.states]
        ids: dict[tuple, int] = {}
        new = [ids.setdefault(s, len(ids)) for s in sig]
        if len(ids) == len(set(cls)):
            return new
        cls = new
