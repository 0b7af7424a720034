"""Complete binary DFAs, word actions, connectivity, isomorphism and I/O.

States are ``0..m-1``; letters are encoded ``a = 0`` and ``b = 1``.  Words are
passed around as plain strings over ``"ab"``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

ALPHABET = "ab"
LETTERS = (0, 1)


class AutomatonError(ValueError):
    """Raised for invalid states, words or automaton tables."""


class ParseError(AutomatonError):
    """Raised when an automaton document cannot be read."""

    def __init__(self, message: str, position: str | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class ResourceLimitError(RuntimeError):
    """Raised when a construction grows past its configured cap."""

    def __init__(self, what: str, limit: int):
        self.limit = limit
        super().__init__(f"{what} exceeds the configured limit of {limit}")


def complement(x: int) -> int:
    return 1 - x


def check_word(w: str, allow_empty: bool = False) -> str:
    """Return `w` unchanged if it is a valid word over ``{a, b}``."""
    if not isinstance(w, str):
        raise AutomatonError(f"word must be a string, got {type(w).__name__}")
    if not w and not allow_empty:
        raise AutomatonError("the empty word is not allowed here")
    bad = set(w) - set(ALPHABET)
    if bad:
        raise AutomatonError(f"invalid letter(s) {''.join(sorted(bad))!r} in word {w!r}")
    return w


def letters_of(w: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(w, str):
        check_word(w, allow_empty=True)
        return tuple(ALPHABET.index(c) for c in w)
    out = tuple(w)
    if any(x not in LETTERS for x in out):
        raise AutomatonError(f"letter codes must be 0 or 1, got {out!r}")
    return out


def word_of(letters: Iterable[int]) -> str:
    return "".join(ALPHABET[x] for x in letters)


def swap_letters(w: str) -> str:
    return w.translate(str.maketrans("ab", "ba"))


@dataclass(frozen=True)
class Dfa:
    """A complete DFA over ``{a, b}``.

    ``delta[q] == (q.a, q.b)``.  ``initial`` and ``finals`` are only set when
    the automaton is used as an acceptor.
    """

    delta: tuple[tuple[int, int], ...]
    initial: int | None = None
    finals: frozenset[int] | None = None

    def __post_init__(self):
        delta = tuple(tuple(int(t) for t in row) for row in self.delta)
        m = len(delta)
        if m == 0:
            raise AutomatonError("a DFA needs at least one state")
        for q, row in enumerate(delta):
            if len(row) != 2:
                raise AutomatonError(f"row {q} must have exactly 2 entries, got {len(row)}")
            for t in row:
                if not 0 <= t < m:
                    raise AutomatonError(f"transition target {t} of state {q} out of range")
        object.__setattr__(self, "delta", delta)
        if self.initial is not None and not 0 <= self.initial < m:
            raise AutomatonError(f"initial state {self.initial} out of range")
        if self.finals is not None:
            finals = frozenset(int(f) for f in self.finals)
            if any(not 0 <= f < m for f in finals):
                raise AutomatonError(f"final states {sorted(finals)} out of range")
            object.__setattr__(self, "finals", finals)

    @property
    def state_count(self) -> int:
        return len(self.delta)

    @property
    def states(self) -> range:
        return range(len(self.delta))

    def step(self, q: int, x: int) -> int:
        return self.delta[q][x]

    def letter_map(self, x: int) -> tuple[int, ...]:
        return tuple(row[x] for row in self.delta)

    def swapped(self) -> "Dfa":
        """The same automaton with the roles of ``a`` and ``b`` exchanged."""
        return Dfa(tuple((b, a) for a, b in self.delta), self.initial, self.finals)

    def undecorated(self) -> "Dfa":
        return Dfa(self.delta)

    def accepts(self, u: str) -> bool:
        if self.initial is None or self.finals is None:
            raise AutomatonError("automaton has no initial/final decoration")
        return apply_word(self, self.initial, u) in self.finals

    def __str__(self):
        return format_table(self)


def apply_word(d: Dfa, q: int, w: str | Sequence[int]) -> int:
    """Return the state reached from `q` after reading `w`."""
    if not isinstance(q, int) or not 0 <= q < d.state_count:
        raise AutomatonError(f"state {q!r} out of range for a {d.state_count}-state DFA")
    delta = d.delta
    for x in letters_of(w):
        q = delta[q][x]
    return q


Transformation = tuple[int, ...]


def transformation_of(d: Dfa, w: str | Sequence[int]) -> Transformation:
    """The map ``q -> q.w`` as a tuple indexed by state."""
    word = letters_of(w)
    if not word:
        raise AutomatonError("transformation_of needs a nonempty word")
    image = list(d.states)
    for x in word:
        col = d.letter_map(x)
        image = [col[q] for q in image]
    return tuple(image)


def compose(s: Transformation, t: Transformation) -> Transformation:
    """Apply `s` first, then `t`."""
    return tuple(t[q] for q in s)


def strongly_connected_components(d: Dfa) -> list[list[int]]:
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order of the condensation."""
    m = d.state_count
    index = [-1] * m
    low = [0] * m
    on_stack = [False] * m
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(m):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            if i < 2:
                work.append((v, i + 1))
                u = d.delta[v][i]
                if index[u] == -1:
                    work.append((u, 0))
                elif on_stack[u]:
                    low[v] = min(low[v], index[u])
                continue
            # all successors done: pull up low-links from tree children
            for u in d.delta[v]:
                if on_stack[u]:
                    low[v] = min(low[v], low[u])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                comps.append(sorted(comp))
    return comps


def is_strongly_connected(d: Dfa) -> bool:
    return len(strongly_connected_components(d)) == 1


def are_isomorphic(d1: Dfa, d2: Dfa) -> tuple[int, ...] | None:
    """Find a bijection ``phi`` with ``phi(q.x) == phi(q).x`` for every state
    and letter, or return None.  Initial/final decorations are ignored."""
    m = d1.state_count
    if m != d2.state_count:
        return None

    def extend(phi: list[int], inv: list[int], seed: int, image: int) -> bool:
        # Propagate seed -> image through both letter actions; record changes
        # in `phi`/`inv` in place.  Returns False on conflict.
        todo = [(seed, image)]
        while todo:
            p, r = todo.pop()
            if phi[p] == -1 and inv[r] == -1:
                phi[p], inv[r] = r, p
                todo.extend((d1.delta[p][x], d2.delta[r][x]) for x in LETTERS)
            elif phi[p] != r or inv[r] != p:
                return False
        return True

    def search(phi: list[int], inv: list[int]) -> list[int] | None:
        try:
            p = phi.index(-1)
        except ValueError:
            return phi
        for r in range(m):
            if inv[r] != -1:
                continue
            phi2, inv2 = phi[:], inv[:]
            if extend(phi2, inv2, p, r):
                found = search(phi2, inv2)
                if found is not None:
                    return found
        return None

    found = search([-1] * m, [-1] * m)
    return tuple(found) if found is not None else None


def relabel(d: Dfa, phi: Sequence[int]) -> Dfa:
    """The automaton with state ``q`` renamed to ``phi[q]``."""
    m = d.state_count
    delta = [None] * m
    for q in range(m):
        delta[phi[q]] = (phi[d.delta[q][0]], phi[d.delta[q][1]])
    initial = phi[d.initial] if d.initial is not None else None
    finals = frozenset(phi[f] for f in d.finals) if d.finals is not None else None
    return Dfa(tuple(delta), initial, finals)


# -- serialization ---------------------------------------------------------

def to_document(d: Dfa) -> dict:
    doc = {
        "states": d.state_count,
        "alphabet": list(ALPHABET),
        "delta": [list(row) for row in d.delta],
    }
    if d.initial is not None:
        doc["initial"] = d.initial
    if d.finals is not None:
        doc["finals"] = sorted(d.finals)
    return doc


def serialize(d: Dfa) -> str:
    return json.dumps(to_document(d))


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def from_document(doc) -> Dfa:
    if not isinstance(doc, dict):
        raise ParseError("automaton document must be a JSON object", "$")
    for key in ("states", "alphabet", "delta"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", "$")
    m = doc["states"]
    if not _is_int(m) or m < 1:
        raise ParseError("'states' must be a positive integer", "$.states")
    if doc["alphabet"] != list(ALPHABET):
        raise ParseError('\'alphabet\' must be ["a", "b"]', "$.alphabet")
    delta = doc["delta"]
    if not isinstance(delta, list):
        raise ParseError("'delta' must be an array", "$.delta")
    if len(delta) != m:
        raise ParseError(f"'delta' has {len(delta)} rows, expected {m}", "$.delta")
    for q, row in enumerate(delta):
        if not isinstance(row, list) or len(row) != 2:
            raise ParseError("each delta row must be an array of 2 integers", f"$.delta[{q}]")
        for x, t in enumerate(row):
            if not _is_int(t) or not 0 <= t < m:
                raise ParseError(f"transition target {t!r} out of range", f"$.delta[{q}][{x}]")
    initial = doc.get("initial")
    if initial is not None and (not _is_int(initial) or not 0 <= initial < m):
        raise ParseError(f"initial state {initial!r} out of range", "$.initial")
    finals = doc.get("finals")
    if finals is not None:
        if not isinstance(finals, list):
            raise ParseError("'finals' must be an array", "$.finals")
        for i, f in enumerate(finals):
            if not _is_int(f) or not 0 <= f < m:
                raise ParseError(f"final state {f!r} out of range", f"$.finals[{i}]")
        finals = frozenset(finals)
    return Dfa(tuple(tuple(row) for row in delta), initial, finals)


def parse(text: str) -> Dfa:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_document(doc)


def to_dot(d: Dfa, labels: Sequence[str] | None = None, name: str = "") -> str:
    """Graphviz text for `d`.  Parallel edges with the same target are merged
    into one edge labelled ``a,b``."""
    if labels is None:
        labels = [str(q) for q in d.states]
    head = f"digraph {name} {{" if name else "digraph {"
    lines = [head]
    for q in d.states:
        attrs = [f'label="{labels[q]}"']
        if d.finals is not None and q in d.finals:
            attrs.append("shape=doublecircle")
        lines.append(f"  q{q} [{', '.join(attrs)}];")
    if d.initial is not None:
        lines.append("  start [shape=point];")
        lines.append(f"  start -> q{d.initial};")
    for q in d.states:
        ta, tb = d.delta[q]
        if ta == tb:
            lines.append(f'  q{q} -> q{ta} [label="a,b"];')
        else:
            lines.append(f'  q{q} -> q{ta} [label="a"];')
            lines.append(f'  q{q} -> q{tb} [label="b"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_table(d: Dfa, labels: Sequence[str] | None = None) -> str:
    """Plain transition table; ``->`` marks the initial state, ``*`` finals."""
    if labels is None:
        labels = [str(q) for q in d.states]
    width = max(5, max(len(s) for s in labels))
    rows = [f"   {'state':>{width}}  {'a':>{width}}  {'b':>{width}}"]
    for q in d.states:
        mark = "->" if q == d.initial else "  "
        star = "*" if d.finals is not None and q in d.finals else " "
        ta, tb = d.delta[q]
        rows.append(f"{mark}{star}{labels[q]:>{width}}  {labels[ta]:>{width}}  {labels[tb]:>{width}}")
    return "\n".join(rows)
