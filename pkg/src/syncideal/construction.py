"""Strongly connected automata whose synchronizing words form ``Σ*wΣ*``.

`construct_sc` grows an (n+1)-state automaton ``B`` one state per prefix of
``w`` so that the pair automaton of ``B`` contains a copy of the minimal DFA
of the ideal: prefix ``w[:i]`` is carried by the pair ``(i+1, q_i)`` and the
whole word by the sink.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import ALPHABET, AutomatonError, Dfa, check_word, complement, swap_letters
from .ideal import minimal_ideal_dfa

# First-step wiring: 0.a=2, 0.b=1, 1.a=1, 1.b=0.
VARIANT_1 = 1
_FIRST_STEP = ((0, "a", 2), (0, "b", 1), (1, "a", 1), (1, "b", 0))


class ConstructionError(AssertionError):
    """The pair-matching step found no consistent target; carries the trace."""

    def __init__(self, message: str, trace: "ConstructionTrace"):
        self.trace = trace
        super().__init__(f"{message}\n{trace.format()}")


@dataclass(frozen=True)
class TraceStep:
    index: int
    prefix: str
    pair: tuple[int, int] | None  # None stands for the sink
    fixed: tuple[tuple[int, str, int], ...]  # (state, letter, target)
    target_prefix: int | None = None  # j, where the complementary letter leads


@dataclass
class ConstructionTrace:
    word: str
    variant: int = VARIANT_1
    steps: list[TraceStep] = field(default_factory=list)
    swapped: bool = False

    @property
    def pairs(self) -> list[tuple[int, int] | None]:
        return [s.pair for s in self.steps]

    def format(self) -> str:
        rows = [f"{'i':>3}  {'w[1..i]':<{max(7, len(self.word))}}  {'pair':<8}  {'j':>3}  fixed"]
        for s in self.steps:
            pair = "s" if s.pair is None else f"({s.pair[0]},{s.pair[1]})"
            j = "" if s.target_prefix is None else str(s.target_prefix)
            fixed = ", ".join(f"{q}.{x}={t}" for q, x, t in s.fixed)
            prefix = s.prefix or "ε"
            rows.append(f"{s.index:>3}  {prefix:<{max(7, len(self.word))}}  {pair:<8}  {j:>3}  {fixed}")
        return "\n".join(rows)

    def to_list(self) -> list[dict]:
        return [
            {
                "i": s.index,
                "prefix": s.prefix,
                "pair": None if s.pair is None else list(s.pair),
                "j": s.target_prefix,
                "fixed": [[q, x, t] for q, x, t in s.fixed],
            }
            for s in self.steps
        ]


def _swap_trace(trace: ConstructionTrace) -> ConstructionTrace:
    swap = {"a": "b", "b": "a"}
    steps = [
        TraceStep(s.index, swap_letters(s.prefix), s.pair,
                  tuple((q, swap[x], t) for q, x, t in s.fixed), s.target_prefix)
        for s in trace.steps
    ]
    return ConstructionTrace(swap_letters(trace.word), trace.variant, steps, swapped=True)


def _single_letter() -> tuple[Dfa, ConstructionTrace]:
    # b swaps the two states, a sends both to 0
    delta = ((0, 1), (0, 0))
    trace = ConstructionTrace("a", steps=[
        TraceStep(0, "", (0, 1), ()),
        TraceStep(1, "a", None, ((0, "a", 0), (0, "b", 1), (1, "a", 0), (1, "b", 0))),
    ])
    return Dfa(delta), trace


def _unary(n: int) -> tuple[Dfa, ConstructionTrace]:
    delta = [(2, 1), (1, 0)]
    delta += [(i + 1, 1) for i in range(2, n)]
    delta.append((1, 1))
    steps = [TraceStep(0, "", (0, 1), ()),
             TraceStep(1, "a", (2, 1), _FIRST_STEP)]
    steps += [TraceStep(i, "a" * i, (i + 1, 1), ((i, "a", i + 1), (i, "b", 1)), 0)
              for i in range(2, n)]
    steps.append(TraceStep(n, "a" * n, None, ((n, "a", 1), (n, "b", 1)), 0))
    return Dfa(tuple(delta)), ConstructionTrace("a" * n, steps=steps)


def _inductive(w: str) -> tuple[Dfa, ConstructionTrace]:
    """Pair-matching construction for a word of length >= 2 starting with a."""
    n = len(w)
    letters = [ALPHABET.index(c) for c in w]
    target = minimal_ideal_dfa(w).delta
    delta: list[list[int | None]] = [[None, None] for _ in range(n + 1)]
    delta[0] = [2, 1]
    delta[1] = [1, 0]
    pairs: list[tuple[int, int]] = [(0, 1), (2, 1)]
    trace = ConstructionTrace(w, steps=[
        TraceStep(0, "", (0, 1), ()),
        TraceStep(1, w[:1], (2, 1), _FIRST_STEP),
    ])
    for i in range(2, n + 1):
        x = letters[i - 1]
        c = complement(x)
        q_prev = pairs[i - 1][1]
        if i < n:
            delta[i][x] = i + 1
            q_i = delta[q_prev][x]
            pairs.append((i + 1, q_i))
        else:
            # pair (n, q_{n-1}) must collapse to the sink under w[n]
            delta[i][x] = delta[q_prev][x]
        j = target[i - 1][c]
        p_j, q_j = pairs[j]
        hit = delta[q_prev][c]
        if hit == q_j:
            delta[i][c] = p_j
        elif hit == p_j:
            delta[i][c] = q_j
        else:
            trace.steps.append(TraceStep(i, w[:i], pairs[i] if i < n else None,
                                         ((i, ALPHABET[x], delta[i][x]),), j))
            raise ConstructionError(
                f"step {i}: q_{i-1}.{ALPHABET[c]} = {hit} is neither p_{j} = {p_j} nor q_{j} = {q_j}",
                trace)
        trace.steps.append(TraceStep(
            i, w[:i], pairs[i] if i < n else None,
            ((i, ALPHABET[x], delta[i][x]), (i, ALPHABET[c], delta[i][c])), j))
    return Dfa(tuple(tuple(row) for row in delta)), trace


def construct_sc(w: str) -> tuple[Dfa, ConstructionTrace]:
    """Strongly connected synchronizing DFA with ``|w|+1`` states whose
    synchronizing words are exactly those containing `w`.

    Returns the automaton together with the per-step pair associations.
    Words starting with ``b`` are built on the letter-swapped word.
    """
    check_word(w)
    if w[0] == "b":
        d, trace = construct_sc(swap_letters(w))
        return d.swapped(), _swap_trace(trace)
    if len(w) == 1:
        return _single_letter()
    if "b" not in w:
        return _unary(len(w))
    return _inductive(w)


def family_A(n: int) -> Dfa:
    """First (n+1)-state strongly connected presenter of ``Σ*a^(n-1)bΣ*``."""
    if n < 2:
        raise AutomatonError(f"family_A needs n >= 2, got {n}")
    delta = [(0, 1)]
    delta += [(i + 1, 0) for i in range(1, n)]
    delta.append((n, 1))
    return Dfa(tuple(delta))


def family_B(n: int) -> Dfa:
    """Second (n+1)-state presenter of ``Σ*a^(n-1)bΣ*``, not isomorphic to
    `family_A`.  The wiring depends on the parity of n."""
    if n < 3:
        raise AutomatonError(f"family_B needs n >= 3, got {n}")
    if n % 2 == 1:
        delta = [(i + 1, 0 if i % 2 == 1 else 1) for i in range(n)]
        delta.append((n - 1, 1))
    else:
        delta = [(1, 2), (0, 2)]
        delta += [(i + 1, 0) for i in range(2, n)]
        delta.append((0, 0))
    return Dfa(tuple(delta))
