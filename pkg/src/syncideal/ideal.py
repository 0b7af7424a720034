"""Minimal automaton of the principal ideal generated by a word."""
from __future__ import annotations

from .core import ALPHABET, Dfa, check_word


def border_table(w: str) -> list[int]:
    """``border[i-1]`` is the length of the longest proper border of ``w[:i]``.

    Standard failure function, linear time.
    """
    check_word(w)
    n = len(w)
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return border


def minimal_ideal_dfa(w: str) -> Dfa:
    """The (n+1)-state minimal DFA of ``Σ*wΣ*``.

    State ``i`` stands for the prefix ``w[:i]``; state ``n`` is the accepting
    sink.  Initial state 0.
    """
    check_word(w)
    n = len(w)
    border = border_table(w)
    delta = []
    for i in range(n):
        row = [0, 0]
        for x, c in enumerate(ALPHABET):
            if c == w[i]:
                row[x] = i + 1
                continue
            # longest prefix of w that is a suffix of w[:i] + c
            k = i
            while k and w[k] != c:
                k = border[k - 1]
            row[x] = k + 1 if w[k] == c else 0
        delta.append(tuple(row))
    delta.append((n, n))
    return Dfa(tuple(delta), initial=0, finals=frozenset({n}))


def contains_factor(u: str, w: str) -> bool:
    """Naive scan for `w` as a contiguous factor of `u`."""
    check_word(u, allow_empty=True)
    check_word(w)
    n = len(w)
    for start in range(len(u) - n + 1):
        if all(u[start + k] == w[k] for k in range(n)):
            return True
    return False
