"""Transition semigroups and the syntactic complexity of ``Σ*wΣ*``."""
from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass

from .core import (ALPHABET, AutomatonError, Dfa, ResourceLimitError, Transformation,
                   check_word, compose)
from .ideal import minimal_ideal_dfa
from .subsets import DEFAULT_SUBSET_LIMIT, languages_equal, syn_acceptor

DEFAULT_CLOSURE_LIMIT = 2_000_000


class PresenterError(ValueError):
    pass


@dataclass(frozen=True)
class SemigroupClosure:
    """Transformations induced by nonempty words, each with the shortlex-least
    word inducing it."""

    witnesses: dict[Transformation, str]

    @property
    def size(self) -> int:
        return len(self.witnesses)

    @property
    def elements(self) -> list[Transformation]:
        return list(self.witnesses)

    def __len__(self):
        return len(self.witnesses)

    def __contains__(self, t):
        return tuple(t) in self.witnesses


def transition_semigroup(d: Dfa, limit: int | None = DEFAULT_CLOSURE_LIMIT) -> SemigroupClosure:
    """Breadth-first closure of the letter maps under composition."""
    gens = [d.letter_map(x) for x in (0, 1)]
    witnesses: dict[Transformation, str] = {}
    queue: deque[Transformation] = deque()
    for x, g in enumerate(gens):
        if g not in witnesses:
            witnesses[g] = ALPHABET[x]
            queue.append(g)
    while queue:
        t = queue.popleft()
        word = witnesses[t]
        for x, g in enumerate(gens):
            u = compose(t, g)
            if u not in witnesses:
                if limit is not None and len(witnesses) >= limit:
                    raise ResourceLimitError("transition semigroup size", limit)
                witnesses[u] = word + ALPHABET[x]
                queue.append(u)
    return SemigroupClosure(witnesses)


def syntactic_complexity(w: str, limit: int | None = DEFAULT_CLOSURE_LIMIT) -> int:
    """Size of the syntactic semigroup of ``Σ*wΣ*``, by brute closure on its
    minimal automaton."""
    return transition_semigroup(minimal_ideal_dfa(w), limit).size


def inner_factors(w: str) -> set[str]:
    """Distinct nonempty factors ``u`` with ``w = t u s`` for nonempty t, s."""
    check_word(w)
    core = w[1:-1]
    return {core[i:j] for i in range(len(core)) for j in range(i + 1, len(core) + 1)}


def count_distinct_substrings(s: str) -> int:
    """Number of distinct nonempty substrings, via a suffix automaton."""
    length = [0]
    link = [-1]
    nxt: list[dict[str, int]] = [{}]
    last = 0
    for ch in s:
        cur = len(length)
        length.append(length[last] + 1)
        link.append(0)
        nxt.append({})
        p = last
        while p != -1 and ch not in nxt[p]:
            nxt[p][ch] = cur
            p = link[p]
        if p != -1:
            q = nxt[p][ch]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                nxt.append(dict(nxt[q]))
                while p != -1 and nxt[p].get(ch) == q:
                    nxt[p][ch] = clone
                    p = link[p]
                link[q] = link[cur] = clone
        last = cur
    return sum(length[v] - length[link[v]] for v in range(1, len(length)))


def inner_factor_count(w: str) -> int:
    check_word(w)
    return count_distinct_substrings(w[1:-1])


def is_exceptional(w: str) -> bool:
    """True for the shapes a^(n-1)b, ab^(n-1), ba^(n-1), b^(n-1)a (n >= 2)."""
    check_word(w)
    n = len(w)
    if n < 2:
        return False
    return w in {"a" * (n - 1) + "b", "a" + "b" * (n - 1), "b" + "a" * (n - 1), "b" * (n - 1) + "a"}


def predicted_sigma(w: str) -> int:
    check_word(w)
    n = len(w)
    if n < 2:
        raise AutomatonError("the closed formula is only stated for words of length >= 2")
    if is_exceptional(w):
        return n * n
    return n * n + 1 + inner_factor_count(w)


@dataclass(frozen=True)
class SigmaReport:
    word: str
    n: int
    inner_factors: int
    sigma_predicted: int | None
    sigma_computed: int
    exceptional: bool

    @property
    def match(self) -> bool:
        return self.sigma_predicted == self.sigma_computed

    def to_dict(self) -> dict:
        return {**asdict(self), "match": self.match}


def sigma_report(w: str, limit: int | None = DEFAULT_CLOSURE_LIMIT) -> SigmaReport:
    check_word(w)
    n = len(w)
    return SigmaReport(
        word=w,
        n=n,
        inner_factors=inner_factor_count(w),
        sigma_predicted=predicted_sigma(w) if n >= 2 else None,
        sigma_computed=syntactic_complexity(w, limit),
        exceptional=is_exceptional(w),
    )


def homomorphism_check(b: Dfa, w: str, subset_limit: int | None = DEFAULT_SUBSET_LIMIT,
                       closure_limit: int | None = DEFAULT_CLOSURE_LIMIT) -> bool:
    """Check that sending the action of a word on `b` to its action on the
    minimal DFA of ``Σ*wΣ*`` is a well-defined map.

    Requires the synchronizing words of `b` to be exactly ``Σ*wΣ*``.  The
    map is multiplicative by construction, since it is read off the
    diagonal closure of the paired letter actions.
    """
    a_w = minimal_ideal_dfa(w)
    if not languages_equal(syn_acceptor(b, subset_limit), a_w):
        raise PresenterError(f"not a synchronizing presenter of the ideal generated by {w!r}")
    gens = [(b.letter_map(x), a_w.letter_map(x)) for x in (0, 1)]
    image: dict[Transformation, Transformation] = {}
    seen = set()
    queue = deque()
    for g in gens:
        if g not in seen:
            seen.add(g)
            queue.append(g)
    while queue:
        tb, ta = queue.popleft()
        if image.setdefault(tb, ta) != ta:
            return False
        for gb, ga in gens:
            pair = (compose(tb, gb), compose(ta, ga))
            if pair not in seen:
                if closure_limit is not None and len(seen) >= closure_limit:
                    raise ResourceLimitError("paired transition semigroup size", closure_limit)
                seen.add(pair)
                queue.append(pair)
    return True


def _staircase_check(k: int):
    if not isinstance(k, int) or k < 4 or k % 2:
        raise AutomatonError(f"staircase needs an even k >= 4, got {k!r}")


def staircase_word(k: int) -> str:
    """``a b^2 a^3 b^4 ... a^(k-1) b^k`` for even k >= 4."""
    _staircase_check(k)
    return "".join(("a" if i % 2 else "b") * i for i in range(1, k + 1))


def staircase_sigma_formula(k: int) -> int:
    """Closed form ``3/2 n^2 + 5/2 n - kn - 3k + 5`` with ``n = k(k+1)/2``."""
    _staircase_check(k)
    n = k * (k + 1) // 2
    twice = 3 * n * n + 5 * n - 2 * k * n - 6 * k + 10
    assert twice % 2 == 0
    return twice // 2


def padded_staircase_word(n: int) -> str:
    """Staircase-like word of arbitrary length n >= 10.

    Uses the largest even k with ``1+...+k <= n``; the remainder is appended
    as a block of a's, or as ``a^(k+1)`` followed by b's when it is longer
    than k+1.
    """
    if n < 10:
        raise AutomatonError(f"padded staircase needs n >= 10, got {n}")
    k = 4
    while (k + 2) * (k + 3) // 2 <= n:
        k += 2
    base = staircase_word(k)
    rest = n - len(base)
    if rest <= k + 1:
        return base + "a" * rest
    return base + "a" * (k + 1) + "b" * (rest - k - 1)
