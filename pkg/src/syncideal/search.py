"""Exhaustive search for small automata whose synchronizing words are ``Σ*wΣ*``.

Candidates are complete binary DFAs on k states, enumerated in lexicographic
order of the flattened transition table.  There are ``k**(2k)`` of them, so
the default state budget is 4.
"""
from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .core import (Dfa, ResourceLimitError, are_isomorphic, check_word, is_strongly_connected,
                   to_document, transformation_of)
from .ideal import minimal_ideal_dfa
from .subsets import DEFAULT_SUBSET_LIMIT, is_synchronizing, languages_equal, syn_acceptor

DEFAULT_MAX_STATES = 4


class SearchLimitError(ValueError):
    pass


def candidate_count(k: int) -> int:
    return k ** (2 * k)


def _check_budget(k: int, max_states: int):
    if k < 1:
        raise SearchLimitError(f"state budget must be positive, got {k}")
    if k > max_states:
        raise SearchLimitError(
            f"refusing to enumerate {k}-state automata: {candidate_count(k):,} candidates "
            f"(cap is {max_states} states)")
    if k > DEFAULT_MAX_STATES:
        warnings.warn(f"enumerating {candidate_count(k):,} candidate automata on {k} states",
                      RuntimeWarning, stacklevel=3)


def _tables(k: int, first_row: tuple[int, int] | None = None) -> Iterator[tuple[tuple[int, int], ...]]:
    if first_row is None:
        heads = product(range(k), repeat=2)
    else:
        heads = [first_row]
    for head in heads:
        for flat in product(range(k), repeat=2 * (k - 1)):
            yield (head,) + tuple(zip(flat[::2], flat[1::2]))


def enumerate_dfas(k: int, synchronizing_only: bool = False, strongly_connected_only: bool = False,
                   max_states: int = DEFAULT_MAX_STATES) -> Iterator[Dfa]:
    """Yield every complete binary DFA on `k` states exactly once."""
    _check_budget(k, max_states)
    for table in _tables(k):
        d = Dfa(table)
        if strongly_connected_only and not is_strongly_connected(d):
            continue
        if synchronizing_only and not is_synchronizing(d):
            continue
        yield d


def is_presenter(d: Dfa, w: str, target: Dfa | None = None,
                 subset_limit: int | None = DEFAULT_SUBSET_LIMIT) -> bool:
    """True iff the synchronizing words of `d` are exactly ``Σ*wΣ*``."""
    if target is None:
        target = minimal_ideal_dfa(w)
    return languages_equal(syn_acceptor(d, subset_limit), target).equal


@dataclass
class _Chunk:
    examined: int = 0
    capped: int = 0
    presenters: list[Dfa] = field(default_factory=list)


def _scan(w: str, k: int, sc_only: bool, first_row, subset_limit) -> _Chunk:
    target = minimal_ideal_dfa(w)
    out = _Chunk()
    for table in _tables(k, first_row):
        out.examined += 1
        d = Dfa(table)
        if sc_only and not is_strongly_connected(d):
            continue
        # w itself must reset d
        if k > 1 and len(set(transformation_of(d, w))) != 1:
            continue
        if not is_synchronizing(d):
            continue
        try:
            if is_presenter(d, w, target, subset_limit):
                out.presenters.append(d)
        except ResourceLimitError:
            out.capped += 1
    return out


def _dedupe(dfas: list[Dfa]) -> list[Dfa]:
    kept: list[Dfa] = []
    for d in sorted(dfas, key=lambda d: d.delta):
        if not any(are_isomorphic(d, e) is not None for e in kept):
            kept.append(d)
    return kept


def _sweep(w: str, k: int, sc_only: bool, jobs: int, subset_limit) -> _Chunk:
    rows = list(product(range(k), repeat=2))
    if jobs > 1 and len(rows) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan, *zip(*[(w, k, sc_only, r, subset_limit) for r in rows])))
    else:
        parts = [_scan(w, k, sc_only, r, subset_limit) for r in rows]
    merged = _Chunk()
    for p in parts:
        merged.examined += p.examined
        merged.capped += p.capped
        merged.presenters.extend(p.presenters)
    merged.presenters = _dedupe(merged.presenters)
    return merged


def find_msas(w: str, k: int, sc_only: bool = False, jobs: int = 1,
              max_states: int = DEFAULT_MAX_STATES,
              subset_limit: int | None = DEFAULT_SUBSET_LIMIT) -> list[Dfa]:
    """All k-state automata with synchronizing words ``Σ*wΣ*``, one per
    isomorphism class (the lexicographically least table is kept)."""
    check_word(w)
    _check_budget(k, max_states)
    return _sweep(w, k, sc_only, jobs, subset_limit).presenters


@dataclass
class SearchReport:
    word: str
    max_states: int
    strongly_connected_only: bool
    candidates_examined: int = 0
    candidates_capped: int = 0
    presenters: list[Dfa] = field(default_factory=list)
    rc_established: int | None = None

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "max_states": self.max_states,
            "strongly_connected_only": self.strongly_connected_only,
            "candidates_examined": self.candidates_examined,
            "candidates_capped": self.candidates_capped,
            "rc_established": self.rc_established,
            "presenters": [to_document(d) for d in self.presenters],
        }


def reset_complexity(w: str, k_max: int, sc_only: bool = False, jobs: int = 1,
                     max_states: int = DEFAULT_MAX_STATES,
                     subset_limit: int | None = DEFAULT_SUBSET_LIMIT) -> SearchReport:
    """Sweep k = 1..k_max and stop at the first k admitting a presenter."""
    check_word(w)
    _check_budget(k_max, max_states)
    report = SearchReport(w, k_max, sc_only)
    for k in range(1, k_max + 1):
        chunk = _sweep(w, k, sc_only, jobs, subset_limit)
        report.candidates_examined += chunk.examined
        report.candidates_capped += chunk.capped
        if chunk.presenters:
            report.presenters = chunk.presenters
            # smaller budgets were swept completely; capped candidates leave a gap
            if report.candidates_capped == 0:
                report.rc_established = k
            break
    rc = report.rc_established
    if rc is not None and rc < math.ceil(math.sqrt(len(w))) + 1:
        warnings.warn(
            f"reset complexity {rc} of {w!r} is below ceil(sqrt(|w|)) + 1; "
            "this contradicts the Cerny bound and needs investigation", RuntimeWarning)
    return report
