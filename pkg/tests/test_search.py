import math

import pytest

from syncideal.construction import construct_sc
from syncideal.core import Dfa, apply_word, are_isomorphic, is_strongly_connected
from syncideal.ideal import minimal_ideal_dfa
from syncideal.search import (SearchLimitError, candidate_count, enumerate_dfas, find_msas,
                              reset_complexity)
from syncideal.subsets import is_synchronizing, languages_equal, syn_acceptor


@pytest.mark.parametrize("k, count", [(1, 1), (2, 16), (3, 729)])
def test_enumeration_counts(k, count):
    tables = [d.delta for d in enumerate_dfas(k)]
    assert len(tables) == count == candidate_count(k)
    assert len(set(tables)) == count
    assert tables == sorted(tables)


def test_enumeration_filters():
    for d in enumerate_dfas(3, synchronizing_only=True, strongly_connected_only=True):
        assert is_synchronizing(d) and is_strongly_connected(d)
    n_sync = sum(1 for _ in enumerate_dfas(2, synchronizing_only=True))
    assert n_sync == sum(1 for d in enumerate_dfas(2) if is_synchronizing(d))


def test_enumeration_refuses_large_budget():
    with pytest.raises(SearchLimitError) as info:
        list(enumerate_dfas(5))
    assert "9,765,625" in str(info.value)
    with pytest.raises(SearchLimitError):
        list(enumerate_dfas(0))


def test_enumeration_above_default_warns():
    with pytest.warns(RuntimeWarning):
        gen = enumerate_dfas(5, max_states=5)
        next(gen)


def _reset_by_some_word(d, horizon):
    from itertools import product
    return any(len({apply_word(d, q, "".join(u)) for q in d.states}) == 1
               for n in range(horizon + 1) for u in product("ab", repeat=n))


def test_no_two_state_presenter_by_brute_force():
    # independent of the pipeline: any 2-state DFA reset by neither a nor b
    # has two permutation letters and cannot be synchronized at all
    for d in enumerate_dfas(2):
        a_resets = len(set(d.letter_map(0))) == 1
        b_resets = len(set(d.letter_map(1))) == 1
        if not (a_resets or b_resets):
            assert not _reset_by_some_word(d, 4)


@pytest.mark.parametrize("w", ["ab", "aa"])
def test_reset_complexity_three(w):
    r = reset_complexity(w, 3)
    assert r.rc_established == 3
    assert r.candidates_examined == 1 + 16 + 729
    target = minimal_ideal_dfa(w)
    for d in r.presenters:
        assert d.state_count == 3
        assert languages_equal(syn_acceptor(d), target)


def test_reset_complexity_strongly_connected():
    r = reset_complexity("ab", 3, sc_only=True)
    assert r.rc_established == 3
    assert r.presenters and all(is_strongly_connected(d) for d in r.presenters)


def test_reset_complexity_not_reached():
    r = reset_complexity("aab", 3)
    assert r.rc_established is None and r.presenters == []


def test_find_msas_examples():
    msas = find_msas("ab", 3, sc_only=True)
    assert any(are_isomorphic(d, construct_sc("ab")[0]) is not None for d in msas)
    assert find_msas("ab", 2) == []


def test_aab_has_several_strongly_connected_msas():
    msas = find_msas("aab", 4, sc_only=True)
    assert len(msas) >= 2
    target = minimal_ideal_dfa("aab")
    for i, d in enumerate(msas):
        assert is_strongly_connected(d)
        assert languages_equal(syn_acceptor(d), target)
        for e in msas[i + 1:]:
            assert are_isomorphic(d, e) is None


def test_presenters_are_least_representatives():
    msas = find_msas("ab", 3)
    assert [d.delta for d in msas] == sorted(d.delta for d in msas)
    for d in msas:
        for e in enumerate_dfas(3):
            if are_isomorphic(d, e) is not None:
                assert d.delta <= e.delta


def test_parallel_sweep_is_deterministic():
    serial = reset_complexity("ab", 3, sc_only=True)
    parallel = reset_complexity("ab", 3, sc_only=True, jobs=2)
    assert serial.to_dict() == parallel.to_dict()
    assert reset_complexity("ab", 3).to_dict() == reset_complexity("ab", 3).to_dict()


@pytest.mark.parametrize("w", ["a", "b", "ab", "ba", "aa", "bb", "aab", "aba", "abb", "bbb"])
def test_rc_bounds(w):
    r = reset_complexity(w, len(w) + 1)
    assert r.rc_established is not None
    assert r.rc_established <= len(w) + 1
    assert r.rc_established >= math.ceil(math.sqrt(len(w))) + 1


def test_report_document():
    doc = reset_complexity("ab", 3).to_dict()
    assert doc["rc_established"] == 3
    assert doc["presenters"][0]["alphabet"] == ["a", "b"]
    assert set(doc) == {"word", "max_states", "strongly_connected_only", "candidates_examined",
                        "candidates_capped", "rc_established", "presenters"}


def test_candidate_cap_errors_are_recorded():
    r = reset_complexity("ab", 3, subset_limit=2)
    assert r.candidates_capped > 0
    assert r.rc_established is None
