import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import all_words, dfas
from syncideal.construction import construct_sc, family_A
from syncideal.core import AutomatonError, Dfa, ResourceLimitError, compose, transformation_of
from syncideal.ideal import minimal_ideal_dfa
from syncideal.syntactic import (PresenterError, count_distinct_substrings, homomorphism_check,
                                 inner_factor_count, inner_factors, is_exceptional,
                                 padded_staircase_word, predicted_sigma, sigma_report,
                                 staircase_sigma_formula, staircase_word, syntactic_complexity,
                                 transition_semigroup)


def brute_semigroup(d):
    """Map each transformation to the length of the shortest nonempty word
    inducing it, enumerating words by length until a level adds nothing."""
    first = {}
    length = 1
    while True:
        level = {transformation_of(d, "".join(u)) for u in product("ab", repeat=length)}
        if level <= first.keys():
            return first
        for t in level:
            first.setdefault(t, length)
        length += 1


def brute_inner(w):
    return {w[i:j] for i in range(1, len(w)) for j in range(i + 1, len(w)) if 0 < i and j < len(w)}


def test_semigroup_ab():
    sg = transition_semigroup(minimal_ideal_dfa("ab"))
    assert sg.size == 4
    assert sg.witnesses == {(1, 1, 2): "a", (0, 2, 2): "b", (2, 2, 2): "ab", (1, 2, 2): "ba"}


def test_semigroup_aa():
    sg = transition_semigroup(minimal_ideal_dfa("aa"))
    assert sg.size == 5
    assert sorted(sg.witnesses.values()) == ["a", "aa", "ab", "b", "ba"]


def test_semigroup_single_state():
    assert transition_semigroup(Dfa(((0, 0),))).size == 1


def test_semigroup_cap():
    with pytest.raises(ResourceLimitError):
        transition_semigroup(minimal_ideal_dfa("aabab"), limit=10)


@given(dfas(max_states=4))
def test_semigroup_matches_word_enumeration(d):
    sg = transition_semigroup(d)
    brute = brute_semigroup(d)
    assert set(sg.elements) == set(brute)
    assert {t: len(u) for t, u in sg.witnesses.items()} == brute


@given(dfas(max_states=5))
def test_semigroup_closed_and_witnesses_replay(d):
    sg = transition_semigroup(d)
    gens = [d.letter_map(0), d.letter_map(1)]
    for t, word in sg.witnesses.items():
        assert transformation_of(d, word) == t
        for g in gens:
            assert compose(t, g) in sg


@pytest.mark.parametrize("w, sigma", [("ab", 4), ("aa", 5), ("aabab", 31), ("abb", 9), ("ba", 4)])
def test_syntactic_complexity_examples(w, sigma):
    assert syntactic_complexity(w) == sigma
    assert len(brute_semigroup(minimal_ideal_dfa(w))) == sigma


def test_inner_factor_examples():
    assert inner_factor_count("aabab") == 5
    assert inner_factors("aabab") == {"a", "b", "ab", "ba", "aba"}
    assert inner_factor_count("ab") == 0
    assert inner_factor_count("a") == 0
    assert inner_factor_count("aaaa") == 2


@pytest.mark.parametrize("w", list(all_words(10, min_len=1)))
def test_inner_factor_fast_path_all_short_words(w):
    assert inner_factor_count(w) == len(inner_factors(w)) == len(brute_inner(w))


def test_inner_factor_fast_path_random_long_words():
    rnd = random.Random(20121)
    for _ in range(1000):
        w = "".join(rnd.choice("ab") for _ in range(rnd.randint(1, 64)))
        assert inner_factor_count(w) == len(brute_inner(w))
        n = len(w)
        assert inner_factor_count(w) <= (n - 1) * (n - 2) // 2 if n >= 2 else True


@given(st.text(alphabet="abc", max_size=30))
def test_distinct_substrings(s):
    assert count_distinct_substrings(s) == len({s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1)})


def test_predicted_sigma_examples():
    assert predicted_sigma("aabab") == 31
    assert predicted_sigma("ba") == 4
    assert predicted_sigma("abb") == 9
    with pytest.raises(AutomatonError):
        predicted_sigma("a")


def test_exceptional_shapes():
    assert {w for w in all_words(4, min_len=4) if is_exceptional(w)} == {"aaab", "abbb", "baaa", "bbba"}
    assert {w for w in all_words(2, min_len=2) if is_exceptional(w)} == {"ab", "ba"}
    assert not is_exceptional("a")


def test_single_letter_report():
    r = sigma_report("b")
    assert r.sigma_predicted is None and r.sigma_computed == 2 and not r.exceptional


@pytest.mark.parametrize("w", list(all_words(8, min_len=2)))
def test_formula_and_envelope(w):
    n = len(w)
    sigma = syntactic_complexity(w)
    assert sigma == predicted_sigma(w)
    assert n * n <= sigma <= n * n + 1 + (n - 1) * (n - 2) // 2
    assert (sigma == n * n) == is_exceptional(w)


def test_sigma_invariant_under_letter_swap():
    for w in all_words(7, min_len=1):
        assert syntactic_complexity(w) == syntactic_complexity(w.translate(str.maketrans("ab", "ba")))


def test_sigma_report_fields():
    r = sigma_report("aabab")
    assert r.to_dict() == {"word": "aabab", "n": 5, "inner_factors": 5, "sigma_predicted": 31,
                           "sigma_computed": 31, "exceptional": False, "match": True}


def test_homomorphism_examples():
    assert homomorphism_check(construct_sc("aabab")[0], "aabab")
    assert homomorphism_check(minimal_ideal_dfa("aabab"), "aabab")
    assert homomorphism_check(family_A(5), "aaaab")
    assert syntactic_complexity("aaaab") <= transition_semigroup(family_A(5)).size


def test_homomorphism_rejects_wrong_presenter():
    with pytest.raises(PresenterError):
        homomorphism_check(family_A(5), "aabab")


def test_staircase_words():
    assert staircase_word(4) == "abbaaabbbb"
    assert len(staircase_word(6)) == 21
    for k in (3, 2, 5, 0):
        with pytest.raises(AutomatonError):
            staircase_word(k)
        with pytest.raises(AutomatonError):
            staircase_sigma_formula(k)


@pytest.mark.parametrize("k, expected", [(4, 128), (6, 575)])
def test_staircase_formula_against_closure(k, expected):
    w = staircase_word(k)
    brute = syntactic_complexity(w)
    assert brute == expected
    assert staircase_sigma_formula(k) == brute
    assert len(w) ** 2 + 1 + len(brute_inner(w)) == brute


def test_staircase_inner_factor_count():
    assert len(brute_inner(staircase_word(4))) == 27


def test_padded_staircase():
    assert padded_staircase_word(10) == staircase_word(4)
    assert padded_staircase_word(13) == staircase_word(4) + "aaa"
    assert padded_staircase_word(17) == staircase_word(4) + "aaaaabb"
    assert padded_staircase_word(21) == staircase_word(6)
    for n in range(10, 40):
        assert len(padded_staircase_word(n)) == n
    with pytest.raises(AutomatonError):
        padded_staircase_word(9)
