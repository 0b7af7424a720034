"""Synchronizing automata whose reset words form a principal ideal."""
from .construction import ConstructionTrace, construct_sc, family_A, family_B
from .core import (AutomatonError, Dfa, ParseError, ResourceLimitError, apply_word,
                   are_isomorphic, is_strongly_connected, parse, serialize, to_dot,
                   transformation_of)
from .ideal import border_table, contains_factor, minimal_ideal_dfa
from .search import SearchReport, enumerate_dfas, find_msas, reset_complexity
from .subsets import (SubsetDfa, is_synchronizing, languages_equal, pair_automaton,
                      power_automaton, shortest_sync_word, syn_acceptor)
from .syntactic import (SigmaReport, homomorphism_check, inner_factor_count, predicted_sigma,
                        sigma_report, staircase_sigma_formula, staircase_word,
                        syntactic_complexity, transition_semigroup)

__version__ = "0.1.0"
