# %% [markdown]
# # Power and pair automata, and non-uniqueness
#
# Two non-isomorphic strongly connected automata can share the same
# synchronizing words.  Families A and B do this for a^(n-1) b.

# %%
from syncideal.construction import family_A, family_B
from syncideal.core import are_isomorphic, format_table, to_dot
from syncideal.subsets import pair_automaton, power_automaton, languages_equal, syn_acceptor

a, b = family_A(5), family_B(5)
print(format_table(a))
print()
print(format_table(b))
print("isomorphic:", are_isomorphic(a, b) is not None)
print("same Syn:", languages_equal(syn_acceptor(a), syn_acceptor(b)).equal)

# %%
pa = power_automaton(a)
print(format_table(pa.as_dfa(), pa.labels()))

# %%
pairs = pair_automaton(a)
print(to_dot(pairs.as_dfa(), pairs.labels(), name="pairs"))
