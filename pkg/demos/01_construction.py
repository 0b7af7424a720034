# %% [markdown]
# # Building a strongly connected presenter
#
# For a word w the synchronizing words of the automaton built here are
# exactly the words containing w as a factor, and it has |w| + 1 states.

# %%
from syncideal import construct_sc, minimal_ideal_dfa, syn_acceptor, languages_equal
from syncideal.core import is_strongly_connected, format_table

w = "aabab"
target = minimal_ideal_dfa(w)
print(format_table(target))

# %% [markdown]
# The construction records which pair of states stands for each prefix.

# %%
d, trace = construct_sc(w)
print(format_table(d))
print()
print(trace.format())

# %%
print("strongly connected:", is_strongly_connected(d))
print("Syn(B) == target:", languages_equal(syn_acceptor(d), target).equal)

# %% [markdown]
# Words starting with b reuse the construction on the swapped word.

# %%
d, _ = construct_sc("babb")
print(format_table(d))
