# %% [markdown]
# # Reset complexity by exhaustive search
#
# rc(w) is the least state count of an automaton whose synchronizing words
# are exactly the words containing w.  The search enumerates every
# complete binary DFA up to a small budget.

# %%
from syncideal.search import reset_complexity, find_msas
from syncideal.core import format_table

for w in ("a", "ab", "aa", "aab"):
    r = reset_complexity(w, 4)
    print(f"{w:<4} rc={r.rc_established} examined={r.candidates_examined} presenters={len(r.presenters)}")

# %% [markdown]
# Strongly connected presenters of aab on four states, one per
# isomorphism class.

# %%
for d in find_msas("aab", 4, sc_only=True):
    print(format_table(d))
    print()
