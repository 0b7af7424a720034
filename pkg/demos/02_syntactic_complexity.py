# %% [markdown]
# # Syntactic complexity of a principal ideal
#
# sigma(w) is the size of the transition semigroup of the minimal DFA of
# the ideal generated by w.  Apart from four exceptional shapes it equals
# n^2 + 1 + N(w), where N(w) counts distinct inner factors.

# %%
from syncideal import sigma_report, syntactic_complexity
from syncideal.syntactic import staircase_word, staircase_sigma_formula, inner_factor_count

for w in ["ab", "aab", "abab", "aabab", "abbab", "aaaab"]:
    r = sigma_report(w)
    print(f"{w:<8} N={r.inner_factors:<3} predicted={r.sigma_predicted:<4} computed={r.sigma_computed}")

# %% [markdown]
# Staircase words maximise N(w) among words of triangular length.

# %%
for k in (4, 6):
    w = staircase_word(k)
    print(k, w, inner_factor_count(w), staircase_sigma_formula(k), syntactic_complexity(w))
