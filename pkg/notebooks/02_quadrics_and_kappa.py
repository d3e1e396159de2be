# ---
# jupyter:
#   jupytext:
#     formats: ipynb,py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Quadratic relations and the t-free quadrics
#
# For every triple a + b + c = 0 mod p the series satisfy
# s_a s_b + s_b s_c + s_c s_a + t_a + t_b + t_c = 0.

# %%
from fractions import Fraction

from x1p.cusps import principal_cusp
from x1p.ideal import all_generators, determine_kappa, eliminated_quadric, generators_on_series
from x1p.polys import eval_poly

for g in all_generators(5):
    print(g.triple, g.poly)

# %%
print(all(v == 0 for _, v in generators_on_series(7, 30)))

# %% [markdown]
# ## Eliminating t
#
# Summing the relations over (k, a-k, -a) expresses each t_a through the s's.
# Substituting back leaves quadrics in s alone; the coefficient of
# sum_k s_k^2 is kappa / (p - 2). The q-expansions decide kappa.

# %%
for p in (5, 7, 11):
    print(p, determine_kappa(p, 30))

# %% [markdown]
# kappa = 4 does not vanish at the cusp s_a = 1 - 2a/p.

# %%
s = list(principal_cusp(5).point.s)
for kappa in (4, 6):
    print(kappa, eval_poly(eliminated_quadric(5, (1, 1, 3), kappa), s))
