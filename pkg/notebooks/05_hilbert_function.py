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
# # Hilbert function of the r-relations
#
# The quadrics in r_0..r_{p-1} cut out an elliptic normal curve
# (or a p-gon at a cusp), so the degree-n piece of the quotient has dimension n p.
# The ideal is graded by sum(index * exponent) mod p, and each graded block has dimension n.

# %%
from x1p.cusps import principal_cusp
from x1p.eisenstein import numeric_s_t
from x1p.hilbert import hilbert_table, quotient_dimension
from x1p.polys import ModuliPoint

P = principal_cusp(7).point
print([quotient_dimension(P, n) for n in range(5)])

# %%
for n, w, d in hilbert_table(P, 3):
    if n == 3:
        print(n, w, d)

# %% [markdown]
# A smooth fibre, at tau = i, gives the same numbers (numeric rank with an explicit tolerance band).

# %%
s, t = numeric_s_t(7, 1j)
Q = ModuliPoint.from_residues(7, s, t)
print([quotient_dimension(Q, n, mode="numeric") for n in range(5)])
