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
# # Laurent solutions of the differential system
#
# At a point (s, t) on the curve the system
# r_a' = -(1/(p-2)) (sum_{k != 0,a} r_k r_{a-k} + 2 s_a r_a)
# has a unique solution r_a = 1/z + s_a + t_a z + u_a z^2 + ...

# %%
from x1p.cusps import principal_cusp
from x1p.cyclotomic import as_level
from x1p.eisenstein import NumericContext
from x1p.ideal import series_point
from x1p.ode import solve_standard, theta_compare, u_closed, verify_rhat_relations

P = principal_cusp(5).point
sol = solve_standard(P, 8)
print(sol.series[1])
print("u_1 =", sol.coefficient(1, 2), u_closed(P)[1])
print(verify_rhat_relations(sol))

# %% [markdown]
# The same recursion runs over the ring of q-expansions, so the relations hold for
# the universal family and not only at one point.

# %%
Q = series_point(as_level(7), 12)
print(verify_rhat_relations(solve_standard(Q, 8)))

# %% [markdown]
# Numerically the solution is a quotient of theta functions in the rescaled variable.

# %%
ctx = NumericContext(1j)
print(theta_compare(ctx, 5, [0.05, 0.05j, -0.05], M=10))
