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
# # Diamond operators, the Fricke involution and the cusps
#
# The Fricke involution involves (-p)^(-1/2). Multiplying through by
# (-p)^(d/2) on weighted degree d keeps everything inside Q(zeta_p).

# %%
from x1p.actions import fricke_involution_check, fricke_membership, fricke_point
from x1p.cusps import cusp_orbit, principal_cusp, tangent_nullity

for p in (5, 7, 11):
    rep = fricke_membership(p)
    print(p, "images in span:", rep.ok, " involution:", fricke_involution_check(p))

# %% [markdown]
# The principal cusp has s_a = 1 - 2a/p and t_a = (s_a^2 - 1/3)/2.
# Diamond operators and the Fricke involution move it around all p - 1 cusps.

# %%
P = principal_cusp(7).point
print(P.s, P.t)
for c in cusp_orbit(7):
    print(c.provenance, tangent_nullity(c.point))

# %% [markdown]
# At a Fricke image the coordinates are genuinely cyclotomic.

# %%
print(fricke_point(P).s[0])
