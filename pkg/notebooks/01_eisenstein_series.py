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
# # Weight-one Eisenstein series for Gamma_1(p)
#
# The series s_a have constant term (z^a + 1) / (2 (z^a - 1)) and q^d coefficient
# -sum_{k | d} (z^{ka} - z^{-ka}), where z is a primitive p-th root of unity.
# Coefficients live in Q(zeta_p), stored exactly on the power basis.

# %%
from x1p.cyclotomic import cyclo_power, to_complex
from x1p.eisenstein import NumericContext, eis_s, eis_t, s_numeric_crosscheck, span_rank

p = 5
s1 = eis_s(p, 1, 6).series
t1 = eis_t(p, 1, 6).series
print("s_1 =", s1)
print("t_1 =", t1)

# %% [markdown]
# The q^1 coefficient of s_1 is -(z - z^4), a purely imaginary number.

# %%
zeta = cyclo_power(p, 1)
assert s1[1] == -(zeta - zeta**4)
print(to_complex(s1[1]))

# %% [markdown]
# ## Numeric check against the theta function
#
# s_a(tau) is the logarithmic derivative of theta at z = a/p, divided by 2 pi i.

# %%
ctx = NumericContext(1j)
for a in range(1, p):
    print(a, s_numeric_crosscheck(ctx, p, a, 30))

# %% [markdown]
# Only (p-1)/2 of the s_a are independent, because s_{-a} = -s_a.

# %%
for p in (5, 7, 11, 13):
    print(p, span_rank(p, 2 * p))
