# %% [markdown]
# # Both sides of the generalized hockey-stick identity
#
# The left side sums one binomial per row: C((r+1)i + n, i) for i = 0..k.
# The right side sums one signed term per bounded composition alpha.

# %%
from hockeystick import composition_universe, lhs, rhs, rhs_terms
from hockeystick.identity import rhs_hockey, rhs_pucks

# %% r = 0 is the classical hockey stick: 1 + 3 + 6 + 10 = 20 = C(6, 3)
print("r=0, n=2, k=3:", lhs(3, 2, 0), rhs(3, 2, 0), rhs_hockey(3, 2))

# %% r = 1 is the big hockey stick and pucks: C(10,4) - C(9,2) + C(8,0) = 175
print("r=1, n=1, k=4:", lhs(4, 1, 1), rhs(4, 1, 1), rhs_pucks(4, 1))

# %% r = 3, k = 5, n = 0: the shapes and their signed terms
print("shapes:", " ".join(str(a) for a in composition_universe(5, 3)))
for t in rhs_terms(5, 0, 3):
    print(f"  {str(t.alpha):7} sign {t.sign:+d}  tableaux {t.tableaux}  binomial {t.binom:6}  -> {t.value:+d}")
print("total", rhs(5, 0, 3), "== lhs", lhs(5, 0, 3))

# %% the identity holds across a grid, exactly
mismatches = [(k, n, r) for r in range(5) for n in range(6) for k in range(13) if lhs(k, n, r) != rhs(k, n, r)]
print("mismatches on 390 instances:", mismatches)
