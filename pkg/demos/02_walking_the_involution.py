# %% [markdown]
# # The sign-reversing involution, one element at a time
#
# Elements of type (k, n, r) pair a labeled tableau with a lattice sequence.
# tau either fixes an element (empty tableau, mu >= r*omega) or swaps it with
# a partner of the opposite sign.

# %%
from collections import Counter

from hockeystick import classify, enumerate_universe, tau, weight
from hockeystick.involution import audit

k, n, r = 3, 0, 2
X = enumerate_universe(k, n, r)
print(f"|X({k},{n},{r})| = {len(X)}")

# %% look at the first few moved elements and their partners
shown = 0
for x in X:
    ctx = classify(x)
    if ctx.case_id.value == "FIXED":
        continue
    y = tau(x)
    print(f"{ctx.case_id.value:5}  eta={ctx.eta} omega={ctx.omega} gamma={ctx.gamma} mu={ctx.mu} nu={ctx.nu}")
    print(f"       {x}  (weight {weight(x):+d})")
    print(f"    -> {y}  (weight {weight(y):+d}, case {classify(y).case_id.value})")
    shown += 1
    if shown == 4:
        break

# %% case distribution and the weight sum
print(Counter(classify(x).case_id.value for x in X))
res = audit(k, n, r)
print("weight sum", res.weight_sum, "fixed points", res.fixed, "all checks", res.ok)
