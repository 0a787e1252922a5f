# %% [markdown]
# # Counting fixed points by the vertical run at eta
#
# A fixed point with omega = k - i corresponds, by stripping a constant
# tail, to an arbitrary lattice sequence of width r*i + n and height i.

# %%
from hockeystick import binomial, classify, fixed_points, phi, psi
from hockeystick.render import RenderSpec, to_ascii

k, n, r = 3, 1, 1
points = fixed_points(k, n, r)
for i in range(k + 1):
    members = [x.sequence for x in points if classify(x).omega == k - i]
    print(f"omega={k - i}: {len(members)} fixed points, C({(r + 1) * i + n},{i}) = {binomial((r + 1) * i + n, i)}")

# %% one member of the omega=1 class, its preimage, and the round trip
i = 2
L = next(x.sequence for x in points if classify(x).omega == k - i)
short = phi(L, r, i, n)
print("fixed point", L, "-> prefix", short, "-> back", psi(short, k, r, i))
print(to_ascii(RenderSpec(L, markers=(r * k + n + 1,), format="ascii")))
