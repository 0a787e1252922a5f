# %% [markdown]
# # Sequences for fixed (r, n) and path drawings

# %%
from hockeystick import LatticeSequence, oeis_terms, path_stats
from hockeystick.identity import OEIS_IDS
from hockeystick.render import RenderSpec, to_ascii, to_svg

for (r, n), ident in sorted(OEIS_IDS.items()):
    print(f"r={r} n={n} {ident}: {' '.join(map(str, oeis_terms(r, n, 8)))}")

# %% the path with heights (0,0,0,2,3,5), then one with guides at eta and gamma
print(to_ascii(RenderSpec(LatticeSequence((0, 0, 0, 2, 3, 5)), format="ascii")))
L = LatticeSequence((0, 0, 0, 0, 1, 2, 2, 2, 2, 2, 4, 4, 4, 4))
st = path_stats(L, 9)
print(st)
print(to_ascii(RenderSpec(L, markers=(st.eta, st.gamma), format="ascii")))

# %% SVG text can be written anywhere; here we only report its size
svg = to_svg(RenderSpec(L, markers=(st.eta, st.gamma)))
print(len(svg.splitlines()), "lines of SVG")
