"""
Young walls for the basic representations
==========================================

Builds reduced proper Young walls with the Kashiwara operators, draws a
few of them, reads them back as paths, and tabulates weight multiplicities.
"""

# %%
from crystalwalls.cartan import DELTA, INDICES, fundamental_weight
from crystalwalls.crystal import build_graph, check_root_isomorphism, multiplicity_table
from crystalwalls.paths import PathModel, format_path
from crystalwalls.walls import (
    WallModel, f_wall, format_wall, ground_wall, is_proper, is_reduced, parse_wall, read_wall, render,
)

# %% Start from the ground-state wall on Lambda_1 and apply f1 f0 f2 f1.
w = ground_wall(1)
for i in (1, 0, 2, 1):
    w = f_wall(i, w)
    print(f"f{i}: {format_wall(w)}")
print(render(w))

# %% Properness and reducedness of a few hand-written walls.
for text in ("L0;c0=0,1,1,2", "L0;c0=0,1,1,0", "L1;c0=1,0,2,1;c1=1,0,2;c2=1"):
    x = parse_wall(text)
    print(f"{text:32} proper={is_proper(x)} reduced={is_reduced(x)}")

# %% Reading the top of each column gives a path; the two crystals match node for node.
for i in INDICES:
    wm, pm = WallModel(i), PathModel(i)
    gw, gp = build_graph(wm, wm.root(), 10), build_graph(pm, pm.root(), 10)
    iso = check_root_isomorphism(gp, gw, pm, wm)
    same = all(read_wall(gw.elements[b]) == gp.elements[a] for a, b in iso.mapping.items())
    print(f"ground {i}: {len(gw)} walls, isomorphic={iso.ok}, witnessed by reading={same}")

# %% A wall and the path it reads as.
x = parse_wall("L0;c0=0,1,1,0;c1=2")
print(render(x, extra=2))
print("reads as", format_path(read_wall(x)))

# %% Multiplicities of Lambda_i - k delta from the wall crystal at depth 16.
for i in INDICES:
    wm = WallModel(i)
    rows = {r.weight: r.count for r in multiplicity_table(build_graph(wm, wm.root(), 16), affine=True)}
    print(i, [rows[fundamental_weight(i) - k * DELTA] for k in range(5)])
