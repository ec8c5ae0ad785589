"""
The level-1 perfect crystal and the path realization
=====================================================

Walks from the five-element crystal B through tensor products to the
Lambda_i-paths, printing what each step produces.
"""

# %%
from crystalwalls.cartan import INDICES
from crystalwalls.crystal import TensorModel, build_graph
from crystalwalls.paths import PathModel, check_shift_decomposition, f_path, format_path, ground_path
from crystalwalls.perfect import B_MODEL, BElem, check_perfect, eps_vector, phi_vector, wt_b

# %% The crystal graph of B: five vertices, one arrow per (color, source) pair.
g = build_graph(B_MODEL, BElem.B12, 10)
for u, v, i in g.edges:
    print(f"{g.nodes[u].key:>6} --{i}--> {g.nodes[v].key}")

# %% Weights are phi - eps, read off the strings.
for b in BElem:
    print(f"{b.value:>6}  eps={tuple(eps_vector(b))[:3]}  phi={tuple(phi_vector(b))[:3]}  wt={wt_b(b).pretty()}")

# %% Perfectness at level 1.
report = check_perfect(1)
print("perfect:", report.ok, "  B^min:", [b.value for b in report.b_min])

# %% B (x) B is connected; the signature rule decides which factor moves.
bb = TensorModel(B_MODEL, B_MODEL)
print("B (x) B vertices reached from (1,2)(x)(1,2):", len(build_graph(bb, (BElem.B12, BElem.B12), 50)))
print("f1 on (1,-2)(x)(2,-2):", bb.f(1, (BElem.B1b2, BElem.B2b2)))

# %% Ground-state paths and the first few Kashiwara steps.
p = ground_path(0)
for i in (0, 1, 1, 2):
    p = f_path(i, p)
    print(f"after f{i}: {format_path(p)}")

# %% The shift decomposition p -> (p(1), p(2), ...) (x) p(0) commutes with every operator.
for i in INDICES:
    r = check_shift_decomposition(i, 8)
    print(f"ground {i}: {r.checked} paths, ok={r.ok}")

# %% Sizes of the path crystals by depth.
for i in INDICES:
    m = PathModel(i)
    print(i, [len(build_graph(m, m.root(), d)) for d in range(9)])
