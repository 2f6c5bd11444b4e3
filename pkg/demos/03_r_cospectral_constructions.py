# Pairs whose complements are cospectral too, and how to grow them.
from spectral_ds import figure1_family, gm_switch, is_r_cospectral, kn_minus_pair, path_mates
from spectral_ds.constructions import figure1_pair, join_pair, switching_sets, trivial_pair, union_pair
from spectral_ds.generate import generate_graphs
from spectral_ds.graph import complete

# %% C_6 + K_1 and the spider S(2,2,2)
base = figure1_pair()
print(base.to_line())

# %% join/union with anything R-cospectral keeps the property
bigger = union_pair(join_pair(base, trivial_pair(complete(1))), trivial_pair(complete(3)))
print(bigger.left.n, is_r_cospectral(bigger.left, bigger.right))

# %% K_n minus each side: six deleted edges, not determined by spectrum
for n in range(7, 11):
    p = kn_minus_pair(n, base)
    print(n, "isomorphic:", p.is_isomorphic())

# %% pendant paths on a degree-2 vertex
for ell in range(5):
    p = figure1_family(ell)
    print(ell, p.left.n, is_r_cospectral(p.left, p.right))

# %% cospectral but complements differ
p = path_mates(3)
print(p.to_line(), is_r_cospectral(p.left, p.right))

# %% Godsil-McKay switching: search for a switch that changes the graph
for g in generate_graphs(7):
    hits = [c for c in switching_sets(g) if gm_switch(g, c) != g]
    if hits:
        h = gm_switch(g, hits[0])
        print("switch", hits[0], "R-cospectral:", is_r_cospectral(g, h))
        break
