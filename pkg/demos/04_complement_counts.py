# Counting in the complement without building it.
from spectral_ds.graph import complement, cycle, disjoint_union, kn_minus, path, star
from spectral_ds.invariants import (brute_force_counts, complement_4walks, complement_triangles,
                                    subgraph_counts, walks_through_edges)
from spectral_ds.spectra import closed_walks

# %% P_3, 2K_2, P_4, C_4 and triangle counts from degrees and codegrees
g = disjoint_union(cycle(4), path(3))
print(subgraph_counts(g))
print(brute_force_counts(g))

# %% triangles and closed 4-walks of the complement from those counts
h = disjoint_union(star(4), path(2))
print(complement_triangles(h), brute_force_counts(complement(h)).t)
print(complement_4walks(h), closed_walks(complement(h), 4))

# %% the inclusion-exclusion terms, counted directly in K_n
for n in range(5, 9):
    one = walks_through_edges(n, [(0, 1)])
    adjacent = walks_through_edges(n, [(0, 1), (1, 2)])
    print(n, one, 8 * (n - 2) * (n - 3) + 8 * (n - 2) + 2, adjacent, 8 * (n - 3) + 4)

# %% what K_n minus a small pattern looks like from the inside
print(subgraph_counts(kn_minus(8, path(6))))
