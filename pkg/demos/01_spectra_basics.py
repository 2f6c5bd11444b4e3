# Exact characteristic polynomials and what they tell you.
from fractions import Fraction

from spectral_ds import char_poly, closed_walks, count_roots_greater_than, is_cospectral
from spectral_ds.graph import complete, complete_bipartite, disjoint_union, path, star
from spectral_ds.spectra import spectrum_summary

# %% integer coefficients, lowest degree first
k3 = complete(3)
p = char_poly(k3)
print("K3 char poly:", p.text())              # -2 -3 0 1, i.e. x^3 - 3x - 2
print("K3 spectrum:", spectrum_summary(p))    # -1^2, 2

# %% coefficients encode edges and triangles
g = complete(5)
c = char_poly(g).coeffs
print("c_(n-2) =", c[3], " c_(n-3) =", c[2])  # -10 edges, -2*10 triangles

# %% closed walks from the polynomial (Newton's identities)
for n in range(2, 7):
    print(n, closed_walks(complete(n), 4), (n - 1) ** 4 + n - 1)

# %% the star and its cospectral mate
print("K_1,4 ~ K_2,2 + K_1:", is_cospectral(star(4), disjoint_union(complete_bipartite(2, 2), complete(1))))

# %% exact root counting, no floating point
for ell in (4, 8, 12):
    q = char_poly(path(ell))
    print(f"P_{ell}: roots > 2 - 1e-6:", count_roots_greater_than(q, Fraction(2) - Fraction(1, 10**6)))
